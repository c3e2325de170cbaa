// Runs the command-line tool as a subprocess inside a scratch directory.
#pragma once

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "zucaead/common.hpp"

namespace testsupport {

struct CliResult {
  int status;
  std::string out;
};

class CliRunner {
 public:
  explicit CliRunner(const std::string& name)
      : dir_(std::filesystem::temp_directory_path() / ("zucaead-" + name + "-" + std::to_string(::getpid()))) {
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  ~CliRunner() {
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  CliResult run(const std::string& args) const {
    const std::string out = path("stdout.txt");
    const std::string cmd = std::string(ZUCAEAD_CLI_PATH) + " " + args + " >" + out + " 2>" + path("stderr.txt");
    const int raw = std::system(cmd.c_str());
    const int status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return {status, read_text(out)};
  }

  void write(const std::string& name, const zucaead::Bytes& data) const {
    std::ofstream f(path(name), std::ios::binary);
    f.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  }

  zucaead::Bytes read(const std::string& name) const {
    std::ifstream f(path(name), std::ios::binary);
    return zucaead::Bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  }

  bool exists(const std::string& name) const { return std::filesystem::exists(path(name)); }

  std::string stderr_text() const { return read_text(path("stderr.txt")); }

 private:
  static std::string read_text(const std::string& p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  std::filesystem::path dir_;
};

}  // namespace testsupport
