// zucaead: seal and open files, dump ZUC keystream, run known-answer
// self-tests and throughput benchmarks.
//
// Exit status: 0 success, 1 authentication failure (or a failing self-test),
// 2 usage or I/O error.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "zucaead/bench.hpp"
#include "zucaead/frame.hpp"
#include "zucaead/gxm.hpp"
#include "zucaead/hex.hpp"
#include "zucaead/kdf.hpp"
#include "zucaead/mur.hpp"
#include "zucaead/secure.hpp"
#include "zucaead/vectors.hpp"

namespace fs = std::filesystem;
using namespace zucaead;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAuth = 1;
constexpr int kExitUsage = 2;

constexpr const char* kNonceWarning =
    "Nonce contract: under one key a GXM nonce must never repeat. GXM fails catastrophically on nonce reuse "
    "(the XOR of two ciphertexts equals the XOR of their plaintexts and forgeries become possible). MUR tolerates "
    "reuse and then reveals only whether the same (nonce, AAD, plaintext) was sealed before; its full privacy "
    "bound for unique nonces also needs the low (nonce bits - tag bits) of the nonce to be unique. The nonce is "
    "stored in the sealed file header, the AAD is not.";

// Raised for anything that maps to exit status 2. Messages never contain
// key material.
class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot open input file '" + path + "'");
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw CliError("cannot read input file '" + path + "'");
  return data;
}

// Writes to a temporary file beside `path` and renames it into place, so a
// failed run never leaves a partial output.
void write_file_atomic(const std::string& path, ByteView data) {
  const fs::path target(path);
  std::random_device rd;
  const fs::path tmp = target.string() + ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CliError("cannot create output file '" + path + "'");
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw CliError("cannot write output file '" + path + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw CliError("cannot move output into place at '" + path + "'");
  }
}

Bytes parse_hex_flag(const std::string& flag, const std::string& text) {
  try {
    return from_hex(text);
  } catch (const ParameterError& e) {
    throw CliError(flag + ": " + e.what());
  }
}

ZucVariant parse_variant_flag(const std::string& text) {
  const auto v = parse_variant(text);
  if (!v) throw CliError("--variant: unknown variant '" + text + "'");
  return *v;
}

AeadMode parse_mode_flag(const std::string& text) {
  const auto m = parse_aead_mode(text);
  if (!m) throw CliError("--mode: unknown mode '" + text + "'");
  return *m;
}

struct KeyFlags {
  std::string key_h;
  std::string key_k;
  bool derive = false;
  std::string master_key;
  std::string iv0;
  std::string aad;
  std::string aad_file;
};

void add_key_flags(CLI::App& cmd, KeyFlags& f) {
  auto* kh = cmd.add_option("--key-h", f.key_h, "GHASH key H, 16 bytes hex");
  auto* kk = cmd.add_option("--key-k", f.key_k, "ZUC key K, 16 or 32 bytes hex");
  auto* dv = cmd.add_flag("--derive", f.derive, "Derive H and K from --master-key and --iv0");
  auto* mk = cmd.add_option("--master-key", f.master_key, "Master key K0 for --derive, hex");
  cmd.add_option("--iv0", f.iv0, "System IV0 for --derive, hex (default: all zero)")->needs(dv);
  kh->excludes(dv);
  kk->excludes(dv);
  mk->needs(dv);
  auto* aad = cmd.add_option("--aad", f.aad, "Associated data, hex");
  auto* aad_file = cmd.add_option("--aad-file", f.aad_file, "Associated data, read from a file");
  aad->excludes(aad_file);
}

AeadKey resolve_key(ZucVariant variant, const KeyFlags& f) {
  const VariantInfo& info = variant_info(variant);
  if (f.derive) {
    if (f.master_key.empty()) throw CliError("--derive requires --master-key");
    MasterKey master{parse_hex_flag("--master-key", f.master_key),
                     f.iv0.empty() ? Bytes(info.iv_bytes, 0) : parse_hex_flag("--iv0", f.iv0)};
    if (master.k0.size() != info.key_bytes) {
      throw CliError("--master-key: expected " + std::to_string(info.key_bytes) + " bytes for " +
                     std::string(info.name));
    }
    if (master.iv0.size() != info.iv_bytes) {
      throw CliError("--iv0: expected " + std::to_string(info.iv_bytes) + " bytes for " + std::string(info.name));
    }
    AeadKey key = derive_key(variant, master);
    secure_wipe(master.k0);
    return key;
  }
  if (f.key_h.empty() || f.key_k.empty()) throw CliError("supply --key-h and --key-k, or --derive --master-key");
  Bytes h = parse_hex_flag("--key-h", f.key_h);
  Bytes k = parse_hex_flag("--key-k", f.key_k);
  if (h.size() != 16) throw CliError("--key-h: expected 16 bytes");
  if (k.size() != info.key_bytes) {
    throw CliError("--key-k: expected " + std::to_string(info.key_bytes) + " bytes for " + std::string(info.name));
  }
  AeadKey key(variant, h, k);
  secure_wipe(h);
  secure_wipe(k);
  return key;
}

Bytes resolve_aad(const KeyFlags& f) {
  if (!f.aad_file.empty()) return read_file(f.aad_file);
  return parse_hex_flag("--aad", f.aad);
}

struct SealFlags {
  KeyFlags keys;
  std::string mode;
  std::string variant = "zuc128";
  std::string nonce;
  unsigned tag_bits = kDefaultTagBits;
  std::string in;
  std::string out;
};

int cmd_seal(const SealFlags& f) {
  const AeadMode mode = parse_mode_flag(f.mode);
  const ZucVariant variant = parse_variant_flag(f.variant);
  const AeadParams params{variant, f.tag_bits};
  try {
    params.validate();
  } catch (const ParameterError& e) {
    throw CliError(std::string("--tag-bits: ") + e.what());
  }
  const Bytes nonce = parse_hex_flag("--nonce", f.nonce);
  if (nonce.size() != params.nonce_bytes()) {
    throw CliError("--nonce: expected " + std::to_string(params.nonce_bytes()) + " bytes for " + f.variant);
  }
  const AeadKey key = resolve_key(variant, f.keys);
  const Bytes aad = resolve_aad(f.keys);
  const Bytes plaintext = read_file(f.in);

  SealedMessage sealed = mode == AeadMode::Gxm ? gxm_seal(params, key, nonce, aad, plaintext)
                                               : mur_seal(params, key, nonce, aad, plaintext);
  const SealedFrame frame{variant, mode, f.tag_bits, nonce, std::move(sealed.ciphertext), std::move(sealed.tag)};
  write_file_atomic(f.out, encode_frame(frame));
  return kExitOk;
}

struct OpenFlags {
  KeyFlags keys;
  std::string mode;
  std::string variant;
  unsigned tag_bits = 0;
  std::string in;
  std::string out;
};

int cmd_open(const OpenFlags& f) {
  SealedFrame frame;
  try {
    frame = decode_frame(read_file(f.in));
  } catch (const ParameterError& e) {
    throw CliError(std::string("--in: ") + e.what());
  }
  // Explicit flags must agree with the header rather than silently override it.
  if (!f.mode.empty() && parse_mode_flag(f.mode) != frame.mode) throw CliError("--mode does not match the frame");
  if (!f.variant.empty() && parse_variant_flag(f.variant) != frame.variant) {
    throw CliError("--variant does not match the frame");
  }
  if (f.tag_bits != 0 && f.tag_bits != frame.tag_bits) throw CliError("--tag-bits does not match the frame");

  const AeadParams params{frame.variant, frame.tag_bits};
  const AeadKey key = resolve_key(frame.variant, f.keys);
  const Bytes aad = resolve_aad(f.keys);
  OpenResult plaintext = frame.mode == AeadMode::Gxm
                             ? gxm_open(params, key, frame.nonce, aad, frame.ciphertext, frame.tag)
                             : mur_open(params, key, frame.nonce, aad, frame.ciphertext, frame.tag);
  if (!plaintext) {
    std::cerr << "zucaead: authentication failed\n";
    return kExitAuth;
  }
  write_file_atomic(f.out, *plaintext);
  secure_wipe(*plaintext);
  return kExitOk;
}

struct KeystreamFlags {
  std::string variant = "zuc128";
  std::string key;
  std::string iv;
  std::size_t len_bytes = 0;
};

int cmd_keystream(const KeystreamFlags& f) {
  const ZucVariant variant = parse_variant_flag(f.variant);
  const VariantInfo& info = variant_info(variant);
  Bytes key = parse_hex_flag("--key", f.key);
  const Bytes iv = parse_hex_flag("--iv", f.iv);
  if (key.size() != info.key_bytes) throw CliError("--key: expected " + std::to_string(info.key_bytes) + " bytes");
  if (iv.size() != info.iv_bytes) throw CliError("--iv: expected " + std::to_string(info.iv_bytes) + " bytes");
  if (f.len_bytes > kMaxKeystreamBytes) throw CliError("--len-bytes: exceeds the keystream limit");
  const Bytes z = zuc_keystream(variant, key, iv, f.len_bytes);
  secure_wipe(key);
  if (!z.empty()) std::cout << to_hex(z) << '\n';
  return kExitOk;
}

int cmd_selftest(const std::string& path, bool quiet) {
  std::ifstream in(path);
  if (!in) throw CliError("cannot open vector file '" + path + "'");
  std::size_t total = 0;
  std::size_t failed = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++total;
    const std::string id = peek_vector_id(line).value_or("line " + std::to_string(line_no));
    try {
      const VectorReport report = run_vector(parse_vector(line));
      if (report.passed()) {
        if (!quiet) std::cout << "PASS " << id << '\n';
        continue;
      }
      ++failed;
      for (const FieldMismatch& m : report.mismatches) {
        std::cout << "FAIL " << id << ": " << m.field << " at byte " << m.offset << ": " << m.detail << '\n';
      }
    } catch (const Error& e) {
      ++failed;
      std::cout << "FAIL " << id << ": " << e.what() << '\n';
    }
  }
  if (in.bad()) throw CliError("cannot read vector file '" + path + "'");
  std::cout << (total - failed) << "/" << total << " vectors passed\n";
  return failed == 0 ? kExitOk : kExitAuth;
}

struct BenchFlags {
  std::string sizes = "64,1500,65536";
  std::vector<std::string> variants;
  unsigned runs = 5;
  unsigned min_run_ms = 20;
  bool csv = false;
};

int cmd_bench(const BenchFlags& f) {
  BenchConfig config;
  config.sizes.clear();
  std::stringstream ss(f.sizes);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long long n = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument("trailing characters");
      config.sizes.push_back(static_cast<std::size_t>(n));
    } catch (const std::exception&) {
      throw CliError("--sizes: '" + item + "' is not a byte count");
    }
  }
  if (config.sizes.empty()) throw CliError("--sizes: empty list");
  if (!f.variants.empty()) {
    config.variants.clear();
    for (const std::string& v : f.variants) config.variants.push_back(parse_variant_flag(v));
  }
  if (f.runs < 5) throw CliError("--runs: at least 5 runs are required for a median");
  config.runs = f.runs;
  config.min_run_time = std::chrono::milliseconds(f.min_run_ms);
  const std::vector<BenchRow> rows = run_bench(config);
  std::cout << (f.csv ? format_csv(rows) : format_table(rows));
  return kExitOk;
}

int cmd_gen_vectors(std::uint64_t seed, const std::string& out) {
  const std::string text = write_vectors(generate_vectors(seed));
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    write_file_atomic(out, ByteView(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ZUC-GXM and ZUC-MUR authenticated encryption"};
  app.footer(kNonceWarning);
  app.require_subcommand(1);

  SealFlags seal;
  auto* seal_cmd = app.add_subcommand("seal", "Encrypt and authenticate a file into a sealed frame");
  add_key_flags(*seal_cmd, seal.keys);
  seal_cmd->add_option("--mode", seal.mode, "gxm or mur")->required();
  seal_cmd->add_option("--variant", seal.variant, "zuc128, zuc256-iv184 or zuc256-iv128")->capture_default_str();
  seal_cmd->add_option("--nonce", seal.nonce, "Per-message nonce, v/8 bytes hex")->required();
  seal_cmd->add_option("--tag-bits", seal.tag_bits, "Tag length: 32..128, multiple of 8")->capture_default_str();
  seal_cmd->add_option("--in", seal.in, "Plaintext file")->required();
  seal_cmd->add_option("--out", seal.out, "Sealed file to write")->required();
  seal_cmd->footer(kNonceWarning);

  OpenFlags open;
  auto* open_cmd = app.add_subcommand("open", "Verify and decrypt a sealed frame");
  add_key_flags(*open_cmd, open.keys);
  open_cmd->add_option("--mode", open.mode, "Optional; must match the frame");
  open_cmd->add_option("--variant", open.variant, "Optional; must match the frame");
  open_cmd->add_option("--tag-bits", open.tag_bits, "Optional; must match the frame");
  open_cmd->add_option("--in", open.in, "Sealed file")->required();
  open_cmd->add_option("--out", open.out, "Plaintext file, written only when authentication succeeds")->required();

  KeystreamFlags ks;
  auto* ks_cmd = app.add_subcommand("keystream", "Print raw ZUC keystream as lowercase hex (single shot)");
  ks_cmd->add_option("--variant", ks.variant, "zuc128, zuc256-iv184 or zuc256-iv128")->capture_default_str();
  ks_cmd->add_option("--key,--key-k", ks.key, "ZUC key, hex")->required();
  ks_cmd->add_option("--iv,--nonce", ks.iv, "ZUC IV, hex")->required();
  ks_cmd->add_option("--len-bytes", ks.len_bytes, "Number of keystream bytes")->required();

  std::string vectors_path;
  bool quiet = false;
  auto* st_cmd = app.add_subcommand("selftest", "Run every vector in a JSON-lines file");
  st_cmd->add_option("--vectors", vectors_path, "Vector file")->required();
  st_cmd->add_flag("-q,--quiet", quiet, "Print failures and the summary only");

  BenchFlags bench;
  auto* bench_cmd = app.add_subcommand("bench", "Measure throughput (informational)");
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated message sizes in bytes")->capture_default_str();
  bench_cmd->add_option("--variant", bench.variants, "Restrict to these variants (repeatable)");
  bench_cmd->add_option("--runs", bench.runs, "Runs per cell; the median is reported")->capture_default_str();
  bench_cmd->add_option("--min-run-ms", bench.min_run_ms, "Minimum duration of one run")->capture_default_str();
  bench_cmd->add_flag("--csv", bench.csv, "Emit CSV instead of a table");

  std::uint64_t seed = 20180101;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen-vectors", "Write the reproducible AEAD vector corpus");
  gen_cmd->add_option("--seed", seed, "Generator seed")->capture_default_str();
  gen_cmd->add_option("--out", gen_out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*seal_cmd) return cmd_seal(seal);
    if (*open_cmd) return cmd_open(open);
    if (*ks_cmd) return cmd_keystream(ks);
    if (*st_cmd) return cmd_selftest(vectors_path, quiet);
    if (*bench_cmd) return cmd_bench(bench);
    if (*gen_cmd) return cmd_gen_vectors(seed, gen_out);
  } catch (const CliError& e) {
    std::cerr << "zucaead: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "zucaead: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "zucaead: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
