#include "zucaead/vectors.hpp"

#include <json.hpp>

#include <random>
#include <sstream>

#include "zucaead/gxm.hpp"
#include "zucaead/hex.hpp"
#include "zucaead/kdf.hpp"
#include "zucaead/mur.hpp"

namespace zucaead {

namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 4> kModeNames = {"keystream", "gxm", "mur", "kdf"};

const json& require(const json& obj, const char* field) {
  const auto it = obj.find(field);
  if (it == obj.end()) throw VectorParseError(field, "missing");
  return *it;
}

std::string require_string(const json& obj, const char* field) {
  const json& value = require(obj, field);
  if (!value.is_string()) throw VectorParseError(field, "expected a string");
  return value.get<std::string>();
}

Bytes require_hex(const json& obj, const char* field) {
  const std::string text = require_string(obj, field);
  try {
    return from_hex(text);
  } catch (const ParameterError& e) {
    throw VectorParseError(field, e.what());
  }
}

void expect_size(const char* field, const Bytes& value, std::size_t want) {
  if (value.size() != want) {
    throw VectorParseError(field, "expected " + std::to_string(want) + " bytes, got " +
                                      std::to_string(value.size()));
  }
}

void expect_empty(const char* field, const Bytes& value) { expect_size(field, value, 0); }

// Structural checks shared by the parser and the runner.
void validate(const TestVector& v) {
  const VariantInfo& info = variant_info(v.variant);
  expect_size("key_k", v.key_k, info.key_bytes);
  expect_size("nonce", v.nonce, info.iv_bytes);
  switch (v.mode) {
    case VectorMode::Keystream:
      expect_empty("aad", v.aad);
      expect_empty("tag", v.tag);
      expect_size("ct", v.ct, v.pt.size());
      if (v.tag_len_bits != 0) throw VectorParseError("tag_len_bits", "must be 0 for keystream vectors");
      break;
    case VectorMode::Kdf:
      expect_empty("aad", v.aad);
      expect_empty("pt", v.pt);
      expect_empty("tag", v.tag);
      expect_size("ct", v.ct, 16 + info.key_bytes);
      if (v.tag_len_bits != 0) throw VectorParseError("tag_len_bits", "must be 0 for kdf vectors");
      break;
    case VectorMode::Gxm:
    case VectorMode::Mur: {
      if (!v.key_h) throw VectorParseError("key_h", "required for AEAD vectors");
      expect_size("key_h", *v.key_h, 16);
      expect_size("ct", v.ct, v.pt.size());
      try {
        AeadParams{v.variant, v.tag_len_bits}.validate();
      } catch (const ParameterError& e) {
        throw VectorParseError("tag_len_bits", e.what());
      }
      expect_size("tag", v.tag, v.tag_len_bits / 8);
      break;
    }
  }
}

void compare(VectorReport& report, const char* field, ByteView want, ByteView got) {
  const std::size_t common = std::min(want.size(), got.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (want[i] != got[i]) {
      report.mismatches.push_back({field, i,
                                   "expected " + to_hex(want.subspan(i, 1)) + " got " + to_hex(got.subspan(i, 1))});
      return;
    }
  }
  if (want.size() != got.size()) {
    report.mismatches.push_back({field, common,
                                 "expected " + std::to_string(want.size()) + " bytes, got " +
                                     std::to_string(got.size())});
  }
}

void run_aead(const TestVector& v, VectorReport& report) {
  const AeadParams params{v.variant, v.tag_len_bits};
  const AeadKey key(v.variant, *v.key_h, v.key_k);
  SealedMessage sealed;
  OpenResult opened;
  if (v.mode == VectorMode::Gxm) {
    sealed = gxm_seal(params, key, v.nonce, v.aad, v.pt);
    opened = gxm_open(params, key, v.nonce, v.aad, v.ct, v.tag);
  } else {
    sealed = mur_seal(params, key, v.nonce, v.aad, v.pt);
    opened = mur_open(params, key, v.nonce, v.aad, v.ct, v.tag);
  }
  compare(report, "ct", v.ct, sealed.ciphertext);
  compare(report, "tag", v.tag, sealed.tag);
  if (!opened) {
    report.mismatches.push_back({"open", 0, "authentication failed on the recorded ciphertext"});
  } else {
    compare(report, "open", v.pt, *opened);
  }
}

// Raw 64-bit outputs of mt19937_64 are fixed by the C++ standard, so the
// corpus is identical on every conforming implementation.
class ByteSource {
 public:
  explicit ByteSource(std::uint64_t seed) : engine_(seed) {}

  Bytes take(std::size_t n) {
    Bytes out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (avail_ == 0) {
        word_ = engine_();
        avail_ = 8;
      }
      out[i] = static_cast<std::uint8_t>(word_ >> (8 * (8 - avail_)));
      --avail_;
    }
    return out;
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t word_ = 0;
  unsigned avail_ = 0;
};

}  // namespace

std::string_view mode_name(VectorMode m) noexcept { return kModeNames[static_cast<std::size_t>(m)]; }

std::optional<VectorMode> parse_mode(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kModeNames.size(); ++i) {
    if (kModeNames[i] == name) return static_cast<VectorMode>(i);
  }
  return std::nullopt;
}

TestVector parse_vector(std::string_view json_line) {
  json obj;
  try {
    obj = json::parse(json_line);
  } catch (const json::parse_error& e) {
    throw VectorParseError("<record>", e.what());
  }
  if (!obj.is_object()) throw VectorParseError("<record>", "expected a JSON object");

  TestVector v;
  v.id = require_string(obj, "id");
  const std::string variant = require_string(obj, "variant");
  const auto parsed_variant = parse_variant(variant);
  if (!parsed_variant) throw VectorParseError("variant", "unknown variant '" + variant + "'");
  v.variant = *parsed_variant;
  const std::string mode = require_string(obj, "mode");
  const auto parsed_mode = parse_mode(mode);
  if (!parsed_mode) throw VectorParseError("mode", "unknown mode '" + mode + "'");
  v.mode = *parsed_mode;

  if (const auto it = obj.find("key_h"); it != obj.end() && !it->is_null()) {
    v.key_h = require_hex(obj, "key_h");
  }
  v.key_k = require_hex(obj, "key_k");
  v.nonce = require_hex(obj, "nonce");
  v.aad = require_hex(obj, "aad");
  v.pt = require_hex(obj, "pt");
  v.ct = require_hex(obj, "ct");
  v.tag = require_hex(obj, "tag");
  const json& tag_len = require(obj, "tag_len_bits");
  if (!tag_len.is_number_unsigned()) throw VectorParseError("tag_len_bits", "expected a non-negative integer");
  v.tag_len_bits = tag_len.get<unsigned>();
  if (const auto it = obj.find("note"); it != obj.end()) {
    if (!it->is_string()) throw VectorParseError("note", "expected a string");
    v.note = it->get<std::string>();
  }
  validate(v);
  return v;
}

std::optional<std::string> peek_vector_id(std::string_view json_line) noexcept {
  const json obj = json::parse(json_line, nullptr, false);
  if (!obj.is_object()) return std::nullopt;
  const auto it = obj.find("id");
  if (it == obj.end() || !it->is_string()) return std::nullopt;
  return it->get<std::string>();
}

std::string to_json_line(const TestVector& v) {
  // ordered_json keeps the documented field order in files.
  nlohmann::ordered_json obj;
  obj["id"] = v.id;
  obj["variant"] = std::string(variant_info(v.variant).name);
  obj["mode"] = std::string(mode_name(v.mode));
  if (v.key_h) obj["key_h"] = to_hex(*v.key_h);
  obj["key_k"] = to_hex(v.key_k);
  obj["nonce"] = to_hex(v.nonce);
  obj["aad"] = to_hex(v.aad);
  obj["pt"] = to_hex(v.pt);
  obj["ct"] = to_hex(v.ct);
  obj["tag"] = to_hex(v.tag);
  obj["tag_len_bits"] = v.tag_len_bits;
  if (!v.note.empty()) obj["note"] = v.note;
  return obj.dump();
}

std::vector<TestVector> read_vectors(std::istream& in) {
  std::vector<TestVector> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_vector(line));
    } catch (const VectorParseError& e) {
      throw VectorParseError(e.field(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::string write_vectors(const std::vector<TestVector>& vectors) {
  std::string out;
  for (const TestVector& v : vectors) {
    out += to_json_line(v);
    out += '\n';
  }
  return out;
}

VectorReport run_vector(const TestVector& v) {
  validate(v);
  VectorReport report{v.id, {}};
  switch (v.mode) {
    case VectorMode::Keystream: {
      Bytes out(v.pt);
      KeystreamGenerator gen(v.variant, v.key_k, v.nonce);
      gen.apply(out);
      compare(report, "ct", v.ct, out);
      break;
    }
    case VectorMode::Kdf:
      compare(report, "ct", v.ct, derive_key_bytes(v.variant, MasterKey{v.key_k, v.nonce}));
      break;
    case VectorMode::Gxm:
    case VectorMode::Mur:
      run_aead(v, report);
      break;
  }
  return report;
}

std::vector<TestVector> generate_vectors(std::uint64_t seed) {
  static constexpr std::array<std::size_t, 7> kSizes = {0, 1, 15, 16, 17, 255, 1500};
  static constexpr std::array<unsigned, 4> kTagBits = {32, 64, 96, 128};
  static constexpr std::array<std::size_t, 4> kAadSizes = {0, 1, 20, 64};

  ByteSource rng(seed);
  std::vector<TestVector> out;
  for (const ZucVariant variant : kAllVariants) {
    const VariantInfo& info = variant_info(variant);
    const std::string vname(info.name);

    for (const std::size_t len : {std::size_t{64}, std::size_t{1500}}) {
      TestVector v;
      v.variant = variant;
      v.mode = VectorMode::Keystream;
      v.id = "keystream-" + vname + "-" + std::to_string(len);
      v.key_k = rng.take(info.key_bytes);
      v.nonce = rng.take(info.iv_bytes);
      v.pt.assign(len, 0);
      v.ct = zuc_keystream(variant, v.key_k, v.nonce, len);
      out.push_back(std::move(v));
    }

    {
      TestVector v;
      v.variant = variant;
      v.mode = VectorMode::Kdf;
      v.id = "kdf-" + vname;
      v.key_k = rng.take(info.key_bytes);
      v.nonce = rng.take(info.iv_bytes);
      v.ct = derive_key_bytes(variant, MasterKey{v.key_k, v.nonce});
      out.push_back(std::move(v));
    }

    for (const VectorMode mode : {VectorMode::Gxm, VectorMode::Mur}) {
      for (std::size_t si = 0; si < kSizes.size(); ++si) {
        for (std::size_t ti = 0; ti < kTagBits.size(); ++ti) {
          TestVector v;
          v.variant = variant;
          v.mode = mode;
          v.tag_len_bits = kTagBits[ti];
          v.id = std::string(mode_name(mode)) + "-" + vname + "-p" + std::to_string(kSizes[si]) + "-t" +
                 std::to_string(kTagBits[ti]);
          v.key_h = rng.take(16);
          v.key_k = rng.take(info.key_bytes);
          v.nonce = rng.take(info.iv_bytes);
          v.aad = rng.take(kAadSizes[(si + ti) % kAadSizes.size()]);
          v.pt = rng.take(kSizes[si]);
          const AeadParams params{variant, v.tag_len_bits};
          const AeadKey key(variant, *v.key_h, v.key_k);
          const SealedMessage sealed = mode == VectorMode::Gxm ? gxm_seal(params, key, v.nonce, v.aad, v.pt)
                                                               : mur_seal(params, key, v.nonce, v.aad, v.pt);
          v.ct = sealed.ciphertext;
          v.tag = sealed.tag;
          out.push_back(std::move(v));
        }
      }
    }
  }
  return out;
}

}  // namespace zucaead
