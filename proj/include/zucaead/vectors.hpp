// Known-answer test vectors in a JSON-lines file format, plus a runner.
//
// One JSON object per line:
//   {"id": "...", "variant": "zuc128", "mode": "gxm", "key_h": "..",
//    "key_k": "..", "nonce": "..", "aad": "..", "pt": "..", "ct": "..",
//    "tag": "..", "tag_len_bits": 128, "note": "..."}
//
// Hex is lowercase without separators. Mode-specific meaning:
//   keystream  key_k/nonce are the ZUC key/IV, pt is all zeros, ct = pt xor Z
//   kdf        key_k/nonce are K0/IV0, ct = H || K, pt/aad/tag empty
//   gxm, mur   full AEAD inputs and outputs; key_h required
// "note" is optional free text (provenance).
#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zucaead/common.hpp"
#include "zucaead/zuc.hpp"

namespace zucaead {

enum class VectorMode : std::uint8_t { Keystream, Gxm, Mur, Kdf };

std::string_view mode_name(VectorMode m) noexcept;
std::optional<VectorMode> parse_mode(std::string_view name) noexcept;

struct TestVector {
  std::string id;
  ZucVariant variant = ZucVariant::Zuc128;
  VectorMode mode = VectorMode::Keystream;
  std::optional<Bytes> key_h;
  Bytes key_k;
  Bytes nonce;
  Bytes aad;
  Bytes pt;
  Bytes ct;
  Bytes tag;
  unsigned tag_len_bits = 0;
  std::string note;

  friend bool operator==(const TestVector&, const TestVector&) = default;
};

/// Malformed vector. `field()` names the offending JSON field.
class VectorParseError : public Error {
 public:
  VectorParseError(std::string field, const std::string& what)
      : Error("field '" + field + "': " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

TestVector parse_vector(std::string_view json_line);

/// Best-effort "id" of a record that may otherwise be malformed, so a
/// failing line can still be reported by name.
std::optional<std::string> peek_vector_id(std::string_view json_line) noexcept;
std::string to_json_line(const TestVector& v);

/// Reads every non-blank line. Parse errors carry the 1-based line number in
/// their message.
std::vector<TestVector> read_vectors(std::istream& in);
std::string write_vectors(const std::vector<TestVector>& vectors);

struct FieldMismatch {
  std::string field;
  std::size_t offset;   // first differing byte (or the shorter length)
  std::string detail;
};

struct VectorReport {
  std::string id;
  std::vector<FieldMismatch> mismatches;
  bool passed() const noexcept { return mismatches.empty(); }
};

/// Executes the vector's operation and compares byte-exactly. AEAD vectors
/// are also opened and must return the plaintext. Throws VectorParseError
/// when a field length is inconsistent with the variant and mode.
VectorReport run_vector(const TestVector& v);

/// Reproducible corpus: every variant, both AEAD modes, tag lengths
/// {32, 64, 96, 128} and plaintext sizes {0, 1, 15, 16, 17, 255, 1500},
/// plus keystream and kdf records per variant. Same seed, same corpus.
std::vector<TestVector> generate_vectors(std::uint64_t seed);

}  // namespace zucaead
