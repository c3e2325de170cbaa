// Acceptance report: one PASS/FAIL line per criterion. Exits nonzero when
// any criterion fails.

#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "cli_runner.hpp"
#include "oracles.hpp"
#include "perf_checks.hpp"
#include "support.hpp"
#include "zucaead/frame.hpp"
#include "zucaead/gxm.hpp"
#include "zucaead/kdf.hpp"
#include "zucaead/mur.hpp"
#include "zucaead/vectors.hpp"

using namespace zucaead;
using testsupport::Rng;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    note(why);
    pass = false;
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

constexpr std::array<unsigned, 4> kTagBits = {32, 64, 96, 128};
constexpr std::array<AeadMode, 2> kModes = {AeadMode::Gxm, AeadMode::Mur};

// How the (H, K) pair of a test key is produced.
enum class KeySource { Explicit, Derived };

struct TestKey {
  Bytes h;
  Bytes k;
  AeadKey key;
};

TestKey make_key(Rng& rng, ZucVariant variant, KeySource source) {
  const VariantInfo& info = variant_info(variant);
  Bytes h;
  Bytes k;
  if (source == KeySource::Explicit) {
    h = rng.bytes(16);
    k = rng.bytes(info.key_bytes);
  } else {
    const Bytes raw = derive_key_bytes(variant, MasterKey{rng.bytes(info.key_bytes), rng.bytes(info.iv_bytes)});
    h.assign(raw.begin(), raw.begin() + 16);
    k.assign(raw.begin() + 16, raw.end());
  }
  AeadKey key(variant, h, k);
  return {h, k, key};
}

SealedMessage seal(AeadMode mode, const AeadParams& p, const AeadKey& key, ByteView n, ByteView a, ByteView m) {
  return mode == AeadMode::Gxm ? gxm_seal(p, key, n, a, m) : mur_seal(p, key, n, a, m);
}

OpenResult open(AeadMode mode, const AeadParams& p, const AeadKey& key, ByteView n, ByteView a, ByteView c,
                ByteView t) {
  return mode == AeadMode::Gxm ? gxm_open(p, key, n, a, c, t) : mur_open(p, key, n, a, c, t);
}

std::string what(ZucVariant v, AeadMode m, unsigned tau, std::size_t size) {
  return std::string(variant_info(v).name) + "/" + std::string(aead_mode_name(m)) + "/t" + std::to_string(tau) +
         "/p" + std::to_string(size);
}

// 1. Official keystream test sets.
Outcome criterion_keystream() {
  Outcome out;
  std::ifstream in(std::string(testsupport::data_dir()) + "/official_keystream.jsonl");
  if (!in) {
    out.fail("cannot open official_keystream.jsonl");
    return out;
  }
  std::map<ZucVariant, std::pair<int, int>> tally;  // passed, total
  for (const TestVector& v : read_vectors(in)) {
    auto& [passed, total] = tally[v.variant];
    ++total;
    if (v.note.empty()) out.fail(v.id + " has no provenance note");
    if (zuc_keystream(v.variant, v.key_k, v.nonce, v.ct.size()) == v.ct) {
      ++passed;
    } else {
      out.fail(v.id + " keystream mismatch");
    }
  }
  for (ZucVariant variant : kAllVariants) {
    const auto [passed, total] = tally[variant];
    const std::string name(variant_info(variant).name);
    if (total == 0) {
      out.fail(name + ": no published known-answer vectors are pinned");
    } else {
      out.note(name + " " + std::to_string(passed) + "/" + std::to_string(total));
    }
  }
  return out;
}

// 2. Field multiplication against the bit-serial oracle, and field axioms.
Outcome criterion_field() {
  Outcome out;
  Rng rng(1002);
  auto element = [](const Bytes& b) {
    return gf128::FieldElement::from_bytes(std::span<const std::uint8_t, 16>(b.data(), 16));
  };
  auto bytes_of = [](gf128::FieldElement e) {
    const auto a = e.to_bytes();
    return Bytes(a.begin(), a.end());
  };
  int mismatches = 0;
  for (int i = 0; i < 10000; ++i) {
    const Bytes a = rng.bytes(16);
    const Bytes b = rng.bytes(16);
    const Bytes want = oracle::gf_mul(a, b);
    if (bytes_of(gf128::mul(element(a), element(b))) != want) ++mismatches;
    if (bytes_of(gf128::MulTable(element(b)).mul(element(a))) != want) ++mismatches;
  }
  int axiom_failures = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto a = element(rng.bytes(16));
    const auto b = element(rng.bytes(16));
    const auto c = element(rng.bytes(16));
    if (gf128::mul(a, b) != gf128::mul(b, a)) ++axiom_failures;
    if (gf128::mul(gf128::mul(a, b), c) != gf128::mul(a, gf128::mul(b, c))) ++axiom_failures;
    if (gf128::mul(a, gf128::add(b, c)) != gf128::add(gf128::mul(a, b), gf128::mul(a, c))) ++axiom_failures;
  }
  if (mismatches) out.fail(std::to_string(mismatches) + " oracle mismatches");
  if (axiom_failures) out.fail(std::to_string(axiom_failures) + " axiom failures");
  out.note("10000 pairs, 10000 triples");
  return out;
}

// 3. Published GHASH values and incremental hashing.
Outcome criterion_ghash() {
  Outcome out;
  using testsupport::hex;
  struct Case {
    const char* h;
    const char* a;
    const char* c;
    const char* y;
  };
  const Case cases[] = {
      {"66e94bd4ef8a2c3b884cfa59ca342b2e", "", "0388dace60b6a392f328c2b971b2fe78", "f38cbb1ad69223dcc3457ae5b6b0f885"},
      {"b83b533708bf535d0aa6e52980d53b78", "",
       "42831ec2217774244b7221b784d0d49ce3aa212f2c02a4e035c17e2329aca12e21d514b25466931c7d8f6a5aac84aa051ba30b396a0aa"
       "c973d58e091473f5985",
       "7f1b32b81b820d02614f8895ac1d4eac"},
      {"b83b533708bf535d0aa6e52980d53b78", "feedfacedeadbeeffeedfacedeadbeefabaddad2",
       "42831ec2217774244b7221b784d0d49ce3aa212f2c02a4e035c17e2329aca12e21d514b25466931c7d8f6a5aac84aa051ba30b396a0aa"
       "c973d58e091",
       "698e57f70e6ecc7fd9463b7260a9ae5f"},
  };
  for (const Case& tc : cases) {
    const GhashKey key = GhashKey::from_bytes(hex(tc.h));
    const Block y = ghash(key, hex(tc.a), hex(tc.c));
    const Block y_ct = ghash_constant_time(key, hex(tc.a), hex(tc.c));
    if (Bytes(y.begin(), y.end()) != hex(tc.y) || Bytes(y_ct.begin(), y_ct.end()) != hex(tc.y)) {
      out.fail(std::string("published case with H=") + tc.h + " mismatches");
    }
  }
  Rng rng(1003);
  int chunking_failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const GhashKey key = GhashKey::from_bytes(rng.bytes(16));
    const Bytes a = rng.bytes(rng.below(80));
    const Bytes x = rng.bytes(rng.below(300));
    GhashStream stream(key);
    for (std::size_t off = 0; off < a.size();) {
      const std::size_t n = std::min(a.size() - off, rng.below(40));
      stream.update_aad(ByteView(a).subspan(off, n));
      off += n;
    }
    for (std::size_t off = 0; off < x.size();) {
      const std::size_t n = std::min(x.size() - off, rng.below(40));
      stream.update_text(ByteView(x).subspan(off, n));
      off += n;
    }
    if (stream.finalize() != ghash(key, a, x)) ++chunking_failures;
  }
  if (chunking_failures) out.fail(std::to_string(chunking_failures) + " chunkings disagree");
  out.note("3 published cases, 1000 chunkings");
  return out;
}

// 4. Round trip over the full parameter grid.
Outcome criterion_round_trip(KeySource source, int tuples) {
  Outcome out;
  Rng rng(source == KeySource::Explicit ? 1004 : 2004);
  constexpr std::array<std::size_t, 8> kSizes = {0, 1, 15, 16, 17, 255, 1500, 65536};
  std::size_t count = 0;
  for (ZucVariant variant : kAllVariants) {
    const VariantInfo& info = variant_info(variant);
    for (AeadMode mode : kModes) {
      for (unsigned tau : kTagBits) {
        const AeadParams params{variant, tau};
        for (std::size_t size : kSizes) {
          const Bytes p = rng.bytes(size);
          for (int t = 0; t < tuples; ++t) {
            const TestKey key = make_key(rng, variant, source);
            const Bytes n = rng.bytes(info.iv_bytes);
            const Bytes a = rng.bytes(rng.below(33));
            const SealedMessage s = seal(mode, params, key.key, n, a, p);
            const OpenResult r = open(mode, params, key.key, n, a, s.ciphertext, s.tag);
            ++count;
            if (!r || *r != p || s.ciphertext.size() != size || s.tag.size() != tau / 8) {
              out.fail(what(variant, mode, tau, size) + " round trip failed");
              return out;
            }
          }
        }
      }
    }
  }
  out.note(std::to_string(count) + " messages");
  return out;
}

// 5. Every single-bit flip of a sealed message's inputs is rejected.
Outcome criterion_forgery(KeySource source) {
  Outcome out;
  Rng rng(source == KeySource::Explicit ? 1005 : 2005);
  std::size_t flips = 0;
  for (ZucVariant variant : kAllVariants) {
    const VariantInfo& info = variant_info(variant);
    for (AeadMode mode : kModes) {
      for (unsigned tau : {32u, 128u}) {
        const AeadParams params{variant, tau};
        for (std::size_t plen = 0; plen <= 8; ++plen) {
          for (std::size_t alen = 0; alen <= 8; ++alen) {
            const TestKey key = make_key(rng, variant, source);
            const Bytes n = rng.bytes(info.iv_bytes);
            const Bytes a = rng.bytes(alen);
            const Bytes p = rng.bytes(plen);
            const SealedMessage s = seal(mode, params, key.key, n, a, p);
            auto try_flips = [&](const Bytes& field, const char* name, auto&& opener) {
              for (std::size_t bit = 0; bit < field.size() * 8; ++bit) {
                Bytes changed = field;
                changed[bit / 8] ^= static_cast<std::uint8_t>(0x80 >> (bit % 8));
                ++flips;
                if (opener(changed)) {
                  out.fail(what(variant, mode, tau, plen) + " accepted a flip in " + name);
                }
              }
            };
            try_flips(n, "nonce", [&](const Bytes& x) { return open(mode, params, key.key, x, a, s.ciphertext, s.tag); });
            try_flips(a, "aad", [&](const Bytes& x) { return open(mode, params, key.key, n, x, s.ciphertext, s.tag); });
            try_flips(s.ciphertext, "ciphertext",
                      [&](const Bytes& x) { return open(mode, params, key.key, n, a, x, s.tag); });
            try_flips(s.tag, "tag", [&](const Bytes& x) { return open(mode, params, key.key, n, a, s.ciphertext, x); });
          }
        }
      }
    }
  }
  out.note(std::to_string(flips) + " flipped messages rejected");
  return out;
}

// 6. Behaviour of both modes under a reused nonce.
Outcome criterion_misuse(KeySource source) {
  Outcome out;
  Rng rng(source == KeySource::Explicit ? 1006 : 2006);
  for (ZucVariant variant : kAllVariants) {
    const VariantInfo& info = variant_info(variant);
    const std::string name(info.name);
    {
      const TestKey key = make_key(rng, variant, source);
      const AeadParams params{variant, 128};
      const Bytes n = rng.bytes(info.iv_bytes);
      for (int i = 0; i < 100; ++i) {
        const std::size_t len = rng.below(1501);
        const Bytes p1 = rng.bytes(len);
        const Bytes p2 = rng.bytes(len);
        const Bytes a1 = rng.bytes(rng.below(20));
        const Bytes a2 = rng.bytes(rng.below(20));
        const SealedMessage s1 = gxm_seal(params, key.key, n, a1, p1);
        const SealedMessage s2 = gxm_seal(params, key.key, n, a2, p2);
        if (oracle::xor_bytes(s1.ciphertext, s2.ciphertext) != oracle::xor_bytes(p1, p2)) {
          out.fail(name + ": GXM c1^c2 != p1^p2 under a reused nonce");
          break;
        }
      }
    }
    {
      const TestKey key = make_key(rng, variant, source);
      const AeadParams params{variant, 128};
      const Bytes n = rng.bytes(info.iv_bytes);
      const Bytes a = rng.bytes(12);
      const Bytes p = rng.bytes(200);
      if (mur_seal(params, key.key, n, a, p) != mur_seal(params, key.key, n, a, p)) {
        out.fail(name + ": MUR sealing is not deterministic");
      }
      std::set<Bytes> plaintexts;
      std::set<Bytes> tags;
      while (plaintexts.size() < 1000) {
        const Bytes q = rng.bytes(1 + rng.below(64));
        if (!plaintexts.insert(q).second) continue;
        tags.insert(mur_seal(params, key.key, n, a, q).tag);
      }
      if (tags.size() != plaintexts.size()) out.fail(name + ": MUR tag collision among distinct plaintexts");
    }
  }
  out.note("100 GXM reuse pairs and 1000 MUR trials per variant");
  return out;
}

// 7. Library output equals the straight-line reference compositions.
Outcome criterion_composition(KeySource source) {
  Outcome out;
  Rng rng(source == KeySource::Explicit ? 1007 : 2007);
  int mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const ZucVariant variant = kAllVariants[rng.below(kAllVariants.size())];
    const unsigned tau = kTagBits[rng.below(kTagBits.size())];
    const VariantInfo& info = variant_info(variant);
    const TestKey key = make_key(rng, variant, source);
    const Bytes n = rng.bytes(info.iv_bytes);
    const Bytes a = rng.bytes(rng.below(50));
    const Bytes p = rng.bytes(i % 100 == 0 ? 5000 + rng.below(5000) : rng.below(300));
    const AeadParams params{variant, tau};
    const SealedMessage g = gxm_seal(params, key.key, n, a, p);
    const oracle::Sealed go = oracle::gxm_seal(variant, key.h, key.k, n, a, p, tau);
    if (g.ciphertext != go.c || g.tag != go.t) ++mismatches;
    const SealedMessage m = mur_seal(params, key.key, n, a, p);
    const oracle::Sealed mo = oracle::mur_seal(variant, key.h, key.k, n, a, p, tau);
    if (m.ciphertext != mo.c || m.tag != mo.t) ++mismatches;
  }
  if (mismatches) out.fail(std::to_string(mismatches) + " compositions differ");
  out.note("1000 random inputs, both modes");
  return out;
}

// 8. DeriveKey prefix property, then criteria 4 to 7 with derived keys.
Outcome criterion_derive() {
  Outcome out;
  Rng rng(1008);
  for (ZucVariant variant : kAllVariants) {
    const VariantInfo& info = variant_info(variant);
    for (int i = 0; i < 100; ++i) {
      const MasterKey master{rng.bytes(info.key_bytes), rng.bytes(info.iv_bytes)};
      const Bytes raw = zuc_keystream(variant, master.k0, master.iv0, 16 + info.key_bytes);
      const AeadKey key = derive_key(variant, master);
      const Block h = key.h().bytes();
      if (Bytes(h.begin(), h.end()) != Bytes(raw.begin(), raw.begin() + 16) ||
          Bytes(key.k().begin(), key.k().end()) != Bytes(raw.begin() + 16, raw.end())) {
        out.fail(std::string(info.name) + ": derived key is not the keystream prefix");
        break;
      }
    }
  }
  const std::pair<const char*, Outcome> sub[] = {
      {"round trip", criterion_round_trip(KeySource::Derived, 100)},
      {"forgery", criterion_forgery(KeySource::Derived)},
      {"misuse", criterion_misuse(KeySource::Derived)},
      {"composition", criterion_composition(KeySource::Derived)},
  };
  for (const auto& [name, o] : sub) {
    if (!o.pass) out.fail(std::string(name) + " with derived keys: " + o.detail);
  }
  out.note("prefix holds for 300 master keys; criteria 4-7 pass with derived keys");
  return out;
}

// 9. Command-line contract.
Outcome criterion_cli() {
  Outcome out;
  testsupport::CliRunner cli("acceptance");
  Rng rng(1009);
  for (ZucVariant variant : kAllVariants) {
    const VariantInfo& info = variant_info(variant);
    for (AeadMode mode : kModes) {
      for (std::size_t size : {0, 1, 1500, 70000}) {
        const std::string label = what(variant, mode, 128, size);
        const Bytes p = rng.bytes(size);
        cli.write("p", p);
        const std::string keys = " --key-h " + to_hex(rng.bytes(16)) + " --key-k " + to_hex(rng.bytes(info.key_bytes));
        const std::string aad = " --aad " + to_hex(rng.bytes(7));
        const std::string sealed = cli.path("s");
        if (cli.run("seal --mode " + std::string(aead_mode_name(mode)) + " --variant " + std::string(info.name) +
                    keys + aad + " --nonce " + to_hex(rng.bytes(info.iv_bytes)) + " --in " + cli.path("p") +
                    " --out " + sealed)
                .status != 0) {
          out.fail(label + ": seal failed");
          continue;
        }
        std::filesystem::remove(cli.path("o"));
        if (cli.run("open" + keys + aad + " --in " + sealed + " --out " + cli.path("o")).status != 0 ||
            cli.read("o") != p) {
          out.fail(label + ": open did not round-trip");
        }
        Bytes frame = cli.read("s");
        frame[rng.below(frame.size())] ^= static_cast<std::uint8_t>(1u << rng.below(8));
        cli.write("t", frame);
        std::filesystem::remove(cli.path("o2"));
        const int status = cli.run("open" + keys + aad + " --in " + cli.path("t") + " --out " + cli.path("o2")).status;
        // A flip in the header can also make the frame malformed (status 2).
        if (status == 0 || cli.exists("o2")) out.fail(label + ": tampered frame was accepted");
        std::filesystem::remove(cli.path("o3"));
        if (cli.run("open" + keys + " --aad 00 --in " + sealed + " --out " + cli.path("o3")).status != 1 ||
            cli.exists("o3")) {
          out.fail(label + ": wrong AAD did not give status 1 without output");
        }
      }
    }
  }
  // Tag-byte tampering specifically must be an authentication failure.
  cli.write("p", Bytes(100, 0x33));
  const std::string keys = " --key-h " + std::string(32, '1') + " --key-k " + std::string(32, '2');
  cli.run("seal --mode gxm" + keys + " --nonce " + std::string(32, '3') + " --in " + cli.path("p") + " --out " +
          cli.path("s"));
  Bytes frame = cli.read("s");
  frame.back() ^= 0x01;
  cli.write("t", frame);
  if (cli.run("open" + keys + " --in " + cli.path("t") + " --out " + cli.path("o4")).status != 1 || cli.exists("o4")) {
    out.fail("tampered trailer did not give status 1 without output");
  }
  const std::string data = testsupport::data_dir();
  if (cli.run("selftest -q --vectors " + data + "/corpus.jsonl").status != 0) out.fail("selftest over corpus failed");
  if (cli.run("selftest -q --vectors " + data + "/official_keystream.jsonl").status != 0) {
    out.fail("selftest over official vectors failed");
  }
  out.note("24 file round trips, tamper and wrong-AAD rejection, corpus selftest");
  return out;
}

// 10. Directional performance.
Outcome criterion_perf() {
  Outcome out;
  char buf[200];
  const auto g = perfcheck::ghash_table_vs_bitserial();
  std::snprintf(buf, sizeof buf, "ghash table %.1f vs bit-serial %.1f MB/s", g.faster_mb_s, g.slower_mb_s);
  if (!g.holds()) out.fail(buf);
  out.note(buf);
  for (ZucVariant variant : kAllVariants) {
    const auto c = perfcheck::gxm_vs_mur_seal(variant);
    std::snprintf(buf, sizeof buf, "%s gxm %.1f vs mur %.1f MB/s", std::string(variant_info(variant).name).c_str(),
                  c.faster_mb_s, c.slower_mb_s);
    if (!c.holds()) out.fail(buf);
    out.note(buf);
  }
  return out;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"keystream known answers", criterion_keystream},
      {"GF(2^128) multiplication", criterion_field},
      {"GHASH", criterion_ghash},
      {"round trip", [] { return criterion_round_trip(KeySource::Explicit, 100); }},
      {"forgery rejection", [] { return criterion_forgery(KeySource::Explicit); }},
      {"nonce misuse behaviour", [] { return criterion_misuse(KeySource::Explicit); }},
      {"mode composition", [] { return criterion_composition(KeySource::Explicit); }},
      {"key derivation", criterion_derive},
      {"command-line contract", criterion_cli},
      {"perf-smoke", criterion_perf},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::printf("criterion %2d %s: %s (%s)\n", index, o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
