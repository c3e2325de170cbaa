#include "zucaead/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>
#include <random>

#include "zucaead/ghash.hpp"
#include "zucaead/gxm.hpp"
#include "zucaead/mur.hpp"

namespace zucaead {

namespace {

constexpr std::array<std::string_view, 7> kCellNames = {"keystream", "ghash-table", "ghash-bitserial", "gxm-seal",
                                                        "gxm-open",  "mur-seal",    "mur-open"};

Bytes filler(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Bytes out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(rng());
  return out;
}

// Keeps the optimizer from discarding a benchmark result.
volatile std::uint8_t g_sink = 0;

void consume(ByteView data) {
  if (!data.empty()) g_sink = data[data.size() - 1];
}

struct AeadFixture {
  AeadParams params;
  AeadKey key;
  Bytes nonce;
  Bytes aad;
  Bytes plaintext;
  SealedMessage sealed;
};

std::shared_ptr<AeadFixture> make_fixture(ZucVariant variant, std::size_t size, bool gxm) {
  const VariantInfo& info = variant_info(variant);
  const AeadParams params{variant, 128};
  AeadKey key(variant, filler(16, 1), filler(info.key_bytes, 2));
  auto fx = std::make_shared<AeadFixture>(
      AeadFixture{params, key, filler(info.iv_bytes, 3), filler(16, 4), filler(size, 5), {}});
  fx->sealed = gxm ? gxm_seal(params, key, fx->nonce, fx->aad, fx->plaintext)
                   : mur_seal(params, key, fx->nonce, fx->aad, fx->plaintext);
  return fx;
}

}  // namespace

std::string_view bench_cell_name(BenchCell c) noexcept { return kCellNames[static_cast<std::size_t>(c)]; }

Measurement measure(const std::function<void()>& op, unsigned runs, std::chrono::microseconds min_run_time) {
  using Clock = std::chrono::steady_clock;
  runs = std::max(runs, 1u);
  std::vector<double> rates;
  rates.reserve(runs);
  for (unsigned r = 0; r <= runs; ++r) {
    std::uint64_t calls = 0;
    const auto start = Clock::now();
    auto now = start;
    do {
      op();
      ++calls;
      now = Clock::now();
    } while (now - start < min_run_time);
    const double seconds = std::chrono::duration<double>(now - start).count();
    if (r > 0) rates.push_back(static_cast<double>(calls) / seconds);  // run 0 is warm-up
  }
  std::sort(rates.begin(), rates.end());
  const std::size_t n = rates.size();
  const double median = n % 2 == 1 ? rates[n / 2] : (rates[n / 2 - 1] + rates[n / 2]) / 2;
  return {median, rates.back()};
}

std::function<void()> make_bench_op(BenchCell cell, ZucVariant variant, std::size_t size) {
  const VariantInfo& info = variant_info(variant);
  switch (cell) {
    case BenchCell::Keystream: {
      auto key = std::make_shared<Bytes>(filler(info.key_bytes, 2));
      auto iv = std::make_shared<Bytes>(filler(info.iv_bytes, 3));
      auto out = std::make_shared<Bytes>(size);
      return [=] {
        KeystreamGenerator gen(variant, *key, *iv);
        gen.keystream(*out);
        consume(*out);
      };
    }
    case BenchCell::GhashTable:
    case BenchCell::GhashBitSerial: {
      auto key = std::make_shared<GhashKey>(GhashKey::from_bytes(filler(16, 1)));
      auto text = std::make_shared<Bytes>(filler(size, 5));
      const bool table = cell == BenchCell::GhashTable;
      return [=] {
        const Block y = table ? ghash(*key, {}, *text) : ghash_constant_time(*key, {}, *text);
        consume(y);
      };
    }
    case BenchCell::GxmSeal:
    case BenchCell::GxmOpen: {
      auto fx = make_fixture(variant, size, true);
      if (cell == BenchCell::GxmSeal) {
        return [=] { consume(gxm_seal(fx->params, fx->key, fx->nonce, fx->aad, fx->plaintext).tag); };
      }
      return [=] {
        const OpenResult r = gxm_open(fx->params, fx->key, fx->nonce, fx->aad, fx->sealed.ciphertext, fx->sealed.tag);
        if (r) consume(*r);
      };
    }
    case BenchCell::MurSeal:
    case BenchCell::MurOpen: {
      auto fx = make_fixture(variant, size, false);
      if (cell == BenchCell::MurSeal) {
        return [=] { consume(mur_seal(fx->params, fx->key, fx->nonce, fx->aad, fx->plaintext).tag); };
      }
      return [=] {
        const OpenResult r = mur_open(fx->params, fx->key, fx->nonce, fx->aad, fx->sealed.ciphertext, fx->sealed.tag);
        if (r) consume(*r);
      };
    }
  }
  throw ParameterError("unknown benchmark cell");
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  for (const BenchCell cell : config.cells) {
    // GHASH does not depend on the cipher variant; measure it once.
    const bool variant_free = cell == BenchCell::GhashTable || cell == BenchCell::GhashBitSerial;
    for (const ZucVariant variant : config.variants) {
      for (const std::size_t size : config.sizes) {
        const Measurement m = measure(make_bench_op(cell, variant, size), config.runs, config.min_run_time);
        rows.push_back({cell, variant, size, m.median_ops_per_s * static_cast<double>(size) / 1e6,
                        m.median_ops_per_s, config.runs});
      }
      if (variant_free) break;
    }
  }
  return rows;
}

std::string format_table(const std::vector<BenchRow>& rows) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%-16s %-14s %10s %12s %14s\n", "cell", "variant", "bytes", "MB/s", "ops/s");
  out += line;
  for (const BenchRow& r : rows) {
    const bool variant_free = r.cell == BenchCell::GhashTable || r.cell == BenchCell::GhashBitSerial;
    const std::string variant = variant_free ? "-" : std::string(variant_info(r.variant).name);
    std::snprintf(line, sizeof line, "%-16s %-14s %10zu %12.2f %14.1f\n", std::string(bench_cell_name(r.cell)).c_str(),
                  variant.c_str(), r.size, r.mb_per_s, r.ops_per_s);
    out += line;
  }
  return out;
}

std::string format_csv(const std::vector<BenchRow>& rows) {
  std::string out = "cell,variant,bytes,mb_per_s,ops_per_s,runs\n";
  char line[160];
  for (const BenchRow& r : rows) {
    const bool variant_free = r.cell == BenchCell::GhashTable || r.cell == BenchCell::GhashBitSerial;
    const std::string variant = variant_free ? "" : std::string(variant_info(r.variant).name);
    std::snprintf(line, sizeof line, "%s,%s,%zu,%.4f,%.2f,%u\n", std::string(bench_cell_name(r.cell)).c_str(),
                  variant.c_str(), r.size, r.mb_per_s, r.ops_per_s, r.runs);
    out += line;
  }
  return out;
}

}  // namespace zucaead
