// Throughput micro-benchmarks. Results are machine-relative and
// informational; nothing here asserts anything.
#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "zucaead/zuc.hpp"

namespace zucaead {

enum class BenchCell : std::uint8_t {
  Keystream,
  GhashTable,     // precomputed 4-bit tables
  GhashBitSerial, // constant-time shift-and-add multiply
  GxmSeal,
  GxmOpen,
  MurSeal,
  MurOpen,
};

inline constexpr std::array<BenchCell, 7> kAllBenchCells = {
    BenchCell::Keystream, BenchCell::GhashTable, BenchCell::GhashBitSerial, BenchCell::GxmSeal,
    BenchCell::GxmOpen,   BenchCell::MurSeal,    BenchCell::MurOpen};

std::string_view bench_cell_name(BenchCell c) noexcept;

struct BenchConfig {
  std::vector<std::size_t> sizes = {64, 1500, 65536};
  std::vector<ZucVariant> variants = {kAllVariants.begin(), kAllVariants.end()};
  std::vector<BenchCell> cells = {kAllBenchCells.begin(), kAllBenchCells.end()};
  unsigned runs = 5;                                  // median is taken over these
  std::chrono::microseconds min_run_time{20000};      // per run iteration budget
};

struct BenchRow {
  BenchCell cell;
  ZucVariant variant;
  std::size_t size;
  double mb_per_s;   // 10^6 bytes per second; 0 for empty messages
  double ops_per_s;
  unsigned runs;
};

struct Measurement {
  double median_ops_per_s;
  double best_ops_per_s;
};

/// Calls `op` repeatedly: each run lasts at least `min_run_time`, and the
/// per-run call rate is summarized over `runs` runs (after one warm-up run).
Measurement measure(const std::function<void()>& op, unsigned runs, std::chrono::microseconds min_run_time);

/// Builds the operation a cell measures, with fixed pseudo-random inputs.
std::function<void()> make_bench_op(BenchCell cell, ZucVariant variant, std::size_t size);

/// One configuration at a time, in cells x variants x sizes order.
std::vector<BenchRow> run_bench(const BenchConfig& config);

std::string format_table(const std::vector<BenchRow>& rows);
std::string format_csv(const std::vector<BenchRow>& rows);

}  // namespace zucaead
