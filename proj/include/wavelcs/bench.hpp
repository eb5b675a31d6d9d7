#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "wavelcs/parallel.hpp"

namespace wavelcs {

/// One benchmark configuration. Input sequences are regenerated from
/// (seed, M, N), so a record is reproducible from its own fields.
struct BenchCase {
    std::size_t parent_len = 0;  // M
    std::size_t child_len = 0;   // N
    unsigned workers = 1;
    std::size_t block_size = kDefaultBlockSize;
    std::uint64_t seed = 1;
    unsigned repetitions = 3;
};

struct BenchRecord {
    BenchCase spec;
    double serial_seconds = 0.0;
    double parallel_seconds = 0.0;  // minimum over repetitions
    double speedup = 0.0;           // full precision; CSV rounds to 2 decimals
    Length lcs_length = 0;
};

/// The thirteen (M, N) size pairs of the reference experiment grid,
/// (10, 5) through (10000, 1500).
std::vector<BenchCase> table1_cases(unsigned workers, std::size_t block_size, std::uint64_t seed,
                                    unsigned repetitions = 3);

/// Wall-clock seconds for one fill invocation on a monotonic clock.
template <typename Fn>
double time_fill(Fn&& run) {
    const auto start = std::chrono::steady_clock::now();
    run();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

/// serial / parallel. Throws std::invalid_argument when parallel <= 0.
double speedup(double serial_seconds, double parallel_seconds);

struct BenchOptions {
    KernelKind kernel = KernelKind::Auto;
    std::ostream* progress = nullptr;  // per-case log lines, optional
};

/// Runs every case: regenerates inputs from the seed, measures one serial
/// fill and `repetitions` parallel fills (keeping the minimum), and verifies
/// per repetition that serial and parallel lengths agree. A disagreement
/// throws EquivalenceError and aborts the run; a CapacityError skips that
/// case and the run continues.
std::vector<BenchRecord> run_benchmark(const std::vector<BenchCase>& cases,
                                       const BenchOptions& options = {});

/// CSV with '#' metadata lines (generator, seed policy, host workers), an
/// 8-column header, then one line per record: times with 4 decimal places,
/// speedup with 2. The speedup column is recomputed from the times as
/// printed, so a parsed file is self-consistent. A positive time below the
/// format resolution is written as 0.0001 rather than collapsing to zero.
void write_csv(const std::vector<BenchRecord>& records, const std::filesystem::path& path);

/// Alphabet used for generated benchmark inputs.
inline constexpr std::string_view kBenchAlphabet = "ACGT";

/// Child sequences derive their seed as seed + this offset, so parent and
/// child differ even at equal lengths.
inline constexpr std::uint64_t kChildSeedOffset = 0x9e3779b97f4a7c15ULL;

}  // namespace wavelcs
