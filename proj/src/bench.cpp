#include "wavelcs/bench.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "wavelcs/io.hpp"

namespace wavelcs {

namespace {

constexpr std::array<std::pair<std::size_t, std::size_t>, 13> kTable1Sizes{{
    {10, 5},
    {100, 10},
    {200, 30},
    {500, 80},
    {800, 100},
    {1000, 150},
    {2000, 200},
    {5000, 200},
    {5000, 400},
    {5000, 800},
    {5000, 1000},
    {10000, 1000},
    {10000, 1500},
}};

// Fixed decimals for CSV fields. A positive value below the 4-decimal
// resolution is written as 0.0001 so a parsed file never shows a zero time
// for a fill that did run.
std::string format_seconds(double seconds) {
    if (seconds > 0.0 && seconds < 0.00005) {
        return "0.0001";
    }
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.4f", seconds);
    return buffer;
}

std::string format_speedup(double ratio) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.2f", ratio);
    return buffer;
}

}  // namespace

std::vector<BenchCase> table1_cases(unsigned workers, std::size_t block_size, std::uint64_t seed,
                                    unsigned repetitions) {
    std::vector<BenchCase> cases;
    cases.reserve(kTable1Sizes.size());
    for (const auto& [m, n] : kTable1Sizes) {
        cases.push_back({m, n, workers, block_size, seed, repetitions});
    }
    return cases;
}

double speedup(double serial_seconds, double parallel_seconds) {
    if (parallel_seconds <= 0.0) {
        throw std::invalid_argument("speedup: parallel time must be positive");
    }
    return serial_seconds / parallel_seconds;
}

std::vector<BenchRecord> run_benchmark(const std::vector<BenchCase>& cases,
                                       const BenchOptions& options) {
    const Sequence alphabet{std::string(kBenchAlphabet)};
    std::vector<BenchRecord> records;
    records.reserve(cases.size());

    for (const BenchCase& spec : cases) {
        const Sequence parent = generate_random(spec.parent_len, alphabet, spec.seed);
        const Sequence child =
            generate_random(spec.child_len, alphabet, spec.seed + kChildSeedOffset);

        BenchRecord record;
        record.spec = spec;
        try {
            Length serial_length = 0;
            record.serial_seconds = time_fill([&] {
                serial_length = lcs_fill_serial(parent, child).dp.final_length();
            });

            ParallelConfig config;
            config.workers = spec.workers;
            config.block_size = spec.block_size;
            config.kernel = options.kernel;

            const unsigned repetitions = std::max(spec.repetitions, 1u);
            double best = 0.0;
            for (unsigned rep = 0; rep < repetitions; ++rep) {
                const TimedFill fill = lcs_fill_parallel(parent, child, config);
                const Length parallel_length = fill.dp.final_length();
                if (parallel_length != serial_length) {
                    throw EquivalenceError(
                        "benchmark case M=" + std::to_string(spec.parent_len) +
                        " N=" + std::to_string(spec.child_len) + ": serial length " +
                        std::to_string(serial_length) + " but parallel length " +
                        std::to_string(parallel_length));
                }
                best = rep == 0 ? fill.elapsed_seconds : std::min(best, fill.elapsed_seconds);
            }
            // Clock-resolution floor keeps the ratio defined for fills that
            // finish inside one tick.
            record.serial_seconds = std::max(record.serial_seconds, 1e-9);
            record.parallel_seconds = std::max(best, 1e-9);
            record.speedup = speedup(record.serial_seconds, record.parallel_seconds);
            record.lcs_length = serial_length;
        } catch (const CapacityError& err) {
            if (options.progress != nullptr) {
                *options.progress << "skipping case M=" << spec.parent_len
                                  << " N=" << spec.child_len << ": " << err.what() << '\n';
            }
            continue;
        }
        if (options.progress != nullptr) {
            *options.progress << "M=" << spec.parent_len << " N=" << spec.child_len
                              << " workers=" << spec.workers << " serial=" << record.serial_seconds
                              << "s parallel=" << record.parallel_seconds
                              << "s speedup=" << format_speedup(record.speedup)
                              << " length=" << record.lcs_length << '\n';
        }
        records.push_back(std::move(record));
    }
    return records;
}

void write_csv(const std::vector<BenchRecord>& records, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw InputError("cannot open '" + path.string() + "' for writing");
    }
    out << "# wavelcs benchmark\n";
    out << "# generator: mt19937_64, symbol = alphabet[next() % |alphabet|], alphabet="
        << kBenchAlphabet << '\n';
    out << "# seeds: parent = seed, child = seed + 0x9e3779b97f4a7c15\n";
    out << "# host_workers: " << default_worker_count()
        << ", default_kernel: " << kernel_name(detect_kernel()) << '\n';
    out << "M,N,workers,block_size,serial_s,parallel_s,speedup,lcs_length\n";
    for (const BenchRecord& record : records) {
        const std::string serial_s = format_seconds(record.serial_seconds);
        const std::string parallel_s = format_seconds(record.parallel_seconds);
        // Recompute from the printed times so the emitted row is internally
        // consistent at CSV precision.
        const double printed_ratio = std::stod(parallel_s) > 0.0
                                         ? std::stod(serial_s) / std::stod(parallel_s)
                                         : 0.0;
        out << record.spec.parent_len << ',' << record.spec.child_len << ','
            << record.spec.workers << ',' << record.spec.block_size << ',' << serial_s << ','
            << parallel_s << ',' << format_speedup(printed_ratio) << ',' << record.lcs_length
            << '\n';
    }
    if (!out) {
        throw InputError("write failure on '" + path.string() + "'");
    }
}

}  // namespace wavelcs
