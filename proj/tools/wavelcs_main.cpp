// wavelcs command-line front end: compute, bench, gen.

#include <cstdio>
#include <exception>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wavelcs/bench.hpp"
#include "wavelcs/io.hpp"
#include "wavelcs/parallel.hpp"
#include "wavelcs/sequence.hpp"
#include "wavelcs/serial.hpp"

namespace {

using namespace wavelcs;

const std::map<std::string, KernelKind> kKernelNames{
    {"auto", KernelKind::Auto},
    {"scalar", KernelKind::Scalar},
    {"avx2", KernelKind::Avx2},
    {"neon", KernelKind::Neon},
};

struct ComputeOptions {
    std::string parent_path;
    std::string child_path;
    unsigned workers = default_worker_count();
    std::size_t block_size = kDefaultBlockSize;
    bool with_traceback = false;
    std::string format;  // empty = infer per file from the extension
    bool validate_dna = false;
    KernelKind kernel = KernelKind::Auto;
};

struct BenchCliOptions {
    bool table1 = false;
    std::vector<std::string> sizes;
    std::vector<unsigned> workers;
    std::size_t block_size = kDefaultBlockSize;
    std::uint64_t seed = 1;
    unsigned repetitions = 3;
    std::string out_path;
    KernelKind kernel = KernelKind::Auto;
};

struct GenOptions {
    std::size_t length = 0;
    std::string alphabet = "ACGT";
    std::uint64_t seed = 0;
    std::string out_path;
};

InputFormat pick_format(const std::string& flag, const std::string& path) {
    if (flag == "plain") {
        return InputFormat::Plain;
    }
    if (flag == "fasta") {
        return InputFormat::Fasta;
    }
    return format_from_path(path);
}

int run_compute(const ComputeOptions& opt) {
    const Sequence parent =
        load_sequence(opt.parent_path, pick_format(opt.format, opt.parent_path), opt.validate_dna);
    const Sequence child =
        load_sequence(opt.child_path, pick_format(opt.format, opt.child_path), opt.validate_dna);

    ParallelConfig config;
    config.workers = opt.workers;
    config.block_size = opt.block_size;
    config.kernel = opt.kernel;
    const TimedFill fill = lcs_fill_parallel(parent, child, config);

    LcsResult result;
    result.length = fill.dp.final_length();
    result.elapsed_seconds = fill.elapsed_seconds;
    result.similarity_percent = similarity_percent(result.length, parent.size(), child.size());
    if (opt.with_traceback) {
        result.subsequence = traceback(fill.back, parent, parent.size(), child.size());
    }

    std::printf("LCS length:  %u\n", result.length);
    std::printf("Similarity:  %.2f%% of the child sequence\n", result.similarity_percent);
    std::printf("Fill time:   %.6f s (workers=%u, block=%zu, kernel=%s)\n",
                result.elapsed_seconds, opt.workers, opt.block_size,
                kernel_name(opt.kernel == KernelKind::Auto ? detect_kernel() : opt.kernel));
    if (opt.with_traceback) {
        std::printf("LCS:         %s\n", result.subsequence.str().c_str());
    }
    return 0;
}

std::pair<std::size_t, std::size_t> parse_size_pair(const std::string& text) {
    const auto split = text.find_first_of("xX");
    if (split == std::string::npos || split == 0 || split + 1 >= text.size()) {
        throw ConfigError("--sizes entries must look like MxN, got '" + text + "'");
    }
    try {
        const std::size_t m = std::stoull(text.substr(0, split));
        const std::size_t n = std::stoull(text.substr(split + 1));
        return {m, n};
    } catch (const std::exception&) {
        throw ConfigError("--sizes entries must look like MxN, got '" + text + "'");
    }
}

int run_bench(const BenchCliOptions& opt) {
    std::vector<unsigned> worker_counts = opt.workers;
    if (worker_counts.empty()) {
        worker_counts.push_back(default_worker_count());
    }

    std::vector<BenchCase> cases;
    for (const unsigned workers : worker_counts) {
        if (opt.table1) {
            auto grid = table1_cases(workers, opt.block_size, opt.seed, opt.repetitions);
            cases.insert(cases.end(), grid.begin(), grid.end());
        } else {
            for (const std::string& size_text : opt.sizes) {
                const auto [m, n] = parse_size_pair(size_text);
                cases.push_back({m, n, workers, opt.block_size, opt.seed, opt.repetitions});
            }
        }
    }

    BenchOptions options;
    options.kernel = opt.kernel;
    options.progress = &std::cout;
    const std::vector<BenchRecord> records = run_benchmark(cases, options);
    write_csv(records, opt.out_path);
    std::cout << "wrote " << records.size() << " records to " << opt.out_path << '\n';
    return 0;
}

int run_gen(const GenOptions& opt) {
    const Sequence seq = generate_random(opt.length, Sequence(opt.alphabet), opt.seed);
    write_plain(seq, opt.out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LCS engine: serial and wavefront-parallel table fill"};
    app.require_subcommand(1);

    ComputeOptions compute;
    CLI::App* compute_cmd =
        app.add_subcommand("compute", "compute the LCS of two sequence files");
    compute_cmd->add_option("--parent", compute.parent_path, "parent sequence file (M)")
        ->required();
    compute_cmd->add_option("--child", compute.child_path, "child sequence file (N)")->required();
    compute_cmd->add_option("--workers", compute.workers, "concurrent workers");
    compute_cmd->add_option("--block-size", compute.block_size, "tile side length");
    compute_cmd->add_flag("--traceback", compute.with_traceback, "print the subsequence itself");
    compute_cmd->add_option("--format", compute.format, "input format for both files")
        ->check(CLI::IsMember({"plain", "fasta"}));
    compute_cmd->add_flag("--validate-dna", compute.validate_dna,
                          "require the {A,C,G,T} alphabet");
    compute_cmd->add_option("--kernel", compute.kernel, "block kernel")
        ->transform(CLI::CheckedTransformer(kKernelNames, CLI::ignore_case));

    BenchCliOptions bench;
    CLI::App* bench_cmd = app.add_subcommand("bench", "run the benchmark grid and write CSV");
    CLI::Option* table1_opt =
        bench_cmd->add_flag("--table1", bench.table1, "use the thirteen-pair reference grid");
    bench_cmd->add_option("--sizes", bench.sizes, "size pairs, MxN[,MxN...]")
        ->delimiter(',')
        ->excludes(table1_opt);
    bench_cmd->add_option("--workers", bench.workers, "worker counts, K[,K...]")->delimiter(',');
    bench_cmd->add_option("--block-size", bench.block_size, "tile side length");
    bench_cmd->add_option("--seed", bench.seed, "input generator seed");
    bench_cmd->add_option("--repetitions", bench.repetitions, "parallel repetitions per case")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--out", bench.out_path, "CSV output path")->required();
    bench_cmd->add_option("--kernel", bench.kernel, "block kernel")
        ->transform(CLI::CheckedTransformer(kKernelNames, CLI::ignore_case));

    GenOptions gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "write a seeded random sequence file");
    gen_cmd->add_option("--length", gen.length, "sequence length")->required();
    gen_cmd->add_option("--alphabet", gen.alphabet, "symbols to draw from");
    gen_cmd->add_option("--seed", gen.seed, "generator seed")->required();
    gen_cmd->add_option("--out", gen.out_path, "output path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute_cmd->parsed()) {
            return run_compute(compute);
        }
        if (bench_cmd->parsed()) {
            if (!bench.table1 && bench.sizes.empty()) {
                throw ConfigError("bench needs --table1 or --sizes");
            }
            return run_bench(bench);
        }
        if (gen_cmd->parsed()) {
            return run_gen(gen);
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
    return 0;
}
