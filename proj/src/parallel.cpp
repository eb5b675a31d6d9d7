#include "wavelcs/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdint>
#include <chrono>
#include <memory>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "wavelcs/errors.hpp"

namespace wavelcs {

namespace {

std::size_t ceil_div(std::size_t value, std::size_t divisor) {
    return value / divisor + (value % divisor != 0);
}

struct WaveRowRange {
    std::size_t lo = 0, hi = 0;  // inclusive block-row range of wave d
};

// Blocks of wave d are (r, d - r) for r in [lo, hi].
WaveRowRange wave_rows(const BlockGrid& grid, std::size_t d) {
    WaveRowRange range;
    range.hi = std::min(d, grid.block_rows() - 1);
    range.lo = d >= grid.block_cols() ? d - grid.block_cols() + 1 : 0;
    return range;
}

}  // namespace

BlockGrid::BlockGrid(std::size_t m, std::size_t n, std::size_t block_size)
    : m_(m), n_(n), block_size_(block_size),
      block_rows_(ceil_div(m, block_size)), block_cols_(ceil_div(n, block_size)) {}

CellRect BlockGrid::cells(BlockCoord block) const {
    CellRect rect;
    rect.i_first = block.row * block_size_ + 1;
    rect.i_last = std::min((block.row + 1) * block_size_, m_);
    rect.j_first = block.col * block_size_ + 1;
    rect.j_last = std::min((block.col + 1) * block_size_, n_);
    return rect;
}

BlockGrid partition_blocks(std::size_t m, std::size_t n, std::size_t block_size) {
    if (block_size == 0) {
        throw ConfigError("block size must be at least 1");
    }
    return BlockGrid(m, n, block_size);
}

std::size_t WaveSchedule::block_count() const noexcept {
    std::size_t total = 0;
    for (const auto& wave : waves) {
        total += wave.size();
    }
    return total;
}

WaveSchedule wavefront_schedule(const BlockGrid& grid) {
    WaveSchedule schedule;
    if (grid.empty()) {
        return schedule;
    }
    const std::size_t wave_count = grid.block_rows() + grid.block_cols() - 1;
    schedule.waves.reserve(wave_count);
    for (std::size_t d = 0; d < wave_count; ++d) {
        const WaveRowRange range = wave_rows(grid, d);
        std::vector<BlockCoord> wave;
        wave.reserve(range.hi - range.lo + 1);
        for (std::size_t r = range.hi + 1; r-- > range.lo;) {
            wave.push_back({r, d - r});
        }
        schedule.waves.push_back(std::move(wave));
    }
    return schedule;
}

unsigned default_worker_count() noexcept {
    const unsigned detected = std::thread::hardware_concurrency();
    return detected == 0 ? 1 : detected;
}

namespace {

// Shared state of one parallel fill. Blocks are filled through `kernel`;
// debug builds track per-block completion to catch scheduling bugs.
class FillRun {
public:
    FillRun(const BlockGrid& grid, const Sequence& x, const Sequence& y,
            const std::int32_t* y_wide, DpTable& dp, BacktrackTable& back, BlockKernelFn kernel)
        : grid_(grid), kernel_(kernel) {
        args_.x = x.data();
        args_.y = y.data();
        args_.y_wide = y_wide;
        args_.c = dp.data();
        args_.c_stride = dp.stride();
        args_.b = back.data();
        args_.b_stride = back.stride();
#ifndef NDEBUG
        done_ = std::make_unique<std::atomic<bool>[]>(grid.block_count());
#endif
    }

    void run_block(BlockCoord block) {
#ifndef NDEBUG
        assert(dependencies_done(block) && "block scheduled before its dependencies completed");
#endif
        const CellRect rect = grid_.cells(block);
        BlockArgs args = args_;
        args.i_first = rect.i_first;
        args.i_last = rect.i_last;
        args.j_first = rect.j_first;
        args.j_last = rect.j_last;
        kernel_(args);
#ifndef NDEBUG
        done_[block.row * grid_.block_cols() + block.col].store(true, std::memory_order_release);
#endif
    }

private:
#ifndef NDEBUG
    bool block_done(std::size_t r, std::size_t c) const {
        return done_[r * grid_.block_cols() + c].load(std::memory_order_acquire);
    }

    bool dependencies_done(BlockCoord block) const {
        const bool north_ok = block.row == 0 || block_done(block.row - 1, block.col);
        const bool west_ok = block.col == 0 || block_done(block.row, block.col - 1);
        const bool diag_ok = block.row == 0 || block.col == 0 ||
                             block_done(block.row - 1, block.col - 1);
        return north_ok && west_ok && diag_ok;
    }
#endif

    const BlockGrid& grid_;
    BlockKernelFn kernel_;
    BlockArgs args_{};
#ifndef NDEBUG
    std::unique_ptr<std::atomic<bool>[]> done_;
#endif
};

std::vector<std::int32_t> widen_symbols(const Sequence& seq) {
    std::vector<std::int32_t> wide(seq.size());
    for (std::size_t pos = 0; pos < seq.size(); ++pos) {
        wide[pos] = static_cast<unsigned char>(seq[pos]);
    }
    return wide;
}

inline void cpu_relax() noexcept {
#if defined(__x86_64__) || defined(__i386__)
    __builtin_ia32_pause();
#elif defined(__aarch64__) || defined(__arm__)
    asm volatile("yield");
#endif
}

// Per-block-row progress counter, padded so neighboring rows do not share a
// cache line. progress = number of completed block columns in that row.
struct alignas(64) RowProgress {
    std::atomic<std::uint64_t> columns_done{0};
};

// Dependency-counter wavefront: worker w owns block rows w, w + workers, ...
// and sweeps each row left to right. Block (r, c) may start once the row
// above has completed column c; the west and northwest dependencies follow
// from the sweep order and from the row above being itself ordered. This
// keeps the schedule-safety invariant of the anti-diagonal wave order while
// replacing the per-wave barrier with one acquire/release counter per row.
void run_wavefront(FillRun& run, const BlockGrid& grid, unsigned workers) {
    const std::size_t block_rows = grid.block_rows();
    const std::size_t block_cols = grid.block_cols();
    if (workers == 1) {
        for (std::size_t r = 0; r < block_rows; ++r) {
            for (std::size_t c = 0; c < block_cols; ++c) {
                run.run_block({r, c});
            }
        }
        return;
    }

    std::vector<RowProgress> progress(block_rows);
    auto worker = [&](unsigned id) {
        for (std::size_t r = id; r < block_rows; r += workers) {
            const std::atomic<std::uint64_t>* above =
                r > 0 ? &progress[r - 1].columns_done : nullptr;
            for (std::size_t c = 0; c < block_cols; ++c) {
                if (above != nullptr) {
                    const auto needed = static_cast<std::uint64_t>(c + 1);
                    std::uint64_t seen = above->load(std::memory_order_acquire);
                    for (unsigned spins = 0; seen < needed;
                         seen = above->load(std::memory_order_acquire)) {
                        if (spins < 128) {
                            ++spins;
                            cpu_relax();
                        } else {
                            above->wait(seen, std::memory_order_acquire);
                        }
                    }
                }
                run.run_block({r, c});
                progress[r].columns_done.store(static_cast<std::uint64_t>(c + 1),
                                               std::memory_order_release);
                progress[r].columns_done.notify_all();
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned id = 1; id < workers; ++id) {
        pool.emplace_back(worker, id);
    }
    worker(0);
    for (auto& thread : pool) {
        thread.join();
    }
}

}  // namespace

void compute_block(const BlockGrid& grid, BlockCoord block, const Sequence& x, const Sequence& y,
                   DpTable& dp, BacktrackTable& back) {
    if (block.row >= grid.block_rows() || block.col >= grid.block_cols()) {
        throw std::out_of_range("compute_block: block (" + std::to_string(block.row) + ", " +
                                std::to_string(block.col) + ") outside the grid");
    }
    const CellRect rect = grid.cells(block);
    BlockArgs args;
    args.x = x.data();
    args.y = y.data();
    args.c = dp.data();
    args.c_stride = dp.stride();
    args.b = back.data();
    args.b_stride = back.stride();
    args.i_first = rect.i_first;
    args.i_last = rect.i_last;
    args.j_first = rect.j_first;
    args.j_last = rect.j_last;
    fill_block_scalar(args);
}

TimedFill lcs_fill_parallel(const Sequence& x, const Sequence& y, const ParallelConfig& config) {
    if (config.workers == 0) {
        throw ConfigError("worker count must be at least 1");
    }
    const BlockKernelFn kernel = resolve_kernel(config.kernel);
    check_capacity(x.size(), y.size(), config.memory_budget);

    const auto start = std::chrono::steady_clock::now();
    TimedFill out{DpTable(x.size(), y.size()), BacktrackTable(x.size(), y.size()), 0.0};
    if (!x.empty() && !y.empty()) {
        const BlockGrid grid = partition_blocks(x.size(), y.size(), config.block_size);
        const std::vector<std::int32_t> y_wide = widen_symbols(y);
        FillRun run(grid, x, y, y_wide.data(), out.dp, out.back, kernel);
        // The widest wave has min(rows, cols) blocks; extra workers would
        // only idle at barriers.
        const auto peak_width =
            static_cast<unsigned>(std::min<std::size_t>(
                std::min(grid.block_rows(), grid.block_cols()), ~0u));
        run_wavefront(run, grid, std::min(config.workers, peak_width));
    }
    out.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace wavelcs
