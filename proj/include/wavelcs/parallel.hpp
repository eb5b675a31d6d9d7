#pragma once

#include <cstddef>
#include <vector>

#include "wavelcs/kernels.hpp"
#include "wavelcs/serial.hpp"

namespace wavelcs {

struct BlockCoord {
    std::size_t row = 0;
    std::size_t col = 0;

    friend bool operator==(const BlockCoord&, const BlockCoord&) = default;
};

/// Cell rectangle of one block, 1-based inclusive.
struct CellRect {
    std::size_t i_first = 0, i_last = 0;
    std::size_t j_first = 0, j_last = 0;
};

/// Tiling of the 1-based DP cell grid into rectangles of side `block_size`,
/// ragged at the bottom/right edges. Every cell belongs to exactly one block.
class BlockGrid {
public:
    BlockGrid() = default;
    BlockGrid(std::size_t m, std::size_t n, std::size_t block_size);

    std::size_t m() const noexcept { return m_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t block_size() const noexcept { return block_size_; }
    std::size_t block_rows() const noexcept { return block_rows_; }
    std::size_t block_cols() const noexcept { return block_cols_; }
    std::size_t block_count() const noexcept { return block_rows_ * block_cols_; }
    bool empty() const noexcept { return block_count() == 0; }

    /// Cells covered by block (r, c): rows [rB+1, min((r+1)B, M)], columns
    /// [cB+1, min((c+1)B, N)].
    CellRect cells(BlockCoord block) const;

private:
    std::size_t m_ = 0, n_ = 0;
    std::size_t block_size_ = 1;
    std::size_t block_rows_ = 0, block_cols_ = 0;
};

/// Builds the grid; rejects block_size = 0. M = 0 or N = 0 yields an empty grid.
BlockGrid partition_blocks(std::size_t m, std::size_t n, std::size_t block_size);

/// Blocks grouped by anti-diagonal d = row + col. Blocks within one wave
/// share no DP dependencies; wave d must complete before wave d+1 starts.
struct WaveSchedule {
    std::vector<std::vector<BlockCoord>> waves;

    std::size_t block_count() const noexcept;
};

WaveSchedule wavefront_schedule(const BlockGrid& grid);

unsigned default_worker_count() noexcept;

inline constexpr std::size_t kDefaultBlockSize = 64;

struct ParallelConfig {
    unsigned workers = default_worker_count();
    std::size_t block_size = kDefaultBlockSize;
    KernelKind kernel = KernelKind::Auto;
    std::size_t memory_budget = kDefaultMemoryBudget;
};

/// Fills one block with the reference kernel. The caller must have completed
/// blocks (r-1, c), (r, c-1) and (r-1, c-1) first; the parallel driver checks
/// that ordering in debug builds. Throws std::out_of_range for a coordinate
/// outside the grid.
void compute_block(const BlockGrid& grid, BlockCoord block, const Sequence& x, const Sequence& y,
                   DpTable& dp, BacktrackTable& back);

struct TimedFill {
    DpTable dp;
    BacktrackTable back;
    double elapsed_seconds = 0.0;
};

/// Wavefront-parallel fill. Output tables are bit-identical to
/// lcs_fill_serial for every workers/block_size/kernel combination; the
/// configuration affects elapsed time only. Elapsed covers the fill phase
/// (table allocation through last block) on a monotonic clock.
/// Throws ConfigError for workers = 0, block_size = 0, or an unavailable
/// kernel; CapacityError as the serial fill does.
TimedFill lcs_fill_parallel(const Sequence& x, const Sequence& y,
                            const ParallelConfig& config = {});

}  // namespace wavelcs
