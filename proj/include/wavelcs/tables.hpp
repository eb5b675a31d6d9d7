#pragma once

#include <cstddef>
#include <vector>

#include "wavelcs/cell.hpp"

namespace wavelcs {

/// Default cap on combined table memory. Matches a small-host footprint;
/// callers can raise it.
inline constexpr std::size_t kDefaultMemoryBudget = std::size_t{2} * 1024 * 1024 * 1024;

/// Throws CapacityError when the DP and backtrack tables for an M x N
/// problem would not fit in `budget` bytes. Overflow-safe for any M, N.
void check_capacity(std::size_t m, std::size_t n, std::size_t budget = kDefaultMemoryBudget);

/// (M+1) x (N+1) table of prefix LCS lengths, row-major. Row 0 and column 0
/// stay zero. Cell (i, j) is the LCS length of x_1..x_i and y_1..y_j.
class DpTable {
public:
    DpTable() = default;
    DpTable(std::size_t m, std::size_t n)
        : rows_(m + 1), cols_(n + 1), cells_(rows_ * cols_, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Length at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
    Length& at(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }

    Length* data() noexcept { return cells_.data(); }
    const Length* data() const noexcept { return cells_.data(); }
    std::size_t stride() const noexcept { return cols_; }

    /// LCS length of the whole inputs, cell (M, N).
    Length final_length() const { return cells_.empty() ? 0 : cells_.back(); }

    friend bool operator==(const DpTable&, const DpTable&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Length> cells_;
};

/// M x N arrow table recording which recurrence case produced each cell.
/// Indexed 1-based, matching the x_i / y_j positions it speaks about.
class BacktrackTable {
public:
    BacktrackTable() = default;
    BacktrackTable(std::size_t m, std::size_t n)
        : rows_(m), cols_(n), cells_(m * n, Arrow::Left) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Arrow at(std::size_t i, std::size_t j) const { return cells_[(i - 1) * cols_ + (j - 1)]; }
    Arrow& at(std::size_t i, std::size_t j) { return cells_[(i - 1) * cols_ + (j - 1)]; }

    Arrow* data() noexcept { return cells_.data(); }
    const Arrow* data() const noexcept { return cells_.data(); }
    std::size_t stride() const noexcept { return cols_; }

    friend bool operator==(const BacktrackTable&, const BacktrackTable&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Arrow> cells_;
};

}  // namespace wavelcs
