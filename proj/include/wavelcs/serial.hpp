#pragma once

#include <cstddef>

#include "wavelcs/cell.hpp"
#include "wavelcs/errors.hpp"
#include "wavelcs/sequence.hpp"
#include "wavelcs/tables.hpp"

namespace wavelcs {

struct FillResult {
    DpTable dp;
    BacktrackTable back;
};

/// Fills both tables in row-major order with the plain recurrence.
/// Empty inputs are valid and yield all-zero tables.
/// Throws CapacityError when the tables exceed `memory_budget`.
FillResult lcs_fill_serial(const Sequence& x, const Sequence& y,
                           std::size_t memory_budget = kDefaultMemoryBudget);

/// LCS length only; convenience wrapper over lcs_fill_serial.
Length lcs_length(const Sequence& x, const Sequence& y,
                  std::size_t memory_budget = kDefaultMemoryBudget);

/// Walks the arrow table from (i, j) toward the origin and returns the
/// common subsequence in forward order. Empty when i = 0 or j = 0.
/// Throws std::out_of_range when i or j exceeds the table.
Sequence traceback(const BacktrackTable& back, const Sequence& x, std::size_t i, std::size_t j);

/// Exponential oracle: the longest subsequence of the shorter input that is
/// also a subsequence of the other, by full enumeration. Swaps internally so
/// the shorter string is enumerated. Throws std::invalid_argument when
/// min(M, N) > 20; the guard signals oracle misuse, not a domain error.
Length brute_force_lcs(const Sequence& x, const Sequence& y);

/// Everything one comparison run reports.
struct LcsResult {
    Length length = 0;
    Sequence subsequence;
    double similarity_percent = 0.0;
    double elapsed_seconds = 0.0;
};

}  // namespace wavelcs
