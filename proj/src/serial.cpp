#include "wavelcs/serial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "wavelcs/kernels.hpp"

namespace wavelcs {

FillResult lcs_fill_serial(const Sequence& x, const Sequence& y, std::size_t memory_budget) {
    check_capacity(x.size(), y.size(), memory_budget);
    FillResult out{DpTable(x.size(), y.size()), BacktrackTable(x.size(), y.size())};
    if (x.empty() || y.empty()) {
        return out;
    }
    BlockArgs args;
    args.x = x.data();
    args.y = y.data();
    args.c = out.dp.data();
    args.c_stride = out.dp.stride();
    args.b = out.back.data();
    args.b_stride = out.back.stride();
    args.i_first = 1;
    args.i_last = x.size();
    args.j_first = 1;
    args.j_last = y.size();
    fill_block_scalar(args);
    return out;
}

Length lcs_length(const Sequence& x, const Sequence& y, std::size_t memory_budget) {
    return lcs_fill_serial(x, y, memory_budget).dp.final_length();
}

Sequence traceback(const BacktrackTable& back, const Sequence& x, std::size_t i, std::size_t j) {
    if (i > back.rows() || j > back.cols()) {
        throw std::out_of_range("traceback: position (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") outside " + std::to_string(back.rows()) +
                                " x " + std::to_string(back.cols()) + " table");
    }
    // Collect matches walking toward the origin, then reverse into forward order.
    std::string reversed;
    while (i > 0 && j > 0) {
        switch (back.at(i, j)) {
            case Arrow::Diag:
                reversed.push_back(x[i - 1]);
                --i;
                --j;
                break;
            case Arrow::Up:
                --i;
                break;
            case Arrow::Left:
                --j;
                break;
        }
    }
    std::reverse(reversed.begin(), reversed.end());
    return Sequence(std::move(reversed));
}

Length brute_force_lcs(const Sequence& x, const Sequence& y) {
    const Sequence& shorter = x.size() <= y.size() ? x : y;
    const Sequence& longer = x.size() <= y.size() ? y : x;
    if (shorter.size() > 20) {
        throw std::invalid_argument("brute_force_lcs: inputs too long for enumeration, min(M, N) = " +
                                    std::to_string(shorter.size()) + " > 20");
    }
    const std::size_t m = shorter.size();
    Length best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        const auto picked = static_cast<Length>(__builtin_popcountll(mask));
        if (picked <= best) {
            continue;
        }
        std::string candidate;
        candidate.reserve(picked);
        for (std::size_t pos = 0; pos < m; ++pos) {
            if (mask & (std::uint64_t{1} << pos)) {
                candidate.push_back(shorter[pos]);
            }
        }
        if (is_subsequence(Sequence(candidate), longer)) {
            best = picked;
        }
    }
    return best;
}

}  // namespace wavelcs
