#include "wavelcs/sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace wavelcs {

bool is_subsequence(const Sequence& candidate, const Sequence& text) noexcept {
    std::size_t matched = 0;
    for (std::size_t pos = 0; pos < text.size() && matched < candidate.size(); ++pos) {
        if (text[pos] == candidate[matched]) {
            ++matched;
        }
    }
    return matched == candidate.size();
}

double similarity_percent(std::size_t lcs_len, std::size_t parent_len, std::size_t child_len) {
    if (lcs_len > std::min(parent_len, child_len)) {
        throw std::invalid_argument("similarity_percent: LCS length exceeds min(M, N)");
    }
    if (child_len == 0) {
        return 100.0;  // empty child fully matches
    }
    return 100.0 * static_cast<double>(lcs_len) / static_cast<double>(child_len);
}

}  // namespace wavelcs
