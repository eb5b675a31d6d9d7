#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

namespace wavelcs {

/// Byte string handled by the engine. Alphabet-agnostic; DNA validation is a
/// load-time option, not a type invariant. Positions are 1-based in the DP
/// tables (x_1 .. x_M) and 0-based here.
class Sequence {
public:
    Sequence() = default;
    explicit Sequence(std::string symbols) : symbols_(std::move(symbols)) {}

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    char operator[](std::size_t pos) const { return symbols_[pos]; }
    const char* data() const noexcept { return symbols_.data(); }
    std::string_view view() const noexcept { return symbols_; }
    const std::string& str() const noexcept { return symbols_; }

    void push_back(char symbol) { symbols_.push_back(symbol); }

    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    friend bool operator==(const Sequence&, const Sequence&) = default;

private:
    std::string symbols_;
};

/// True iff `candidate` can be obtained from `text` by deleting zero or more
/// symbols. Single left-to-right scan, O(|text|).
bool is_subsequence(const Sequence& candidate, const Sequence& text) noexcept;

/// Fraction of the child covered by the LCS, as a percentage: 100 * L / N
/// with N the child length. An empty child counts as fully matched.
/// Throws std::invalid_argument when L exceeds min(M, N).
double similarity_percent(std::size_t lcs_len, std::size_t parent_len, std::size_t child_len);

}  // namespace wavelcs
