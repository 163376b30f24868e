#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "degseq/rational.hpp"

namespace degseq {

/// A finite list of candidate vertex degrees, stored in canonical
/// non-increasing order. Values are validated non-negative; the upper
/// bound d_i <= n-1 is deliberately not enforced here so that callers
/// (the graphicality checks) can report it as a verdict instead.
class DegreeSequence {
public:
    static constexpr int kMaxLength = 10000;

    explicit DegreeSequence(std::vector<int> values);

    int length() const { return static_cast<int>(values_.size()); }
    long long sum() const { return sum_; }
    int value(int i) const { return values_.at(static_cast<size_t>(i)); }
    std::span<const int> values() const { return values_; }
    int max_degree() const { return values_.front(); }
    int min_degree() const { return values_.back(); }
    int spread() const { return max_degree() - min_degree(); }

    bool operator==(const DegreeSequence&) const = default;

private:
    std::vector<int> values_;
    long long sum_ = 0;
};

struct SequenceStats {
    int n = 0;
    long long sum = 0;
    Rational mean;
    int max_degree = 0;
    int min_degree = 0;
    int spread = 0;
    Rational rg;  // largest |d_i - mean|, the smallest c making the sequence c-regular
};

/// Parses the shared text syntax `term(,term)*` where a term is either a
/// value `v` or a run `v^k` (k >= 1). Whitespace is ignored everywhere.
/// Throws std::invalid_argument naming the offending token.
DegreeSequence parse_sequence(std::string_view text);

/// Run-length shorthand in descending value order; single occurrences are
/// written without the `^1`. parse_sequence(format_sequence(s)) == s.
std::string format_sequence(const DegreeSequence& seq);

SequenceStats stats(const DegreeSequence& seq);

/// Entrywise d -> n-1-d. Requires every value <= n-1 (std::domain_error).
DegreeSequence complement(const DegreeSequence& seq);

/// Prefix-sum dominance: true iff every prefix sum of a is >= the matching
/// prefix sum of b. Both sequences must have equal length and equal sum
/// (std::domain_error otherwise).
bool majorizes(const DegreeSequence& a, const DegreeSequence& b);

/// Moves one unit of degree from canonical position i to position j,
/// requiring d_i >= d_j + 2, and re-canonicalizes. The input majorizes the
/// result. Throws std::domain_error for an invalid transfer and
/// std::out_of_range for bad positions.
DegreeSequence down_transfer(const DegreeSequence& seq, int i, int j);

}  // namespace degseq
