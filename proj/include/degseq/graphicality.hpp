#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "degseq/sequence.hpp"

namespace degseq {

enum class VerdictReason {
    ErdosGallaiPass,
    ErdosGallaiFail,
    OddSum,
    ValueOutOfRange,
};

/// Outcome of the exact graphicality decision, with enough detail to act
/// as a machine-checkable certificate: for ErdosGallaiFail, `fail_k` is the
/// smallest 1-based index where the inequality breaks and lhs > rhs holds.
struct Verdict {
    bool graphic = false;
    VerdictReason reason = VerdictReason::ErdosGallaiPass;
    int fail_k = 0;
    long long lhs = 0;
    long long rhs = 0;
    int offending_value = 0;  // ValueOutOfRange only

    std::string describe() const;
};

/// A simple graph realizing a degree sequence: edges are unordered pairs
/// stored u < v, sorted, with no loops or duplicates. Vertex i carries the
/// i-th canonical degree.
struct Realization {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

/// Decides graphicality: even sum, all values <= n-1, and for every k
/// sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k). Internally only k up
/// to the largest k with d_k >= k-1 is evaluated; any failing k lies in
/// that range, so reported failures are still the smallest overall.
Verdict erdos_gallai_check(const DegreeSequence& seq);

/// Single source of truth for graphicality used by the other modules.
bool is_graphic(const DegreeSequence& seq);

/// Greedy realization: repeatedly wires the highest-degree vertex to the
/// next-highest ones. Returns std::nullopt when the sequence is not
/// graphic. Decides independently of erdos_gallai_check.
std::optional<Realization> havel_hakimi_realize(const DegreeSequence& seq);

/// One maximal run of equal values in a run-length encoded sequence.
struct DegreeBlock {
    int value = 0;
    int count = 0;
};

/// Graphicality verdict on a run-length encoded sequence (blocks in
/// strictly decreasing value order, positive counts). Checks the
/// inequality only at the end of each block, which is sufficient, making
/// the test O(B^2) for B blocks. This is the search module's hot path.
bool erdos_gallai_graphic(std::span<const DegreeBlock> blocks);

}  // namespace degseq
