#include "degseq/graphicality.hpp"

#include <algorithm>
#include <numeric>

namespace degseq {

std::string Verdict::describe() const {
    switch (reason) {
        case VerdictReason::ErdosGallaiPass:
            return "graphic";
        case VerdictReason::ErdosGallaiFail:
            return "non-graphic (inequality fails at k=" + std::to_string(fail_k) + ": " +
                   std::to_string(lhs) + " > " + std::to_string(rhs) + ")";
        case VerdictReason::OddSum:
            return "non-graphic (odd degree sum)";
        case VerdictReason::ValueOutOfRange:
            return "non-graphic (value " + std::to_string(offending_value) + " exceeds n-1)";
    }
    return "unknown";
}

Verdict erdos_gallai_check(const DegreeSequence& seq) {
    const auto d = seq.values();
    const int n = seq.length();
    Verdict v;
    if (seq.sum() % 2 != 0) {
        v.reason = VerdictReason::OddSum;
        return v;
    }
    if (d[0] > n - 1) {
        v.reason = VerdictReason::ValueOutOfRange;
        v.offending_value = d[0];
        return v;
    }

    std::vector<long long> prefix(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + d[i];

    // Past the largest k with d_k >= k-1 the slack is non-decreasing, so
    // any failure (in particular the smallest failing k) shows up within
    // this range.
    int cutoff = 1;
    while (cutoff < n && d[cutoff] >= cutoff) ++cutoff;

    for (int k = 1; k <= cutoff; ++k) {
        long long lhs = prefix[k];
        // Among positions i > k, values > k each contribute k; the rest
        // contribute themselves. d is non-increasing, so split by search.
        auto split = std::partition_point(d.begin() + k, d.end(), [k](int x) { return x > k; });
        long long big = split - (d.begin() + k);
        long long rhs = static_cast<long long>(k) * (k - 1) + big * k +
                        (prefix[n] - prefix[k + big]);
        if (lhs > rhs) {
            v.reason = VerdictReason::ErdosGallaiFail;
            v.fail_k = k;
            v.lhs = lhs;
            v.rhs = rhs;
            return v;
        }
    }
    v.graphic = true;
    v.reason = VerdictReason::ErdosGallaiPass;
    return v;
}

bool is_graphic(const DegreeSequence& seq) { return erdos_gallai_check(seq).graphic; }

bool erdos_gallai_graphic(std::span<const DegreeBlock> blocks) {
    long long n = 0;
    long long sum = 0;
    for (const auto& b : blocks) {
        n += b.count;
        sum += static_cast<long long>(b.value) * b.count;
    }
    if (sum % 2 != 0) return false;
    if (!blocks.empty() && blocks.front().value > n - 1) return false;

    // It suffices to test k at the last position of each run of equal
    // values (the positions where d_k > d_{k+1}, plus k = n).
    long long k = 0;
    long long lhs = 0;
    for (size_t t = 0; t < blocks.size(); ++t) {
        k += blocks[t].count;
        lhs += static_cast<long long>(blocks[t].value) * blocks[t].count;
        long long rhs = k * (k - 1);
        for (size_t j = t + 1; j < blocks.size(); ++j)
            rhs += blocks[j].count * std::min<long long>(blocks[j].value, k);
        if (lhs > rhs) return false;
    }
    return true;
}

std::optional<Realization> havel_hakimi_realize(const DegreeSequence& seq) {
    const int n = seq.length();
    if (seq.sum() % 2 != 0) return std::nullopt;
    if (seq.max_degree() > n - 1) return std::nullopt;

    std::vector<int> rem(seq.values().begin(), seq.values().end());
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);  // already sorted: rem non-increasing, ids ascending

    Realization g;
    g.n = n;
    g.edges.reserve(static_cast<size_t>(seq.sum() / 2));

    std::vector<int> merged;
    merged.reserve(order.size());
    while (!order.empty() && rem[order[0]] > 0) {
        int v = order[0];
        int k = rem[v];
        if (k > static_cast<int>(order.size()) - 1) return std::nullopt;
        for (int t = 1; t <= k; ++t) {
            int u = order[t];
            if (rem[u] == 0) return std::nullopt;
            --rem[u];
            g.edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        rem[v] = 0;
        // order[1..k] each dropped by one; both that block and the tail are
        // still sorted by (rem desc, id asc), so one merge restores order.
        merged.clear();
        auto by_rank = [&rem](int a, int b) {
            return rem[a] != rem[b] ? rem[a] > rem[b] : a < b;
        };
        std::merge(order.begin() + 1, order.begin() + 1 + k, order.begin() + 1 + k, order.end(),
                   std::back_inserter(merged), by_rank);
        order.swap(merged);
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

}  // namespace degseq
