#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "degseq/graphicality.hpp"
#include "degseq/sequence.hpp"
#include "degseq/table_data.hpp"

namespace degseq {

enum class SearchMode {
    Fast,        // majorization-pruned scan over extremal sequences
    Exhaustive,  // full enumeration, n <= 14; validates the pruning
};

/// One computed table row: m(n) together with a minimal non-graphic
/// witness (even sum, mean in the closed window, spread exactly m+1).
struct SearchRow {
    int n = 0;
    int m = 0;
    DegreeSequence witness;

    bool operator==(const SearchRow&) const = default;
};

struct SearchConfig {
    SearchMode mode = SearchMode::Fast;
    int from = 4;
    int to = 100;
    int jobs = 0;  // 0 = hardware concurrency; results are deterministic regardless
};

/// The majorization-maximal sequence of length n, sum s, values within
/// [lo, hi]: (hi^p, r, lo^(n-p-1)) with p = floor((s - n*lo)/(hi - lo))
/// and lo <= r < hi, degenerating to the regular sequence when lo == hi or
/// s == n*hi. It majorizes every sequence satisfying the same constraints.
DegreeSequence maximal_sequence(int n, long long s, int lo, int hi);

/// Run-length form of maximal_sequence, allocation-free for the scan loop.
struct MaximalBlocks {
    DegreeBlock blocks[3];
    int size = 0;

    std::span<const DegreeBlock> span() const { return {blocks, static_cast<size_t>(size)}; }
    int top_value() const { return blocks[0].value; }
    int bottom_value() const { return blocks[size - 1].value; }
};
MaximalBlocks maximal_blocks(int n, long long s, int lo, int hi);

/// Searches for a non-graphic even-sum sequence of length n with mean in
/// the closed window [(n-2)/4, (3n-2)/4] and spread at most d. Only
/// majorization-maximal candidates need testing: any witness is majorized
/// by the maximal sequence with its own (sum, min, max), which is then a
/// witness itself. Returns the first hit in (lo ascending, s ascending)
/// scan order, or std::nullopt when every such sequence is graphic.
std::optional<DegreeSequence> find_nongraphic_with_spread(int n, int d);

/// m(n) by binary search on the spread d (witness existence is monotone in
/// d since the constraint sets are nested). Witness tie-breaking: among
/// witnesses of spread m+1, minimize the sum, then maximize the smallest
/// value, then take the majorization-maximal sequence for those bounds.
/// Supports 4 <= n <= 1000.
SearchRow compute_mn_fast(int n);

/// Same contract as compute_mn_fast but enumerates every candidate
/// sequence outright; refuses n > 14 (cost guard). Exists to validate the
/// pruning argument empirically.
SearchRow compute_mn_exhaustive(int n);

SearchRow compute_mn(int n, SearchMode mode);

/// Rows for n in [config.from, config.to], computed concurrently across n
/// and emitted in order of n.
std::vector<SearchRow> compute_mn_range(const SearchConfig& config);

/// Yields every non-increasing sequence of length n with values in
/// [lo, hi], each exactly once, in decreasing lexicographic order.
class BoundedSequenceEnumerator {
public:
    BoundedSequenceEnumerator(int n, int lo, int hi);

    /// Pointer to the internal buffer holding the next sequence, or
    /// nullptr once exhausted. The buffer is invalidated by the next call.
    const std::vector<int>* next();

private:
    std::vector<int> values_;
    int lo_;
    bool first_ = true;
    bool done_ = false;
};

/// Independent validation of a claimed table row witness.
struct WitnessCheck {
    bool length_ok = false;
    bool even_sum = false;
    bool mean_in_window = false;
    bool spread_ok = false;
    bool nongraphic = false;

    bool ok() const { return length_ok && even_sum && mean_in_window && spread_ok && nongraphic; }
    std::string describe() const;
};
WitnessCheck validate_witness(int n, int m, const DegreeSequence& witness);

struct VerificationRow {
    int n = 0;
    int expected_m = 0;
    int computed_m = 0;
    WitnessCheck witness_check;
    std::string witness;  // the reference witness string

    bool m_matches() const { return expected_m == computed_m; }
    bool ok() const { return m_matches() && witness_check.ok(); }
    std::string status() const;
};

struct VerificationReport {
    std::vector<VerificationRow> rows;
    bool all_ok() const;
};

/// Recomputes m(n) for every reference row in the span, compares against
/// the recorded value, and independently validates the recorded witness.
VerificationReport verify_rows(std::span<const TableRow> rows, SearchMode mode, int jobs);

/// verify_rows over the embedded table restricted to [config.from,
/// config.to]; the range must lie within [4, 100].
VerificationReport verify_table(const SearchConfig& config);

}  // namespace degseq
