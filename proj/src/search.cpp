#include "degseq/search.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <climits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace degseq {

MaximalBlocks maximal_blocks(int n, long long s, int lo, int hi) {
    if (n < 1 || n > DegreeSequence::kMaxLength)
        throw std::domain_error("maximal_blocks requires 1 <= n <= " +
                                std::to_string(DegreeSequence::kMaxLength));
    if (lo < 0 || lo > hi || hi > n - 1)
        throw std::domain_error("maximal_blocks requires 0 <= lo <= hi <= n-1");
    if (s < static_cast<long long>(n) * lo || s > static_cast<long long>(n) * hi)
        throw std::domain_error("maximal_blocks requires n*lo <= s <= n*hi");

    MaximalBlocks out;
    auto push = [&out](int value, long long count) {
        if (count <= 0) return;
        if (out.size > 0 && out.blocks[out.size - 1].value == value) {
            out.blocks[out.size - 1].count += static_cast<int>(count);
            return;
        }
        out.blocks[out.size++] = DegreeBlock{value, static_cast<int>(count)};
    };

    if (lo == hi) {
        push(lo, n);
        return out;
    }
    long long excess = s - static_cast<long long>(n) * lo;
    long long p = excess / (hi - lo);
    long long rem = excess - p * (hi - lo);
    if (p == n) {
        push(hi, n);  // s == n*hi, rem == 0
        return out;
    }
    push(hi, p);
    push(lo + static_cast<int>(rem), 1);
    push(lo, n - p - 1);
    return out;
}

DegreeSequence maximal_sequence(int n, long long s, int lo, int hi) {
    MaximalBlocks blocks = maximal_blocks(n, s, lo, hi);
    std::vector<int> values;
    values.reserve(static_cast<size_t>(n));
    for (int t = 0; t < blocks.size; ++t)
        values.insert(values.end(), static_cast<size_t>(blocks.blocks[t].count),
                      blocks.blocks[t].value);
    return DegreeSequence(std::move(values));
}

namespace {

long long window_low(int n) {  // ceil(n(n-2)/4)
    long long num = static_cast<long long>(n) * (n - 2);
    return (num + 3) / 4;
}

long long window_high(int n) {  // floor(n(3n-2)/4)
    long long num = static_cast<long long>(n) * (3LL * n - 2);
    return num / 4;
}

// Visits every non-graphic majorization-maximal candidate with spread at
// most d, lo ascending then s ascending. The visitor returns true to stop.
template <typename Visitor>
void scan_nongraphic_cells(int n, int d, Visitor&& visit) {
    const long long w_lo = window_low(n);
    const long long w_hi = window_high(n);
    for (int lo = 0; lo + d <= n - 1; ++lo) {
        const int hi = lo + d;
        long long s = std::max<long long>(static_cast<long long>(n) * lo, w_lo);
        const long long s_end = std::min<long long>(static_cast<long long>(n) * hi, w_hi);
        if (s % 2 != 0) ++s;
        for (; s <= s_end; s += 2) {
            MaximalBlocks cand = maximal_blocks(n, s, lo, hi);
            if (!erdos_gallai_graphic(cand.span()))
                if (visit(lo, s, cand)) return;
        }
    }
}

bool witness_exists_with_spread(int n, int d) {
    bool found = false;
    scan_nongraphic_cells(n, d, [&found](int, long long, const MaximalBlocks&) {
        found = true;
        return true;
    });
    return found;
}

// Tie-broken witness at spread exactly d: minimal sum, then maximal
// smallest value. At the least d admitting any witness every candidate
// has spread exactly d; candidates with smaller spread are filtered (they
// would contradict d being least).
std::optional<MaximalBlocks> best_witness_blocks(int n, int d) {
    std::optional<MaximalBlocks> best;
    long long best_s = LLONG_MAX;
    int best_lo = -1;
    scan_nongraphic_cells(n, d, [&](int lo, long long s, const MaximalBlocks& cand) {
        if (cand.top_value() - cand.bottom_value() != d) return false;
        if (s < best_s || (s == best_s && lo > best_lo)) {
            best_s = s;
            best_lo = lo;
            best = cand;
        }
        return false;
    });
    return best;
}

DegreeSequence blocks_to_sequence(const MaximalBlocks& blocks) {
    std::vector<int> values;
    for (int t = 0; t < blocks.size; ++t)
        values.insert(values.end(), static_cast<size_t>(blocks.blocks[t].count),
                      blocks.blocks[t].value);
    return DegreeSequence(std::move(values));
}

}  // namespace

std::optional<DegreeSequence> find_nongraphic_with_spread(int n, int d) {
    if (n < 2 || d < 0) throw std::domain_error("find_nongraphic_with_spread requires n >= 2, d >= 0");
    std::optional<DegreeSequence> result;
    scan_nongraphic_cells(n, std::min(d, n - 1),
                          [&result](int, long long, const MaximalBlocks& cand) {
                              result = blocks_to_sequence(cand);
                              return true;
                          });
    return result;
}

SearchRow compute_mn_fast(int n) {
    if (n < 4 || n > 1000) throw std::domain_error("compute_mn_fast requires 4 <= n <= 1000");
    // Binary search for the least spread admitting a witness; existence is
    // monotone because the candidate sets are nested as d grows.
    int lo_d = 0;
    int hi_d = n - 1;
    if (witness_exists_with_spread(n, lo_d))
        throw std::logic_error("regular in-window sequence reported non-graphic");
    if (!witness_exists_with_spread(n, hi_d))
        throw std::logic_error("no witness at maximal spread");
    while (hi_d - lo_d > 1) {
        int mid = lo_d + (hi_d - lo_d) / 2;
        if (witness_exists_with_spread(n, mid))
            hi_d = mid;
        else
            lo_d = mid;
    }
#ifndef NDEBUG
    // Monotonicity spot-check around the boundary.
    assert(!witness_exists_with_spread(n, hi_d - 1));
    assert(hi_d + 1 > n - 1 || witness_exists_with_spread(n, hi_d + 1));
#endif
    std::optional<MaximalBlocks> best = best_witness_blocks(n, hi_d);
    if (!best) throw std::logic_error("witness vanished at the least spread");
    SearchRow row{n, hi_d - 1, blocks_to_sequence(*best)};
    assert(row.witness.spread() == row.m + 1);
    return row;
}

SearchRow compute_mn_exhaustive(int n) {
    if (n < 4) throw std::domain_error("compute_mn_exhaustive requires n >= 4");
    if (n > 14) throw std::domain_error("compute_mn_exhaustive refuses n > 14 (cost guard)");
    const long long w_lo = window_low(n);
    const long long w_hi = window_high(n);

    int best_spread = INT_MAX;
    long long best_s = LLONG_MAX;
    int best_delta = -1;

    BoundedSequenceEnumerator en(n, 0, n - 1);
    while (const std::vector<int>* v = en.next()) {
        long long s = 0;
        for (int x : *v) s += x;
        if (s % 2 != 0 || s < w_lo || s > w_hi) continue;
        int spread = v->front() - v->back();
        int delta = v->back();
        // Only candidates improving the (spread, sum, -delta) key need the
        // graphicality test.
        bool improves = spread < best_spread ||
                        (spread == best_spread &&
                         (s < best_s || (s == best_s && delta > best_delta)));
        if (!improves) continue;
        DegreeSequence seq(std::vector<int>(v->begin(), v->end()));
        if (erdos_gallai_check(seq).graphic) continue;
        best_spread = spread;
        best_s = s;
        best_delta = delta;
    }
    if (best_spread == INT_MAX) throw std::logic_error("no witness found in exhaustive scan");
    DegreeSequence witness = maximal_sequence(n, best_s, best_delta, best_delta + best_spread);
    assert(!is_graphic(witness));
    assert(witness.spread() == best_spread && witness.min_degree() == best_delta);
    return SearchRow{n, best_spread - 1, std::move(witness)};
}

SearchRow compute_mn(int n, SearchMode mode) {
    return mode == SearchMode::Fast ? compute_mn_fast(n) : compute_mn_exhaustive(n);
}

std::vector<SearchRow> compute_mn_range(const SearchConfig& config) {
    if (config.from > config.to) throw std::domain_error("empty range");
    const int count = config.to - config.from + 1;
    int jobs = config.jobs > 0
                   ? config.jobs
                   : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    jobs = std::min(jobs, count);

    std::vector<std::optional<SearchRow>> slots(static_cast<size_t>(count));
    if (jobs <= 1) {
        for (int i = 0; i < count; ++i) slots[i] = compute_mn(config.from + i, config.mode);
    } else {
        std::atomic<int> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto worker = [&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    slots[i] = compute_mn(config.from + i, config.mode);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(jobs));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (error) std::rethrow_exception(error);
    }

    std::vector<SearchRow> rows;
    rows.reserve(static_cast<size_t>(count));
    for (auto& slot : slots) rows.push_back(std::move(*slot));
    return rows;
}

BoundedSequenceEnumerator::BoundedSequenceEnumerator(int n, int lo, int hi) : lo_(lo) {
    if (n < 1 || lo < 0 || lo > hi)
        throw std::domain_error("enumerator requires n >= 1 and 0 <= lo <= hi");
    values_.assign(static_cast<size_t>(n), hi);
}

const std::vector<int>* BoundedSequenceEnumerator::next() {
    if (done_) return nullptr;
    if (first_) {
        first_ = false;
        return &values_;
    }
    // Decrement the rightmost position above lo, then raise the suffix to
    // its maximum (the new value at that position, keeping non-increasing
    // order). This is the decreasing-lexicographic successor.
    int i = static_cast<int>(values_.size()) - 1;
    while (i >= 0 && values_[static_cast<size_t>(i)] == lo_) --i;
    if (i < 0) {
        done_ = true;
        return nullptr;
    }
    int v = --values_[static_cast<size_t>(i)];
    for (size_t j = static_cast<size_t>(i) + 1; j < values_.size(); ++j) values_[j] = v;
    return &values_;
}

std::string WitnessCheck::describe() const {
    if (ok()) return "ok";
    std::string out = "invalid witness:";
    if (!length_ok) out += " wrong length;";
    if (!even_sum) out += " odd sum;";
    if (!mean_in_window) out += " mean outside window;";
    if (!spread_ok) out += " spread != m+1;";
    if (!nongraphic) out += " sequence is graphic;";
    out.pop_back();
    return out;
}

WitnessCheck validate_witness(int n, int m, const DegreeSequence& witness) {
    WitnessCheck check;
    check.length_ok = witness.length() == n;
    check.even_sum = witness.sum() % 2 == 0;
    long long four_s = 4 * witness.sum();
    check.mean_in_window = four_s >= static_cast<long long>(n) * (n - 2) &&
                           four_s <= static_cast<long long>(n) * (3LL * n - 2);
    check.spread_ok = witness.spread() == m + 1;
    check.nongraphic = !is_graphic(witness);
    return check;
}

std::string VerificationRow::status() const {
    if (ok()) return "ok";
    std::string out;
    if (!m_matches())
        out = "m mismatch (computed " + std::to_string(computed_m) + ", recorded " +
              std::to_string(expected_m) + ")";
    if (!witness_check.ok()) {
        if (!out.empty()) out += "; ";
        out += witness_check.describe();
    }
    return out;
}

bool VerificationReport::all_ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const VerificationRow& r) { return r.ok(); });
}

VerificationReport verify_rows(std::span<const TableRow> rows, SearchMode mode, int jobs) {
    VerificationReport report;
    report.rows.resize(rows.size());

    const int count = static_cast<int>(rows.size());
    int workers = jobs > 0
                      ? jobs
                      : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = std::min(workers, count);

    auto verify_one = [&rows, mode](int i) {
        const TableRow& ref = rows[static_cast<size_t>(i)];
        VerificationRow out;
        out.n = ref.n;
        out.expected_m = ref.m;
        out.witness = ref.witness;
        out.witness_check = validate_witness(ref.n, ref.m, parse_sequence(ref.witness));
        out.computed_m = compute_mn(ref.n, mode).m;
        return out;
    };

    if (workers <= 1) {
        for (int i = 0; i < count; ++i) report.rows[static_cast<size_t>(i)] = verify_one(i);
    } else {
        std::atomic<int> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto worker = [&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    report.rows[static_cast<size_t>(i)] = verify_one(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (error) std::rethrow_exception(error);
    }
    return report;
}

VerificationReport verify_table(const SearchConfig& config) {
    if (config.from < 4 || config.to > 100 || config.from > config.to)
        throw std::domain_error("verify_table range must lie within [4, 100]");
    auto all = reference_table();
    return verify_rows(all.subspan(static_cast<size_t>(config.from - 4),
                                   static_cast<size_t>(config.to - config.from + 1)),
                       config.mode, config.jobs);
}

}  // namespace degseq
