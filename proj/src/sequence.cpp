#include "degseq/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace degseq {

DegreeSequence::DegreeSequence(std::vector<int> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("degree sequence must not be empty");
    if (values_.size() > static_cast<size_t>(kMaxLength))
        throw std::invalid_argument("degree sequence longer than " + std::to_string(kMaxLength));
    for (int v : values_) {
        if (v < 0) throw std::invalid_argument("negative degree " + std::to_string(v));
        sum_ += v;
    }
    std::sort(values_.begin(), values_.end(), std::greater<int>());
}

namespace {

// Splits off the next decimal integer from `pos`, rejecting signs so that
// negative values get their own diagnostic.
long long read_uint(const std::string& term, size_t& pos, const char* what) {
    if (pos < term.size() && (term[pos] == '-' || term[pos] == '+')) {
        if (term[pos] == '-')
            throw std::invalid_argument(std::string("negative ") + what + " in term '" + term + "'");
        throw std::invalid_argument("malformed term '" + term + "'");
    }
    size_t start = pos;
    long long value = 0;
    while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos]))) {
        value = value * 10 + (term[pos] - '0');
        if (value > 1000000000LL)
            throw std::invalid_argument(std::string(what) + " out of range in term '" + term + "'");
        ++pos;
    }
    if (pos == start) throw std::invalid_argument("malformed term '" + term + "'");
    return value;
}

}  // namespace

DegreeSequence parse_sequence(std::string_view text) {
    std::string cleaned;
    cleaned.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
    if (cleaned.empty()) throw std::invalid_argument("empty sequence");

    std::vector<int> values;
    size_t term_start = 0;
    while (term_start <= cleaned.size()) {
        size_t comma = cleaned.find(',', term_start);
        std::string term = cleaned.substr(
            term_start, comma == std::string::npos ? std::string::npos : comma - term_start);
        if (term.empty()) throw std::invalid_argument("empty term in sequence");

        size_t pos = 0;
        long long value = read_uint(term, pos, "value");
        long long repeat = 1;
        if (pos < term.size()) {
            if (term[pos] != '^') throw std::invalid_argument("malformed term '" + term + "'");
            ++pos;
            repeat = read_uint(term, pos, "repetition");
            if (pos != term.size()) throw std::invalid_argument("malformed term '" + term + "'");
            if (repeat == 0)
                throw std::invalid_argument("zero repetition in term '" + term + "'");
        }
        if (values.size() + static_cast<size_t>(repeat) >
            static_cast<size_t>(DegreeSequence::kMaxLength))
            throw std::invalid_argument("sequence longer than " +
                                        std::to_string(DegreeSequence::kMaxLength));
        values.insert(values.end(), static_cast<size_t>(repeat), static_cast<int>(value));

        if (comma == std::string::npos) break;
        term_start = comma + 1;
        if (term_start == cleaned.size()) throw std::invalid_argument("empty term in sequence");
    }
    return DegreeSequence(std::move(values));
}

std::string format_sequence(const DegreeSequence& seq) {
    std::string out;
    auto vals = seq.values();
    for (size_t i = 0; i < vals.size();) {
        size_t run = i + 1;
        while (run < vals.size() && vals[run] == vals[i]) ++run;
        if (!out.empty()) out.push_back(',');
        out += std::to_string(vals[i]);
        if (run - i > 1) {
            out.push_back('^');
            out += std::to_string(run - i);
        }
        i = run;
    }
    return out;
}

SequenceStats stats(const DegreeSequence& seq) {
    SequenceStats st;
    st.n = seq.length();
    st.sum = seq.sum();
    st.mean = Rational(seq.sum(), seq.length());
    st.max_degree = seq.max_degree();
    st.min_degree = seq.min_degree();
    st.spread = seq.spread();
    Rational above = Rational(st.max_degree) - st.mean;
    Rational below = st.mean - Rational(st.min_degree);
    st.rg = above < below ? below : above;
    return st;
}

DegreeSequence complement(const DegreeSequence& seq) {
    int n = seq.length();
    if (seq.max_degree() > n - 1)
        throw std::domain_error("complement undefined: value " +
                                std::to_string(seq.max_degree()) + " exceeds n-1 = " +
                                std::to_string(n - 1));
    std::vector<int> flipped;
    flipped.reserve(static_cast<size_t>(n));
    auto vals = seq.values();
    for (auto it = vals.rbegin(); it != vals.rend(); ++it) flipped.push_back(n - 1 - *it);
    return DegreeSequence(std::move(flipped));
}

bool majorizes(const DegreeSequence& a, const DegreeSequence& b) {
    if (a.length() != b.length())
        throw std::domain_error("majorization compares sequences of equal length");
    if (a.sum() != b.sum())
        throw std::domain_error("majorization compares sequences of equal sum");
    long long pa = 0;
    long long pb = 0;
    for (int i = 0; i < a.length(); ++i) {
        pa += a.value(i);
        pb += b.value(i);
        if (pa < pb) return false;
    }
    return true;
}

DegreeSequence down_transfer(const DegreeSequence& seq, int i, int j) {
    if (i < 0 || i >= seq.length() || j < 0 || j >= seq.length())
        throw std::out_of_range("down_transfer position out of range");
    if (seq.value(i) < seq.value(j) + 2)
        throw std::domain_error("invalid transfer: need d_i >= d_j + 2");
    std::vector<int> values(seq.values().begin(), seq.values().end());
    --values[static_cast<size_t>(i)];
    ++values[static_cast<size_t>(j)];
    return DegreeSequence(std::move(values));
}

}  // namespace degseq
