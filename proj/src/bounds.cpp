#include "degseq/bounds.hpp"

#include <stdexcept>

namespace degseq {

Rational d_function(const Rational& upper, const Rational& lower, const Rational& sum,
                    long long n) {
    if (n < 1) throw std::domain_error("d_function requires n >= 1");
    Rational nn(n);
    if (!(nn * upper > sum) || !(sum > nn * lower))
        throw std::domain_error("d_function requires n*upper > sum > n*lower");
    Rational mu = sum / nn;
    Rational up_gap = upper - mu;   // > 0 in the window
    Rational low_gap = mu - lower;  // > 0 in the window
    Rational bracket = low_gap * (Rational(n - 1) - upper - upper + mu) + up_gap * mu;
    return (upper - lower) * bracket / (nn * up_gap * low_gap);
}

Certificate d_bound_certify(const DegreeSequence& seq) {
    Certificate cert;
    const int n = seq.length();
    if (seq.sum() % 2 != 0) {
        cert.status = CertStatus::NotApplicable;
        cert.note = "odd sum";
        return cert;
    }
    if (seq.max_degree() > n - 1) {
        cert.status = CertStatus::NotApplicable;
        cert.note = "max degree exceeds n-1";
        return cert;
    }
    if (seq.max_degree() == seq.min_degree()) {
        // The sum sits on the window boundary n*max == s == n*min exactly
        // when the sequence is regular, and regular even-sum sequences
        // with values <= n-1 are always graphic.
        cert.status = CertStatus::CertifiedGraphic;
        cert.note = "regular";
        return cert;
    }
    cert.d_value = d_function(Rational(seq.max_degree()), Rational(seq.min_degree()),
                              Rational(seq.sum()), n);
    cert.status = *cert.d_value >= Rational(1) ? CertStatus::CertifiedGraphic
                                               : CertStatus::Inconclusive;
    return cert;
}

Certificate regularity_certify(const DegreeSequence& seq) {
    Certificate cert;
    const int n = seq.length();
    if (seq.sum() % 2 != 0) {
        cert.status = CertStatus::NotApplicable;
        cert.note = "odd sum";
        return cert;
    }
    if (seq.max_degree() > n - 1) {
        cert.status = CertStatus::NotApplicable;
        cert.note = "max degree exceeds n-1";
        return cert;
    }
    const long long s = seq.sum();
    const long long four_s = 4 * s;
    const long long low_edge = static_cast<long long>(n) * (n - 2);
    const long long high_edge = static_cast<long long>(n) * (3LL * n - 2);

    SequenceStats st = stats(seq);
    cert.mean = st.mean;
    cert.rg = st.rg;
    if (four_s < low_edge) {
        cert.case_index = 3;
        cert.bound = st.mean;
    } else if (four_s > high_edge) {
        cert.case_index = 2;
        cert.bound = Rational(n - 1) - st.mean;
    } else {
        cert.case_index = 1;
        cert.bound = Rational(static_cast<long long>(n) - 2, 4);
    }
    cert.status = st.rg <= *cert.bound ? CertStatus::CertifiedGraphic : CertStatus::Inconclusive;
    return cert;
}

ExtremalPair extremal_pair(long long s, int n) {
    if (n < 2) throw std::domain_error("extremal_pair requires n >= 2");
    if (s < 0 || s > static_cast<long long>(n) * (n - 1))
        throw std::domain_error("extremal_pair requires 0 <= s <= n(n-1)");
    const long long four_s = 4 * s;
    const long long low_edge = static_cast<long long>(n) * (n - 2);
    const long long high_edge = static_cast<long long>(n) * (3LL * n - 2);
    if (four_s < low_edge || four_s > high_edge)
        throw std::domain_error("extremal_pair requires the mean in [(n-2)/4, (3n-2)/4]");
    const long long four_n = 4LL * n;
    long long upper = (four_s + low_edge) / four_n;               // floor, numerator >= 0
    long long lower = (four_s - low_edge + four_n - 1) / four_n;  // ceil, numerator >= 0
    return {static_cast<int>(upper), static_cast<int>(lower)};
}

DegreeSequence family_sequence(int n, int mean, int c) {
    if (n < 2 || n % 2 != 0) throw std::domain_error("family_sequence requires even n >= 2");
    if (c < 0) throw std::domain_error("family_sequence requires c >= 0");
    if (mean - c < 0) throw std::domain_error("family_sequence requires mean - c >= 0");
    if (mean + c > n - 1) throw std::domain_error("family_sequence requires mean + c <= n-1");
    std::vector<int> values(static_cast<size_t>(n));
    for (int i = 0; i < n / 2; ++i) values[static_cast<size_t>(i)] = mean + c;
    for (int i = n / 2; i < n; ++i) values[static_cast<size_t>(i)] = mean - c;
    return DegreeSequence(std::move(values));
}

}  // namespace degseq
