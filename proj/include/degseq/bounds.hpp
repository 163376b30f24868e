#pragma once

#include <optional>
#include <string>

#include "degseq/rational.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

/// The four-argument D function: with mu = sum/n,
///
///   D(a, b, sum, n) = (a-b) * [ (mu-b)*(n-1-2a+mu) + (a-mu)*mu ]
///                     / [ n * (a-mu) * (mu-b) ]
///
/// Defined on the open window n*a > sum > n*b (std::domain_error outside,
/// including the zero-denominator endpoints). A value >= 1 certifies that
/// any sequence of length n, sum `sum`, largest value a and smallest value
/// b is graphic. The closed form is pinned down by an identity suite
/// (complement invariance, the symmetric-width and sum-shift relations,
/// and the floor/fractional form) that the test suite enforces exactly.
Rational d_function(const Rational& upper, const Rational& lower,
                    const Rational& sum, long long n);

enum class CertStatus {
    CertifiedGraphic,
    Inconclusive,
    NotApplicable,
};

/// Result of a sufficient-condition certifier, carrying the quantities it
/// computed. A certifier never consults the exact decider; soundness
/// (certified implies graphic) is enforced by cross-checking tests.
struct Certificate {
    CertStatus status = CertStatus::Inconclusive;
    std::string note;                 // "regular", "odd sum", ...
    std::optional<Rational> d_value;  // d-bound certifier
    int case_index = 0;               // regularity certifier: 1, 2 or 3
    std::optional<Rational> mean;
    std::optional<Rational> rg;
    std::optional<Rational> bound;
};

/// Certifies via D(max, min, s, n) >= 1. Regular sequences (max == min)
/// sit on the window boundary and are certified directly; odd sums and
/// values above n-1 are NotApplicable.
Certificate d_bound_certify(const DegreeSequence& seq);

/// Certifies via the regularity measure rg = max |d_i - mean|, with the
/// bound selected by where the mean falls (all comparisons exact):
///   case 1: (n-2)/4 <= mean <= (3n-2)/4   ->  rg <= (n-2)/4
///   case 2: mean > (3n-2)/4               ->  rg <= n-1 - mean
///   case 3: mean < (n-2)/4                ->  rg <= mean
/// The mean == (3n-2)/4 boundary belongs to case 1.
Certificate regularity_certify(const DegreeSequence& seq);

struct ExtremalPair {
    int upper = 0;
    int lower = 0;
};

/// The extreme degree values floor(s/n + (n-2)/4) and ceil(s/n - (n-2)/4),
/// computed in exact integer arithmetic. Requires the mean in the case-1
/// window (std::domain_error otherwise).
ExtremalPair extremal_pair(long long s, int n);

/// The two-valued family ((mean+c)^(n/2), (mean-c)^(n/2)) for even n.
/// Non-graphic exactly when c > (n-2)/4. Throws std::domain_error on
/// parity or range violations (need 0 <= mean-c and mean+c <= n-1).
DegreeSequence family_sequence(int n, int mean, int c);

}  // namespace degseq
