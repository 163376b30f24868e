#include <stdexcept>
#include <random>

#include "doctest.h"

#include "degseq/bounds.hpp"
#include "degseq/graphicality.hpp"
#include "degseq/search.hpp"
#include "degseq/sequence.hpp"
#include "oracles.hpp"

using degseq::CertStatus;
using degseq::Certificate;
using degseq::DegreeSequence;
using degseq::Rational;
using degseq::d_function;

namespace {

DegreeSequence seq(std::vector<int> v) { return DegreeSequence(std::move(v)); }

// Half-integer grid 1/2, 1, 3/2, ..., limit.
std::vector<Rational> half_steps(const Rational& limit) {
    std::vector<Rational> out;
    for (long long k = 1;; ++k) {
        Rational c(k, 2);
        if (c > limit) break;
        out.push_back(c);
    }
    return out;
}

bool in_window(const Rational& a, const Rational& b, const Rational& s, long long n) {
    return Rational(n) * a > s && s > Rational(n) * b;
}

}  // namespace

TEST_CASE("d_function reproduces the pinned examples") {
    CHECK(d_function(7, 3, 50, 10) == Rational(1));
    CHECK(d_function(6, 4, 50, 10) == Rational(7, 5));
    CHECK(d_function(7, 4, 50, 10) == Rational(3, 2));
    // Sum-shift cross-check for the third example: lifting the sum by n*d
    // changes the value by -(d/n)*(c2^2-c1^2)/(c1*c2) with c1 = 2, c2 = 1.
    Rational shifted = d_function(8, 5, 60, 10);
    CHECK(d_function(7, 4, 50, 10) ==
          shifted + (Rational(1) / Rational(10)) * Rational(1 - 4) / Rational(2));
}

TEST_CASE("d_function rejects arguments outside its open window") {
    CHECK_THROWS_AS(d_function(5, 3, 50, 10), std::domain_error);   // s == n*upper
    CHECK_THROWS_AS(d_function(7, 5, 50, 10), std::domain_error);   // s == n*lower
    CHECK_THROWS_AS(d_function(4, 2, 50, 10), std::domain_error);   // s above the window
    CHECK_THROWS_AS(d_function(9, 8, 50, 10), std::domain_error);   // s below the window
}

// The closed form is pinned by six exact identities, evaluated over a
// dense grid of admissible integer and half-integer parameters. Every
// comparison is exact rational equality.
TEST_CASE("d_function identity suite") {
    long long cases = 0;

    for (long long n = 3; n <= 40; ++n) {
        Rational rn(n);
        Rational quarter(n - 2, 4);
        long long smax = n * (n - 1);

        // Symmetric identities around the mean, including the equality
        // case c = (n-2)/4 and the width-shift relation.
        for (long long s = 1; s < smax; s += (n <= 12 ? 1 : 7)) {
            Rational rs(s);
            Rational mu = Rational(s, n);

            CHECK(d_function(mu + quarter, mu - quarter, rs, n) == Rational(1));
            ++cases;

            auto cs = half_steps(Rational(n, 4));
            for (size_t i = 0; i < cs.size(); ++i) {
                const Rational& c = cs[i];
                Rational expected =
                    (Rational(2) * (rn - (Rational(2) * c + Rational(1)))) / rn;
                CHECK(d_function(mu + c, mu - c, rs, n) == expected);
                ++cases;
                if (i + 2 < cs.size()) {
                    const Rational& c2 = cs[i + 2];
                    Rational lhs = d_function(mu + c, mu - c, rs, n);
                    Rational rhs = d_function(mu + c2, mu - c2, rs, n) +
                                   Rational(4) * (c2 - c) / rn;
                    CHECK(lhs == rhs);
                    ++cases;
                }
            }
        }

        // Sum-shift relation with asymmetric deviations c1, c2.
        for (long long s = n; s + 2 * n < smax; s += (n <= 12 ? 3 : 17)) {
            Rational mu1 = Rational(s, n);
            for (const Rational& c1 : {Rational(1, 2), Rational(1), Rational(3, 2)}) {
                for (const Rational& c2 : {Rational(1), Rational(2)}) {
                    for (const Rational& d : {Rational(1, 2), Rational(1), Rational(2)}) {
                        Rational s2 = Rational(s) + rn * d;
                        Rational mu2 = s2 / rn;
                        Rational lhs = d_function(mu1 + c1, mu1 - c2, Rational(s), n);
                        Rational rhs = d_function(mu2 + c1, mu2 - c2, s2, n) +
                                       (d / rn) * ((c2 * c2 - c1 * c1) / (c1 * c2));
                        CHECK(lhs == rhs);
                        ++cases;
                    }
                }
            }
        }

        // Complement invariance over integer argument triples.
        for (long long a = 1; a <= n - 1; ++a) {
            for (long long b = 0; b < a; ++b) {
                for (long long s = n * b + 1; s < n * a; s += (n <= 10 ? 1 : 13)) {
                    Rational lhs = d_function(Rational(a), Rational(b), Rational(s), n);
                    Rational rhs = d_function(Rational(n - 1 - b), Rational(n - 1 - a),
                                              Rational(n * (n - 1) - s), n);
                    CHECK(lhs == rhs);
                    ++cases;
                }
            }
        }

        // Floor/fractional form: with q = floor(s/n) and f = {s/n},
        // D(q+c, q-c, s, n) = 2c * ((cn - c - 2c^2) + f(n - 2q - 1))
        //                        / (n (c+f) (c-f)).
        for (long long s = 1; s < smax; s += (n <= 12 ? 1 : 11)) {
            Rational mu = Rational(s, n);
            Rational q(static_cast<long long>(mu.floor()));
            Rational f = mu.frac();
            for (const Rational& c : half_steps(Rational(n, 4))) {
                if (!(c > f)) continue;
                if (!in_window(q + c, q - c, Rational(s), n)) continue;
                Rational lhs = d_function(q + c, q - c, Rational(s), n);
                Rational num = (c * rn - c - Rational(2) * c * c) +
                               f * (rn - Rational(2) * q - Rational(1));
                Rational den = rn * (c + f) * (c - f);
                CHECK(lhs == Rational(2) * c * num / den);
                ++cases;
            }
        }
    }
    MESSAGE("identity suite cases: ", cases);
    CHECK(cases >= 10000);
}

TEST_CASE("fractional parts of a sum and its complement sum are mirrored") {
    for (long long n = 2; n <= 40; ++n) {
        for (long long s = 0; s <= n * (n - 1); ++s) {
            if (s % n == 0) continue;  // identity does not apply when n divides s
            long long sbar = n * (n - 1) - s;
            CHECK((s % n) + (sbar % n) == n);
        }
    }
}

// Monotonicity of the floor form in the sum, restricted to mean floors at
// most (n-1)/2 where the fractional coefficient (n - 2q - 1) is
// non-negative. Outside that regime the claim can fail; violations are
// counted and reported but not asserted.
TEST_CASE("floor-form monotonicity in the sum, restricted regime") {
    long long violations_outside = 0;
    long long checked = 0;
    for (long long n = 3; n <= 40; ++n) {
        for (long long q = 0; q <= n - 1; ++q) {
            for (const Rational& c : half_steps(Rational(q))) {
                Rational prev;
                bool have_prev = false;
                for (long long t = 0; t < n; ++t) {
                    long long s = n * q + t;
                    if (s == 0 || s >= n * (n - 1)) continue;
                    Rational f(t, n);
                    if (!(c > f)) break;  // window closes for larger t
                    if (!in_window(Rational(q) + c, Rational(q) - c, Rational(s), n)) continue;
                    Rational value = d_function(Rational(q) + c, Rational(q) - c, Rational(s), n);
                    if (have_prev) {
                        if (2 * q <= n - 1) {
                            CHECK(prev <= value);
                            ++checked;
                        } else if (prev > value) {
                            ++violations_outside;
                        }
                    }
                    prev = value;
                    have_prev = true;
                }
            }
        }
    }
    CHECK(checked > 1000);
    MESSAGE("monotonicity violations with floor(s/n) > (n-1)/2: ", violations_outside);
}

TEST_CASE("d-bound certifier matches the pinned examples") {
    Certificate cert = degseq::d_bound_certify(seq({7, 7, 7, 7, 7, 3, 3, 3, 3, 3}));
    CHECK(cert.status == CertStatus::CertifiedGraphic);
    REQUIRE(cert.d_value.has_value());
    CHECK(*cert.d_value == Rational(1));

    cert = degseq::d_bound_certify(seq({4, 4, 4, 2, 2}));
    CHECK(cert.status == CertStatus::Inconclusive);
    REQUIRE(cert.d_value.has_value());
    CHECK(*cert.d_value == Rational(2, 3));
    CHECK(!degseq::is_graphic(seq({4, 4, 4, 2, 2})));

    cert = degseq::d_bound_certify(seq({3, 3, 3, 3}));
    CHECK(cert.status == CertStatus::CertifiedGraphic);
    CHECK(cert.note == "regular");

    CHECK(degseq::d_bound_certify(seq({1, 1, 1})).status == CertStatus::NotApplicable);
    CHECK(degseq::d_bound_certify(seq({5, 1, 1, 1})).status == CertStatus::NotApplicable);
}

TEST_CASE("regularity certifier selects cases by exact mean comparison") {
    Certificate cert = degseq::regularity_certify(seq({7, 7, 7, 7, 7, 3, 3, 3, 3, 3}));
    CHECK(cert.status == CertStatus::CertifiedGraphic);
    CHECK(cert.case_index == 1);
    CHECK(*cert.rg == Rational(2));
    CHECK(*cert.bound == Rational(2));

    cert = degseq::regularity_certify(seq(std::vector<int>(10, 9)));
    CHECK(cert.status == CertStatus::CertifiedGraphic);
    CHECK(cert.case_index == 2);
    CHECK(*cert.bound == Rational(0));

    cert = degseq::regularity_certify(seq({8, 8, 8, 8, 8, 2, 2, 2, 2, 2}));
    CHECK(cert.status == CertStatus::Inconclusive);
    CHECK(cert.case_index == 1);
    CHECK(*cert.rg == Rational(3));

    // Case 3: small mean. rg = 6/5 equals the bound (the mean) exactly.
    cert = degseq::regularity_certify(seq({2, 2, 2, 2, 1, 1, 1, 1, 0, 0}));
    CHECK(cert.case_index == 3);
    CHECK(*cert.bound == Rational(6, 5));
    CHECK(cert.status == CertStatus::CertifiedGraphic);

    // Still case 3 but rg = 2 - 4/5 exceeds the mean 4/5: inconclusive.
    cert = degseq::regularity_certify(seq({2, 2, 1, 1, 1, 1, 0, 0, 0, 0}));
    CHECK(cert.case_index == 3);
    CHECK(cert.status == CertStatus::Inconclusive);

    // The mean == (3n-2)/4 boundary belongs to case 1: n = 10, s = 70.
    cert = degseq::regularity_certify(seq(std::vector<int>(10, 7)));
    CHECK(cert.case_index == 1);
    CHECK(cert.status == CertStatus::CertifiedGraphic);

    CHECK(degseq::regularity_certify(seq({1, 1, 1})).status == CertStatus::NotApplicable);
    CHECK(degseq::regularity_certify(seq({9, 1, 1, 1})).status == CertStatus::NotApplicable);
}

TEST_CASE("extremal_pair computes floor/ceil bounds exactly") {
    auto p = degseq::extremal_pair(50, 10);
    CHECK(p.upper == 7);
    CHECK(p.lower == 3);
    p = degseq::extremal_pair(16, 5);
    CHECK(p.upper == 3);
    CHECK(p.lower == 3);
    p = degseq::extremal_pair(8, 4);
    CHECK(p.upper == 2);
    CHECK(p.lower == 2);
    CHECK_THROWS_AS(degseq::extremal_pair(1, 10), std::domain_error);
    CHECK_THROWS_AS(degseq::extremal_pair(89, 10), std::domain_error);
    CHECK_THROWS_AS(degseq::extremal_pair(-1, 10), std::domain_error);
}

TEST_CASE("family_sequence builds the two-valued family") {
    DegreeSequence fam = degseq::family_sequence(10, 5, 3);
    CHECK(degseq::format_sequence(fam) == "8^5,2^5");
    CHECK(!degseq::is_graphic(fam));

    fam = degseq::family_sequence(10, 5, 2);
    CHECK(degseq::format_sequence(fam) == "7^5,3^5");
    CHECK(degseq::is_graphic(fam));

    fam = degseq::family_sequence(4, 2, 1);
    CHECK(degseq::format_sequence(fam) == "3^2,1^2");
    CHECK(!degseq::is_graphic(fam));

    CHECK_THROWS_AS(degseq::family_sequence(5, 2, 1), std::domain_error);
    CHECK_THROWS_AS(degseq::family_sequence(10, 1, 2), std::domain_error);
    CHECK_THROWS_AS(degseq::family_sequence(10, 8, 2), std::domain_error);
}

TEST_CASE("the family is non-graphic exactly when c exceeds (n-2)/4") {
    for (int n = 4; n <= 50; n += 2) {
        for (int mean = 0; mean <= n - 1; ++mean) {
            for (int c = 0; c <= std::min(mean, n - 1 - mean); ++c) {
                DegreeSequence fam = degseq::family_sequence(n, mean, c);
                bool within_bound = 4 * c <= n - 2;
                CHECK(degseq::is_graphic(fam) == within_bound);
            }
        }
    }
}

TEST_CASE("certifiers are sound: certified implies graphic") {
    // Exhaustive up to n = 9.
    for (int n = 1; n <= 9; ++n) {
        oracles::for_each_bounded(n, 0, n - 1, [&](const std::vector<int>& values) {
            DegreeSequence s(values);
            if (degseq::d_bound_certify(s).status == CertStatus::CertifiedGraphic)
                REQUIRE(degseq::is_graphic(s));
            if (degseq::regularity_certify(s).status == CertStatus::CertifiedGraphic)
                REQUIRE(degseq::is_graphic(s));
        });
    }
    // Random sequences up to n = 100, biased toward narrow ranges so that
    // certifiable shapes actually occur.
    std::mt19937 rng(41);
    int certified = 0;
    for (int trial = 0; trial < 12000; ++trial) {
        int n = 2 + int(rng() % 99);
        int lo = int(rng() % size_t(n));
        int width = int(rng() % size_t(n - lo));
        if (trial % 2 == 0) width = int(rng() % 5);
        int hi = std::min(n - 1, lo + width);
        std::vector<int> values(static_cast<size_t>(n));
        for (auto& v : values) v = lo + int(rng() % size_t(hi - lo + 1));
        DegreeSequence s(values);
        Certificate a = degseq::d_bound_certify(s);
        Certificate b = degseq::regularity_certify(s);
        if (a.status == CertStatus::CertifiedGraphic) {
            REQUIRE(degseq::is_graphic(s));
            ++certified;
        }
        if (b.status == CertStatus::CertifiedGraphic) {
            REQUIRE(degseq::is_graphic(s));
            ++certified;
        }
    }
    CHECK(certified > 100);  // the sample must actually exercise the certifiers
}

// The computational content of the main regularity bound: for any length
// and admissible even sum, the majorization-maximal sequence spanning
// [ceil(mean - (n-2)/4), floor(mean + (n-2)/4)] is graphic, hence so is
// everything it majorizes.
TEST_CASE("extremal sequences over the case-1 window are graphic") {
    for (int n = 2; n <= 60; ++n) {
        long long w_lo = (static_cast<long long>(n) * (n - 2) + 3) / 4;
        long long w_hi = static_cast<long long>(n) * (3LL * n - 2) / 4;
        for (long long s = w_lo + (w_lo % 2); s <= w_hi; s += 2) {
            auto pair = degseq::extremal_pair(s, n);
            if (pair.lower > pair.upper) continue;  // no such sequence
            if (s < static_cast<long long>(n) * pair.lower ||
                s > static_cast<long long>(n) * pair.upper)
                continue;
            DegreeSequence extremal = degseq::maximal_sequence(n, s, pair.lower, pair.upper);
            CHECK(degseq::is_graphic(extremal));
        }
    }
}
