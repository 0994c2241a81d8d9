#include <doctest.h>

#include <random>

#include "ferrers/diagnostics.hpp"
#include "test_util.hpp"

using ferrers::diagnose;
using ferrers::IntPoly;
using ferrers::SeqDiagnostics;
using testutil::Coeffs;
using testutil::poly_of;

TEST_CASE("F_<4,2,1> is unimodal with one peak") {
    const SeqDiagnostics d = diagnose(poly_of({1, 1, 1, 2, 2, 2, 2, 1}));
    CHECK(d.unimodal);
    CHECK(d.peak_count == 1);
    CHECK(d.peak_degrees == std::vector<int>{3, 4, 5, 6});
    CHECK(!d.symmetric);
    CHECK(d.flawless);
    CHECK(!d.first_dip.has_value());
}

TEST_CASE("C(10,4)^q shows the 17,16,17 dip") {
    const SeqDiagnostics d = diagnose(poly_of(
        {1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 9, 10, 12, 13, 15, 16, 17, 16, 17, 15, 14, 11, 7, 4, 1}));
    CHECK(!d.unimodal);
    CHECK(d.peak_count == 2);
    CHECK(d.peak_degrees == std::vector<int>{16, 18});
    CHECK(d.first_dip == 17);
    CHECK(d.flawless);
    CHECK(!d.symmetric);
    CHECK(!d.log_concave);
}

TEST_CASE("constant polynomial") {
    const SeqDiagnostics d = diagnose(IntPoly::one());
    CHECK(d.unimodal);
    CHECK(d.peak_count == 1);
    CHECK(d.peak_degrees == std::vector<int>{0});
    CHECK(d.symmetric);
    CHECK(d.flawless);
    CHECK(d.log_concave);
}

TEST_CASE("zero polynomial is rejected") {
    CHECK_THROWS_AS(diagnose(IntPoly::zero()), std::domain_error);
}

TEST_CASE("plateau peak handling") {
    CHECK(diagnose(poly_of({1, 2, 2, 1})).peak_count == 1);
    CHECK(diagnose(poly_of({1, 2, 2, 1})).peak_degrees == std::vector<int>{1, 2});
    CHECK(diagnose(poly_of({2, 1, 2})).peak_count == 2);
    CHECK(diagnose(poly_of({1, 1})).peak_count == 1);           // single block
    CHECK(diagnose(poly_of({3, 2, 1})).peak_count == 1);        // boundary peak
    CHECK(diagnose(poly_of({3, 2, 1})).peak_degrees == std::vector<int>{0});
    CHECK(diagnose(poly_of({1, 2, 3})).peak_degrees == std::vector<int>{2});
    // Plateau dip: 2,1,1,2 has a single dip region, two peaks.
    const SeqDiagnostics d = diagnose(poly_of({2, 1, 1, 2}));
    CHECK(d.peak_count == 2);
    CHECK(!d.unimodal);
    CHECK(d.first_dip == 1);
}

TEST_CASE("internal zeros") {
    const SeqDiagnostics d = diagnose(poly_of({1, 0, 1}));
    CHECK(!d.unimodal);
    CHECK(d.first_dip == 1);
    CHECK(d.peak_count == 2);
    CHECK(!d.log_concave);
    CHECK(d.symmetric);
    // Leading zeros are not internal: q^2 + q^3 is fine.
    const SeqDiagnostics s = diagnose(poly_of({0, 0, 1, 1}));
    CHECK(s.unimodal);
    CHECK(s.log_concave);
    CHECK(!s.symmetric);
}

TEST_CASE("log-concavity examples") {
    CHECK(diagnose(poly_of({1, 2, 3, 2, 1})).log_concave);
    CHECK(!diagnose(poly_of({1, 1, 1, 2})).log_concave);  // 1 < 1*2 at i=2
    CHECK(diagnose(poly_of({1, 3, 9, 3, 1})).log_concave);
    CHECK(!diagnose(poly_of({1, 3, 10, 3, 1})).log_concave);  // 9 < 10 at i=1
}

TEST_CASE("flawless definition on asymmetric sequences") {
    CHECK(diagnose(poly_of({1, 2, 3})).flawless);
    CHECK(!diagnose(poly_of({3, 2, 1})).flawless);
    CHECK(diagnose(poly_of({1, 2, 2, 2})).flawless);
    // a_1 = 2 > a_2 = 1 with N = 3.
    CHECK(!diagnose(poly_of({1, 2, 1, 1})).flawless);
}

TEST_CASE("random-sequence invariants") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> coeff(0, 6);
    std::uniform_int_distribution<int> len(1, 12);
    for (int trial = 0; trial < 3000; ++trial) {
        Coeffs c(static_cast<size_t>(len(rng)));
        for (auto& x : c) x = coeff(rng);
        c.back() = c.back() == 0 ? 1 : c.back();  // keep it nonzero
        const IntPoly p = poly_of(c);
        const SeqDiagnostics d = diagnose(p);
        // unimodal iff no dip witness.
        CHECK(d.unimodal == !d.first_dip.has_value());
        // unimodal iff exactly one plateau peak.
        CHECK(d.unimodal == (d.peak_count == 1));
        CHECK(d.peak_count >= 1);
        // symmetric implies flawless.
        if (d.symmetric) CHECK(d.flawless);

        // Symmetrize and re-check: a_i = a_{N-i} forces flawless.
        Coeffs sym = c;
        const size_t n = sym.size();
        for (size_t i = 0; i < n / 2; ++i) sym[n - 1 - i] = sym[i];
        if (sym[n - 1] != 0) {
            const SeqDiagnostics ds = diagnose(poly_of(sym));
            CHECK(ds.symmetric);
            CHECK(ds.flawless);
        }
    }
}
