#include <doctest.h>

#include "ferrers/bivar.hpp"
#include "ferrers/qstruct.hpp"

using ferrers::bivar_expand;
using ferrers::BivarSeries;
using ferrers::RationalSpec;
using ferrers::RationalTerm;

TEST_CASE("geometric series 1/(1-q)") {
    RationalSpec spec;
    spec.terms.push_back(RationalTerm{{{1, 0, 0}}, {{1, 0}}});
    const BivarSeries s = bivar_expand(spec, 3, 0);
    for (int i = 0; i <= 3; ++i) CHECK(s.at(i, 0) == 1);
}

TEST_CASE("1/(1 - q^alpha) is the divisibility indicator at t-degree 0") {
    for (int alpha = 1; alpha <= 5; ++alpha) {
        RationalSpec spec;
        spec.terms.push_back(RationalTerm{{{1, 0, 0}}, {{alpha, 0}}});
        const BivarSeries s = bivar_expand(spec, 24, 2);
        for (int i = 0; i <= 24; ++i) {
            CHECK(s.at(i, 0) == (i % alpha == 0 ? 1 : 0));
            CHECK(s.at(i, 1) == 0);
        }
    }
}

TEST_CASE("pure t factor 1/(1-t)") {
    RationalSpec spec;
    spec.terms.push_back(RationalTerm{{{1, 0, 0}}, {{0, 1}}});
    const BivarSeries s = bivar_expand(spec, 2, 5);
    for (int j = 0; j <= 5; ++j) {
        CHECK(s.at(0, j) == 1);
        CHECK(s.at(1, j) == 0);
    }
}

TEST_CASE("malformed factor is rejected") {
    RationalSpec spec;
    spec.terms.push_back(RationalTerm{{{1, 0, 0}}, {{0, 0}}});
    CHECK_THROWS_AS(bivar_expand(spec, 2, 2), std::invalid_argument);
    RationalSpec neg;
    neg.terms.push_back(RationalTerm{{{1, 0, 0}}, {{-1, 1}}});
    CHECK_THROWS_AS(bivar_expand(neg, 2, 2), std::invalid_argument);
}

TEST_CASE("numerator cancellation: (1 - qt)/(1 - qt) = 1") {
    RationalSpec spec;
    spec.terms.push_back(RationalTerm{{{1, 0, 0}, {-1, 1, 1}}, {{1, 1}}});
    const BivarSeries s = bivar_expand(spec, 4, 4);
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= 4; ++j) CHECK(s.at(i, j) == (i == 0 && j == 0 ? 1 : 0));
}

TEST_CASE("sum of two terms: 1/(1-q) + q/(1-q) = full geometric column twice off by one") {
    RationalSpec spec;
    spec.terms.push_back(RationalTerm{{{1, 0, 0}}, {{1, 0}}});
    spec.terms.push_back(RationalTerm{{{1, 1, 0}}, {{1, 0}}});
    const BivarSeries s = bivar_expand(spec, 5, 0);
    CHECK(s.at(0, 0) == 1);
    for (int i = 1; i <= 5; ++i) CHECK(s.at(i, 0) == 2);
}

TEST_CASE("the f(a,c) generating series: hand-computed entries") {
    const BivarSeries s = bivar_expand(ferrers::fac_series_spec(), 4, 6);
    CHECK(s.at(0, 0) == 1);  // empty product
    CHECK(s.at(1, 1) == 0);
    CHECK(s.at(2, 2) == 1);  // the q^2 t^2 numerator term
    // The t = 0 column counts {2,3}-partitions: 1, 0, 1, 1, 1.
    CHECK(s.at(0, 0) == 1);
    CHECK(s.at(1, 0) == 0);
    CHECK(s.at(2, 0) == 1);
    CHECK(s.at(3, 0) == 1);
    CHECK(s.at(4, 0) == 1);
    // Column c = 1 vanishes identically.
    for (int a = 0; a <= 4; ++a) CHECK(s.at(a, 1) == 0);
}

TEST_CASE("series equality is entrywise within the truncation") {
    const BivarSeries a = bivar_expand(ferrers::fac_series_spec(), 6, 8);
    const BivarSeries b = bivar_expand(ferrers::fac_series_spec(), 6, 8);
    CHECK(a == b);
}
