#pragma once

#include <utility>
#include <vector>

#include "ferrers/bigint.hpp"

namespace ferrers {

/// Truncated power series in q and t with exact integer coefficients.
/// Entry (i, j) is the coefficient of q^i t^j; all arithmetic is exact for
/// every (i, j) with i <= qmax and j <= tmax.
class BivarSeries {
public:
    BivarSeries(int qmax, int tmax);

    int qmax() const { return qmax_; }
    int tmax() const { return tmax_; }

    const Int& at(int i, int j) const { return rows_[idx(i, j)]; }
    Int& at(int i, int j) { return rows_[idx(i, j)]; }

    bool operator==(const BivarSeries&) const = default;

private:
    size_t idx(int i, int j) const;
    int qmax_, tmax_;
    std::vector<Int> rows_;  // row-major, (qmax+1) x (tmax+1)
};

/// One monomial c * q^qe * t^te of a rational term's numerator.
struct BivarMonomial {
    Int coef;
    int q_exp = 0;
    int t_exp = 0;
};

/// numerator / prod (1 - q^alpha t^beta); denominator holds (alpha, beta).
struct RationalTerm {
    std::vector<BivarMonomial> numerator;
    std::vector<std::pair<int, int>> denominator;
};

/// A sum of rational terms.
struct RationalSpec {
    std::vector<RationalTerm> terms;
};

/// Expand the rational spec as a truncated series, exactly within bounds.
/// Each denominator factor is inverted by geometric-series accumulation.
/// Throws std::invalid_argument for a malformed factor (alpha = beta = 0 or
/// negative exponents).
BivarSeries bivar_expand(const RationalSpec& spec, int qmax, int tmax);

}  // namespace ferrers
