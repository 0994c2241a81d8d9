#pragma once

#include <vector>

#include "ferrers/bivar.hpp"
#include "ferrers/poly.hpp"
#include "ferrers/verdict.hpp"

namespace ferrers {

/// The array f(a, c) = d_{a,2a-c} - d_{a,2a-c-1}, where d_{a,i} is the
/// coefficient of q^i in C(a+4, 4)_q. By convention f(a, c) = 0 for c < 0
/// and c > 2a.
class FTable {
public:
    explicit FTable(int amax);

    int amax() const { return amax_; }
    /// f(a, c); zero outside 0 <= c <= 2a.
    const Int& f(int a, int c) const;

private:
    friend FTable build_ftable(int amax);
    int amax_;
    std::vector<std::vector<Int>> rows_;  // rows_[a][c], c in 0..2a
};

/// Table filled from C(a+4,4)_q coefficient differences for 0 <= a <= amax
/// (single Pascal-row sweep, no global cache traffic).
FTable build_ftable(int amax);

/// The two-term rational series of the f(a,c) bivariate generating function:
///   1/((1-q^2)(1-q^3)(1-q t^2)) + q^2 t^2/((1-q^2)(1-q^3)(1-q t^2)(1-q t)).
RationalSpec fac_series_spec();

/// The single rational form (1 - q t + q^2 t^2)/((1-q^2)(1-q t)(1-q t^2))
/// that equals (1-q^3) F(q,t) coefficientwise.
RationalSpec remark_rational_spec();

/// (a) the bivariate series equals the f-table entrywise on the truncation.
ClaimVerdict check_fac_a(int amax, int cmax);

/// (b) f >= 0 everywhere and, for 2 <= a <= amax, f(a,c) = 0 exactly when
/// c = 1, c = 2a-1, or (a,c) = (4,3).
ClaimVerdict check_fac_b(int amax);

/// (c) f(a,0) = floor((a + 3 delta)/6) with delta = 1 for odd a, 2 for even;
/// f(a,0) is nondecreasing within each parity class and f(6k,0) strictly
/// increases in k. (Consecutive values do dip, e.g. f(6,0)=2 > f(7,0)=1; the
/// first such dip is recorded as an informational witness.)
ClaimVerdict check_fac_c(int amax);

/// The O'Hara-derived recursion for C(a+4,4)_q, checked exactly per a.
ClaimVerdict check_ohara_recursion(int amax);

/// The coefficient-of-q^k formula for (1-q^3) F(q,t), checked against both
/// the displayed double sum and the single rational form, truncated at tmax.
ClaimVerdict check_remark_coeff_formula(int kmax, int tmax);

}  // namespace ferrers
