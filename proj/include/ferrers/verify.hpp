#pragma once

#include <cstdint>
#include <vector>

#include "ferrers/bigint.hpp"
#include "ferrers/verdict.hpp"

namespace ferrers {

/// The three coefficients c_2n, c_{2n-1}, c_{2n-2} of F_<n,n-t,n-2t,n-3t>.
/// The dip c_2n > c_{2n-1} < c_{2n-2} is the nonunimodality witness for
/// t >= 2 and n large.
struct TripleProfile {
    int t = 0, n = 0;
    Int c2n, c2n1, c2n2;
};

TripleProfile triple_profile(int t, int n);

/// Number of partitions of i into two distinct parts, by brute force.
std::int64_t count_two_distinct(int i);

/// F_<n,n-1,n-2,n-3> = 1 + q C(n+1,2)_q + q^6 C(n+1,4)_q for 4 <= n <= nmax.
ClaimVerdict check_eq4(int nmax, unsigned jobs = 1);

/// F_<n,n-1,n-2,n-3> unimodal for 4 <= n <= nmax; for n >= 8 the peak block
/// contains degree 2n and the degree-(2n-1) and -(2n-2) coefficients agree;
/// for n >= 5 the polynomial is neither symmetric nor log-concave.
ClaimVerdict check_theorem_uni(int nmax, unsigned jobs = 1);

/// For each 2 <= t <= tmax: the minimal nonunimodal n (swept up to the
/// budget) and the onset from which the dip c_2n > c_{2n-1} < c_{2n-2}
/// persists through the budget (the two differ: for t=2 the family is
/// nonunimodal at n=9, unimodal again at n=10, and dips from n=11 on);
/// the (1,1,0) and (3,2,2) deltas at n = 10t; the floor(t/2) decrement law
/// for 3 <= t <= decrement_tmax at n = 10t. n_budget = 0 means the default
/// 40t per t; decrement_tmax = -1 means tmax.
ClaimVerdict check_theorem_at(int tmax, int n_budget = 0, int decrement_tmax = -1,
                              unsigned jobs = 1);

/// Coefficients of G_(p,r,s) around degree p: strict rise for 2 <= p <= 2r+s,
/// plateau-then-nonincreasing for p = 1 or p >= 2r+s+1; all
/// 1 <= s <= r <= p <= pmax.
ClaimVerdict check_lemma_p1(int pmax, unsigned jobs = 1);

/// F_<p+2,r+1,s> = q^3 G_(p,r,s) + (1+q+...+q^{p+2}) and
/// F_<p+1,r> = 1 + q G_(p,r), exactly, over 1 <= s <= r <= p <= pmax.
ClaimVerdict check_three_part_decomposition(int pmax, unsigned jobs = 1);

/// The named example shapes: three nonunimodal 6-part truncated staircases,
/// the interval-property triple <19,16,{11,9,10},8>, and straight (8,8,4,4);
/// every nonunimodal one must show exactly two peaks. One verdict per shape.
std::vector<ClaimVerdict> check_named_shapes();

/// Unimodality of F and G for every shape with at most 3 parts and largest
/// part <= bound (G side is Stanton's theorem, checked on a bounded range).
ClaimVerdict check_stanton_b3(int bound, unsigned jobs = 1);

}  // namespace ferrers
