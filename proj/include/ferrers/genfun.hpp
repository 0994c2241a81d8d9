#pragma once

#include "ferrers/poly.hpp"
#include "ferrers/shape.hpp"

namespace ferrers {

/// Rank-generating function F_lambda of the poset of partitions with
/// distinct parts contained inside the shifted shape lambda. Coefficient of
/// q^k counts the contained partitions of k; degree is the size of lambda.
///
/// Computed by the row recursion
///   N(i, cap) = 1 + sum_{v=1..cap} q^v N(i+1, min(lambda_{i+1}, v-1))
/// with N(b+1, .) = 1, memoized per row and evaluated incrementally in cap.
IntPoly rgf_shifted(const StrictShape& lambda);

/// Rank-generating function G_lambda of arbitrary partitions inside a
/// straight shape; same recursion with the weak bound min(lambda_{i+1}, v).
IntPoly rgf_straight(const StraightShape& lambda);

/// Brute-force enumeration oracle: recursively lists every contained
/// partition and counts by size. Independent of the DP path; used to
/// cross-check it. Throws std::invalid_argument when the shape size exceeds
/// the budget.
IntPoly oracle_rgf(const StrictShape& lambda, int budget = 60);
IntPoly oracle_rgf(const StraightShape& lambda, int budget = 60);

/// Gaussian polynomial C(n, k)_q via the Pascal recursion
///   C(n,k)_q = C(n-1,k-1)_q + q^k C(n-1,k)_q,
/// backed by a process-wide synchronized cache. Throws unless 0 <= k <= n.
IntPoly qbinom(int n, int k);

/// The q-analog C(a, b)^q: F of <a-1, a-3, ..., a-(2b-1)>.
/// Throws unless 1 <= b <= a/2.
IntPoly qanalog(int a, int b);

/// Drop the process-wide qbinom cache (test hygiene for memory checks).
void clear_qbinom_cache();

}  // namespace ferrers
