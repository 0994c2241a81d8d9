#pragma once

#include <optional>
#include <vector>

#include "ferrers/poly.hpp"

namespace ferrers {

/// Verdict record for one coefficient sequence.
///
/// Peaks use the plateau-collapsed definition: maximal runs of equal adjacent
/// coefficients over [0, degree] are merged into blocks, and a block is a peak
/// when its value strictly exceeds both neighbouring blocks (boundary blocks
/// compare against their single neighbour). A unimodal sequence has exactly
/// one peak block; every nonunimodal sequence has at least two.
struct SeqDiagnostics {
    bool unimodal = false;
    int peak_count = 0;
    /// All degrees belonging to peak blocks, in increasing order.
    std::vector<int> peak_degrees;
    bool symmetric = false;   // a_i == a_{N-i} for all i
    bool flawless = false;    // a_i <= a_{N-i} for all i <= N/2
    bool log_concave = false; // a_i^2 >= a_{i-1} a_{i+1}, gap-free support
    /// First index i with a_{i-1} > a_i < a_j for some j > i; present iff
    /// the sequence is not unimodal.
    std::optional<int> first_dip;
};

/// Full diagnostic sweep over the coefficients of p.
/// Throws std::domain_error for the zero polynomial (no rank-generating
/// function is zero, so there is nothing meaningful to report).
SeqDiagnostics diagnose(const IntPoly& p);

}  // namespace ferrers
