#include "ferrers/diagnostics.hpp"

#include <algorithm>
#include <stdexcept>

namespace ferrers {

SeqDiagnostics diagnose(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("diagnose: zero polynomial");

    const std::vector<Int>& a = p.coeffs();
    const int n = static_cast<int>(a.size());  // n = degree + 1
    SeqDiagnostics d;

    // Plateau blocks: (value, first index, last index).
    struct Block {
        const Int* value;
        int lo, hi;
    };
    std::vector<Block> blocks;
    for (int i = 0; i < n; ++i) {
        if (!blocks.empty() && *blocks.back().value == a[i]) {
            blocks.back().hi = i;
        } else {
            blocks.push_back({&a[static_cast<size_t>(i)], i, i});
        }
    }
    for (size_t b = 0; b < blocks.size(); ++b) {
        const bool left_ok = (b == 0) || *blocks[b - 1].value < *blocks[b].value;
        const bool right_ok = (b + 1 == blocks.size()) || *blocks[b + 1].value < *blocks[b].value;
        if (left_ok && right_ok) {
            ++d.peak_count;
            for (int i = blocks[b].lo; i <= blocks[b].hi; ++i) d.peak_degrees.push_back(i);
        }
    }

    // first_dip: a_{i-1} > a_i and some later a_j > a_i. Suffix maxima give
    // the "later rise" part in one pass.
    std::vector<const Int*> suffix_max(static_cast<size_t>(n));
    suffix_max[static_cast<size_t>(n - 1)] = &a[static_cast<size_t>(n - 1)];
    for (int i = n - 2; i >= 0; --i) {
        const Int* later = suffix_max[static_cast<size_t>(i + 1)];
        suffix_max[static_cast<size_t>(i)] = (*later > a[static_cast<size_t>(i)]) ? later : &a[static_cast<size_t>(i)];
    }
    for (int i = 1; i < n; ++i) {
        if (a[static_cast<size_t>(i - 1)] > a[static_cast<size_t>(i)] && i + 1 < n &&
            *suffix_max[static_cast<size_t>(i + 1)] > a[static_cast<size_t>(i)]) {
            d.first_dip = i;
            break;
        }
    }

    d.unimodal = !d.first_dip.has_value();

    d.symmetric = true;
    for (int i = 0; i <= (n - 1) / 2; ++i)
        if (a[static_cast<size_t>(i)] != a[static_cast<size_t>(n - 1 - i)]) {
            d.symmetric = false;
            break;
        }

    d.flawless = true;
    for (int i = 0; 2 * i <= n - 1; ++i)
        if (a[static_cast<size_t>(i)] > a[static_cast<size_t>(n - 1 - i)]) {
            d.flawless = false;
            break;
        }

    // Gap-free support first, then the three-term inequality.
    int lo = 0;
    while (a[static_cast<size_t>(lo)] == 0) ++lo;  // trailing coeff is nonzero
    d.log_concave = true;
    for (int i = lo; i < n; ++i)
        if (a[static_cast<size_t>(i)] == 0) {
            d.log_concave = false;
            break;
        }
    if (d.log_concave)
        for (int i = 1; i + 1 < n; ++i)
            if (a[static_cast<size_t>(i)] * a[static_cast<size_t>(i)] <
                a[static_cast<size_t>(i - 1)] * a[static_cast<size_t>(i + 1)]) {
                d.log_concave = false;
                break;
            }

    return d;
}

}  // namespace ferrers
