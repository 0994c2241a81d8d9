#include "ferrers/genfun.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace ferrers {

namespace {

// Shared row engine for both rank-generating functions. strict_gap selects
// the shifted reading (next part < v) over the straight one (next part <= v).
IntPoly rgf_rows(const std::vector<int>& parts, bool strict_gap) {
    const int b = static_cast<int>(parts.size());
    // Row b+1: the constant 1 regardless of cap.
    std::vector<IntPoly> next{IntPoly::one()};
    for (int i = b - 1; i >= 0; --i) {
        const int cap_max = parts[static_cast<size_t>(i)];
        const int next_max = static_cast<int>(next.size()) - 1;
        std::vector<IntPoly> cur(static_cast<size_t>(cap_max) + 1);
        cur[0] = IntPoly::one();
        for (int cap = 1; cap <= cap_max; ++cap) {
            const int allowed = strict_gap ? cap - 1 : cap;
            cur[static_cast<size_t>(cap)] = cur[static_cast<size_t>(cap) - 1];
            cur[static_cast<size_t>(cap)].add_shifted(next[static_cast<size_t>(std::min(next_max, allowed))], cap);
        }
        next = std::move(cur);
    }
    return next.back();
}

void enumerate_rec(const std::vector<int>& parts, size_t row, int cap, int size, bool strict_gap,
                   std::vector<Int>& counts) {
    ++counts[static_cast<size_t>(size)];
    if (row == parts.size()) return;
    const int vmax = std::min(parts[row], cap);
    for (int v = 1; v <= vmax; ++v)
        enumerate_rec(parts, row + 1, strict_gap ? v - 1 : v, size + v, strict_gap, counts);
}

IntPoly oracle_rows(const std::vector<int>& parts, bool strict_gap, int budget) {
    int total = 0;
    for (int p : parts) total += p;
    if (total > budget)
        throw std::invalid_argument("oracle_rgf: shape size " + std::to_string(total) +
                                    " exceeds budget " + std::to_string(budget));
    std::vector<Int> counts(static_cast<size_t>(total) + 1);
    enumerate_rec(parts, 0, parts.empty() ? 0 : parts[0], 0, strict_gap, counts);
    return IntPoly(std::move(counts));
}

std::mutex qbinom_mutex;
std::map<std::pair<int, int>, IntPoly> qbinom_cache;

}  // namespace

IntPoly rgf_shifted(const StrictShape& lambda) { return rgf_rows(lambda.parts(), true); }

IntPoly rgf_straight(const StraightShape& lambda) { return rgf_rows(lambda.parts(), false); }

IntPoly oracle_rgf(const StrictShape& lambda, int budget) {
    return oracle_rows(lambda.parts(), true, budget);
}

IntPoly oracle_rgf(const StraightShape& lambda, int budget) {
    return oracle_rows(lambda.parts(), false, budget);
}

IntPoly qbinom(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("qbinom: need 0 <= k <= n");
    std::lock_guard<std::mutex> lock(qbinom_mutex);
    if (auto it = qbinom_cache.find({n, k}); it != qbinom_cache.end()) return it->second;

    // Fill the dependency cone of (n, k) row by row; every cell lands in the
    // cache so related calls (growing n, fixed k) are incremental.
    for (int m = 0; m <= n; ++m) {
        const int jlo = std::max(0, k - (n - m));
        const int jhi = std::min(m, k);
        for (int j = jlo; j <= jhi; ++j) {
            if (qbinom_cache.count({m, j})) continue;
            IntPoly cell;
            if (j == 0 || j == m) {
                cell = IntPoly::one();
            } else {
                cell = qbinom_cache.at({m - 1, j - 1});
                cell.add_shifted(qbinom_cache.at({m - 1, j}), j);
            }
            qbinom_cache.emplace(std::make_pair(m, j), std::move(cell));
        }
    }
    return qbinom_cache.at({n, k});
}

IntPoly qanalog(int a, int b) {
    if (b < 1 || 2 * b > a) throw std::invalid_argument("qanalog: need 1 <= b <= a/2");
    return rgf_shifted(std::get<StrictShape>(make_family(ShapeFamily::qanalog(a, b))));
}

void clear_qbinom_cache() {
    std::lock_guard<std::mutex> lock(qbinom_mutex);
    qbinom_cache.clear();
}

}  // namespace ferrers
