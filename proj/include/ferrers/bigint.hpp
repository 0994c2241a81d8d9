#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ferrers {

/// Exact arbitrary-precision integer used for every coefficient and count.
using Int = boost::multiprecision::cpp_int;

inline std::string dec_string(const Int& v) { return v.str(); }

inline Int int_from_string(const std::string& s) { return Int(s); }

/// Exact binomial coefficient C(n, k); 0 when k < 0 or k > n.
inline Int binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is C(n-k+i, i) after this step
    }
    return r;
}

}  // namespace ferrers
