#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "ferrers/bigint.hpp"

namespace ferrers {

/// Dense polynomial in one variable q with exact integer coefficients.
///
/// coeffs()[i] is the coefficient of q^i. Canonical form: no trailing zero
/// coefficients; the zero polynomial is the empty coefficient vector.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPoly zero() { return IntPoly{}; }
    static IntPoly one() { return monomial(1, 0); }
    static IntPoly monomial(Int c, int degree);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    /// Coefficient of q^i (zero outside the stored range).
    const Int& coeff(int i) const;

    /// Exact value at q = 1, i.e. the coefficient sum.
    Int value_at_one() const;

    bool operator==(const IntPoly&) const = default;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);

    /// this += q^k * p. The workhorse of the DP recursions.
    void add_shifted(const IntPoly& p, int k);

    /// Comma-separated coefficient list, constant term first ("1,1,2").
    std::string coeff_list() const;

    /// Coefficients as decimal strings (JSON-safe for arbitrary width).
    std::vector<std::string> coeff_strings() const;

private:
    void trim();
    std::vector<Int> coeffs_;
};

IntPoly shift(const IntPoly& p, int k);

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

}  // namespace ferrers
