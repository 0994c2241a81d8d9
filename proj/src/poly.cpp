#include "ferrers/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace ferrers {

namespace {
const Int kZero = 0;
}

IntPoly IntPoly::monomial(Int c, int degree) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    if (c == 0) return IntPoly{};
    std::vector<Int> v(static_cast<size_t>(degree) + 1);
    v.back() = std::move(c);
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

Int IntPoly::value_at_one() const {
    Int s = 0;
    for (const Int& c : coeffs_) s += c;
    return s;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    r.add_shifted(b, 0);
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly{};
    std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly(std::move(out));
}

void IntPoly::add_shifted(const IntPoly& p, int k) {
    if (k < 0) throw std::invalid_argument("add_shifted: negative shift");
    if (p.is_zero()) return;
    size_t need = p.coeffs_.size() + static_cast<size_t>(k);
    if (coeffs_.size() < need) coeffs_.resize(need);
    for (size_t i = 0; i < p.coeffs_.size(); ++i)
        coeffs_[i + static_cast<size_t>(k)] += p.coeffs_[i];
    trim();
}

IntPoly shift(const IntPoly& p, int k) {
    if (k < 0) throw std::invalid_argument("shift: negative shift");
    if (p.is_zero()) return p;
    std::vector<Int> out(p.coeffs().size() + static_cast<size_t>(k));
    for (size_t i = 0; i < p.coeffs().size(); ++i) out[i + static_cast<size_t>(k)] = p.coeffs()[i];
    return IntPoly(std::move(out));
}

std::string IntPoly::coeff_list() const {
    std::ostringstream os;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ',';
        os << coeffs_[i];
    }
    if (coeffs_.empty()) os << '0';
    return os.str();
}

std::vector<std::string> IntPoly::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const Int& c : coeffs_) out.push_back(c.str());
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.coeff_list(); }

}  // namespace ferrers
