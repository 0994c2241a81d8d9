#include "ferrers/bivar.hpp"

#include <stdexcept>

namespace ferrers {

BivarSeries::BivarSeries(int qmax, int tmax) : qmax_(qmax), tmax_(tmax) {
    if (qmax < 0 || tmax < 0) throw std::invalid_argument("BivarSeries: negative bound");
    rows_.assign(static_cast<size_t>(qmax + 1) * static_cast<size_t>(tmax + 1), Int(0));
}

size_t BivarSeries::idx(int i, int j) const {
    if (i < 0 || i > qmax_ || j < 0 || j > tmax_)
        throw std::out_of_range("BivarSeries: index outside truncation");
    return static_cast<size_t>(i) * static_cast<size_t>(tmax_ + 1) + static_cast<size_t>(j);
}

BivarSeries bivar_expand(const RationalSpec& spec, int qmax, int tmax) {
    BivarSeries total(qmax, tmax);
    for (const RationalTerm& term : spec.terms) {
        BivarSeries s(qmax, tmax);
        for (const BivarMonomial& m : term.numerator) {
            if (m.q_exp < 0 || m.t_exp < 0)
                throw std::invalid_argument("bivar_expand: negative numerator exponent");
            if (m.q_exp <= qmax && m.t_exp <= tmax) s.at(m.q_exp, m.t_exp) += m.coef;
        }
        for (const auto& [alpha, beta] : term.denominator) {
            if (alpha < 0 || beta < 0 || alpha + beta < 1)
                throw std::invalid_argument("bivar_expand: malformed factor 1 - q^a t^b");
            // Divide by (1 - q^alpha t^beta): s[i][j] += s[i-alpha][j-beta],
            // sweeping in increasing (i, j) so the accumulation telescopes
            // into the full geometric series.
            for (int i = 0; i <= qmax; ++i)
                for (int j = 0; j <= tmax; ++j)
                    if (i >= alpha && j >= beta) s.at(i, j) += s.at(i - alpha, j - beta);
        }
        for (int i = 0; i <= qmax; ++i)
            for (int j = 0; j <= tmax; ++j) total.at(i, j) += s.at(i, j);
    }
    return total;
}

}  // namespace ferrers
