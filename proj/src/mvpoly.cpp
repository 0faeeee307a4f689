#include "coneortho/mvpoly.hpp"

#include <sstream>

namespace coneortho {

MVPoly homogenize_sub(const MVPoly& p, int m) {
    if (p.has_t_dependence())
        throw std::invalid_argument("homogenize_sub: input must not involve t");
    if (p.degree() > m)
        throw std::invalid_argument("homogenize_sub: degree exceeds homogenization order");
    MVPoly r(p.dim());
    for (const auto& [mono, c] : p.terms()) r.add_term(mono.x, m - mono.x.total(), c);
    return r;
}

std::string MVPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest degree first reads more naturally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = (a == Rational(1)) && m.degree() > 0;
        if (!unit) os << a.to_string();
        bool need_sep = !unit;
        for (int i = 0; i < dim_; ++i) {
            if (m.x[i] == 0) continue;
            if (need_sep) os << "*";
            os << "x" << (i + 1);
            if (m.x[i] > 1) os << "^" << m.x[i];
            need_sep = true;
        }
        if (m.t > 0) {
            if (need_sep) os << "*";
            os << "t";
            if (m.t > 1) os << "^" << m.t;
        }
    }
    return os.str();
}

}  // namespace coneortho
