#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "coneortho/multiindex.hpp"
#include "coneortho/rational.hpp"

namespace coneortho {

/// One monomial x^a t^e. Ordered graded-lexicographically on (t, x):
/// first by total degree, then by t-exponent, then by x lexicographically.
/// Map order doubles as the canonical serialization order.
struct Term {
    MultiIndex x;
    int t = 0;

    int degree() const { return x.total() + t; }

    friend bool operator==(const Term&, const Term&) = default;
    friend bool operator<(const Term& a, const Term& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (a.t != b.t) return a.t < b.t;
        return a.x < b.x;
    }
};

/// Sparse exact polynomial in (x_1..x_d, t) over Rational. Zero
/// coefficients are never stored. Ball polynomials use the same type with
/// every t-exponent zero.
class MVPoly {
public:
    explicit MVPoly(int dim) : dim_(dim) {
        if (dim < 1) throw std::invalid_argument("MVPoly: dimension must be >= 1");
    }

    static MVPoly zero(int dim) { return MVPoly(dim); }
    static MVPoly constant(int dim, Rational c) {
        MVPoly p(dim);
        p.add_term(MultiIndex(dim), 0, std::move(c));
        return p;
    }
    static MVPoly monomial(int dim, const MultiIndex& xexp, int texp, Rational c = Rational(1)) {
        MVPoly p(dim);
        p.add_term(xexp, texp, std::move(c));
        return p;
    }
    static MVPoly var_x(int dim, int i) {
        MultiIndex e(dim);
        e[i] = 1;
        return monomial(dim, e, 0);
    }
    static MVPoly var_t(int dim) { return monomial(dim, MultiIndex(dim), 1); }

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Term, Rational>& terms() const { return terms_; }

    /// max over terms of |x-exp| + t-exp; -1 for the zero polynomial
    int degree() const {
        int deg = -1;
        for (const auto& [m, c] : terms_) deg = std::max(deg, m.degree());
        return deg;
    }

    Rational coeff(const MultiIndex& xexp, int texp) const {
        auto it = terms_.find(Term{xexp, texp});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const MultiIndex& xexp, int texp, Rational c) {
        if (xexp.dim() != dim_) throw std::invalid_argument("MVPoly: exponent dim mismatch");
        if (texp < 0) throw std::invalid_argument("MVPoly: negative t exponent");
        if (c.is_zero()) return;
        Term key{xexp, texp};
        auto [it, fresh] = terms_.emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MVPoly& operator+=(const MVPoly& o) {
        check_dim(o);
        for (const auto& [m, c] : o.terms_) add_term(m.x, m.t, c);
        return *this;
    }
    MVPoly& operator-=(const MVPoly& o) {
        check_dim(o);
        for (const auto& [m, c] : o.terms_) add_term(m.x, m.t, -c);
        return *this;
    }
    friend MVPoly operator+(MVPoly a, const MVPoly& b) { return a += b; }
    friend MVPoly operator-(MVPoly a, const MVPoly& b) { return a -= b; }

    friend MVPoly operator*(const MVPoly& a, const MVPoly& b) {
        a.check_dim(b);
        MVPoly r(a.dim_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(ma.x + mb.x, ma.t + mb.t, ca * cb);
        return r;
    }

    MVPoly scaled(const Rational& c) const {
        MVPoly r(dim_);
        if (c.is_zero()) return r;
        for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
        return r;
    }

    MVPoly operator-() const { return scaled(Rational(-1)); }

    friend bool operator==(const MVPoly& a, const MVPoly& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

    MVPoly deriv_x(int i) const {
        MVPoly r(dim_);
        for (const auto& [m, c] : terms_) {
            if (m.x[i] == 0) continue;
            MultiIndex e = m.x;
            e[i] -= 1;
            r.add_term(e, m.t, c * Rational(m.x[i]));
        }
        return r;
    }

    MVPoly deriv_t() const {
        MVPoly r(dim_);
        for (const auto& [m, c] : terms_) {
            if (m.t == 0) continue;
            r.add_term(m.x, m.t - 1, c * Rational(m.t));
        }
        return r;
    }

    bool has_t_dependence() const {
        for (const auto& [m, c] : terms_)
            if (m.t != 0) return true;
        return false;
    }

    /// Human-readable form, mostly for CLI/debug output.
    std::string to_string() const;

private:
    void check_dim(const MVPoly& o) const {
        if (dim_ != o.dim_) throw std::invalid_argument("MVPoly: dimension mismatch");
    }

    int dim_;
    std::map<Term, Rational> terms_;
};

/// t^m p(x/t) for p in the y-variables with no t-dependence and deg <= m:
/// each term y^a becomes x^a t^{m-|a|}.
MVPoly homogenize_sub(const MVPoly& p, int m);

}  // namespace coneortho
