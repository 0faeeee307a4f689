#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coneortho/multiindex.hpp"
#include "coneortho/mvpoly.hpp"
#include "coneortho/rational.hpp"
#include "coneortho/weight.hpp"

namespace coneortho {

/// Formal power series in (r, b_1..b_d) truncated at total order N, with
/// exact MVPoly coefficients in (x_1..x_d, t).
class TruncSeries {
public:
    struct Key {
        int r = 0;
        MultiIndex b;
        friend bool operator==(const Key&, const Key&) = default;
        friend bool operator<(const Key& a, const Key& b_) {
            int ta = a.r + a.b.total(), tb = b_.r + b_.b.total();
            if (ta != tb) return ta < tb;
            if (a.r != b_.r) return a.r < b_.r;
            return a.b < b_.b;
        }
    };

    TruncSeries(int order, int d) : order_(order), d_(d) {
        if (order < 0 || d < 1) throw std::invalid_argument("TruncSeries: bad shape");
    }

    static TruncSeries zero(int order, int d) { return TruncSeries(order, d); }
    static TruncSeries constant(int order, int d, const MVPoly& p) {
        TruncSeries s(order, d);
        s.add(0, MultiIndex(d), p);
        return s;
    }
    static TruncSeries one(int order, int d) {
        return constant(order, d, MVPoly::constant(d, Rational(1)));
    }
    static TruncSeries var_r(int order, int d) {
        TruncSeries s(order, d);
        s.add(1, MultiIndex(d), MVPoly::constant(d, Rational(1)));
        return s;
    }
    static TruncSeries var_b(int order, int d, int i) {
        TruncSeries s(order, d);
        MultiIndex e(d);
        e[i] = 1;
        s.add(0, e, MVPoly::constant(d, Rational(1)));
        return s;
    }

    int order() const { return order_; }
    int dim() const { return d_; }
    const std::map<Key, MVPoly>& coeffs() const { return coeffs_; }

    MVPoly coeff(int r, const MultiIndex& b) const {
        auto it = coeffs_.find(Key{r, b});
        return it == coeffs_.end() ? MVPoly::zero(d_) : it->second;
    }

    void add(int r, const MultiIndex& b, const MVPoly& p) {
        if (r < 0 || b.dim() != d_ || p.dim() != d_)
            throw std::invalid_argument("TruncSeries: bad term");
        if (r + b.total() > order_ || p.is_zero()) return;
        Key key{r, b};
        auto [it, fresh] = coeffs_.emplace(key, p);
        if (!fresh) {
            it->second += p;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    TruncSeries& operator+=(const TruncSeries& o) {
        check(o);
        for (const auto& [k, p] : o.coeffs_) add(k.r, k.b, p);
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        check(o);
        for (const auto& [k, p] : o.coeffs_) add(k.r, k.b, -p);
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check(b);
        TruncSeries r(a.order_, a.d_);
        for (const auto& [ka, pa] : a.coeffs_)
            for (const auto& [kb, pb] : b.coeffs_) {
                int rr = ka.r + kb.r;
                MultiIndex bb = ka.b + kb.b;
                if (rr + bb.total() > a.order_) continue;
                r.add(rr, bb, pa * pb);
            }
        return r;
    }

    TruncSeries scaled(const Rational& c) const {
        TruncSeries r(order_, d_);
        for (const auto& [k, p] : coeffs_) r.add(k.r, k.b, p.scaled(c));
        return r;
    }
    TruncSeries scaled_poly(const MVPoly& q) const {
        TruncSeries r(order_, d_);
        for (const auto& [k, p] : coeffs_) r.add(k.r, k.b, p * q);
        return r;
    }

    bool has_zero_constant_term() const {
        return coeffs_.find(Key{0, MultiIndex(d_)}) == coeffs_.end();
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.order_ == b.order_ && a.d_ == b.d_ && a.coeffs_ == b.coeffs_;
    }

private:
    void check(const TruncSeries& o) const {
        if (order_ != o.order_ || d_ != o.d_)
            throw std::invalid_argument("TruncSeries: shape mismatch");
    }

    int order_;
    int d_;
    std::map<Key, MVPoly> coeffs_;
};

/// exp(u) for u with zero constant term.
TruncSeries series_exp(const TruncSeries& u);

/// (1 + u)^sigma for u with zero constant term and rational sigma.
TruncSeries series_binomial(const TruncSeries& u, const Rational& sigma);

/// base^sigma for a base whose constant coefficient is a nonzero rational
/// constant c with c^sigma itself rational; throws otherwise.
TruncSeries series_pow(const TruncSeries& base, const Rational& sigma);

enum class GenFuncTarget { UL, UJ, SL, SJ, ball_U, ball_V };

std::string genfunc_target_name(GenFuncTarget t);
std::optional<GenFuncTarget> genfunc_target_from_name(const std::string& s);

struct GenFuncReport {
    GenFuncTarget target;
    int d = 0;
    int order = 0;
    bool pass = false;
    std::vector<TruncSeries::Key> mismatches;
    std::vector<std::string> notes;  // printed-convention resolutions applied
};

/// Expands the closed-form kernel to total order N, assembles the matching
/// weighted sum of module-built polynomials, and compares coefficientwise.
/// Cone targets use the full WeightSpec; ball targets only its mu.
GenFuncReport verify_genfunc(GenFuncTarget target, const WeightSpec& w, int order);

/// Ball targets with just mu.
GenFuncReport verify_genfunc_ball(GenFuncTarget target, int d, const Rational& mu, int order);

}  // namespace coneortho
