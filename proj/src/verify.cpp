#include "coneortho/verify.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>

#include "coneortho/ball.hpp"
#include "coneortho/cone.hpp"
#include "coneortho/pairing.hpp"
#include "coneortho/parallel.hpp"
#include "coneortho/pochhammer.hpp"
#include "coneortho/rodrigues.hpp"
#include "coneortho/series.hpp"

namespace coneortho {

namespace {

/// Runs one check per labelled tuple, collecting failures deterministically.
class Sweep {
public:
    explicit Sweep(std::string suite) { result_.suite = std::move(suite); }

    void add(std::string label, std::function<std::string()> item) {
        labels_.push_back(std::move(label));
        items_.push_back(std::move(item));
    }

    VerifyResult run(unsigned jobs) {
        std::vector<std::string> out(items_.size());
        parallel_for(items_.size(), jobs, [&](size_t i) {
            try {
                out[i] = items_[i]();
            } catch (const std::exception& e) {
                out[i] = e.what();
            }
        });
        result_.checked = items_.size();
        result_.tuples = std::move(labels_);
        for (size_t i = 0; i < out.size(); ++i)
            if (!out[i].empty())
                result_.failures.push_back(result_.tuples[i] + ": " + out[i]);
        return std::move(result_);
    }

    void note(std::string s) { result_.notes.push_back(std::move(s)); }

private:
    VerifyResult result_;
    std::vector<std::string> labels_;
    std::vector<std::function<std::string()>> items_;
};

std::string show(const MultiIndex& k) {
    std::string s = "(";
    for (int i = 0; i < k.dim(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
    return s + ")";
}

std::string show(const WeightSpec& w) {
    std::string s = family_name(w.family) + " d=" + std::to_string(w.d) +
                    " mu=" + w.mu.to_string() + " beta=" + w.beta.to_string();
    if (w.family == Family::jacobi) s += " gamma=" + w.gamma.to_string();
    return s;
}

std::string kn_label(const WeightSpec& w, const MultiIndex& k, int n) {
    return "k=" + show(k) + " n=" + std::to_string(n) + " [" + show(w) + "]";
}

const std::vector<Rational>& mu_grid() {
    static const std::vector<Rational> g{Rational(1, 2), Rational(1)};
    return g;
}
const std::vector<Rational>& beta_grid() {
    static const std::vector<Rational> g{Rational(0), Rational(1)};
    return g;
}
const std::vector<Rational>& gamma_grid() {
    static const std::vector<Rational> g{Rational(0), Rational(1, 2)};
    return g;
}

/// pairing of p against every monomial of total degree < n; returns the
/// first nonzero value found, rendered for a failure message
std::string check_lower_orthogonality(const Pairing& pairing, const MVPoly& p, int n) {
    int d = pairing.weight().d;
    for (int m = 0; m < n; ++m)
        for (int s = 0; s <= m; ++s)
            for (const auto& a : indices_of_degree(d, m - s)) {
                Rational v = pairing(p, MVPoly::monomial(d, a, s));
                if (!v.is_zero())
                    return "pairs to " + v.to_string() + " against x^" + show(a) + " t^" +
                           std::to_string(s);
            }
    return {};
}

}  // namespace

std::vector<WeightSpec> laguerre_grid(int d) {
    std::vector<WeightSpec> out;
    for (const auto& mu : mu_grid())
        for (const auto& beta : beta_grid()) out.push_back(WeightSpec::laguerre(d, mu, beta));
    return out;
}

std::vector<WeightSpec> jacobi_grid(int d) {
    std::vector<WeightSpec> out;
    for (const auto& mu : mu_grid())
        for (const auto& beta : beta_grid())
            for (const auto& gamma : gamma_grid())
                out.push_back(WeightSpec::jacobi(d, mu, beta, gamma));
    return out;
}

std::vector<WeightSpec> weight_grid(int d, std::optional<Family> only) {
    std::vector<WeightSpec> out;
    if (only != Family::jacobi) out = laguerre_grid(d);
    if (only != Family::laguerre) {
        auto j = jacobi_grid(d);
        out.insert(out.end(), j.begin(), j.end());
    }
    return out;
}

VerifyResult verify_bc_delta(const std::vector<int>& dims, int max_k,
                             const std::vector<Rational>& mus, unsigned jobs) {
    Sweep sweep("bc-delta");
    for (int d : dims)
        for (const auto& mu : mus)
            for (int total = 0; total <= max_k; ++total)
                for (const auto& k : indices_of_degree(d, total))
                    sweep.add("k=" + show(k) + " mu=" + mu.to_string(),
                              [=]() -> std::string {
                                  for (const auto& j : half_indices(k)) {
                                      Rational s(0);
                                      for (const auto& i : indices_leq(j))
                                          if (twice_leq(i, k))
                                              s += ball_b_coeff(k, i, mu) *
                                                   ball_c_coeff(sub_twice(k, i), sub(j, i),
                                                                mu);
                                      Rational expect(j.total() == 0 ? 1 : 0);
                                      if (s != expect)
                                          return "sum at j=" + show(j) + " is " +
                                                 s.to_string() + ", expected " +
                                                 expect.to_string();
                                  }
                                  return {};
                              });
    return sweep.run(jobs);
}

VerifyResult verify_ball_ortho(const std::vector<int>& dims, int max_k, unsigned jobs) {
    Sweep sweep("ball-ortho");
    for (int d : dims)
        for (const auto& mu : mu_grid())
            for (int total = 0; total <= max_k; ++total)
                for (const auto& k : indices_of_degree(d, total))
                    sweep.add("k=" + show(k) + " d=" + std::to_string(d) +
                                  " mu=" + mu.to_string(),
                              [=]() -> std::string {
                                  MVPoly v = ball_V(k, mu);
                                  MVPoly u = ball_U(k, mu);
                                  for (int m = 0; m < total; ++m)
                                      for (const auto& a : indices_of_degree(d, m)) {
                                          MVPoly mono = MVPoly::monomial(d, a, 0);
                                          if (!ball_pairing(v, mono, mu).is_zero())
                                              return "V pairs nonzero against y^" + show(a);
                                          if (!ball_pairing(u, mono, mu).is_zero())
                                              return "U pairs nonzero against y^" + show(a);
                                      }
                                  Rational diag = ball_pairing(u, v, mu);
                                  Rational expect =
                                      pochhammer(mu * Rational(2), total) /
                                      (pow2(total) *
                                       pochhammer(mu + Rational(d + 1, 2), total));
                                  if (diag != expect)
                                      return "U/V diagonal is " + diag.to_string() +
                                             ", expected " + expect.to_string();
                                  for (const auto& jj : indices_of_degree(d, total))
                                      if (!(jj == k) &&
                                          !ball_pairing(u, ball_V(jj, mu), mu).is_zero())
                                          return "U/V off-diagonal nonzero at j=" + show(jj);
                                  return {};
                              });
    return sweep.run(jobs);
}

VerifyResult verify_cone_ortho(const std::vector<int>& dims, int max_n, unsigned jobs,
                               std::optional<Family> only) {
    Sweep sweep("cone-ortho");
    for (int d : dims)
        for (const auto& w : weight_grid(d, only)) {
            auto pairing = std::make_shared<Pairing>(w);
            for (int n = 0; n <= max_n; ++n)
                for (int kk = 0; kk <= n; ++kk)
                    for (const auto& k : indices_of_degree(d, kk))
                        sweep.add(kn_label(w, k, n), [=]() -> std::string {
                            // construction itself asserts the unique top term
                            ConeBasisElement v = cone_V(k, n, w);
                            return check_lower_orthogonality(*pairing, v.poly, n);
                        });
        }
    return sweep.run(jobs);
}

VerifyResult verify_construction_equiv(const std::vector<int>& dims, int max_k, int max_n,
                                       unsigned jobs, std::optional<Family> only) {
    Sweep sweep("construction-equiv");
    for (int d : dims)
        for (const auto& w : weight_grid(d, only))
            for (int kk = 0; kk <= max_k; ++kk)
                for (const auto& k : indices_of_degree(d, kk))
                    for (int n = kk; n <= max_n; ++n)
                        sweep.add(kn_label(w, k, n), [=]() -> std::string {
                            if (!(cone_V_generic(k, n, w).poly ==
                                  cone_V_via_btable(k, n, w).poly))
                                return "the two explicit constructions differ";
                            return {};
                        });
    return sweep.run(jobs);
}

VerifyResult verify_norms(const std::vector<int>& dims, int max_n, unsigned jobs,
                          std::optional<Family> only) {
    Sweep sweep("norms");
    for (int d : dims)
        for (const auto& w : weight_grid(d, only)) {
            auto pairing = std::make_shared<Pairing>(w);
            for (int n = 0; n <= max_n; ++n)
                for (int kk = 0; kk <= n; ++kk)
                    for (const auto& k : indices_of_degree(d, kk))
                        sweep.add(kn_label(w, k, n), [=]() -> std::string {
                            ConeBasisElement v = cone_V(k, n, w);
                            Rational closed = cone_V_norm_sq(k, n, w);
                            Rational exact = (*pairing)(v.poly, v.poly);
                            if (exact != closed)
                                return "closed form " + closed.to_string() +
                                       " but exact pairing " + exact.to_string();
                            if (d == 1 && !w.mu.is_zero()) {
                                if (cone_V_norm_sq_generic(k, n, w) != closed)
                                    return "generic-path norm disagrees";
                                if (!(cone_V_generic(k, n, w).poly == v.poly))
                                    return "generic-path polynomial disagrees";
                            }
                            return {};
                        });
        }
    return sweep.run(jobs);
}

VerifyResult verify_en_tables(int max_n, unsigned jobs, std::optional<Family> only) {
    Sweep sweep("en-tables");
    for (const auto& w : weight_grid(1, only)) {
        int kmax = w.family == Family::laguerre ? 3 : 2;
        for (int n = 1; n <= max_n; ++n)
            for (int k = 0; k <= std::min(kmax, n); ++k)
                sweep.add("n=" + std::to_string(n) + " k=" + std::to_string(k) + " [" +
                              show(w) + "]",
                          [=]() -> std::string {
                              Rational display = en_closed_form(w, n, k);
                              Rational norm = cone_V_norm_sq(MultiIndex{k}, n, w);
                              if (display != norm)
                                  return "display " + display.to_string() +
                                         " but norm " + norm.to_string();
                              return {};
                          });
    }
    return sweep.run(jobs);
}

VerifyResult verify_least_squares(int max_n, unsigned jobs, std::optional<Family> only) {
    Sweep sweep("least-squares");
    for (const auto& w : weight_grid(1, only))
        for (int n = 1; n <= max_n; ++n)
            for (int k = 0; k <= n; ++k)
                sweep.add("n=" + std::to_string(n) + " k=" + std::to_string(k) + " [" +
                              show(w) + "]",
                          [=]() -> std::string {
                              MultiIndex a{k};
                              MVPoly target = MVPoly::monomial(1, a, n - k);
                              Rational mn = solve_normal_equations(target, n - 1, w);
                              Rational closed = cone_V_norm_sq(a, n, w);
                              if (mn != closed)
                                  return "normal equations give " + mn.to_string() +
                                         " but norm is " + closed.to_string();
                              return {};
                          });
    return sweep.run(jobs);
}

VerifyResult verify_rodrigues_dual(const std::vector<int>& dims, int max_n, unsigned jobs,
                                   std::optional<Family> only) {
    Sweep sweep("rodrigues-dual");
    for (int d : dims)
        for (const auto& w : weight_grid(d, only)) {
            auto pairing = std::make_shared<Pairing>(w);
            for (int n = 0; n <= max_n; ++n)
                for (int kk = 0; kk <= n; ++kk)
                    for (const auto& k : indices_of_degree(d, kk))
                        sweep.add(kn_label(w, k, n), [=]() -> std::string {
                            ConeBasisElement closed = cone_U(k, n, w, UMethod::closed);
                            ConeBasisElement rod = cone_U(k, n, w, UMethod::rodrigues);
                            if (!(closed.poly == rod.poly))
                                return "closed and derivative constructions differ";
                            return check_lower_orthogonality(*pairing, closed.poly, n);
                        });
        }
    return sweep.run(jobs);
}

VerifyResult verify_biortho(const std::vector<int>& dims, int max_n, unsigned jobs,
                            std::optional<Family> only) {
    Sweep sweep("biortho");
    std::mutex witness_mutex;
    auto witness = std::make_shared<std::vector<std::string>>();
    for (int d : dims)
        for (const auto& w : weight_grid(d, only)) {
            auto pairing = std::make_shared<Pairing>(w);
            for (int n = 0; n <= max_n; ++n)
                sweep.add("n=" + std::to_string(n) + " [" + show(w) + "]",
                          [=, &witness_mutex]() -> std::string {
                              std::string sample;
                              for (const auto& k : indices_up_to_degree(d, n))
                                  for (const auto& j : indices_up_to_degree(d, n)) {
                                      // throws on forced-zero or diagonal violations
                                      BiorthoEntry e = biortho_pair(k, j, n, *pairing);
                                      if (e.cls == BiorthoClass::unconstrained &&
                                          !e.value.is_zero() && sample.empty())
                                          sample = "<U_" + show(k) + "," +
                                                   std::to_string(n) + ", V_" + show(j) +
                                                   "," + std::to_string(n) + "> = " +
                                                   e.value.to_string() + " [" + show(w) +
                                                   "]";
                                  }
                              if (!sample.empty()) {
                                  std::lock_guard lock(witness_mutex);
                                  witness->push_back(sample);
                              }
                              return {};
                          });
        }
    VerifyResult res = sweep.run(jobs);
    if (witness->empty())
        res.failures.push_back("no unconstrained nonzero cell found");
    else
        res.notes.push_back("unconstrained nonzero cell: " + witness->front());
    return res;
}

VerifyResult verify_y_biortho(int max_n, unsigned jobs, std::optional<Family> only) {
    Sweep sweep("y-biortho");
    for (const auto& w : weight_grid(1, only))
        for (int n = 0; n <= max_n; ++n)
            sweep.add("n=" + std::to_string(n) + " [" + show(w) + "]",
                      [=]() -> std::string {
                          Pairing pairing(w);
                          auto ys = y_basis(n, w);
                          for (int kidx = 0; kidx <= n; ++kidx)
                              for (int jidx = 0; jidx <= n; ++jidx) {
                                  Rational v =
                                      pairing(ys[static_cast<size_t>(kidx)].poly,
                                              cone_V(MultiIndex{jidx}, n, w).poly);
                                  Rational expect =
                                      kidx == jidx
                                          ? biortho_diagonal_value(MultiIndex{kidx}, n, w)
                                          : Rational(0);
                                  if (v != expect)
                                      return "cell (" + std::to_string(kidx) + "," +
                                             std::to_string(jidx) + ") is " +
                                             v.to_string() + ", expected " +
                                             expect.to_string();
                              }
                          return {};
                      });
    return sweep.run(jobs);
}

VerifyResult verify_s_from_v(const std::vector<int>& dims, int max_k, int max_n,
                             unsigned jobs, std::optional<Family> only) {
    Sweep sweep("s-from-v");
    for (int d : dims)
        for (const auto& w : weight_grid(d, only))
            for (int kk = 0; kk <= max_k; ++kk)
                for (const auto& k : indices_of_degree(d, kk))
                    for (int n = kk; n <= max_n; ++n)
                        sweep.add(kn_label(w, k, n), [=]() -> std::string {
                            if (!(cone_S_from_V(k, n, w).poly ==
                                  cone_S_monic_ball(k, n, w).poly))
                                return "b-weighted V sum does not reproduce S";
                            return {};
                        });
    return sweep.run(jobs);
}

VerifyResult verify_genfunc_suite(const std::vector<int>& dims, int order, unsigned jobs,
                                  std::optional<Family> only,
                                  std::optional<std::string> target) {
    Sweep sweep("genfunc");
    std::mutex notes_mutex;
    auto notes = std::make_shared<std::vector<std::string>>();
    auto record = [notes, &notes_mutex](const GenFuncReport& rep) {
        std::lock_guard lock(notes_mutex);
        for (const auto& n : rep.notes) {
            std::string tagged = genfunc_target_name(rep.target) + ": " + n;
            if (std::find(notes->begin(), notes->end(), tagged) == notes->end())
                notes->push_back(tagged);
        }
    };
    auto wanted = [&](GenFuncTarget t) {
        return !target || genfunc_target_name(t) == *target;
    };
    auto add_cone = [&](GenFuncTarget t, const WeightSpec& w) {
        sweep.add(genfunc_target_name(t) + " order=" + std::to_string(order) + " [" +
                      show(w) + "]",
                  [=]() -> std::string {
                      GenFuncReport rep = verify_genfunc(t, w, order);
                      record(rep);
                      if (!rep.pass)
                          return std::to_string(rep.mismatches.size()) +
                                 " mismatching coefficients";
                      return {};
                  });
    };
    for (int d : dims) {
        if (only != Family::jacobi)
            for (const auto& w : laguerre_grid(d))
                for (auto t : {GenFuncTarget::UL, GenFuncTarget::SL})
                    if (wanted(t)) add_cone(t, w);
        if (only != Family::laguerre)
            for (const auto& w : jacobi_grid(d))
                for (auto t : {GenFuncTarget::UJ, GenFuncTarget::SJ})
                    if (wanted(t)) add_cone(t, w);
        for (const auto& mu : mu_grid())
            for (auto t : {GenFuncTarget::ball_U, GenFuncTarget::ball_V}) {
                if (!wanted(t)) continue;
                sweep.add(genfunc_target_name(t) + " d=" + std::to_string(d) +
                              " mu=" + mu.to_string(),
                          [=]() -> std::string {
                              GenFuncReport rep = verify_genfunc_ball(t, d, mu, order);
                              if (!rep.pass)
                                  return std::to_string(rep.mismatches.size()) +
                                         " mismatching coefficients";
                              return {};
                          });
            }
    }
    VerifyResult res = sweep.run(jobs);
    res.notes.insert(res.notes.end(), notes->begin(), notes->end());
    return res;
}

std::vector<VerifyResult> verify_all(unsigned jobs) {
    std::vector<VerifyResult> out;
    out.push_back(verify_bc_delta({1, 2, 3}, 6,
                                  {Rational(1, 2), Rational(1), Rational(7, 3)}, jobs));
    out.push_back(verify_ball_ortho({1, 2}, 4, jobs));
    out.push_back(verify_cone_ortho({1, 2, 3}, 6, jobs));
    out.push_back(verify_construction_equiv({2, 3}, 5, 6, jobs));
    out.push_back(verify_norms({1, 2, 3}, 6, jobs));
    out.push_back(verify_en_tables(6, jobs));
    out.push_back(verify_least_squares(3, jobs));
    out.push_back(verify_rodrigues_dual({1, 2}, 4, jobs));
    out.push_back(verify_biortho({1, 2}, 5, jobs));
    out.push_back(verify_y_biortho(8, jobs));
    out.push_back(verify_s_from_v({2, 3}, 5, 6, jobs));
    out.push_back(verify_genfunc_suite({1, 2}, 4, jobs));
    return out;
}

}  // namespace coneortho
