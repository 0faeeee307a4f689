// Command-line front end: construction, pairing, norm tables, moments and
// the verification suites, with machine-readable output.
//
// Exit codes: 0 success, 1 verification/assertion failure, 2 usage error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coneortho/json_io.hpp"
#include "coneortho/parallel.hpp"
#include "coneortho/pairing.hpp"
#include "coneortho/verify.hpp"

using namespace coneortho;

namespace {

struct WeightOptions {
    std::string family = "laguerre";
    int d = 1;
    std::string mu = "1/2";
    std::string beta = "0";
    std::string gamma = "0";

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family, "laguerre or jacobi")
            ->check(CLI::IsMember({"laguerre", "jacobi"}));
        cmd->add_option("--d", d, "number of x variables")->check(CLI::PositiveNumber);
        cmd->add_option("--mu", mu, "mu as p/q");
        cmd->add_option("--beta", beta, "beta as p/q");
        cmd->add_option("--gamma", gamma, "gamma as p/q (jacobi)");
    }

    WeightSpec resolve() const {
        Rational m = Rational::parse(mu), b = Rational::parse(beta);
        if (family == "laguerre") return WeightSpec::laguerre(d, m, b);
        return WeightSpec::jacobi(d, m, b, Rational::parse(gamma));
    }
};

MultiIndex parse_multi_index(const std::string& s, int d) {
    std::vector<int> entries;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (cur.empty()) throw CLI::ValidationError("--k", "empty component");
            entries.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (static_cast<int>(entries.size()) != d)
        throw CLI::ValidationError("--k", "length must equal --d");
    return MultiIndex(entries);
}

ConeBasisElement build_element(char kind, const MultiIndex& k, int n, const WeightSpec& w,
                               const std::string& method) {
    switch (kind) {
        case 'V': return cone_V(k, n, w);
        case 'S': return cone_S(k, n, w);
        case 'U':
            return cone_U(k, n, w,
                          method == "rodrigues" ? UMethod::rodrigues : UMethod::closed);
        case 'Y':
            if (w.d != 1) throw CLI::ValidationError("--kind", "Y requires --d 1");
            return cone_Y(k[0], n, w);
        default: throw CLI::ValidationError("--kind", "unknown family tag");
    }
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') out += '"';
    }
    return out + "\"";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact orthogonal polynomial families on the cone"};
    app.require_subcommand(1);
    app.fallthrough();  // --jobs may appear after the subcommand

    unsigned jobs = 0;
    app.add_option("--jobs", jobs, "worker threads (default: CONE_ORTHO_JOBS or 1)");

    // ---- basis ----
    auto* basis = app.add_subcommand("basis", "construct basis polynomials");
    WeightOptions basis_w;
    basis_w.attach(basis);
    std::string kind = "V", kspec = "0", method = "closed";
    int n = 0;
    bool all_k = false;
    bool big = false;
    basis->add_option("--kind", kind, "S | V | U | Y")
        ->check(CLI::IsMember({"S", "V", "U", "Y"}));
    basis->add_option("--k", kspec, "comma-separated multi-index");
    basis->add_option("--n", n, "total degree")->required();
    basis->add_option("--method", method, "U construction route")
        ->check(CLI::IsMember({"closed", "rodrigues"}));
    basis->add_flag("--all-k", all_k, "emit the whole degree-n family");
    basis->add_flag("--big", big, "lift the default degree cap of 12");

    // ---- pair ----
    auto* pair_cmd = app.add_subcommand("pair", "exact inner product of two basis elements");
    WeightOptions pair_w;
    pair_w.attach(pair_cmd);
    std::string kind1 = "V", k1 = "0", kind2 = "V", k2 = "0";
    int n1 = 0, n2 = 0;
    pair_cmd->add_option("--kind", kind1, "first family tag");
    pair_cmd->add_option("--k", k1, "first multi-index");
    pair_cmd->add_option("--n", n1, "first degree")->required();
    pair_cmd->add_option("--kind2", kind2, "second family tag");
    pair_cmd->add_option("--k2", k2, "second multi-index");
    pair_cmd->add_option("--n2", n2, "second degree")->required();

    // ---- table ----
    auto* table = app.add_subcommand("table", "least-squares error table (d = 1)");
    WeightOptions table_w;
    table_w.attach(table);
    int n_from = 0, n_to = 4, kmax = 3;
    std::string format = "json";
    table->add_option("--n-from", n_from, "first degree row");
    table->add_option("--n-to", n_to, "last degree row");
    table->add_option("--kmax", kmax, "largest monomial x-power");
    table->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // ---- moments ----
    auto* moments = app.add_subcommand("moments", "normalized cone moment of x^a t^s");
    WeightOptions mom_w;
    mom_w.attach(moments);
    std::string aspec = "0";
    int s_exp = 0;
    moments->add_option("--a", aspec, "x-exponent multi-index");
    moments->add_option("--s", s_exp, "t exponent");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    std::vector<int> dims;
    int max_k = -1, max_n = -1, order = 4;
    std::string target, family_filter;
    verify->add_option("--suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"bc-delta", "ball-ortho", "cone-ortho", "norms", "en-tables",
                               "biortho", "y-biortho", "rodrigues-dual", "s-from-v",
                               "genfunc", "all"}));
    verify->add_option("--d", dims, "dimensions to sweep");
    verify->add_option("--max-k", max_k, "largest |k|");
    verify->add_option("--max-n,--n", max_n, "largest degree");
    verify->add_option("--order", order, "series truncation order");
    verify->add_option("--target", target, "generating-function target")
        ->check(CLI::IsMember({"UL", "UJ", "SL", "SJ", "ball-U", "ball-V"}));
    verify->add_option("--family", family_filter, "restrict to one weight family")
        ->check(CLI::IsMember({"laguerre", "jacobi"}));
    bool verbose = false, dump = false;
    verify->add_flag("--verbose", verbose, "list every checked tuple in the report");
    verify->add_flag("--dump", dump, "attach the pairing matrix / cell report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*basis) {
            WeightSpec w = basis_w.resolve();
            if (n > 12 && !big)
                throw CLI::ValidationError("--n", "degree above 12 needs --big");
            json out;
            if (all_k) {
                out = json::array();
                for (int kk = 0; kk <= n; ++kk)
                    for (const auto& k : indices_of_degree(w.d, kk))
                        out.push_back(to_json(build_element(kind[0], k, n, w, method)));
            } else {
                MultiIndex k = parse_multi_index(kspec, w.d);
                out = to_json(build_element(kind[0], k, n, w, method));
            }
            std::cout << out.dump(2) << "\n";
        } else if (*pair_cmd) {
            WeightSpec w = pair_w.resolve();
            ConeBasisElement a = build_element(kind1[0], parse_multi_index(k1, w.d), n1, w, "closed");
            ConeBasisElement b = build_element(kind2[0], parse_multi_index(k2, w.d), n2, w, "closed");
            Pairing pairing(w);
            std::cout << json{{"value", to_json(pairing(a.poly, b.poly))}}.dump(2) << "\n";
        } else if (*table) {
            WeightSpec w = table_w.resolve();
            if (w.d != 1) throw CLI::ValidationError("--d", "table requires d = 1");
            if (format == "csv") {
                std::cout << "n,k,value,approx\r\n";
                for (int nn = n_from; nn <= n_to; ++nn)
                    for (int k = 0; k <= std::min(kmax, nn); ++k) {
                        Rational v = cone_V_norm_sq(MultiIndex{k}, nn, w);
                        std::cout << nn << "," << k << "," << csv_quote(v.to_string())
                                  << "," << v.decimal_string(12) << "\r\n";
                    }
            } else {
                json rows = json::array();
                for (int nn = n_from; nn <= n_to; ++nn)
                    for (int k = 0; k <= std::min(kmax, nn); ++k) {
                        Rational v = cone_V_norm_sq(MultiIndex{k}, nn, w);
                        rows.push_back(json{{"n", nn},
                                            {"k", k},
                                            {"value", to_json(v)},
                                            {"approx", v.decimal_string(12)}});
                    }
                std::cout << rows.dump(2) << "\n";
            }
        } else if (*moments) {
            WeightSpec w = mom_w.resolve();
            MultiIndex a = parse_multi_index(aspec, w.d);
            std::cout << json{{"value", to_json(cone_moment(a, s_exp, w))}}.dump(2) << "\n";
        } else if (*verify) {
            std::optional<Family> only;
            if (family_filter == "laguerre") only = Family::laguerre;
            if (family_filter == "jacobi") only = Family::jacobi;
            std::optional<std::string> tgt;
            if (!target.empty()) tgt = target;
            auto pick = [&](int dflt) { return max_n >= 0 ? max_n : dflt; };
            auto pick_k = [&](int dflt) { return max_k >= 0 ? max_k : dflt; };
            std::vector<VerifyResult> results;
            auto dims_or = [&](std::vector<int> dflt) { return dims.empty() ? dflt : dims; };
            if (suite == "all") {
                results = verify_all(jobs);
            } else if (suite == "bc-delta") {
                results.push_back(verify_bc_delta(dims_or({1, 2, 3}), pick_k(6),
                                                  {Rational(1, 2), Rational(1), Rational(7, 3)},
                                                  jobs));
            } else if (suite == "ball-ortho") {
                results.push_back(verify_ball_ortho(dims_or({1, 2}), pick_k(4), jobs));
            } else if (suite == "cone-ortho") {
                results.push_back(verify_cone_ortho(dims_or({1, 2, 3}), pick(6), jobs, only));
                results.push_back(verify_construction_equiv(dims_or({2, 3}), pick_k(5), pick(6),
                                                            jobs, only));
            } else if (suite == "norms") {
                results.push_back(verify_norms(dims_or({1, 2, 3}), pick(6), jobs, only));
            } else if (suite == "en-tables") {
                results.push_back(verify_en_tables(pick(6), jobs, only));
                results.push_back(verify_least_squares(std::min(pick(3), 3), jobs, only));
            } else if (suite == "biortho") {
                results.push_back(verify_biortho(dims_or({1, 2}), pick(5), jobs, only));
            } else if (suite == "y-biortho") {
                results.push_back(verify_y_biortho(pick(8), jobs, only));
            } else if (suite == "rodrigues-dual") {
                results.push_back(verify_rodrigues_dual(dims_or({1, 2}), pick(4), jobs, only));
            } else if (suite == "s-from-v") {
                results.push_back(verify_s_from_v(dims_or({2, 3}), pick_k(5), pick(6), jobs, only));
            } else if (suite == "genfunc") {
                results.push_back(verify_genfunc_suite(dims_or({1, 2}), order, jobs, only, tgt));
            }
            json out = json::array();
            bool all_pass = true;
            for (const auto& r : results) {
                all_pass = all_pass && r.pass();
                json entry{{"suite", r.suite},
                           {"checked", r.checked},
                           {"status", r.pass() ? "pass" : "fail"},
                           {"failures", r.failures},
                           {"notes", r.notes}};
                if (verbose) entry["tuples"] = r.tuples;
                out.push_back(std::move(entry));
            }
            if (dump && suite == "y-biortho") {
                // full <Y_{k}, V_{j}> matrix at the largest degree swept
                int nn = max_n >= 0 ? max_n : 8;
                WeightSpec w = only == Family::jacobi
                                   ? WeightSpec::jacobi(1, Rational(1, 2), Rational(0),
                                                        Rational(0))
                                   : WeightSpec::laguerre(1, Rational(1, 2), Rational(0));
                Pairing pairing(w);
                auto ys = y_basis(nn, w);
                json matrix = json::array();
                for (int kidx = 0; kidx <= nn; ++kidx) {
                    json row = json::array();
                    for (int jidx = 0; jidx <= nn; ++jidx)
                        row.push_back(to_json(
                            pairing(ys[static_cast<size_t>(kidx)].poly,
                                    cone_V(MultiIndex{jidx}, nn, w).poly)));
                    matrix.push_back(std::move(row));
                }
                out.push_back(json{{"suite", "y-biortho"},
                                   {"weight", to_json(w)},
                                   {"n", nn},
                                   {"matrix", matrix}});
            }
            if (dump && suite == "genfunc") {
                json reps = json::array();
                for (int dd : (dims.empty() ? std::vector<int>{1, 2} : dims)) {
                    if (!target.empty()) {
                        auto t = genfunc_target_from_name(target);
                        if (t == GenFuncTarget::ball_U || t == GenFuncTarget::ball_V) {
                            reps.push_back(
                                to_json(verify_genfunc_ball(*t, dd, Rational(1, 2), order)));
                        } else {
                            bool lag = t == GenFuncTarget::UL || t == GenFuncTarget::SL;
                            WeightSpec w =
                                lag ? WeightSpec::laguerre(dd, Rational(1, 2), Rational(0))
                                    : WeightSpec::jacobi(dd, Rational(1, 2), Rational(0),
                                                         Rational(0));
                            reps.push_back(to_json(verify_genfunc(*t, w, order)));
                        }
                    } else {
                        WeightSpec wl = WeightSpec::laguerre(dd, Rational(1, 2), Rational(0));
                        WeightSpec wj =
                            WeightSpec::jacobi(dd, Rational(1, 2), Rational(0), Rational(0));
                        if (only != Family::jacobi) {
                            reps.push_back(to_json(verify_genfunc(GenFuncTarget::UL, wl, order)));
                            reps.push_back(to_json(verify_genfunc(GenFuncTarget::SL, wl, order)));
                        }
                        if (only != Family::laguerre) {
                            reps.push_back(to_json(verify_genfunc(GenFuncTarget::UJ, wj, order)));
                            reps.push_back(to_json(verify_genfunc(GenFuncTarget::SJ, wj, order)));
                        }
                        reps.push_back(to_json(
                            verify_genfunc_ball(GenFuncTarget::ball_U, dd, Rational(1, 2), order)));
                        reps.push_back(to_json(
                            verify_genfunc_ball(GenFuncTarget::ball_V, dd, Rational(1, 2), order)));
                    }
                }
                out.push_back(json{{"suite", "genfunc"}, {"reports", reps}});
            }
            if (dump && suite == "biortho") {
                int nn = max_n >= 0 ? std::min(max_n, 4) : 3;
                int dd = dims.empty() ? 2 : dims.front();
                WeightSpec w = only == Family::jacobi
                                   ? WeightSpec::jacobi(dd, Rational(1, 2), Rational(0),
                                                        Rational(0))
                                   : WeightSpec::laguerre(dd, Rational(1, 2), Rational(0));
                out.push_back(json{{"suite", "biortho"},
                                   {"weight", to_json(w)},
                                   {"n", nn},
                                   {"cells", to_json(biortho_report(nn, w))}});
            }
            std::cout << out.dump(2) << "\n";
            return all_pass ? 0 : 1;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
