#include "coneortho/json_io.hpp"

namespace coneortho {

json to_json(const Rational& r) {
    return json{{"num", r.num_string()}, {"den", r.den_string()}};
}

Rational rational_from_json(const json& j) {
    return Rational::parse(j.at("num").get<std::string>() + "/" +
                           j.at("den").get<std::string>());
}

json to_json(const MVPoly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        terms.push_back(json{{"x", m.x.entries()}, {"t", m.t}, {"coef", to_json(c)}});
    }
    return json{{"d", p.dim()}, {"terms", terms}};
}

MVPoly mvpoly_from_json(const json& j) {
    MVPoly p(j.at("d").get<int>());
    for (const auto& term : j.at("terms")) {
        MultiIndex x(term.at("x").get<std::vector<int>>());
        p.add_term(x, term.at("t").get<int>(), rational_from_json(term.at("coef")));
    }
    return p;
}

json to_json(const WeightSpec& w) {
    json j{{"family", family_name(w.family)},
           {"d", w.d},
           {"mu", to_json(w.mu)},
           {"beta", to_json(w.beta)}};
    if (w.family == Family::jacobi) j["gamma"] = to_json(w.gamma);
    return j;
}

WeightSpec weight_from_json(const json& j) {
    std::string fam = j.at("family").get<std::string>();
    int d = j.at("d").get<int>();
    Rational mu = rational_from_json(j.at("mu"));
    Rational beta = rational_from_json(j.at("beta"));
    if (fam == "laguerre") return WeightSpec::laguerre(d, mu, beta);
    if (fam == "jacobi") return WeightSpec::jacobi(d, mu, beta, rational_from_json(j.at("gamma")));
    throw std::invalid_argument("weight_from_json: unknown family '" + fam + "'");
}

json to_json(const ConeBasisElement& e) {
    json j{{"family", std::string(1, e.family)},
           {"k", e.k.entries()},
           {"n", e.n},
           {"weight", to_json(e.weight)}};
    json poly = to_json(e.poly);
    j["d"] = poly["d"];
    j["terms"] = poly["terms"];
    return j;
}

ConeBasisElement cone_element_from_json(const json& j) {
    WeightSpec w = weight_from_json(j.at("weight"));
    MVPoly p = mvpoly_from_json(j);
    MultiIndex k(j.at("k").get<std::vector<int>>());
    return {j.at("family").get<std::string>().at(0), k, j.at("n").get<int>(), w, std::move(p)};
}

json to_json(const BiorthoEntry& e) {
    return json{{"k", e.k.entries()},
                {"j", e.j.entries()},
                {"n", e.n},
                {"class", biortho_class_name(e.cls)},
                {"value", to_json(e.value)}};
}

json to_json(const std::vector<BiorthoEntry>& entries) {
    json arr = json::array();
    for (const auto& e : entries) arr.push_back(to_json(e));
    return arr;
}

json to_json(const GenFuncReport& r) {
    json mism = json::array();
    for (const auto& k : r.mismatches) mism.push_back(json{{"r", k.r}, {"b", k.b.entries()}});
    return json{{"target", genfunc_target_name(r.target)},
                {"d", r.d},
                {"order", r.order},
                {"status", r.pass ? "pass" : "fail"},
                {"mismatches", mism},
                {"notes", r.notes}};
}

}  // namespace coneortho
