#pragma once

#include <json.hpp>

#include "coneortho/cone.hpp"
#include "coneortho/mvpoly.hpp"
#include "coneortho/rational.hpp"
#include "coneortho/rodrigues.hpp"
#include "coneortho/series.hpp"
#include "coneortho/weight.hpp"

namespace coneortho {

using json = nlohmann::ordered_json;

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const MVPoly& p);
MVPoly mvpoly_from_json(const json& j);

json to_json(const WeightSpec& w);
WeightSpec weight_from_json(const json& j);

json to_json(const ConeBasisElement& e);
ConeBasisElement cone_element_from_json(const json& j);

json to_json(const BiorthoEntry& e);
json to_json(const std::vector<BiorthoEntry>& entries);

json to_json(const GenFuncReport& r);

}  // namespace coneortho
