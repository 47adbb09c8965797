#pragma once

#include <string>

#include "json.hpp"
#include "modlab/interpolator.hpp"

namespace modlab {

using json = nlohmann::json;

json to_json(const Mat& m);
Mat mat_from_json(const json& j);

json to_json(const AlgebraElement& a);
AlgebraElement element_from_json(const json& j);

json to_json(const FiniteAlgebra& alg);
FiniteAlgebra algebra_from_json(const json& j);

json to_json(const Functional& phi);
Functional functional_from_json(const json& j,
                                const Tolerances& tol = default_tol());

json to_json(const Envelope& env);
Envelope envelope_from_json(const json& j);

json to_json(const InterpolatorSpec& spec);
InterpolatorSpec spec_from_json(const json& j,
                                const Tolerances& tol = default_tol());

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace modlab
