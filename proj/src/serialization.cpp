#include "modlab/serialization.hpp"

#include <fstream>

namespace modlab {

namespace {

json complex_to_json(cd z) { return json::array({z.real(), z.imag()}); }

cd complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw ConfigInvalid("complex values must be [re, im] pairs");
  return cd(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

json to_json(const Mat& m) {
  json data = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      data.push_back(complex_to_json(m(r, c)));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Mat mat_from_json(const json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto& data = j.at("data");
  if (static_cast<Eigen::Index>(data.size()) != rows * cols)
    throw ConfigInvalid("matrix data length does not match rows*cols");
  Mat m(rows, cols);
  Eigen::Index idx = 0;
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(data[idx++]);
  return m;
}

json to_json(const AlgebraElement& a) {
  json blocks = json::array();
  for (const auto& b : a.blocks) blocks.push_back(to_json(b));
  return json{{"blocks", blocks}};
}

AlgebraElement element_from_json(const json& j) {
  std::vector<Mat> blocks;
  for (const auto& b : j.at("blocks")) blocks.push_back(mat_from_json(b));
  return AlgebraElement(std::move(blocks));
}

json to_json(const FiniteAlgebra& alg) { return json{{"blocks", alg.blocks}}; }

FiniteAlgebra algebra_from_json(const json& j) {
  return FiniteAlgebra(j.at("blocks").get<std::vector<int>>());
}

json to_json(const Functional& phi) {
  return json{{"algebra", to_json(phi.algebra())},
              {"density", to_json(phi.density())}};
}

Functional functional_from_json(const json& j, const Tolerances& tol) {
  return Functional(algebra_from_json(j.at("algebra")),
                    element_from_json(j.at("density")), tol);
}

json to_json(const Envelope& env) {
  json j{{"amplitude", complex_to_json(env.amplitude)}};
  if (env.kind == EnvelopeKind::RationalPole) {
    j["kind"] = "rational_pole";
    j["mu"] = complex_to_json(env.mu);
    return j;
  }
  j["kind"] = "gaussian_poly";
  j["alpha"] = env.alpha;
  j["beta"] = complex_to_json(env.beta);
  json poly = json::array();
  for (cd c : env.poly) poly.push_back(complex_to_json(c));
  j["poly"] = poly;
  return j;
}

Envelope envelope_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const cd amp = j.contains("amplitude") ? complex_from_json(j["amplitude"])
                                         : cd(1, 0);
  if (kind == "rational_pole")
    return Envelope::rational(complex_from_json(j.at("mu")), amp);
  if (kind != "gaussian_poly")
    throw ConfigInvalid("envelope kind must be gaussian_poly or rational_pole");
  std::vector<cd> poly{cd(1, 0)};
  if (j.contains("poly")) {
    poly.clear();
    for (const auto& c : j["poly"]) poly.push_back(complex_from_json(c));
  }
  const cd beta =
      j.contains("beta") ? complex_from_json(j["beta"]) : cd(0, 0);
  return Envelope::gaussian(j.at("alpha").get<double>(), beta, amp, poly);
}

json to_json(const InterpolatorSpec& spec) {
  json terms = json::array();
  for (const auto& t : spec.terms)
    terms.push_back(json{{"envelope", to_json(t.env)},
                         {"left", to_json(t.left)},
                         {"state", to_json(t.state)},
                         {"right", to_json(t.right)}});
  return json{{"terms", terms},
              {"strip", {spec.strip.first, spec.strip.second}}};
}

InterpolatorSpec spec_from_json(const json& j, const Tolerances& tol) {
  InterpolatorSpec spec;
  for (const auto& t : j.at("terms"))
    spec.terms.push_back({envelope_from_json(t.at("envelope")),
                          element_from_json(t.at("left")),
                          functional_from_json(t.at("state"), tol),
                          element_from_json(t.at("right"))});
  if (j.contains("strip")) {
    spec.strip.first = j["strip"][0].get<double>();
    spec.strip.second = j["strip"][1].get<double>();
  }
  return spec;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigInvalid(path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw IoFailure("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
  if (!out) throw IoFailure("write failed: " + path);
}

}  // namespace modlab
