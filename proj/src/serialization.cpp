#include "octoplane/serialization.hpp"

#include <string>

#include "octoplane/errors.hpp"

namespace octoplane {

Json to_json(const HyperNumber& h) {
  Json j = Json::array();
  for (double c : h.coeffs()) j.push_back(c);
  return j;
}

HyperNumber hyper_from_json(AlgebraKind kind, const Json& j) {
  if (!j.is_array() || j.size() != kAlgebraDim) {
    throw Error("expected an array of 8 numbers, got " + j.dump());
  }
  HyperNumber h(kind);
  for (std::size_t i = 0; i < kAlgebraDim; ++i) {
    if (!j[i].is_number()) throw Error("non-numeric coefficient in " + j.dump());
    h[i] = j[i].get<double>();
  }
  return h;
}

Json triple_to_json(const HomogeneousTriple& t) {
  return Json::array({to_json(t[0]), to_json(t[1]), to_json(t[2])});
}

ChartPoint point_from_json(PlaneKind kind, const Json& j) {
  if (!j.is_array() || j.size() != 3) throw Error("a point is an array of three 8-tuples");
  const AlgebraKind a = algebra_of(kind);
  return normalize(kind, {hyper_from_json(a, j[0]), hyper_from_json(a, j[1]),
                          hyper_from_json(a, j[2])});
}

Json to_json(const ChartPoint& p) {
  Json j;
  j["plane"] = to_string(p.kind);
  j["chart"] = p.chart;
  j["u"] = to_json(p.u);
  j["v"] = to_json(p.v);
  j["triple"] = triple_to_json(to_triple(p));
  return j;
}

Json to_json(const IsometryStep& s) {
  Json j;
  if (const auto* e = std::get_if<EuclideanReflection>(&s)) {
    j["kind"] = "euclidean";
    j["chart"] = e->chart;
    j["r"] = e->r;
    j["lambda"] = to_json(e->lambda);
  } else if (const auto* i = std::get_if<IndefiniteReflection>(&s)) {
    j["kind"] = "indefinite";
    j["chart"] = i->chart;
    j["r"] = i->r;
    j["lambda"] = to_json(i->lambda);
  } else {
    const auto& r = std::get<Rotation>(s);
    j["kind"] = "rotation";
    j["chart"] = r.chart;
    j["t"] = r.t;
  }
  return j;
}

IsometryStep step_from_json(PlaneKind kind, const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw InvalidStepError("step needs a \"kind\"");
  const std::string k = j.at("kind").get<std::string>();
  const AlgebraKind a = algebra_of(kind);
  if (k != "rotation" && k != "euclidean" && k != "indefinite") {
    throw InvalidStepError("unknown step kind \"" + k + "\"");
  }
  if (k == "rotation") {
    return make_rotation(kind, j.at("t").get<double>(), j.value("chart", 3));
  }
  const int chart = j.value("chart", 1);
  const double r = j.at("r").get<double>();
  const HyperNumber lambda = hyper_from_json(a, j.at("lambda"));
  if (k == "euclidean") return make_euclidean(kind, chart, r, lambda);
  return make_indefinite(kind, chart, r, lambda);
}

IsometryComposition composition_from_json(PlaneKind kind, const Json& j) {
  IsometryComposition c;
  if (j.is_array()) {
    for (const auto& s : j) c.steps.push_back(step_from_json(kind, s));
  } else {
    c.steps.push_back(step_from_json(kind, j));
  }
  return c;
}

Json to_json(const IsometryComposition& c) {
  Json j = Json::array();
  for (const auto& s : c.steps) j.push_back(to_json(s));
  return j;
}

}  // namespace octoplane
