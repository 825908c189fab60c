#include "polyft/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "polyft/builtin.hpp"

namespace polyft {

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (int k = 0; k < v.size(); ++k) a.push_back(round12(v(k)));
  return a;
}

Json to_json(const std::vector<Vector>& points) {
  Json a = Json::array();
  for (const Vector& p : points) a.push_back(to_json(p));
  return a;
}

Json to_json(const Functional& f) { return to_json(f.coeffs); }

Json to_json(const PolytopeBall& ball) {
  int counts[4] = {0, 0, 0, 0};
  for (const Face& f : ball.faces()) ++counts[std::min(f.dim, 3)];
  Json j;
  j["dim"] = ball.dim();
  j["vertices"] = to_json(ball.vertices());
  Json facets = Json::array();
  for (const Functional& f : ball.facets()) facets.push_back(to_json(f));
  j["facets"] = facets;
  Json fc = Json::array();
  for (int k = 0; k < ball.dim(); ++k) fc.push_back(counts[k]);
  j["face_counts"] = fc;
  if (!ball.warnings().empty()) j["warnings"] = ball.warnings();
  return j;
}

Json to_json(const FTCertificate& cert) {
  Json j;
  j["base_point"] = to_json(cert.base_point);
  Json fs = Json::array();
  for (const Functional& f : cert.functionals) fs.push_back(to_json(f));
  j["functionals"] = fs;
  j["slack"] = round12(cert.slack);
  j["residual"] = round12(cert.residual);
  j["extension_mode"] = cert.extension_mode;
  j["coincident_sites"] = cert.coincident_sites;
  return j;
}

Json to_json(const Verification& v) {
  Json j;
  j["certified"] = v.certified();
  if (v.certificate) j["certificate"] = to_json(*v.certificate);
  if (v.refutation) {
    j["refutation"] = Json{{"base_point", to_json(v.refutation->base_point)},
                           {"margin", round12(v.refutation->margin)}};
  }
  return j;
}

Json to_json(const FTSet& set) {
  Json j;
  j["tag"] = std::string(to_string(set.tag));
  j["affine_dim"] = set.affine_dim;
  j["objective_value"] = round12(set.objective_value);
  j["vertices"] = to_json(set.vertices);
  if (set.certificate) j["certificate"] = to_json(*set.certificate);
  return j;
}

Json to_json(const PolytopeBall& ball, const ConsistentFaceSet& set) {
  Json faces = Json::array();
  for (std::size_t i = 0; i < set.faces.size(); ++i) {
    const Face& f = ball.face(set.faces[i]);
    faces.push_back(Json{{"id", set.faces[i]},
                         {"dim", f.dim},
                         {"vertex_ids", f.vertex_ids},
                         {"witness", to_json(set.witnesses[i])}});
  }
  return Json{{"faces", faces}, {"min_interior_slack", round12(set.min_interior_slack)}};
}

Json to_json(const UniquenessReport& report) {
  Json j;
  j["ball"] = report.ball;
  j["n"] = report.n;
  j["verdict"] = std::string(to_string(report.verdict));
  if (report.witness) {
    j["witness"] = Json{{"faces", to_json(report.witness->instance.ball, report.witness->faces)},
                        {"sites", to_json(report.witness->instance.sites)},
                        {"ft_set", to_json(report.witness->ft_set)}};
  }
  j["trace"] = report.trace;
  return j;
}

Json to_json(const ConfirmationReport& r) {
  Json j;
  j["ft_value"] = round12(r.ft_value);
  j["grid_min"] = round12(r.grid_min);
  j["section_min"] = round12(r.section_min);
  j["value_spread"] = round12(r.value_spread);
  j["max_argmin_distance"] = round12(r.max_argmin_distance);
  j["argmin_cells"] = r.argmin_cells;
  j["min_ring_margin"] = round12(r.min_ring_margin);
  j["ring_samples"] = r.ring_samples;
  j["offending"] = to_json(r.offending);
  return j;
}

Json to_json(const NonUniqueEvidence& e) {
  return Json{{"first", to_json(e.first)},
              {"second", to_json(e.second)},
              {"separation", round12(e.separation)},
              {"gap", round12(e.gap)}};
}

Json to_json(const DodecahedronSection& s) {
  return Json{{"alpha", round12(s.alpha)}, {"beta", round12(s.beta)}, {"a", round12(s.a)},
              {"b", round12(s.b)},         {"c", round12(s.c)},       {"d", round12(s.d)},
              {"tan_beta", round12(s.tan_beta)}};
}

Json to_json(const CaseReport& r) {
  Json j;
  j["case"] = r.name;
  j["ball"] = r.ball;
  j["passed"] = r.passed;
  j["expected"] = r.expected;
  j["observed"] = r.observed;
  if (r.verdict) j["verdict"] = std::string(to_string(*r.verdict));
  j["sites"] = to_json(r.instance.sites);
  if (r.ft_set) j["ft_set"] = to_json(*r.ft_set);
  if (r.oracle) j["oracle"] = to_json(*r.oracle);
  if (r.evidence) j["non_unique_evidence"] = to_json(*r.evidence);
  if (r.constants) j["constants"] = to_json(*r.constants);
  if (!r.labels.empty()) {
    Json t = Json::object();
    for (const auto& [k, v] : r.labels) t[k] = v;
    j["labels"] = t;
  }
  j["notes"] = r.notes;
  return j;
}

Vector vector_from_json(const Json& j, int dim) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::InvalidInput, "expected a non-empty array of numbers");
  if (dim >= 0 && static_cast<int>(j.size()) != dim) {
    throw Error(ErrorCode::InvalidInput, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(j.size()));
  }
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_number()) throw Error(ErrorCode::InvalidInput, "coordinate is not a number");
    v(static_cast<Eigen::Index>(k)) = j[k].get<double>();
  }
  if (!all_finite(v)) throw Error(ErrorCode::InvalidInput, "non-finite coordinate");
  return v;
}

std::vector<Vector> points_from_json(const Json& j, int dim) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "expected an array of points");
  std::vector<Vector> out;
  for (const Json& p : j) {
    out.push_back(vector_from_json(p, dim));
    dim = static_cast<int>(out.back().size());
  }
  return out;
}

PolytopeBall ball_from_json(const Json& j, double tol) {
  if (j.is_string()) return builtin_ball(j.get<std::string>(), tol);
  if (j.is_object() && j.contains("vertices")) return build_ball(points_from_json(j.at("vertices")), tol);
  throw Error(ErrorCode::InvalidInput, "ball must be a builtin name or {\"vertices\": [...]}");
}

Instance instance_from_json(const Json& j, double tol) {
  if (!j.is_object() || !j.contains("ball") || !j.contains("sites")) {
    throw Error(ErrorCode::InvalidInput, "scene needs \"ball\" and \"sites\"");
  }
  Instance inst{ball_from_json(j.at("ball"), tol), {}};
  inst.sites = points_from_json(j.at("sites"), inst.ball.dim());
  validate(inst);
  return inst;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace polyft
