#include "aq/report.hpp"

namespace aq {

Json scalar_json(const Field& k, const Scalar& c) { return k.format(c); }

Json point_json(const RationalPoint& p, const Field& k) {
  Json coords = Json::array();
  for (const auto& c : p.coords) coords.push_back(scalar_json(k, c));
  return {{"name", p.name}, {"coords", coords}};
}

Json matrix_json(const PolyMatrix& M) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < M.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < M.cols(); ++c) row.push_back(M.at(r, c).is_zero() ? std::string("0") : M.at(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

Json module_json(const FPModule& M) {
  FPModule P = M.pruned();
  Json j = {{"generators", P.num_generators()}, {"relations", matrix_json(P.relations())}, {"zero", P.is_zero()}};
  auto fr = P.free_rank();
  j["free_rank"] = fr ? Json(*fr) : Json(nullptr);
  return j;
}

Json complex_json(const FreeComplex& C) {
  Json degrees = Json::array();
  for (int n = C.min_degree(); n <= C.max_degree(); ++n) {
    Json d = {{"n", n}, {"rank", C.rank(n)}, {"basis", C.labels(n)}};
    if (n > C.min_degree()) d["differential"] = matrix_json(C.differential(n));
    degrees.push_back(d);
  }
  return degrees;
}

Json homology_json(const HomologyReport& r) {
  Json degrees = Json::array();
  for (const auto& d : r.degrees) {
    Json e = {{"n", d.n}};
    e["dim"] = d.dim ? Json(*d.dim) : Json(nullptr);
    if (d.module) e["module"] = module_json(*d.module);
    degrees.push_back(e);
  }
  return {{"map", r.map_name},       {"coefficients", r.coefficients}, {"mode", r.mode},
          {"cohomology", r.cohomology}, {"valid_through", r.cutoff},   {"degrees", degrees},
          {"checks", r.checks}};
}

Json classification_json(const ClassificationReport& r, const Field& k) {
  Json pts = Json::array();
  for (const auto& p : r.points) {
    Json coords = Json::array();
    for (const auto& c : p.coords) coords.push_back(scalar_json(k, c));
    Json ev = Json::object();
    for (std::size_t n = 0; n < p.aq.size(); ++n) ev["aq" + std::to_string(n)] = p.aq[n];
    pts.push_back({{"point", p.point},
                   {"coords", coords},
                   {"verdict", p.verdict},
                   {"evidence", ev},
                   {"oracle", {{"name", p.oracle_name}, {"verdict", p.oracle}}}});
  }
  Json j = {{"property", property_name(r.property)},
            {"map", r.subject},
            {"points", pts},
            {"global_flag", r.global_flag()},
            {"oracle_agreement", r.oracle_agreement()}};
  if (r.certified) j["certificate"] = r.certificate;
  return j;
}

Json simplicial_json(const SimplicialAlgebra& A) {
  Json levels = Json::array();
  for (int n = 0; n <= A.top(); ++n) {
    const auto& L = A.level(n);
    Json vars = Json::array();
    for (std::size_t v = 0; v < L.vars.size(); ++v) {
      Json e = {{"name", L.vars[v]}};
      Json faces = Json::array(), degens = Json::array();
      for (const auto& f : L.faces) faces.push_back(f[v].to_string());
      for (const auto& s : L.degens) degens.push_back(s[v].to_string());
      e["faces"] = faces;
      e["degeneracies"] = degens;
      if (!L.weights.empty()) e["weight"] = L.weights[v];
      vars.push_back(e);
    }
    levels.push_back({{"n", n}, {"variables", vars}});
  }
  Json aug = Json::array();
  for (const auto& a : A.augmentation()) aug.push_back(a.to_string());
  return {{"base", A.base().vars()},
          {"target", {{"vars", A.target().vars()}, {"relations", [&] {
                         Json r = Json::array();
                         for (const auto& g : A.target().groebner()) r.push_back(g.to_string());
                         return r;
                       }()}}},
          {"augmentation", aug},
          {"provenance", A.provenance()},
          {"levels", levels}};
}

Json violations_json(const std::vector<IdentityViolation>& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back({{"identity", e.identity}, {"level", e.level}, {"variable", e.variable}});
  return out;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace aq
