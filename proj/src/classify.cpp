#include "aq/classify.hpp"

#include <functional>
#include <map>

namespace aq {

std::string property_name(Property p) {
  switch (p) {
    case Property::Smooth: return "smooth";
    case Property::Unramified: return "unramified";
    case Property::Etale: return "etale";
    case Property::Lci: return "lci";
    case Property::Regular: return "regular";
    case Property::CompleteIntersection: return "ci";
  }
  return "";
}

Property parse_property(const std::string& name) {
  static const std::map<std::string, Property> table = {
      {"smooth", Property::Smooth}, {"unramified", Property::Unramified}, {"etale", Property::Etale},
      {"lci", Property::Lci},       {"regular", Property::Regular},       {"ci", Property::CompleteIntersection}};
  auto it = table.find(name);
  if (it == table.end()) throw InputError("unknown property '" + name + "' (smooth, unramified, etale, lci, regular, ci)");
  return it->second;
}

bool ClassificationReport::oracle_agreement() const {
  for (const auto& p : points)
    if (!p.agrees()) return false;
  return true;
}

namespace {

PointVerdict base_verdict(const AlgebraMap& phi, const RationalPoint& m) {
  if (!phi.target().contains_point(m.coords)) throw InputError("not a rational point of " + phi.target().name());
  PointVerdict v;
  v.point = m.name;
  v.coords = m.coords;
  v.aq = aq_dims_at(phi, m, 2);
  return v;
}

void require_agreement(const PointVerdict& v, const std::string& what) {
  if (!v.agrees())
    throw OracleDisagreement(what + " verdict disagrees with " + v.oracle_name + " at " +
                             (v.point.empty() ? std::string("point") : v.point));
}

PresentedAlgebra residue_field(const Field& k) { return PresentedAlgebra::polynomial(k, {}, "k"); }

Polynomial determinant(std::vector<std::vector<Polynomial>> a, const RingPtr& ring) {
  const std::size_t n = a.size();
  if (n == 0) return Polynomial::constant(ring, 1);
  if (n == 1) return a[0][0];
  Polynomial det(ring);
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    Polynomial term = a[0][c] * determinant(minor, ring);
    det = c % 2 == 0 ? det + term : det - term;
  }
  return det;
}

bool koszul_acyclic(const std::vector<Polynomial>& f, const PresentedAlgebra& P) {
  FreeComplex K = koszul_complex(f, P);
  for (int n = 1; n <= static_cast<int>(f.size()); ++n)
    if (!complex_homology(K, n).is_zero()) return false;
  return true;
}

AlgebraMap structure_map(const PresentedAlgebra& R) {
  return AlgebraMap(residue_field(R.field()), R, {}, "k->" + R.name());
}

AlgebraMap residue_map(const PresentedAlgebra& R, const RationalPoint& m) {
  PresentedAlgebra k = residue_field(R.field());
  std::vector<Polynomial> ims;
  for (const auto& c : m.coords) ims.push_back(Polynomial::constant(k.ring(), c));
  return AlgebraMap(R, k, ims, R.name() + "->k");
}

AlgebraMap cohen_presentation(const PresentedAlgebra& R) {
  PresentedAlgebra Q = PresentedAlgebra::polynomial(R.field(), R.vars(), "Q", R.ring()->order());
  std::vector<Polynomial> ims;
  for (std::size_t i = 0; i < R.nvars(); ++i) ims.push_back(R.var(static_cast<int>(i)));
  return AlgebraMap(Q, R, ims, "Q->" + R.name());
}

}  // namespace

JacobianOracle jacobian_criterion(const AlgebraMap& phi, const RationalPoint& m) {
  RelativePresentation rp = relative_presentation(phi);
  RationalPoint q = rp.point_in_S(m);
  JacobianOracle o;
  o.local_generators = minimal_local_generators(rp, q).size();
  const std::size_t ny = rp.y_vars.size(), nf = rp.f.size();
  if (ny && nf) {
    FieldMatrix J(rp.P.field(), ny, nf);
    for (std::size_t j = 0; j < nf; ++j)
      for (std::size_t i = 0; i < ny; ++i) J.at(i, j) = rp.f[j].derivative(rp.y_vars[i]).evaluate(q.coords);
    o.jacobian_rank = J.rank();
  }
  return o;
}

KoszulOracle koszul_regular_sequence_oracle(const AlgebraMap& phi, const RationalPoint& m) {
  RelativePresentation rp = relative_presentation(phi);
  RationalPoint q = rp.point_in_S(m);
  KoszulOracle o;
  o.generators = minimal_local_generators(rp, q);
  if (!o.generators.empty()) {
    FreeComplex K = koszul_complex(o.generators, rp.P);
    o.h1_dim = complex_homology(K, 1).dim_at(q.coords);
  }
  return o;
}

bool standard_smooth_certificate(const AlgebraMap& phi) {
  RelativePresentation rp = relative_presentation(phi);
  const std::size_t c = rp.f.size(), ny = rp.y_vars.size();
  if (c == 0) return true;
  if (c > ny || c > 4) return false;
  const RingPtr& ring = rp.P.ring();
  std::vector<Polynomial> minors;
  std::vector<std::size_t> rows;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) {
    if (rows.size() == c) {
      std::vector<std::vector<Polynomial>> a;
      for (std::size_t r : rows) {
        std::vector<Polynomial> row;
        for (std::size_t j = 0; j < c; ++j) row.push_back(rp.f[j].derivative(rp.y_vars[r]));
        a.push_back(row);
      }
      minors.push_back(rp.S.normal_form(determinant(a, ring)));
      return minors.size() <= 256;
    }
    for (std::size_t r = start; r < ny; ++r) {
      rows.push_back(r);
      bool ok = rec(r + 1);
      rows.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  if (!rec(0)) return false;
  return rp.S.quotient(minors).is_zero_ring();
}

PointVerdict is_smooth_at(const AlgebraMap& phi, const RationalPoint& m) {
  PointVerdict v = base_verdict(phi, m);
  v.verdict = v.aq[1] == 0;
  v.oracle = jacobian_criterion(phi, m).smooth();
  v.oracle_name = "jacobian criterion";
  require_agreement(v, "smooth");
  return v;
}

PointVerdict is_unramified_at(const AlgebraMap& phi, const RationalPoint& m) {
  PointVerdict v = base_verdict(phi, m);
  v.verdict = v.aq[0] == 0;
  v.oracle = kahler_oracle_via_diagonal(phi).conormal.dim_at(m.coords) == 0;
  v.oracle_name = "diagonal I/I^2";
  require_agreement(v, "unramified");
  return v;
}

PointVerdict is_etale_at(const AlgebraMap& phi, const RationalPoint& m) {
  PointVerdict v = base_verdict(phi, m);
  v.verdict = v.aq[0] == 0 && v.aq[1] == 0;
  v.oracle = jacobian_criterion(phi, m).smooth() && kahler_oracle_via_diagonal(phi).conormal.dim_at(m.coords) == 0;
  v.oracle_name = "jacobian criterion and diagonal I/I^2";
  require_agreement(v, "etale");
  return v;
}

PointVerdict is_lci_at(const AlgebraMap& phi, const RationalPoint& m) {
  PointVerdict v = base_verdict(phi, m);
  v.verdict = v.aq[2] == 0;
  v.oracle = koszul_regular_sequence_oracle(phi, m).regular();
  v.oracle_name = "koszul regular sequence";
  require_agreement(v, "lci");
  return v;
}

PointVerdict is_regular_local(const PresentedAlgebra& R, const RationalPoint& m) {
  if (!R.contains_point(m.coords)) throw InputError("not a rational point of " + R.name());
  AlgebraMap pi = residue_map(R, m);
  RationalPoint origin{m.name, {}};
  PointVerdict v = is_lci_at(pi, origin);
  v.coords = m.coords;
  // over a perfect field, regular at m is smoothness of k -> R at m
  PointVerdict s = is_smooth_at(structure_map(R), m);
  v.oracle = v.oracle && s.verdict;
  v.oracle_name = "koszul regular sequence and smoothness over k";
  require_agreement(v, "regular");
  return v;
}

PointVerdict is_complete_intersection(const PresentedAlgebra& R, const RationalPoint& m) {
  return is_lci_at(cohen_presentation(R), m);
}

ClassificationReport classify_map(Property prop, const AlgebraMap& phi, const std::vector<RationalPoint>& points) {
  ClassificationReport rep;
  rep.subject = phi.name();
  rep.property = prop;
  for (const auto& m : points) {
    switch (prop) {
      case Property::Smooth: rep.points.push_back(is_smooth_at(phi, m)); break;
      case Property::Unramified: rep.points.push_back(is_unramified_at(phi, m)); break;
      case Property::Etale: rep.points.push_back(is_etale_at(phi, m)); break;
      case Property::Lci: rep.points.push_back(is_lci_at(phi, m)); break;
      default: throw InputError(property_name(prop) + " applies to rings, not maps");
    }
  }
  auto unramified = [&] { return kahler_presentation(phi).module.pruned().is_zero(); };
  switch (prop) {
    case Property::Smooth:
      rep.certified = standard_smooth_certificate(phi);
      if (rep.certified) rep.certificate = "jacobian minors generate the unit ideal";
      break;
    case Property::Unramified:
      rep.certified = unramified();
      if (rep.certified) rep.certificate = "module of differentials is zero";
      break;
    case Property::Etale:
      rep.certified = standard_smooth_certificate(phi) && unramified();
      if (rep.certified) rep.certificate = "standard smooth with zero differentials";
      break;
    case Property::Lci: {
      RelativePresentation rp = relative_presentation(phi);
      rep.certified = koszul_acyclic(rp.f, rp.P);
      if (rep.certified) rep.certificate = "presentation ideal generated by a koszul-regular sequence";
      break;
    }
    default:
      break;
  }
  return rep;
}

ClassificationReport classify_ring(Property prop, const PresentedAlgebra& R, const std::vector<RationalPoint>& points) {
  ClassificationReport rep;
  rep.subject = R.name();
  rep.property = prop;
  for (const auto& m : points) {
    if (prop == Property::Regular)
      rep.points.push_back(is_regular_local(R, m));
    else if (prop == Property::CompleteIntersection)
      rep.points.push_back(is_complete_intersection(R, m));
    else
      return classify_map(prop, structure_map(R), points);
  }
  if (prop == Property::Regular) {
    rep.certified = standard_smooth_certificate(structure_map(R));
    if (rep.certified) rep.certificate = "smooth over the perfect base field";
  } else if (prop == Property::CompleteIntersection) {
    rep.certified = koszul_acyclic(R.relations(), PresentedAlgebra::polynomial(R.field(), R.vars(), "Q", R.ring()->order()));
    if (rep.certified) rep.certificate = "relations form a koszul-regular sequence";
  }
  return rep;
}

HkrReport hkr_equivalence_check(const AlgebraMap& eta, const std::vector<RationalPoint>& points) {
  AlgebraMap se = base_change(eta, eta);
  const PresentedAlgebra& S = eta.target();
  const PresentedAlgebra& Se = se.target();
  std::vector<Polynomial> ims;
  for (int copy = 0; copy < 2; ++copy)
    for (std::size_t i = 0; i < S.nvars(); ++i) ims.push_back(S.var(static_cast<int>(i)));
  HkrReport rep;
  rep.mu = AlgebraMap(Se, S, ims, "mu");
  rep.equivalent = true;
  for (const auto& m : points) {
    PointVerdict s = is_smooth_at(eta, m);
    // the diagonal point of S^e lies over m
    PointVerdict l = is_lci_at(rep.mu, m);
    HkrPoint h{m.name, s.verdict, l.verdict, s.aq[1], l.aq[2]};
    if (h.smooth != h.lci || h.aq1_eta != h.aq2_mu) rep.equivalent = false;
    rep.points.push_back(h);
  }
  return rep;
}

ImperfectionReport module_of_imperfection(const AlgebraMap& eta) {
  const PresentedAlgebra& l = eta.target();
  ImperfectionReport rep;
  if (l.krull_dimension() == 0) {
    FieldCertificate c = verify_field(l);
    if (!c.certified) throw InputError("target is not verified to be a field: " + c.reason);
    rep.field_certificate = c.reason;
  } else {
    if (!certified_domain(l)) throw InputError("target is not certified to be a domain");
    if (!certified_domain(eta.source())) throw InputError("source is not certified to be a domain");
    if (!map_is_injective(eta)) throw InputError("map does not extend to the fraction fields");
    rep.field_certificate = "fraction field of a certified domain";
  }
  HomologyReport h = aq_homology(eta, Coefficients::generic(), 1);
  rep.omega_rank = h.dim(0);
  rep.gamma = h.dim(1);
  return rep;
}

}  // namespace aq
