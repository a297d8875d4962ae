#include "aq/kahler.hpp"

#include <set>

namespace aq {

namespace {

PolyVec gradient(const Polynomial& f, const PresentedAlgebra& S) {
  PolyVec g;
  for (std::size_t i = 0; i < S.nvars(); ++i) g.push_back(S.normal_form(f.derivative(static_cast<int>(i))));
  return g;
}

std::vector<std::string> d_labels(const PresentedAlgebra& S) {
  std::vector<std::string> out;
  for (const auto& v : S.vars()) out.push_back("d" + v);
  return out;
}

}  // namespace

KahlerPresentation kahler_presentation(const AlgebraMap& phi) {
  const PresentedAlgebra& S = phi.target();
  std::vector<PolyVec> cols;
  for (const auto& r : S.relations()) cols.push_back(gradient(r, S));
  for (const auto& im : phi.images()) cols.push_back(gradient(im, S));
  PolyMatrix J = PolyMatrix::from_columns(S.ring(), S.nvars(), cols);
  return {J, FPModule(S, S.nvars(), J, d_labels(S))};
}

PolyMatrix jacobian_of_map(const AlgebraMap& phi) {
  const PresentedAlgebra& S = phi.target();
  std::vector<PolyVec> cols;
  for (const auto& im : phi.images()) cols.push_back(gradient(im, S));
  return PolyMatrix::from_columns(S.ring(), S.nvars(), cols);
}

namespace {

// S (x)_R S on variables w, w' with the diagonal elements w - w'
std::pair<PresentedAlgebra, std::vector<Polynomial>> tensor_square(const AlgebraMap& phi) {
  const PresentedAlgebra& S = phi.target();
  const std::size_t n = S.nvars();
  std::vector<std::string> names = S.vars();
  std::set<std::string> used(names.begin(), names.end());
  for (std::size_t i = 0; i < n; ++i) {
    std::string nm = S.vars()[i] + "'";
    while (used.count(nm)) nm += "'";
    used.insert(nm);
    names.push_back(nm);
  }
  RingPtr tr = make_ring(S.field(), names, MonomialOrder{S.ring()->order().kind, {}});
  std::vector<int> left(n), right(n);
  for (std::size_t i = 0; i < n; ++i) {
    left[i] = static_cast<int>(i);
    right[i] = static_cast<int>(n + i);
  }
  std::vector<Polynomial> rels;
  for (const auto& r : S.relations()) {
    rels.push_back(r.rename(tr, left));
    rels.push_back(r.rename(tr, right));
  }
  for (const auto& im : phi.images()) rels.push_back(im.rename(tr, left) - im.rename(tr, right));
  PresentedAlgebra T(tr, rels, "T");
  std::vector<Polynomial> diag;
  for (std::size_t i = 0; i < n; ++i)
    diag.push_back(Polynomial::variable(tr, static_cast<int>(i)) - Polynomial::variable(tr, static_cast<int>(n + i)));
  return {T, diag};
}

}  // namespace

DiagonalOracle kahler_oracle_via_diagonal(const AlgebraMap& phi) {
  const PresentedAlgebra& S = phi.target();
  const std::size_t n = S.nvars();
  auto [T, diag] = tensor_square(phi);
  std::vector<PolyVec> cols;
  for (const auto& d : diag) cols.push_back({d});
  std::vector<PolyVec> syz = syzygies(T, 1, cols);
  // mu: w, w' -> w
  std::vector<Polynomial> mu;
  for (std::size_t i = 0; i < n; ++i) mu.push_back(S.var(static_cast<int>(i)));
  for (std::size_t i = 0; i < n; ++i) mu.push_back(S.var(static_cast<int>(i)));
  std::vector<PolyVec> rel;
  for (const auto& s : syz) {
    PolyVec v;
    for (const auto& p : s) v.push_back(S.normal_form(p.substitute(S.ring(), mu)));
    rel.push_back(v);
  }
  FPModule conormal(S, n, PolyMatrix::from_columns(S.ring(), n, rel), d_labels(S));
  return {T, diag, conormal};
}

std::size_t diagonal_conormal_dim_at(const AlgebraMap& phi, const RationalPoint& p) {
  const PresentedAlgebra& S = phi.target();
  if (!S.contains_point(p.coords)) throw InputError("not a rational point of " + S.name());
  auto [T, diag] = tensor_square(phi);
  const RingPtr& tr = T.ring();
  std::vector<Polynomial> mI;
  for (std::size_t v = 0; v < T.nvars(); ++v) {
    Polynomial lin = Polynomial::variable(tr, static_cast<int>(v)) -
                     Polynomial::constant(tr, p.coords[v % S.nvars()]);
    for (const auto& e : diag) mI.push_back(lin * e);
  }
  std::vector<Polynomial> basis;
  for (const auto& e : diag) {
    std::vector<Polynomial> gens = mI;
    gens.insert(gens.end(), basis.begin(), basis.end());
    if (!T.quotient(gens).is_zero(e)) basis.push_back(e);
  }
  return basis.size();
}

namespace {

// map a source-ring matrix column through phi
PolyVec push(const AlgebraMap& phi, const PolyVec& v) {
  PolyVec out;
  for (const auto& p : v) out.push_back(phi.apply(p));
  return out;
}

}  // namespace

ExactnessReport jacobi_zariski_right_exact(const AlgebraMap& psi, const AlgebraMap& phi) {
  const PresentedAlgebra& S = phi.target();
  AlgebraMap comp = phi.compose_after(psi);
  KahlerPresentation om_sq = kahler_presentation(comp);
  KahlerPresentation om_sr = kahler_presentation(phi);
  KahlerPresentation om_rq = kahler_presentation(psi);
  PolyMatrix dphi = jacobian_of_map(phi);  // |W| x |Z|
  const std::size_t nw = S.nvars();
  ExactnessReport rep;
  Submodule rel_sq(S, nw, om_sq.jacobian.columns());
  // relations of Omega_{R|Q} pushed to S land in the relations of Omega_{S|Q}
  rep.well_defined = true;
  for (const auto& col : om_rq.jacobian.columns()) {
    PolyVec in_s = push(phi, col);
    PolyMatrix c = PolyMatrix::from_columns(S.ring(), in_s.size(), {in_s});
    PolyMatrix img = dphi * c;
    if (!rel_sq.contains(img.column(0))) rep.well_defined = false;
  }
  // kernel of Omega_{S|Q} -> Omega_{S|R} equals image of Omega_{R|Q} (x) S
  std::vector<PolyVec> img = om_sq.jacobian.columns();
  for (const auto& c : dphi.columns()) img.push_back(c);
  Submodule image_plus(S, nw, img);
  Submodule rel_sr(S, nw, om_sr.jacobian.columns());
  rep.exact_middle = image_plus.same_as(rel_sr);
  // identity on generators dw
  rep.surjective_right = true;
  return rep;
}

ExactnessReport conormal_sequence(const AlgebraMap& phi) {
  const PresentedAlgebra& R = phi.source();
  const PresentedAlgebra& S = phi.target();
  RelativePresentation rp = relative_presentation(phi);
  if (!rp.y_vars.empty()) throw InputError("conormal sequence needs a surjection");
  const std::size_t nz = R.nvars(), nw = S.nvars();
  PolyMatrix dphi = jacobian_of_map(phi);
  // relations of Omega_R (x) S and images of df, all over S on generators dz
  std::vector<PolyVec> rel_r, df;
  for (const auto& r : R.relations()) rel_r.push_back(push(phi, gradient(r, R)));
  // rp.P has the same variables as R
  for (const auto& f : rp.f) {
    PolyVec g;
    for (std::size_t i = 0; i < nz; ++i) g.push_back(phi.apply(f.derivative(static_cast<int>(i)).in_ring(R.ring())));
    df.push_back(g);
  }
  std::vector<PolyVec> jac_s;
  for (const auto& r : S.relations()) jac_s.push_back(gradient(r, S));
  ExactnessReport rep;
  // Omega_R (x) S -> Omega_S well defined
  Submodule rel_s(S, nw, jac_s);
  rep.well_defined = true;
  for (const auto& col : rel_r) {
    PolyMatrix img = dphi * PolyMatrix::from_columns(S.ring(), nz, {col});
    if (!rel_s.contains(img.column(0))) rep.well_defined = false;
  }
  // kernel of Omega_R (x) S -> Omega_S
  std::vector<PolyVec> cols = dphi.columns();
  for (const auto& c : jac_s) cols.push_back(c);
  std::vector<PolyVec> ker;
  for (const auto& s : syzygies(S, nw, cols)) ker.push_back(PolyVec(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(nz)));
  for (const auto& c : rel_r) ker.push_back(c);
  std::vector<PolyVec> image = rel_r;
  for (const auto& c : df) image.push_back(c);
  rep.exact_middle = Submodule(S, nz, ker).same_as(Submodule(S, nz, image));
  // every dw lies in the image
  std::vector<PolyVec> span = dphi.columns();
  for (const auto& c : jac_s) span.push_back(c);
  Submodule target(S, nw, span);
  rep.surjective_right = true;
  for (std::size_t w = 0; w < nw; ++w) {
    PolyVec e(nw, Polynomial(S.ring()));
    e[w] = S.constant(1);
    if (!target.contains(e)) rep.surjective_right = false;
  }
  return rep;
}

TensorKahler kahler_of_tensor_product(const AlgebraMap& phi1, const AlgebraMap& phi2) {
  const PresentedAlgebra& R = phi1.source();
  if (!R.ring()->same_as(*phi2.source().ring())) throw InputError("maps have different sources");
  const PresentedAlgebra& S1 = phi1.target();
  const PresentedAlgebra& S2 = phi2.target();
  std::vector<std::string> names;
  std::set<std::string> used;
  for (const auto& v : S1.vars()) {
    names.push_back(v);
    used.insert(v);
  }
  for (const auto& v : S2.vars()) {
    std::string nm = v;
    while (used.count(nm)) nm += "'";
    used.insert(nm);
    names.push_back(nm);
  }
  const std::size_t n1 = S1.nvars(), n2 = S2.nvars();
  RingPtr tr = make_ring(R.field(), names, MonomialOrder{S1.ring()->order().kind, {}});
  std::vector<int> m1(n1), m2(n2);
  for (std::size_t i = 0; i < n1; ++i) m1[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < n2; ++i) m2[i] = static_cast<int>(n1 + i);
  std::vector<Polynomial> rels;
  for (const auto& r : S1.relations()) rels.push_back(r.rename(tr, m1));
  for (const auto& r : S2.relations()) rels.push_back(r.rename(tr, m2));
  for (std::size_t z = 0; z < R.nvars(); ++z)
    rels.push_back(phi1.images()[z].rename(tr, m1) - phi2.images()[z].rename(tr, m2));
  PresentedAlgebra T(tr, rels, "T");
  std::vector<Polynomial> ims;
  for (const auto& im : phi1.images()) ims.push_back(im.rename(tr, m1));
  AlgebraMap to_t(R, T, ims, "R->T");
  KahlerPresentation direct = kahler_presentation(to_t);
  // block sum of base-changed presentations
  std::vector<PolyVec> cols;
  auto base_change = [&](const KahlerPresentation& k, const std::vector<int>& m, std::size_t offset) {
    for (const auto& c : k.jacobian.columns()) {
      PolyVec v(n1 + n2, Polynomial(tr));
      for (std::size_t i = 0; i < c.size(); ++i) v[offset + i] = T.normal_form(c[i].rename(tr, m));
      cols.push_back(v);
    }
  };
  base_change(kahler_presentation(phi1), m1, 0);
  base_change(kahler_presentation(phi2), m2, n1);
  std::vector<std::string> labels;
  for (const auto& v : names) labels.push_back("d" + v);
  TensorKahler out;
  out.tensor = T;
  out.direct = direct.module;
  out.sum_of_base_changes = FPModule(T, n1 + n2, PolyMatrix::from_columns(tr, n1 + n2, cols), labels);
  out.isomorphic = Submodule(T, n1 + n2, direct.jacobian.columns()).same_as(Submodule(T, n1 + n2, cols));
  return out;
}

std::vector<std::vector<Scalar>> derivations_at_point(const AlgebraMap& phi, const RationalPoint& m) {
  KahlerPresentation k = kahler_presentation(phi);
  if (!phi.target().contains_point(m.coords)) throw InputError("not a rational point");
  return k.jacobian.evaluate(m.coords).transpose().kernel();
}

bool is_derivation_at(const AlgebraMap& phi, const RationalPoint& m, const std::vector<Scalar>& values) {
  KahlerPresentation k = kahler_presentation(phi);
  FieldMatrix J = k.jacobian.evaluate(m.coords);
  const Field& F = phi.target().field();
  for (std::size_t c = 0; c < J.cols(); ++c) {
    Scalar s(0);
    for (std::size_t r = 0; r < J.rows(); ++r) s = F.add(s, F.mul(J.at(r, c), values[r]));
    if (!Field::is_zero(s)) return false;
  }
  return true;
}

Polynomial apply_derivation(const AlgebraMap& phi, const std::vector<Polynomial>& values, const Polynomial& f) {
  const PresentedAlgebra& S = phi.target();
  Polynomial acc(S.ring());
  for (std::size_t i = 0; i < S.nvars(); ++i) acc += f.derivative(static_cast<int>(i)) * values[i];
  return S.normal_form(acc);
}

bool is_derivation(const AlgebraMap& phi, const std::vector<Polynomial>& values) {
  const PresentedAlgebra& S = phi.target();
  for (const auto& r : S.relations())
    if (!apply_derivation(phi, values, r).is_zero()) return false;
  for (const auto& im : phi.images())
    if (!apply_derivation(phi, values, im).is_zero()) return false;
  return true;
}

}  // namespace aq
