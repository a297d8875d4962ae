#include "aq/cotangent.hpp"

#include <algorithm>
#include <set>

namespace aq {

// ---------------------------------------------------------------- complexes

CotangentComplex cotangent_from_resolution(const SimplicialAlgebra& A, bool normalized) {
  SimplicialModule V = kahler_module(A);
  CotangentComplex L;
  L.mode = CotangentMode::Resolution;
  L.complex = normalized ? normalize(V) : alternating_complex(V);
  L.valid_degree = A.top() - 1;
  L.provenance = A.provenance();
  return L;
}

TruncatedCotangent cotangent_trunc2(const AlgebraMap& phi) {
  TruncatedCotangent T;
  T.pres = relative_presentation(phi);
  const RelativePresentation& rp = T.pres;
  const PresentedAlgebra& P = rp.P;
  const PresentedAlgebra& S = rp.S;
  const RingPtr& ring = P.ring();
  const std::size_t m = rp.f.size(), ny = rp.y_vars.size();

  FreeComplex C(S);
  std::vector<std::string> l0, l1;
  for (int y : rp.y_vars) l0.push_back("d" + P.vars()[static_cast<std::size_t>(y)]);
  for (std::size_t j = 0; j < m; ++j) l1.push_back("f" + std::to_string(j + 1));
  C.set_rank(0, ny, l0);
  C.set_rank(1, m, l1);

  PolyMatrix d1(ring, ny, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < ny; ++i) d1.at(i, j) = S.normal_form(rp.f[j].derivative(rp.y_vars[i]));
  if (ny && m) C.set_differential(1, d1);

  std::vector<PolyVec> fcols;
  for (const auto& g : rp.f) fcols.push_back({g});
  T.syz = m ? syzygies(P, 1, fcols) : std::vector<PolyVec>{};
  const std::size_t t = T.syz.size();
  std::vector<std::string> l2;
  for (std::size_t k = 0; k < t; ++k) l2.push_back("q" + std::to_string(k + 1));
  C.set_rank(2, t, l2);
  if (t) C.set_differential(2, PolyMatrix::from_columns(ring, m, T.syz).reduced(S));

  // relations among the syzygies modulo the Koszul relations
  std::vector<PolyVec> cols = T.syz;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      PolyVec k(m, Polynomial(ring));
      k[i] = rp.f[j];
      k[j] = -rp.f[i];
      cols.push_back(k);
    }
  std::vector<PolyVec> d3cols;
  if (t) {
    for (const auto& s : syzygies(P, m, cols)) {
      PolyVec v(s.begin(), s.begin() + static_cast<long>(t));
      for (auto& e : v) e = S.normal_form(e);
      if (std::all_of(v.begin(), v.end(), [](const Polynomial& e) { return e.is_zero(); })) continue;
      d3cols.push_back(v);
    }
  }
  std::vector<std::string> l3;
  for (std::size_t k = 0; k < d3cols.size(); ++k) l3.push_back("r" + std::to_string(k + 1));
  C.set_rank(3, d3cols.size(), l3);
  if (!d3cols.empty()) C.set_differential(3, PolyMatrix::from_columns(ring, t, d3cols));

  T.cotangent.mode = CotangentMode::Truncated;
  T.cotangent.complex = std::move(C);
  T.cotangent.valid_degree = 2;
  T.cotangent.provenance = "presentation";
  return T;
}

int epsilon(int l, int m) {
  if (m < l) return 0;
  if ((m - l) % 2 != 0) return 0;
  return l % 2 == 0 ? 1 : -1;
}

std::size_t hypersurface_rank_closed_form(int n) {
  if (n < 2) return 0;
  return n % 2 == 0 ? static_cast<std::size_t>((n - 2) / 2) : static_cast<std::size_t>((n + 1) / 2);
}

namespace {

std::size_t matrix_rank(const PolyMatrix& M, const PresentedAlgebra& A) {
  if (M.rows() == 0 || M.cols() == 0) return 0;
  bool constant = true;
  for (const auto& col : M.columns())
    for (const auto& e : col)
      if (!e.is_constant()) constant = false;
  if (constant) return M.evaluate(std::vector<Scalar>(A.nvars(), Scalar(0))).rank();
  return generic_rank(M, A);
}

}  // namespace

std::vector<std::size_t> hypersurface_rank_table(const CotangentComplex& L) {
  std::vector<std::size_t> out;
  for (int n = 2; n <= L.complex.max_degree(); ++n)
    out.push_back(matrix_rank(L.complex.differential(n), L.complex.ring()));
  return out;
}

bool rank_exactness_check(const FreeComplex& C, int n, const RationalPoint& p) {
  auto mats = tensor_with_residue(C, p);
  auto rk = [&](int k) { return mats.count(k) ? mats.at(k).rank() : std::size_t{0}; };
  return rk(n) + rk(n + 1) == C.rank(n);
}

// ---------------------------------------------------------------- homology

std::string Coefficients::describe() const {
  switch (kind) {
    case Kind::Residue:
      return "residue(" + (point.name.empty() ? std::string("point") : point.name) + ")";
    case Kind::Generic:
      return "generic";
    case Kind::Module:
      break;
  }
  return "module(" + module.describe() + ")";
}

std::size_t HomologyReport::dim(int n) const {
  for (const auto& d : degrees)
    if (d.n == n) {
      if (!d.dim) throw AlgebraError("degree " + std::to_string(n) + " has no finite dimension");
      return *d.dim;
    }
  throw AlgebraError("degree " + std::to_string(n) + " was not computed");
}

namespace {

const char* mode_name(CotangentMode m) { return m == CotangentMode::Resolution ? "resolution" : "truncated"; }

// target element -> element of the ring of L (same variables as rp.S)
Polynomial to_complex_ring(const Polynomial& p, const RelativePresentation& rp, const PresentedAlgebra& A) {
  Polynomial q = p.substitute(rp.P.ring(), rp.target_to_S);
  return A.normal_form(A.ring() == rp.P.ring() ? q : q.in_ring(A.ring()));
}

Coefficients transport(const Coefficients& N, const RelativePresentation& rp, const PresentedAlgebra& A) {
  switch (N.kind) {
    case Coefficients::Kind::Residue: {
      RationalPoint q = rp.point_in_S(N.point);
      if (!A.contains_point(q.coords)) throw InputError("not a rational point of " + A.name());
      return Coefficients::residue(q);
    }
    case Coefficients::Kind::Generic:
      return N;
    case Coefficients::Kind::Module:
      break;
  }
  const FPModule& M = N.module;
  PolyMatrix rel(A.ring(), M.num_generators(), M.relations().cols());
  for (std::size_t c = 0; c < rel.cols(); ++c)
    for (std::size_t r = 0; r < rel.rows(); ++r) rel.at(r, c) = to_complex_ring(M.relations().at(r, c), rp, A);
  return Coefficients::of_module(FPModule(A, M.num_generators(), rel, M.labels()));
}

HomologyReport compute(const CotangentComplex& L, const Coefficients& N, int n_max, const std::string& name,
                       bool cohomology, const std::string& coeff_desc) {
  if (n_max > L.valid_degree)
    throw AlgebraError("insufficient machinery: " + std::string(mode_name(L.mode)) + " mode computes degrees <= " +
                       std::to_string(L.valid_degree));
  HomologyReport rep;
  rep.map_name = name;
  rep.coefficients = coeff_desc;
  rep.mode = mode_name(L.mode);
  rep.cohomology = cohomology;
  rep.cutoff = L.valid_degree;
  const FreeComplex& C = L.complex;
  if (N.kind == Coefficients::Kind::Generic && !certified_domain(C.ring()))
    throw AlgebraError("generic coefficients need a certified domain");
  for (int n = 0; n <= n_max; ++n) {
    DegreeResult d;
    d.n = n;
    switch (N.kind) {
      case Coefficients::Kind::Residue:
        d.dim = homology_dim_at(C, n, N.point);
        break;
      case Coefficients::Kind::Generic:
        d.dim = homology_generic_dim(C, n);
        break;
      case Coefficients::Kind::Module: {
        TensoredComplex T = tensor_with_module(C, N.module);
        FPModule H = (cohomology ? complex_cohomology(T, n) : complex_homology(T, n)).pruned();
        if (H.is_zero())
          d.dim = 0;
        else
          d.dim = H.length_dimension();
        d.module = H;
        break;
      }
    }
    rep.degrees.push_back(std::move(d));
  }
  return rep;
}

bool koszul_acyclic(const std::vector<Polynomial>& f, const PresentedAlgebra& P) {
  FreeComplex K = koszul_complex(f, P);
  for (int n = 1; n <= static_cast<int>(f.size()); ++n)
    if (!complex_homology(K, n).is_zero()) return false;
  return true;
}

SimplicialAlgebra kill_presentation(const AlgebraMap& phi, const RelativePresentation& rp, int top) {
  std::vector<std::string> ynames;
  for (int y : rp.y_vars) ynames.push_back(rp.P.vars()[static_cast<std::size_t>(y)]);
  SimplicialAlgebra A = SimplicialAlgebra::constant(phi.source(), ynames, top);
  for (std::size_t i = 0; i < rp.f.size(); ++i) {
    Polynomial w = rp.f[i].in_ring(A.level_ring(0).ring());
    A = SimplicialAlgebra::kill_cycle(A, w, 1, rp.f.size() == 1 ? "x" : "x" + std::to_string(i + 1));
  }
  return A;
}

HomologyReport aq_any(const AlgebraMap& phi, const Coefficients& N, int n_max, bool cohomology) {
  if (n_max < 0) throw InputError("negative degree bound");
  if (N.kind == Coefficients::Kind::Module && N.module.ring().ring() && !N.module.ring().ring()->same_as(*phi.target().ring()))
    throw InputError("coefficient module is not over the target");
  if (n_max <= 2) {
    TruncatedCotangent T = cotangent_trunc2(phi);
    return compute(T.cotangent, transport(N, T.pres, T.cotangent.complex.ring()), n_max, phi.name(), cohomology,
                   N.describe());
  }
  RelativePresentation rp = relative_presentation(phi);
  if (!koszul_acyclic(rp.f, rp.P))
    throw AlgebraError("insufficient machinery: degree " + std::to_string(n_max) +
                       " needs a resolution; truncated mode stops at degree 2 and the presentation is not a regular sequence");
  SimplicialAlgebra A = kill_presentation(phi, rp, n_max + 1);
  CotangentComplex L = cotangent_from_resolution(A, true);
  HomologyReport rep = compute(L, transport(N, rp, L.complex.ring()), n_max, phi.name(), cohomology, N.describe());
  rep.checks.push_back("koszul-acyclic presentation");
  if (N.kind != Coefficients::Kind::Module) {
    TruncatedCotangent T = cotangent_trunc2(phi);
    HomologyReport low = compute(T.cotangent, transport(N, T.pres, T.cotangent.complex.ring()), 2, phi.name(),
                                 cohomology, N.describe());
    for (int n = 0; n <= 2; ++n)
      if (low.dim(n) != rep.dim(n)) throw AlgebraError("resolution and truncated complexes disagree in degree " + std::to_string(n));
    rep.checks.push_back("truncated complex agrees in degrees <= 2");
  }
  return rep;
}

}  // namespace

HomologyReport aq_homology(const AlgebraMap& phi, const Coefficients& N, int n_max) {
  return aq_any(phi, N, n_max, false);
}

HomologyReport aq_cohomology(const AlgebraMap& phi, const Coefficients& N, int n_max) {
  if (n_max > 2) throw AlgebraError("insufficient machinery: cohomology is computed in degrees <= 2");
  return aq_any(phi, N, n_max, true);
}

HomologyReport aq_homology(const CotangentComplex& L, const Coefficients& N, int n_max, const std::string& name) {
  return compute(L, N, n_max, name, false, N.describe());
}

std::vector<std::size_t> aq_dims_at(const AlgebraMap& phi, const RationalPoint& p, int n_max) {
  HomologyReport r = aq_homology(phi, Coefficients::residue(p), n_max);
  std::vector<std::size_t> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(r.dim(n));
  return out;
}

// ---------------------------------------------------------------- Tor

namespace {

// d_1 = [f], d_{k+1} = syzygies of the columns of d_k, over P
std::vector<PolyMatrix> syzygy_resolution(const RelativePresentation& rp, int length) {
  const RingPtr& ring = rp.P.ring();
  std::vector<PolyMatrix> d;
  std::vector<PolyVec> cols;
  for (const auto& g : rp.f) cols.push_back({g});
  d.push_back(PolyMatrix::from_columns(ring, 1, cols));
  for (int k = 1; k < length; ++k) {
    const PolyMatrix& prev = d.back();
    std::vector<PolyVec> next = prev.cols() ? syzygies(rp.P, prev.rows(), prev.columns()) : std::vector<PolyVec>{};
    d.push_back(PolyMatrix::from_columns(ring, prev.cols(), next));
  }
  return d;
}

}  // namespace

TorReport tor_modules(const AlgebraMap& phi, const RationalPoint& p, int n_max) {
  if (n_max < 0 || n_max > 3) throw InputError("Tor is computed in degrees 0..3");
  RelativePresentation rp = relative_presentation(phi);
  RationalPoint q = rp.point_in_S(p);
  if (!rp.S.contains_point(q.coords)) throw InputError("not a rational point of " + phi.target().name());
  TorReport rep;
  rep.differentials = syzygy_resolution(rp, n_max + 1);
  // F (x)_R k(p_R) = F (x)_P k[Y]
  std::vector<std::string> ynames;
  for (int y : rp.y_vars) ynames.push_back(rp.P.vars()[static_cast<std::size_t>(y)]);
  PresentedAlgebra K = PresentedAlgebra::polynomial(rp.P.field(), ynames, "k[Y]");
  std::vector<Polynomial> img;
  for (std::size_t z = 0; z < rp.num_source_vars(); ++z) img.push_back(Polynomial::constant(K.ring(), q.coords[z]));
  for (std::size_t i = 0; i < rp.y_vars.size(); ++i) img.push_back(K.var(static_cast<int>(i)));
  FreeComplex C(K);
  C.set_rank(0, 1);
  for (std::size_t k = 0; k < rep.differentials.size(); ++k) {
    const PolyMatrix& D = rep.differentials[k];
    C.set_rank(static_cast<int>(k + 1), D.cols());
    PolyMatrix E(K.ring(), D.rows(), D.cols());
    for (std::size_t c = 0; c < D.cols(); ++c)
      for (std::size_t r = 0; r < D.rows(); ++r) E.at(r, c) = D.at(r, c).substitute(K.ring(), img);
    if (D.cols() && D.rows()) C.set_differential(static_cast<int>(k + 1), E);
  }
  for (int n = 0; n <= n_max; ++n) {
    FPModule H = complex_homology(C, n).pruned();
    rep.dims.push_back(H.is_zero() ? std::optional<std::size_t>(0) : H.length_dimension());
    rep.modules.push_back(H);
  }
  return rep;
}

std::vector<Polynomial> minimal_local_generators(const RelativePresentation& rp, const RationalPoint& q) {
  if (!rp.S.contains_point(q.coords)) throw InputError("not a rational point of " + rp.S.name());
  const RingPtr& ring = rp.P.ring();
  std::vector<Polynomial> mI;
  for (std::size_t v = 0; v < rp.P.nvars(); ++v) {
    Polynomial lin = Polynomial::variable(ring, static_cast<int>(v)) - Polynomial::constant(ring, q.coords[v]);
    for (const auto& g : rp.f) mI.push_back(lin * g);
  }
  std::vector<Polynomial> basis;
  for (const auto& g : rp.f) {
    std::vector<Polynomial> gens = mI;
    gens.insert(gens.end(), basis.begin(), basis.end());
    if (!rp.P.quotient(gens).is_zero(g)) basis.push_back(g);
  }
  return basis;
}

std::size_t conormal_dim_at(const AlgebraMap& phi, const RationalPoint& p) {
  RelativePresentation rp = relative_presentation(phi);
  return minimal_local_generators(rp, rp.point_in_S(p)).size();
}

std::vector<std::size_t> tor_dims_via_koszul(const AlgebraMap& phi, const RationalPoint& p, int n_max) {
  const PresentedAlgebra& R = phi.source();
  const PresentedAlgebra& S = phi.target();
  if (!R.is_polynomial_ring()) throw InputError("Koszul route needs a polynomial source ring");
  if (!S.contains_point(p.coords)) throw InputError("not a rational point of " + S.name());
  RationalPoint pr = phi.pullback(p);
  std::vector<Polynomial> elems;
  for (std::size_t z = 0; z < R.nvars(); ++z)
    elems.push_back(S.normal_form(phi.images()[z] - Polynomial::constant(S.ring(), pr.coords[z])));
  FreeComplex K = koszul_complex(elems, S);
  std::vector<std::size_t> out;
  for (int n = 0; n <= n_max; ++n) {
    FPModule H = complex_homology(K, n).pruned();
    if (H.is_zero()) {
      out.push_back(0);
      continue;
    }
    auto d = H.length_dimension();
    if (!d) throw AlgebraError("Tor has infinite length; the fibre is not finite");
    out.push_back(*d);
  }
  return out;
}

FiveTermReport five_term_check(const AlgebraMap& phi, const RationalPoint& p) {
  TruncatedCotangent T = cotangent_trunc2(phi);
  const RelativePresentation& rp = T.pres;
  if (!rp.y_vars.empty()) throw InputError("five-term check needs a surjective map");
  RationalPoint q = rp.point_in_S(p);
  const FreeComplex& L = T.cotangent.complex;
  FiveTermReport rep;
  rep.aq1 = homology_dim_at(L, 1, q);
  rep.aq2 = homology_dim_at(L, 2, q);

  std::vector<std::size_t> tor;
  if (phi.source().is_polynomial_ring()) {
    tor = tor_dims_via_koszul(phi, p, 2);
  } else {
    TorReport tr = tor_modules(phi, p, 2);
    for (const auto& d : tr.dims) tor.push_back(d.value_or(0));
  }
  rep.tor1 = tor[1];
  rep.tor2 = tor[2];
  rep.degree1_agrees = rep.aq1 == rep.tor1 && rep.aq1 == conormal_dim_at(phi, p);

  // w on classes e_i e_j: lift the Koszul relations through d_2
  const std::size_t m = rp.f.size();
  const RingPtr& ring = rp.P.ring();
  const std::size_t t = T.syz.size();
  std::vector<std::vector<Scalar>> wcols;
  FieldMatrix d3;
  if (t) {
    PolyMatrix Q = PolyMatrix::from_columns(ring, m, T.syz);
    Lifter lift(rp.P, Q);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        PolyVec k(m, Polynomial(ring));
        k[i] = rp.f[j];
        k[j] = -rp.f[i];
        auto c = lift.lift(k);
        if (!c) throw AlgebraError("Koszul relation does not lift through the syzygies");
        std::vector<Scalar> v;
        for (const auto& e : *c) v.push_back(e.evaluate(q.coords));
        wcols.push_back(v);
      }
    std::vector<PolyVec> s3 = syzygies(rp.P, m, T.syz);
    d3 = PolyMatrix::from_columns(ring, t, s3).evaluate(q.coords);
    std::size_t r3 = s3.empty() ? 0 : d3.rank();
    FieldMatrix W = FieldMatrix::from_columns(rp.P.field(), t, wcols);
    std::size_t both = s3.empty() ? (wcols.empty() ? 0 : W.rank()) : (wcols.empty() ? r3 : W.hstack(d3).rank());
    rep.rank_w = both - r3;
  }
  rep.exact = rep.degree1_agrees && rep.aq2 + rep.rank_w == rep.tor2;
  return rep;
}

// ---------------------------------------------------------------- transitivity

JacobiZariskiWindow jacobi_zariski_window(const AlgebraMap& psi, const AlgebraMap& phi, const RationalPoint& p) {
  RationalPoint pr = phi.pullback(p);
  auto sr = aq_dims_at(phi, p, 2);
  auto rq = aq_dims_at(psi, pr, 1);
  auto sq = aq_dims_at(phi.compose_after(psi), p, 1);
  JacobiZariskiWindow w;
  w.dims = {sr[2], rq[1], sq[1], sr[1], rq[0], sq[0], sr[0]};
  // ranks f_i: V_i -> V_{i+1}, forced from the right end
  std::vector<long> f(7, 0);
  f[6] = 0;
  bool ok = true;
  for (int i = 6; i >= 1; --i) {
    f[static_cast<std::size_t>(i - 1)] = static_cast<long>(w.dims[static_cast<std::size_t>(i)]) - f[static_cast<std::size_t>(i)];
  }
  for (int i = 0; i < 6; ++i) {
    long r = f[static_cast<std::size_t>(i)];
    long lim = static_cast<long>(std::min(w.dims[static_cast<std::size_t>(i)], w.dims[static_cast<std::size_t>(i + 1)]));
    if (r < 0 || r > lim) ok = false;
  }
  w.ranks = f;
  w.consistent = ok;
  return w;
}

// ---------------------------------------------------------------- base change

AlgebraMap base_change(const AlgebraMap& phi, const AlgebraMap& rho) {
  const PresentedAlgebra& Sp = phi.target();
  const PresentedAlgebra& R = rho.target();
  if (!phi.source().ring()->same_as(*rho.source().ring())) throw InputError("maps do not share a source");
  std::vector<std::string> names = Sp.vars();
  std::set<std::string> used(names.begin(), names.end());
  std::vector<int> rmap;
  for (const auto& v : R.vars()) {
    std::string nm = v;
    while (used.count(nm)) nm += "'";
    used.insert(nm);
    rmap.push_back(static_cast<int>(names.size()));
    names.push_back(nm);
  }
  std::vector<int> smap(Sp.nvars());
  for (std::size_t i = 0; i < smap.size(); ++i) smap[i] = static_cast<int>(i);
  RingPtr ring = make_ring(Sp.field(), names, MonomialOrder{Sp.ring()->order().kind, {}});
  std::vector<Polynomial> rels;
  for (const auto& g : Sp.relations()) rels.push_back(g.rename(ring, smap));
  for (const auto& g : R.relations()) rels.push_back(g.rename(ring, rmap));
  for (std::size_t z = 0; z < phi.images().size(); ++z)
    rels.push_back(phi.images()[z].rename(ring, smap) - rho.images()[z].rename(ring, rmap));
  PresentedAlgebra Tn(ring, rels, Sp.name() + "*" + R.name());
  std::vector<Polynomial> ims;
  for (std::size_t i = 0; i < R.nvars(); ++i) ims.push_back(Tn.normal_form(Polynomial::variable(ring, rmap[i])));
  return AlgebraMap(R, Tn, ims, phi.name() + "*" + rho.name());
}

BaseChangeReport base_change_check(const AlgebraMap& phi, const AlgebraMap& rho,
                                   const std::vector<std::vector<Scalar>>& points) {
  BaseChangeReport rep;
  rep.changed = base_change(phi, rho);
  rep.equal = true;
  const std::size_t ns = phi.target().nvars();
  for (const auto& c : points) {
    RationalPoint q{"", c};
    if (!rep.changed.target().contains_point(c)) throw InputError("not a rational point of " + rep.changed.target().name());
    RationalPoint qs{"", std::vector<Scalar>(c.begin(), c.begin() + static_cast<long>(ns))};
    auto a = aq_dims_at(phi, qs, 2);
    auto b = aq_dims_at(rep.changed, q, 2);
    rep.dims_original.push_back(a);
    rep.dims_changed.push_back(b);
    if (a != b) rep.equal = false;
  }
  return rep;
}

RetractReport retract_check(const PresentedAlgebra& S, const RationalPoint& p) {
  std::vector<std::string> names = S.vars();
  std::string x = "x";
  while (std::find(names.begin(), names.end(), x) != names.end()) x += "'";
  names.push_back(x);
  RingPtr ring = make_ring(S.field(), names, MonomialOrder{S.ring()->order().kind, {}});
  std::vector<int> map(S.nvars());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<int>(i);
  std::vector<Polynomial> rels;
  for (const auto& g : S.relations()) rels.push_back(g.rename(ring, map));
  PresentedAlgebra R(ring, rels, S.name() + "[" + x + "]");
  std::vector<Polynomial> up, down;
  for (std::size_t i = 0; i < S.nvars(); ++i) {
    up.push_back(R.var(static_cast<int>(i)));
    down.push_back(S.var(static_cast<int>(i)));
  }
  down.push_back(Polynomial(S.ring()));
  AlgebraMap psi(S, R, up, "incl");
  AlgebraMap pi(R, S, down, "retract");
  RationalPoint pR{p.name, p.coords};
  pR.coords.push_back(Scalar(0));
  auto s_r = aq_dims_at(pi, p, 2);
  auto r_s = aq_dims_at(psi, pR, 1);
  RetractReport rep;
  rep.s_over_r = {s_r[1], s_r[2]};
  rep.r_over_s = {r_s[0], r_s[1]};
  rep.equal = rep.s_over_r == rep.r_over_s;
  return rep;
}

}  // namespace aq
