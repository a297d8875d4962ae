#include "aq/suites.hpp"

#include <functional>
#include <random>

namespace aq {

namespace {

struct Builder {
  OrderKind order;
  MonomialOrder mo() const { return MonomialOrder{order, {}}; }
  PresentedAlgebra poly(Field k, std::vector<std::string> vars, std::string name) const {
    return PresentedAlgebra::polynomial(k, std::move(vars), std::move(name), mo());
  }
  PresentedAlgebra ring(Field k, std::vector<std::string> vars, const std::vector<std::string>& rels,
                        std::string name) const {
    return PresentedAlgebra::parse(k, std::move(vars), rels, std::move(name), mo());
  }
};

AlgebraMap over_field(const PresentedAlgebra& S, const std::string& name = "eta") {
  return AlgebraMap(PresentedAlgebra::polynomial(S.field(), {}, "k"), S, {}, name);
}

AlgebraMap same_names(const PresentedAlgebra& R, const PresentedAlgebra& S, const std::string& name) {
  return AlgebraMap::parse(R, S, {}, name);
}

RationalPoint at(const PresentedAlgebra& S, const std::vector<long>& c, const std::string& name) {
  std::vector<std::pair<std::string, Scalar>> v;
  for (std::size_t i = 0; i < c.size(); ++i) v.emplace_back(S.vars()[i], S.field().make(c[i]));
  return make_point(S, v, name);
}

std::string dims_string(const std::vector<std::size_t>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s;
}

// runs one case; failures and exceptions are recorded
void run_case(SuiteResult& r, const std::string& name, const std::function<bool(Json&, std::string&)>& body) {
  ++r.cases;
  Json detail = {{"case", name}};
  std::string why;
  bool ok = false;
  try {
    ok = body(detail, why);
  } catch (const std::exception& e) {
    why = e.what();
    ok = false;
  }
  detail["ok"] = ok;
  if (ok) {
    ++r.passed;
  } else {
    detail["failure"] = why;
    r.failures.push_back(name + ": " + why);
  }
  r.details.push_back(detail);
}

// ---------------------------------------------------------------- suites

SuiteResult polynomial_vanishing(const Builder& b) {
  SuiteResult r;
  struct Inst {
    Field k;
    std::vector<std::string> base;
    std::vector<std::string> vars;
    std::vector<std::string> rels;
    std::size_t ny;
    std::vector<std::vector<long>> points;
  };
  const Field Q = Field::rationals(), F5 = Field::prime(5);
  std::vector<Inst> corpus = {
      {Q, {}, {"y1"}, {}, 1, {{0}, {3}}},
      {Q, {}, {"y1", "y2"}, {}, 2, {{0, 0}, {1, -2}}},
      {Q, {}, {"y1", "y2", "y3"}, {}, 3, {{0, 0, 0}, {1, 2, 3}}},
      {F5, {}, {"y1"}, {}, 1, {{0}, {4}}},
      {F5, {}, {"y1", "y2", "y3"}, {}, 3, {{0, 0, 0}, {1, 1, 2}}},
      {F5, {}, {"y1", "y2", "w"}, {"w-y1^2-2*y2"}, 2, {{0, 0, 0}, {1, 1, 3}}},
      {Q, {"t"}, {"t", "y1"}, {}, 1, {{0, 0}, {2, 1}}},
      {Q, {"t"}, {"t", "y1", "y2"}, {}, 2, {{0, 0, 0}, {1, 1, 1}}},
      {Q, {"t"}, {"t", "y1", "y2", "y3"}, {}, 3, {{0, 0, 0, 0}, {-1, 0, 2, 1}}},
      {Q, {"t"}, {"t", "y1", "w"}, {"w-t*y1-y1^3"}, 1, {{0, 0, 0}, {1, 1, 2}}},
  };
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Inst& in = corpus[i];
    run_case(r, "poly-" + std::to_string(i + 1), [&](Json& d, std::string& why) {
      PresentedAlgebra R = b.poly(in.k, in.base, "R");
      PresentedAlgebra S = b.ring(in.k, in.vars, in.rels, "S");
      AlgebraMap phi = same_names(R, S, "phi");
      HomologyReport h = aq_homology(phi, Coefficients::target_ring(S), 2);
      HomologyReport c = aq_cohomology(phi, Coefficients::target_ring(S), 2);
      auto r0 = h.degrees[0].module->free_rank();
      auto c0 = c.degrees[0].module->free_rank();
      d["aq0_free_rank"] = r0 ? Json(*r0) : Json(nullptr);
      bool ok = r0 && *r0 == in.ny && c0 && *c0 == in.ny;
      for (int n = 1; n <= 2; ++n)
        ok = ok && h.degrees[static_cast<std::size_t>(n)].module->is_zero() &&
             c.degrees[static_cast<std::size_t>(n)].module->is_zero();
      Json res = Json::array();
      for (std::size_t p = 0; p < in.points.size(); ++p) {
        auto dims = aq_dims_at(phi, at(S, in.points[p], "p" + std::to_string(p)), 2);
        res.push_back(dims);
        ok = ok && dims == std::vector<std::size_t>{in.ny, 0, 0};
      }
      d["residue_dims"] = res;
      if (!ok) why = "nonzero higher AQ or wrong rank of AQ_0";
      return ok;
    });
  }
  return r;
}

SuiteResult hypersurface_sigma_s(const Builder& b) {
  SuiteResult r;
  struct Inst {
    Field k;
    std::vector<std::string> vars, rels;
    std::string r;
  };
  const Field Q = Field::rationals(), F5 = Field::prime(5);
  std::vector<Inst> corpus = {
      {Q, {"x"}, {}, "x"},
      {Q, {"x"}, {}, "x^2"},
      {Q, {"x", "y"}, {}, "y^2-x^3"},
      {Q, {"x", "y"}, {}, "x*y"},
      {Q, {"x", "y"}, {}, "x^2+y^2-1"},
      {Q, {"x", "y", "z"}, {}, "x*y-z^2"},
      {F5, {"x", "y"}, {}, "y^2-x^3-x"},
      {F5, {"x"}, {}, "x^5"},
      {Q, {"t", "x"}, {}, "x^2-t"},
      {Q, {"x", "y"}, {"x^2"}, "y"},
  };
  const int top = 6;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Inst& in = corpus[i];
    run_case(r, "hypersurface-" + std::to_string(i + 1) + " (" + in.r + ")", [&](Json& d, std::string& why) {
      PresentedAlgebra R = b.ring(in.k, in.vars, in.rels, "R");
      Polynomial rr = R.parse_element(in.r);
      FreeComplex K = koszul_complex({rr}, R);
      if (!complex_homology(K, 1).is_zero()) {
        why = "element is a zero divisor";
        return false;
      }
      SimplicialAlgebra A = SimplicialAlgebra::hypersurface(R, rr, top);
      if (!validate_identities(A).empty()) {
        why = "simplicial identities fail";
        return false;
      }
      CotangentComplex L = cotangent_from_resolution(A, false);
      const PresentedAlgebra& S = L.complex.ring();
      HomologyReport h = aq_homology(L, Coefficients::target_ring(S), 4, "hypersurface");
      bool ok = true;
      Json hom = Json::array();
      for (const auto& deg : h.degrees) {
        auto fr = deg.module->free_rank();
        hom.push_back(fr ? Json(*fr) : Json("non-free"));
        const std::size_t want = deg.n == 1 ? 1 : 0;
        if (!fr || *fr != want) {
          ok = false;
          why = "homology in degree " + std::to_string(deg.n) + " is not as expected";
        }
      }
      d["homology_free_ranks"] = hom;
      // entrywise differential check against epsilon(l, m)
      for (int n = 2; n <= top; ++n) {
        PolyMatrix D = L.complex.differential(n);
        for (int m = 0; m < n; ++m)
          for (int k = 0; k < n - 1; ++k) {
            long want = 0;
            if (k == m - 1 && m >= 1) want += epsilon(0, m);
            if (k == m && m <= n - 2) want += epsilon(m + 1, n);
            const Polynomial& e = D.at(static_cast<std::size_t>(k), static_cast<std::size_t>(m));
            Scalar got = e.is_zero() ? Scalar(0) : e.constant_term();
            if (!e.is_constant() || got != S.field().make(want)) {
              ok = false;
              why = "differential entry (" + std::to_string(k) + "," + std::to_string(m) + ") in degree " +
                    std::to_string(n) + " differs from the closed form";
            }
          }
      }
      auto ranks = hypersurface_rank_table(L);
      d["ranks"] = ranks;
      for (int n = 2; n <= top; ++n)
        if (ranks[static_cast<std::size_t>(n - 2)] != hypersurface_rank_closed_form(n)) {
          ok = false;
          why = "rank of d_" + std::to_string(n) + " differs from the closed form";
        }
      return ok;
    });
  }
  return r;
}

SuiteResult aq1_conormal(std::uint64_t seed, OrderKind order) {
  SuiteResult r;
  auto corpus = random_surjections(25, seed, order);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& c = corpus[i];
    run_case(r, "surjection-" + std::to_string(i + 1), [&](Json& d, std::string& why) {
      Json pts = Json::array();
      bool ok = true;
      d["relations"] = [&] {
        Json rel = Json::array();
        for (const auto& g : c.map.target().relations()) rel.push_back(g.to_string());
        return rel;
      }();
      for (const auto& p : c.points) {
        std::size_t aq1 = aq_dims_at(c.map, p, 1)[1];
        std::size_t conormal = conormal_dim_at(c.map, p);
        std::size_t tor1 = tor_dims_via_koszul(c.map, p, 1)[1];
        auto tor1b = tor_modules(c.map, p, 1).dims[1];
        pts.push_back({{"aq1", aq1}, {"conormal", conormal}, {"tor1", tor1}, {"tor1_syzygy_route", tor1b ? Json(*tor1b) : Json(nullptr)}});
        if (aq1 != conormal || aq1 != tor1 || !tor1b || *tor1b != tor1) ok = false;
      }
      d["points"] = pts;
      if (!ok) why = "AQ_1, I/mI and Tor_1 differ";
      return ok;
    });
  }
  return r;
}

SuiteResult five_term(std::uint64_t seed, OrderKind order) {
  SuiteResult r;
  auto corpus = random_surjections(25, seed, order);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& c = corpus[i];
    run_case(r, "surjection-" + std::to_string(i + 1), [&](Json& d, std::string& why) {
      Json pts = Json::array();
      bool ok = true;
      for (const auto& p : c.points) {
        FiveTermReport f = five_term_check(c.map, p);
        auto tor2b = tor_modules(c.map, p, 2).dims[2];
        pts.push_back({{"aq2", f.aq2}, {"tor2", f.tor2}, {"rank_w", f.rank_w}, {"tor2_syzygy_route", tor2b ? Json(*tor2b) : Json(nullptr)}});
        if (!f.exact || !tor2b || *tor2b != f.tor2) ok = false;
      }
      d["points"] = pts;
      if (!ok) why = "dim AQ_2 != dim Tor_2 - rank w";
      return ok;
    });
  }
  return r;
}

SuiteResult classifier_oracle(const Builder& b) {
  SuiteResult r;
  const Field Q = Field::rationals(), F5 = Field::prime(5), F3 = Field::prime(3);
  struct Pt {
    std::vector<long> c;
    bool smooth, lci;
  };
  struct Inst {
    std::string name;
    std::function<AlgebraMap()> make;
    std::vector<Pt> points;
  };
  auto k_to = [&](Field k, std::vector<std::string> v, std::vector<std::string> rel) {
    return [=] { return over_field(b.ring(k, v, rel, "S")); };
  };
  auto rel_map = [&](Field k, std::vector<std::string> base, std::vector<std::string> v, std::vector<std::string> rel) {
    return [=] { return same_names(b.poly(k, base, "R"), b.ring(k, v, rel, "S"), "phi"); };
  };
  auto mu_of = [&](Field k, std::vector<std::string> v, std::vector<std::string> rel) {
    return [=] {
      AlgebraMap eta = over_field(b.ring(k, v, rel, "S"));
      AlgebraMap se = base_change(eta, eta);
      std::vector<Polynomial> ims;
      for (int c = 0; c < 2; ++c)
        for (std::size_t i = 0; i < eta.target().nvars(); ++i) ims.push_back(eta.target().var(static_cast<int>(i)));
      return AlgebraMap(se.target(), eta.target(), ims, "mu");
    };
  };
  std::vector<Inst> corpus = {
      {"cusp", k_to(Q, {"x", "y"}, {"y^2-x^3"}), {{{0, 0}, false, true}, {{1, 1}, true, true}}},
      {"node", k_to(Q, {"x", "y"}, {"x*y"}), {{{0, 0}, false, true}, {{1, 0}, true, true}}},
      {"fat point", rel_map(Q, {"x", "y"}, {"x", "y"}, {"x^2", "x*y", "y^2"}), {{{0, 0}, false, false}}},
      {"three coordinate axes", rel_map(Q, {"x", "y", "z"}, {"x", "y", "z"}, {"x*y", "y*z", "z*x"}),
       {{{0, 0, 0}, false, false}, {{1, 0, 0}, false, true}}},
      {"inseparable", rel_map(F5, {"t"}, {"t", "x"}, {"x^5-t"}), {{{0, 0}, false, true}, {{1, 1}, false, true}}},
      {"double cover", rel_map(Q, {"t"}, {"t", "x"}, {"x^2-t"}), {{{1, 1}, true, true}, {{0, 0}, false, true}}},
      {"etale point pair", k_to(Q, {"x"}, {"x^2-1"}), {{{1}, true, true}, {{-1}, true, true}}},
      {"affine plane", k_to(Q, {"x", "y"}, {}), {{{0, 0}, true, true}}},
      {"relative affine plane", rel_map(Q, {"t"}, {"t", "x", "y"}, {}), {{{0, 0, 0}, true, true}}},
      {"relative fat point", rel_map(Q, {"x"}, {"x"}, {"x^2"}), {{{0}, false, true}}},
      {"dual numbers", k_to(Q, {"x"}, {"x^2"}), {{{0}, false, true}}},
      {"cone", k_to(Q, {"x", "y", "z"}, {"x*y-z^2"}), {{{0, 0, 0}, false, true}, {{1, 1, 1}, true, true}}},
      {"twisted cubic", k_to(Q, {"x", "y", "z"}, {"y-x^2", "z-x^3"}), {{{1, 1, 1}, true, true}, {{0, 0, 0}, true, true}}},
      {"two squares", k_to(Q, {"x", "y"}, {"x^2", "y^2"}), {{{0, 0}, false, true}}},
      {"elliptic curve", k_to(F3, {"x", "y"}, {"y^2-x^3-x"}), {{{0, 0}, true, true}, {{2, 1}, true, true}}},
      {"line in plane", rel_map(Q, {"x", "y"}, {"x", "y"}, {"x"}), {{{0, 0}, false, true}}},
      {"localization", rel_map(Q, {"t"}, {"t", "x"}, {"t*x-1"}), {{{1, 1}, true, true}, {{2, 1}, false, false}}},
      {"ramified cover", rel_map(Q, {"x"}, {"x", "y"}, {"y^2-x"}), {{{1, 1}, true, true}, {{0, 0}, false, true}}},
      {"diagonal of the line", mu_of(Q, {"x"}, {}), {{{0}, false, true}}},
      {"diagonal of dual numbers", mu_of(Q, {"x"}, {"x^2"}), {{{0}, false, false}}},
  };
  // (2,1) is not on t*x = 1; replace it by (2, 1/2)
  corpus[16].points[1] = {{}, true, true};
  for (const auto& in : corpus) {
    run_case(r, in.name, [&](Json& d, std::string& why) {
      AlgebraMap phi = in.make();
      Json pts = Json::array();
      bool ok = true;
      for (std::size_t i = 0; i < in.points.size(); ++i) {
        const Pt& pt = in.points[i];
        RationalPoint p;
        if (pt.c.empty()) {
          p = make_point(phi.target(), {{"t", Scalar(2)}, {"x", Scalar(1, 2)}}, "q");
        } else {
          p = at(phi.target(), pt.c, "p" + std::to_string(i));
        }
        PointVerdict s = is_smooth_at(phi, p);
        PointVerdict l = is_lci_at(phi, p);
        PointVerdict u = is_unramified_at(phi, p);
        PointVerdict e = is_etale_at(phi, p);
        pts.push_back({{"smooth", s.verdict}, {"lci", l.verdict}, {"unramified", u.verdict}, {"etale", e.verdict},
                       {"aq", s.aq}});
        if (s.verdict != pt.smooth || l.verdict != pt.lci) {
          ok = false;
          why = "verdict differs from the expected value at point " + std::to_string(i);
        }
        if ((s.verdict && !l.verdict) || (e.verdict != (s.verdict && u.verdict))) {
          ok = false;
          why = "implication chain broken";
        }
      }
      d["points"] = pts;
      return ok;
    });
  }
  return r;
}

SuiteResult hkr(const Builder& b) {
  SuiteResult r;
  const Field Q = Field::rationals();
  struct Inst {
    std::string name;
    std::vector<std::string> base, vars, rels;
    std::vector<std::vector<long>> points;
  };
  std::vector<Inst> corpus = {
      {"line", {}, {"x"}, {}, {{0}, {1}}},
      {"dual numbers", {}, {"x"}, {"x^2"}, {{0}}},
      {"point", {}, {}, {}, {{}}},
      {"cusp", {}, {"x", "y"}, {"y^2-x^3"}, {{0, 0}, {1, 1}}},
      {"double cover", {"t"}, {"t", "x"}, {"x^2-t"}, {{1, 1}, {0, 0}}},
  };
  for (const auto& in : corpus) {
    run_case(r, in.name, [&](Json& d, std::string& why) {
      AlgebraMap eta = same_names(b.poly(Q, in.base, "K"), b.ring(Q, in.vars, in.rels, "S"), "eta");
      std::vector<RationalPoint> pts;
      for (std::size_t i = 0; i < in.points.size(); ++i) pts.push_back(at(eta.target(), in.points[i], "p" + std::to_string(i)));
      HkrReport h = hkr_equivalence_check(eta, pts);
      Json j = Json::array();
      for (const auto& p : h.points)
        j.push_back({{"smooth", p.smooth}, {"mu_lci", p.lci}, {"aq1_eta", p.aq1_eta}, {"aq2_mu", p.aq2_mu}});
      d["points"] = j;
      if (!h.equivalent) why = "smoothness of eta and lci of mu differ";
      return h.equivalent;
    });
  }
  return r;
}

SuiteResult simplicial_validity(const Builder& b) {
  SuiteResult r;
  const Field Q = Field::rationals(), F5 = Field::prime(5);
  auto check = [&](const std::string& name, const std::function<SimplicialAlgebra()>& make, std::optional<bool> resolution) {
    run_case(r, name, [&](Json& d, std::string& why) {
      SimplicialAlgebra A = make();
      auto v = validate_identities(A);
      auto vm = validate_identities(kahler_module(A));
      bool aug = augmentation_valid(A);
      d["levels"] = A.top();
      d["violations"] = violations_json(v);
      d["module_violations"] = violations_json(vm);
      d["augmentation_valid"] = aug;
      bool ok = v.empty() && vm.empty() && aug;
      if (!ok) why = "simplicial identity violated";
      if (resolution) {
        auto res = is_resolution(A);
        d["resolution"] = res ? Json(*res) : Json(nullptr);
        if (!res || *res != *resolution) {
          ok = false;
          why = "homotopy differs from the expected value";
        }
      }
      return ok;
    });
  };
  check("bar over QQ", [&] { return SimplicialAlgebra::bar_construction(b.poly(Q, {}, "k"), 6); }, true);
  check("bar over GF(5)", [&] { return SimplicialAlgebra::bar_construction(b.poly(F5, {}, "k"), 6); }, true);
  check("bar over QQ[t]", [&] { return SimplicialAlgebra::bar_construction(b.poly(Q, {"t"}, "R"), 6); }, true);
  check("kill x^2, y^2", [&] { return SimplicialAlgebra::kill_chain(b.poly(Q, {"x", "y"}, "R"), {}, {"x^2", "y^2"}, 4); }, true);
  check("kill y over QQ[y]", [&] { return SimplicialAlgebra::kill_chain(b.poly(Q, {}, "k"), {"y"}, {"y"}, 4); }, true);
  check("kill x^3", [&] { return SimplicialAlgebra::kill_chain(b.poly(Q, {"x"}, "R"), {}, {"x^3"}, 4); }, true);
  check("kill x*y, x*z", [&] { return SimplicialAlgebra::kill_chain(b.poly(Q, {"x", "y", "z"}, "R"), {}, {"x*y", "x*z"}, 4); }, false);
  check("kill a 1-cycle over dual numbers", [&] {
    PresentedAlgebra R = b.ring(Q, {"u"}, {"u^2"}, "R");
    SimplicialAlgebra A = SimplicialAlgebra::kill_chain(R, {}, {"u"}, 4);
    const auto& L1 = A.level_ring(1);
    Polynomial w = L1.var("u") * L1.var("x[1;01]");
    return SimplicialAlgebra::kill_cycle(A, w, 2, "v");
  }, std::nullopt);
  check("hypersurface cusp", [&] {
    PresentedAlgebra R = b.poly(Q, {"x", "y"}, "R");
    return SimplicialAlgebra::hypersurface(R, R.parse_element("y^2-x^3"), 6);
  }, true);
  check("hypersurface x^5 over GF(5)", [&] {
    PresentedAlgebra R = b.poly(F5, {"x"}, "R");
    return SimplicialAlgebra::hypersurface(R, R.parse_element("x^5"), 6);
  }, true);
  check("tensor over distinct bases", [&] {
    PresentedAlgebra R1 = b.poly(Q, {"x"}, "R1"), R2 = b.poly(Q, {"y"}, "R2");
    auto A1 = SimplicialAlgebra::kill_cycle(SimplicialAlgebra::constant(R1, {}, 4), R1.var("x"), 1, "a");
    auto A2 = SimplicialAlgebra::kill_cycle(SimplicialAlgebra::constant(R2, {}, 4), R2.parse_element("y^2"), 1, "b");
    return SimplicialAlgebra::tensor(A1, A2);
  }, true);
  check("tensor over a common base", [&] {
    PresentedAlgebra R = b.poly(Q, {"x", "y"}, "R");
    auto A1 = SimplicialAlgebra::kill_cycle(SimplicialAlgebra::constant(R, {}, 4), R.var("x"), 1, "a");
    auto A2 = SimplicialAlgebra::kill_cycle(SimplicialAlgebra::constant(R, {}, 4), R.var("y"), 1, "b");
    return SimplicialAlgebra::tensor(A1, A2);
  }, true);
  for (const auto& [name, R] : std::vector<std::pair<std::string, PresentedAlgebra>>{
           {"QQ", b.poly(Q, {}, "k")}, {"QQ[t]", b.poly(Q, {"t"}, "R")}}) {
    run_case(r, "bar matches kill_cycle over " + name, [&, R = R](Json& d, std::string& why) {
      bool ok = bar_matches_kill_cycle(R, 6);
      d["levels"] = 6;
      if (!ok) why = "bijection does not respect faces and degeneracies";
      return ok;
    });
  }
  return r;
}

SuiteResult koszul_regular(const Builder& b) {
  SuiteResult r;
  const Field Q = Field::rationals(), F5 = Field::prime(5);
  struct Inst {
    Field k;
    std::vector<std::string> vars, rels, seq;
    bool regular;
  };
  std::vector<Inst> corpus = {
      {Q, {"x"}, {}, {"x"}, true},
      {Q, {"x", "y"}, {}, {"x", "y"}, true},
      {Q, {"x", "y", "z"}, {}, {"x", "y", "z"}, true},
      {Q, {"x", "y"}, {}, {"x^2", "y^2"}, true},
      {Q, {"x", "y"}, {}, {"x*y-1"}, true},
      {Q, {"x", "y"}, {}, {"y^2-x^3"}, true},
      {Q, {"x", "y"}, {}, {"x-y", "x+y"}, true},
      {F5, {"t", "x"}, {}, {"x^5-t"}, true},
      {Q, {"x", "y"}, {}, {"x", "y-x^2"}, true},
      {Q, {"x", "y", "z"}, {}, {"x^2", "y^3", "z"}, true},
      {Q, {"x", "y", "z"}, {}, {"x*y", "x*z"}, false},
      {Q, {"x"}, {}, {"x", "x"}, false},
      {Q, {"x", "y"}, {}, {"x", "x*y"}, false},
      {Q, {"x", "y"}, {"x*y"}, {"x"}, false},
      {Q, {"x", "y", "z"}, {}, {"x*y", "y*z", "z*x"}, false},
  };
  for (const auto& in : corpus) {
    std::string name = "(";
    for (std::size_t i = 0; i < in.seq.size(); ++i) name += (i ? ", " : "") + in.seq[i];
    name += ")";
    if (!in.rels.empty()) name += " mod (" + in.rels[0] + ")";
    run_case(r, name, [&](Json& d, std::string& why) {
      PresentedAlgebra R = b.ring(in.k, in.vars, in.rels, "R");
      std::vector<Polynomial> f;
      for (const auto& s : in.seq) f.push_back(R.parse_element(s));
      FreeComplex K = koszul_complex(f, R);
      bool acyclic = true;
      Json h = Json::array();
      for (int n = 1; n <= static_cast<int>(f.size()); ++n) {
        bool z = complex_homology(K, n).is_zero();
        h.push_back(z);
        acyclic = acyclic && z;
      }
      // oracle: each element is a nonzerodivisor modulo the previous ones
      bool sequential = true;
      for (std::size_t i = 0; i < f.size() && sequential; ++i) {
        std::vector<Polynomial> prev(f.begin(), f.begin() + static_cast<long>(i));
        PresentedAlgebra A = R.quotient(prev);
        for (const auto& a : syzygies(A, 1, {{A.normal_form(f[i])}}))
          if (!A.is_zero(a[0])) sequential = false;
      }
      if (R.quotient(f).is_zero_ring()) sequential = false;
      d["higher_homology_zero"] = h;
      d["nonzerodivisor_oracle"] = sequential;
      bool ok = acyclic == in.regular && sequential == in.regular;
      if (!ok) why = "koszul homology or oracle differs from the expected value";
      return ok;
    });
  }
  return r;
}

SuiteResult kahler_dual(std::uint64_t seed, OrderKind order) {
  SuiteResult r;
  auto corpus = random_surjections(25, seed + 1000, order);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& c = corpus[i];
    run_case(r, "algebra-" + std::to_string(i + 1), [&](Json& d, std::string& why) {
      const PresentedAlgebra& S = c.map.target();
      AlgebraMap phi = i % 2 == 0 ? over_field(S, "eta")
                                  : same_names(PresentedAlgebra::polynomial(S.field(), {S.vars()[0]}, "R", MonomialOrder{order, {}}), S, "phi");
      KahlerPresentation kp = kahler_presentation(phi);
      Json pts = Json::array();
      bool ok = true;
      for (const auto& p : c.points) {
        std::size_t a = kp.module.dim_at(p.coords), bdim = diagonal_conormal_dim_at(phi, p);
        std::size_t aq0 = aq_dims_at(phi, p, 0)[0];
        pts.push_back({{"jacobian", a}, {"diagonal", bdim}, {"aq0", aq0}});
        if (a != bdim || a != aq0) ok = false;
      }
      d["points"] = pts;
      if (!ok) why = "presentations of the differentials disagree";
      return ok;
    });
  }
  return r;
}

SuiteResult jacobi_zariski(const Builder& b, std::uint64_t seed) {
  SuiteResult r;
  const Field Q = Field::rationals(), F5 = Field::prime(5);
  struct Inst {
    std::string name;
    Field k;
    std::vector<std::string> q, rv, rrel, sv, srel;
    std::vector<std::vector<long>> points;
    std::vector<std::size_t> expect;  // empty: only consistency
  };
  std::vector<Inst> corpus = {
      {"cusp in the plane", Q, {}, {"x", "y"}, {}, {"x", "y"}, {"y^2-x^3"}, {{0, 0}}, {0, 0, 1, 1, 2, 2, 0}},
      {"cusp at a smooth point", Q, {}, {"x", "y"}, {}, {"x", "y"}, {"y^2-x^3"}, {{1, 1}}, {0, 0, 0, 1, 2, 1, 0}},
      {"dual numbers over the line", Q, {}, {"x"}, {}, {"x"}, {"x^2"}, {{0}}, {0, 0, 1, 1, 1, 1, 0}},
      {"identity then surjection", Q, {"x", "y"}, {"x", "y"}, {}, {"x", "y"}, {"x^2", "x*y", "y^2"}, {{0, 0}}, {}},
      {"surjection then identity", Q, {"x", "y"}, {"x", "y"}, {"x*y"}, {"x", "y"}, {"x*y"}, {{0, 0}, {1, 0}}, {}},
      {"double cover over the line", Q, {}, {"t"}, {}, {"t", "x"}, {"x^2-t"}, {{1, 1}, {0, 0}}, {}},
      {"inseparable over the line", F5, {}, {"t"}, {}, {"t", "x"}, {"x^5-t"}, {{0, 0}, {1, 1}}, {}},
      {"fat point over the plane", Q, {}, {"x", "y"}, {}, {"x", "y"}, {"x^2", "x*y", "y^2"}, {{0, 0}}, {2, 0, 3, 3, 2, 2, 0}},
  };
  for (const auto& in : corpus) {
    run_case(r, in.name, [&](Json& d, std::string& why) {
      PresentedAlgebra Qr = b.poly(in.k, in.q, "Q");
      PresentedAlgebra R = b.ring(in.k, in.rv, in.rrel, "R");
      PresentedAlgebra S = b.ring(in.k, in.sv, in.srel, "S");
      AlgebraMap psi = same_names(Qr, R, "psi"), phi = same_names(R, S, "phi");
      Json pts = Json::array();
      bool ok = true;
      for (std::size_t i = 0; i < in.points.size(); ++i) {
        auto w = jacobi_zariski_window(psi, phi, at(S, in.points[i], "p" + std::to_string(i)));
        pts.push_back({{"dims", w.dims}, {"ranks", w.ranks}, {"consistent", w.consistent}});
        if (!w.consistent) {
          ok = false;
          why = "window is not exact: dims " + dims_string(w.dims);
        }
        if (i == 0 && !in.expect.empty() && w.dims != in.expect) {
          ok = false;
          why = "dims " + dims_string(w.dims) + " differ from the expected values";
        }
      }
      d["points"] = pts;
      return ok;
    });
  }
  auto rnd = random_surjections(5, seed + 2000, b.order);
  for (std::size_t i = 0; i < rnd.size(); ++i) {
    run_case(r, "random-" + std::to_string(i + 1), [&](Json& d, std::string& why) {
      const AlgebraMap& phi = rnd[i].map;
      AlgebraMap psi = over_field(phi.source(), "psi");
      Json pts = Json::array();
      bool ok = true;
      for (const auto& p : rnd[i].points) {
        auto w = jacobi_zariski_window(psi, phi, p);
        pts.push_back({{"dims", w.dims}, {"consistent", w.consistent}});
        ok = ok && w.consistent;
      }
      d["points"] = pts;
      if (!ok) why = "window is not exact";
      return ok;
    });
  }
  return r;
}

SuiteResult base_change_suite(const Builder& b) {
  SuiteResult r;
  const Field Q = Field::rationals();
  struct Inst {
    std::string name;
    std::vector<std::string> rp, sv, srel, rv;
    bool identity;
    std::vector<std::vector<long>> points;  // on S' (x) R
  };
  std::vector<Inst> corpus = {
      {"t^2 along QQ[t] -> QQ[t,u]", {"t"}, {"t"}, {"t^2"}, {"t", "u"}, false, {{0, 0, 0}, {0, 0, 1}}},
      {"t^2 along the identity", {"t"}, {"t"}, {"t^2"}, {"t"}, true, {{0, 0}}},
      {"double cover along QQ[t] -> QQ[t,u]", {"t"}, {"t", "x"}, {"x^2-t"}, {"t", "u"}, false, {{1, 1, 1, 0}, {0, 0, 0, 5}}},
      {"fat point along QQ[x,y] -> QQ[x,y,z]", {"x", "y"}, {"x", "y"}, {"x^2", "x*y", "y^2"}, {"x", "y", "z"}, false,
       {{0, 0, 0, 0, 0}, {0, 0, 0, 0, 1}}},
  };
  for (const auto& in : corpus) {
    run_case(r, in.name, [&](Json& d, std::string& why) {
      PresentedAlgebra Rp = b.poly(Q, in.rp, "R'");
      PresentedAlgebra Sp = b.ring(Q, in.sv, in.srel, "S'");
      PresentedAlgebra R = b.poly(Q, in.rv, "R");
      AlgebraMap phi = same_names(Rp, Sp, "phi'");
      AlgebraMap rho = in.identity ? AlgebraMap::identity(Rp) : same_names(Rp, R, "rho");
      std::vector<std::vector<Scalar>> pts;
      for (const auto& p : in.points) {
        std::vector<Scalar> c;
        for (long v : p) c.push_back(Scalar(v));
        pts.push_back(c);
      }
      BaseChangeReport bc = base_change_check(phi, rho, pts);
      d["dims_original"] = bc.dims_original;
      d["dims_changed"] = bc.dims_changed;
      bool ok = bc.equal;
      if (!ok) why = "AQ dimensions change under flat base change";
      // lci verdicts are preserved
      for (std::size_t i = 0; i < pts.size() && ok; ++i) {
        RationalPoint q{"q", pts[i]};
        RationalPoint qs{"q'", std::vector<Scalar>(pts[i].begin(), pts[i].begin() + static_cast<long>(Sp.nvars()))};
        if (is_lci_at(phi, qs).verdict != is_lci_at(bc.changed, q).verdict) {
          ok = false;
          why = "lci verdict changes under flat base change";
        }
      }
      return ok;
    });
  }
  struct Ret {
    std::string name;
    std::vector<std::string> vars, rels;
    std::vector<long> point;
  };
  for (const auto& in : std::vector<Ret>{{"retract of the cusp at the origin", {"x", "y"}, {"y^2-x^3"}, {0, 0}},
                                         {"retract of the cusp at (1,1)", {"x", "y"}, {"y^2-x^3"}, {1, 1}},
                                         {"retract of the fat point", {"x", "y"}, {"x^2", "x*y", "y^2"}, {0, 0}},
                                         {"retract of the line", {"x"}, {}, {2}}}) {
    run_case(r, in.name, [&](Json& d, std::string& why) {
      PresentedAlgebra S = b.ring(Q, in.vars, in.rels, "S");
      RetractReport rr = retract_check(S, at(S, in.point, "p"));
      d["s_over_r"] = rr.s_over_r;
      d["r_over_s"] = rr.r_over_s;
      if (!rr.equal) why = "AQ_n(S|R) != AQ_{n-1}(R|S)";
      return rr.equal;
    });
  }
  return r;
}

}  // namespace

std::vector<RandomSurjection> random_surjections(std::size_t count, std::uint64_t seed, OrderKind order) {
  std::mt19937_64 rng(seed);
  auto rnd = [&](std::uint64_t n) { return static_cast<long>(rng() % n); };
  const std::vector<std::string> names = {"x", "y", "z"};
  std::vector<RandomSurjection> out;
  while (out.size() < count) {
    const bool rational = out.size() < count * 4 / 5;
    Field k = rational ? Field::rationals() : Field::prime(7);
    const std::size_t n = 1 + static_cast<std::size_t>(rnd(3));
    std::vector<std::string> vars(names.begin(), names.begin() + static_cast<long>(n));
    RingPtr ring = make_ring(k, vars, MonomialOrder{order, {}});
    std::vector<Scalar> p1, p2;
    for (std::size_t i = 0; i < n; ++i) {
      p1.push_back(k.make(rnd(5) - 2));
      p2.push_back(k.make(rnd(5) - 2));
    }
    if (p1 == p2) continue;
    std::size_t sep = 0;
    while (p1[sep] == p2[sep]) ++sep;
    const std::size_t m = 1 + static_cast<std::size_t>(rnd(3));
    std::vector<Polynomial> rels;
    for (std::size_t j = 0; j < m; ++j) {
      Polynomial g(ring);
      const long terms = 1 + rnd(3);
      for (long t = 0; t < terms; ++t) {
        Monomial mono(n);
        const int deg = 1 + static_cast<int>(rnd(3));
        for (int e = 0; e < deg; ++e) ++mono.e[static_cast<std::size_t>(rnd(n))];
        mono.deg = deg;
        long c = rnd(7) - 3;
        if (c == 0) c = 1;
        g += Polynomial::monomial(ring, mono, k.make(c));
      }
      // g + c0 + c1 * x_sep vanishes at p1 and p2
      Scalar g1 = g.evaluate(p1), g2 = g.evaluate(p2);
      Scalar c1 = k.div(k.sub(g2, g1), k.sub(p1[sep], p2[sep]));
      Scalar c0 = k.sub(k.neg(g1), k.mul(c1, p1[sep]));
      Polynomial f = g + Polynomial::constant(ring, c0) + Polynomial::variable(ring, static_cast<int>(sep)).scale(c1);
      if (!f.is_zero()) rels.push_back(f);
    }
    if (rels.empty()) continue;
    PresentedAlgebra S(ring, rels, "S" + std::to_string(out.size() + 1));
    PresentedAlgebra P = PresentedAlgebra::polynomial(k, vars, "P", MonomialOrder{order, {}});
    AlgebraMap phi = AlgebraMap::parse(P, S, {}, "pi" + std::to_string(out.size() + 1));
    RandomSurjection rs{phi, {RationalPoint{"p1", p1}, RationalPoint{"p2", p2}}};
    out.push_back(rs);
  }
  return out;
}

std::vector<std::string> suite_names() {
  return {"polynomial-vanishing", "hypersurface-sigma-s", "aq1-conormal",  "five-term",
          "classifier-oracle",    "hkr",                  "simplicial-validity", "koszul-regular",
          "kahler-dual",          "jacobi-zariski",       "base-change"};
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, OrderKind order) {
  Builder b{order};
  SuiteResult r;
  if (name == "polynomial-vanishing") r = polynomial_vanishing(b);
  else if (name == "hypersurface-sigma-s") r = hypersurface_sigma_s(b);
  else if (name == "aq1-conormal") r = aq1_conormal(seed, order);
  else if (name == "five-term") r = five_term(seed, order);
  else if (name == "classifier-oracle") r = classifier_oracle(b);
  else if (name == "hkr") r = hkr(b);
  else if (name == "simplicial-validity") r = simplicial_validity(b);
  else if (name == "koszul-regular") r = koszul_regular(b);
  else if (name == "kahler-dual") r = kahler_dual(seed, order);
  else if (name == "jacobi-zariski") r = jacobi_zariski(b, seed);
  else if (name == "base-change") r = base_change_suite(b);
  else {
    std::string list;
    for (const auto& s : suite_names()) list += (list.empty() ? "" : ", ") + s;
    throw InputError("unknown suite '" + name + "'; valid suites: " + list);
  }
  r.name = name;
  return r;
}

Json suite_json(const SuiteResult& r) {
  return {{"suite", r.name}, {"cases", r.cases}, {"passed", r.passed}, {"failures", r.failures}, {"details", r.details}, {"ok", r.ok()}};
}

}  // namespace aq
