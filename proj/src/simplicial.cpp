#include "aq/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace aq {

namespace {

RingPtr level_ring_ptr(const PresentedAlgebra& base, const std::vector<std::string>& vars) {
  std::vector<std::string> names = base.vars();
  for (const auto& v : vars) names.push_back(v);
  return make_ring(base.field(), names, MonomialOrder{base.ring()->order().kind, {}});
}

PresentedAlgebra make_level_ring(const PresentedAlgebra& base, const std::vector<std::string>& vars) {
  RingPtr r = level_ring_ptr(base, vars);
  std::vector<int> map(base.nvars());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<int>(i);
  std::vector<Polynomial> rels;
  for (const auto& p : base.relations()) rels.push_back(p.rename(r, map));
  return PresentedAlgebra(r, rels, base.name());
}

std::vector<int> identity_map(std::size_t n) {
  std::vector<int> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<int>(i);
  return m;
}

std::string seq_string(const std::vector<int>& t) {
  std::string s;
  for (int v : t) s += std::to_string(v);
  return s;
}

bool is_surjective_onto(const std::vector<int>& t, int d) {
  std::vector<bool> hit(static_cast<std::size_t>(d + 1), false);
  for (int v : t) hit[static_cast<std::size_t>(v)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

// weighted degree if homogeneous
std::optional<int> weighted_degree(const Polynomial& p, const std::vector<int>& w) {
  if (p.is_zero()) return std::nullopt;
  std::optional<int> deg;
  for (const auto& t : p.terms()) {
    int d = 0;
    for (std::size_t i = 0; i < t.m.e.size(); ++i) d += t.m.e[i] * w[i];
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

}  // namespace

std::vector<std::vector<int>> monotone_surjections(int n, int d) {
  std::vector<std::vector<int>> out;
  if (n < d || d < 0) return out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int v) {
    int pos = static_cast<int>(cur.size());
    if (pos == n + 1) {
      if (v == d) out.push_back(cur);
      return;
    }
    // value at pos is v or v+1 (v+1 only if pos > 0)
    if (pos == 0) {
      cur.push_back(0);
      rec(0);
      cur.pop_back();
      return;
    }
    cur.push_back(v);
    rec(v);
    cur.pop_back();
    if (v + 1 <= d) {
      cur.push_back(v + 1);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

bool SimplicialAlgebra::graded() const {
  if (base_weights_.size() != base_.nvars()) return false;
  for (const auto& l : levels_)
    if (l.weights.size() != l.vars.size()) return false;
  return true;
}

void SimplicialAlgebra::finish_rings(const std::vector<std::vector<std::string>>& vars) {
  levels_.clear();
  for (const auto& v : vars) {
    Level l;
    l.vars = v;
    l.ring = make_level_ring(base_, v);
    levels_.push_back(std::move(l));
  }
}

Polynomial SimplicialAlgebra::apply_face(int n, int i, const Polynomial& p) const {
  const Level& L = level(n);
  const Level& D = level(n - 1);
  std::vector<Polynomial> ims;
  for (std::size_t b = 0; b < base_.nvars(); ++b) ims.push_back(Polynomial::variable(D.ring.ring(), static_cast<int>(b)));
  for (const auto& f : L.faces.at(static_cast<std::size_t>(i))) ims.push_back(f);
  return D.ring.normal_form(p.substitute(D.ring.ring(), ims));
}

Polynomial SimplicialAlgebra::apply_degeneracy(int n, int j, const Polynomial& p) const {
  const Level& L = level(n);
  const Level& U = level(n + 1);
  std::vector<Polynomial> ims;
  for (std::size_t b = 0; b < base_.nvars(); ++b) ims.push_back(Polynomial::variable(U.ring.ring(), static_cast<int>(b)));
  for (const auto& f : L.degens.at(static_cast<std::size_t>(j))) ims.push_back(f);
  return U.ring.normal_form(p.substitute(U.ring.ring(), ims));
}

Polynomial SimplicialAlgebra::apply_surjection(const std::vector<int>& u, const Polynomial& p) const {
  const int m = static_cast<int>(u.size()) - 1;
  for (int a = 0; a < m; ++a) {
    if (u[static_cast<std::size_t>(a)] != u[static_cast<std::size_t>(a + 1)]) continue;
    std::vector<int> rest = u;
    rest.erase(rest.begin() + a);
    return apply_degeneracy(m - 1, a, apply_surjection(rest, p));
  }
  return p;
}

Polynomial SimplicialAlgebra::augment(int n, const Polynomial& p) const {
  Polynomial q = p;
  for (int k = n; k > 0; --k) q = apply_face(k, 0, q);
  return target_.normal_form(q.substitute(target_.ring(), augmentation_));
}

PresentedAlgebra SimplicialAlgebra::pi0() const {
  const PresentedAlgebra& A0 = level_ring(0);
  std::vector<Polynomial> rel;
  if (top() >= 1) {
    const Level& L1 = level(1);
    for (std::size_t v = 0; v < L1.vars.size(); ++v) {
      Polynomial diff = L1.faces[0][v] - L1.faces[1][v];
      if (!A0.is_zero(diff)) rel.push_back(diff);
    }
  }
  return A0.quotient(rel, "pi0");
}

SimplicialAlgebra SimplicialAlgebra::constant(const PresentedAlgebra& R, const std::vector<std::string>& vars,
                                              int top, const std::vector<int>& weights) {
  SimplicialAlgebra A;
  A.base_ = R;
  A.base_weights_.assign(R.nvars(), 1);
  A.finish_rings(std::vector<std::vector<std::string>>(static_cast<std::size_t>(top + 1), vars));
  std::vector<int> w = weights.empty() ? std::vector<int>(vars.size(), 1) : weights;
  const std::size_t nb = R.nvars();
  for (int n = 0; n <= top; ++n) {
    Level& L = A.levels_[static_cast<std::size_t>(n)];
    L.weights = w;
    if (n >= 1) {
      L.faces.assign(static_cast<std::size_t>(n + 1), {});
      for (auto& f : L.faces)
        for (std::size_t v = 0; v < vars.size(); ++v)
          f.push_back(Polynomial::variable(A.levels_[static_cast<std::size_t>(n - 1)].ring.ring(), static_cast<int>(nb + v)));
    }
    if (n < top) {
      L.degens.assign(static_cast<std::size_t>(n + 1), {});
      for (auto& s : L.degens)
        for (std::size_t v = 0; v < vars.size(); ++v)
          s.push_back(Polynomial::variable(A.levels_[static_cast<std::size_t>(n + 1)].ring.ring(), static_cast<int>(nb + v)));
    }
  }
  A.target_ = A.levels_[0].ring;
  for (std::size_t i = 0; i < A.target_.nvars(); ++i) A.augmentation_.push_back(A.target_.var(static_cast<int>(i)));
  A.kind_ = HomotopyKind::Koszul;
  A.provenance_ = "constant";
  return A;
}

namespace {

// faces and degeneracies of the bar-type variables x[n,k] with d_0(x[n,0]) = r
void fill_bar_levels(SimplicialAlgebra::Level* levels, int top, std::size_t nb, const Polynomial& r_level0,
                     const std::function<Polynomial(int)>& r_at) {
  (void)r_level0;
  for (int n = 1; n <= top; ++n) {
    auto& L = levels[n];
    const RingPtr& down = levels[n - 1].ring.ring();
    auto var = [&](const RingPtr& ring, int k) { return Polynomial::variable(ring, static_cast<int>(nb) + k); };
    L.faces.assign(static_cast<std::size_t>(n + 1), {});
    for (int i = 0; i <= n; ++i)
      for (int k = 0; k < n; ++k) {
        Polynomial img(down);
        if (i == 0) img = k == 0 ? r_at(n - 1) : var(down, k - 1);
        else if (i == n) img = k == n - 1 ? Polynomial(down) : var(down, k);
        else img = k <= i - 1 ? var(down, k) : var(down, k - 1);
        L.faces[static_cast<std::size_t>(i)].push_back(img);
      }
    (void)L;
  }
  for (int n = 0; n < top; ++n) {
    auto& L = levels[n];
    const RingPtr& up = levels[n + 1].ring.ring();
    L.degens.assign(static_cast<std::size_t>(n + 1), {});
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k < n; ++k) {
        // s_j inserts 1 after the first j tensor factors
        int idx = (k + 1 <= j) ? k : k + 1;
        L.degens[static_cast<std::size_t>(j)].push_back(Polynomial::variable(up, static_cast<int>(nb) + idx));
      }
  }
}

std::vector<std::vector<std::string>> bar_names(int top) {
  std::vector<std::vector<std::string>> out;
  for (int n = 0; n <= top; ++n) {
    std::vector<std::string> v;
    for (int k = 0; k < n; ++k) v.push_back("x[" + std::to_string(n) + "," + std::to_string(k) + "]");
    out.push_back(v);
  }
  return out;
}

}  // namespace

SimplicialAlgebra SimplicialAlgebra::bar_construction(const PresentedAlgebra& R, int top, const std::string& y) {
  if (R.ring()->index_of(y) >= 0) throw InputError("bar variable '" + y + "' clashes with a ring variable");
  std::vector<std::string> bvars = R.vars();
  bvars.push_back(y);
  RingPtr br = make_ring(R.field(), bvars, MonomialOrder{R.ring()->order().kind, {}});
  std::vector<Polynomial> rels;
  for (const auto& p : R.relations()) rels.push_back(p.rename(br, identity_map(R.nvars())));
  SimplicialAlgebra A;
  A.base_ = PresentedAlgebra(br, rels, R.name() + "[" + y + "]");
  A.base_weights_.assign(bvars.size(), 1);
  A.finish_rings(bar_names(top));
  const std::size_t nb = bvars.size();
  const int yi = static_cast<int>(nb - 1);
  fill_bar_levels(A.levels_.data(), top, nb, Polynomial(),
                  [&](int n) { return Polynomial::variable(A.levels_[static_cast<std::size_t>(n)].ring.ring(), yi); });
  for (auto& L : A.levels_) L.weights.assign(L.vars.size(), 1);
  A.target_ = R;
  for (std::size_t i = 0; i < R.nvars(); ++i) A.augmentation_.push_back(R.var(static_cast<int>(i)));
  A.augmentation_.push_back(Polynomial(R.ring()));
  A.kind_ = HomotopyKind::Koszul;
  A.koszul_ = {Polynomial::variable(A.levels_[0].ring.ring(), yi)};
  A.provenance_ = "bar";
  return A;
}

SimplicialAlgebra SimplicialAlgebra::hypersurface(const PresentedAlgebra& R, const Polynomial& r, int top) {
  SimplicialAlgebra A;
  A.base_ = R;
  A.finish_rings(bar_names(top));
  const std::size_t nb = R.nvars();
  Polynomial rr = R.normal_form(r);
  fill_bar_levels(A.levels_.data(), top, nb, rr, [&](int n) {
    return rr.rename(A.levels_[static_cast<std::size_t>(n)].ring.ring(), identity_map(nb));
  });
  std::vector<int> ones(nb, 1);
  bool homogeneous = !rr.is_zero() && weighted_degree(rr, ones).has_value();
  for (const auto& g : R.relations()) homogeneous = homogeneous && weighted_degree(g, ones).has_value();
  if (homogeneous) {
    A.base_weights_ = ones;
    int w = *weighted_degree(rr, ones);
    for (auto& L : A.levels_) L.weights.assign(L.vars.size(), w);
  }
  A.target_ = R.quotient({rr}, R.name() + "/(r)");
  for (std::size_t i = 0; i < nb; ++i) A.augmentation_.push_back(A.target_.var(static_cast<int>(i)));
  A.kind_ = HomotopyKind::Koszul;
  A.koszul_ = {rr.rename(A.levels_[0].ring.ring(), identity_map(nb))};
  A.provenance_ = "hypersurface";
  return A;
}

SimplicialAlgebra SimplicialAlgebra::kill_cycle(const SimplicialAlgebra& A, const Polynomial& w_in, int d,
                                                const std::string& prefix, int zero_weight) {
  if (d < 1) throw InputError("cycles are killed in level >= 1");
  if (d > A.top()) throw InputError("extension is not built up to the killing level");
  const PresentedAlgebra& Ad1 = A.level_ring(d - 1);
  Polynomial w = Ad1.normal_form(w_in);
  if (d - 1 >= 1)
    for (int i = 0; i <= d - 1; ++i)
      if (!A.apply_face(d - 1, i, w).is_zero()) throw InputError("element is not a Moore cycle");
  const int top = A.top();
  const std::size_t nb = A.base_.nvars();
  std::vector<std::vector<std::vector<int>>> surj(static_cast<std::size_t>(top + 1));
  std::vector<std::vector<std::string>> names;
  for (int n = 0; n <= top; ++n) {
    std::vector<std::string> v = A.level_vars(n);
    if (n >= d) {
      surj[static_cast<std::size_t>(n)] = monotone_surjections(n, d);
      for (const auto& t : surj[static_cast<std::size_t>(n)])
        v.push_back(prefix + "[" + std::to_string(d) + ";" + seq_string(t) + "]");
    }
    std::set<std::string> uniq(v.begin(), v.end());
    if (uniq.size() != v.size()) throw InputError("variable prefix '" + prefix + "' clashes with existing variables");
    names.push_back(v);
  }
  SimplicialAlgebra B;
  B.base_ = A.base_;
  B.base_weights_ = A.base_weights_;
  B.finish_rings(names);
  // weight of the new variables
  std::optional<int> wweight;
  if (A.graded()) {
    std::vector<int> all = A.base_weights_;
    for (int x : A.level(d - 1).weights) all.push_back(x);
    wweight = w.is_zero() ? std::optional<int>(zero_weight) : weighted_degree(w, all);
  }
  auto old_map = [&](int n) { return identity_map(nb + A.level_vars(n).size()); };
  for (int n = 0; n <= top; ++n) {
    Level& L = B.levels_[static_cast<std::size_t>(n)];
    const Level& old = A.level(n);
    const std::size_t nold = old.vars.size();
    if (A.graded() && wweight) {
      L.weights = old.weights;
      L.weights.resize(L.vars.size(), *wweight);
    }
    if (n >= 1) {
      const RingPtr& down = B.levels_[static_cast<std::size_t>(n - 1)].ring.ring();
      const std::size_t nold_down = A.level_vars(n - 1).size();
      L.faces.assign(static_cast<std::size_t>(n + 1), {});
      for (int i = 0; i <= n; ++i) {
        auto& f = L.faces[static_cast<std::size_t>(i)];
        for (std::size_t v = 0; v < nold; ++v) f.push_back(old.faces[static_cast<std::size_t>(i)][v].rename(down, old_map(n - 1)));
        if (n < d) continue;
        for (const auto& t : surj[static_cast<std::size_t>(n)]) {
          std::vector<int> td = t;
          td.erase(td.begin() + i);
          if (is_surjective_onto(td, d)) {
            const auto& lst = surj[static_cast<std::size_t>(n - 1)];
            auto pos = static_cast<std::size_t>(std::find(lst.begin(), lst.end(), td) - lst.begin());
            f.push_back(Polynomial::variable(down, static_cast<int>(nb + nold_down + pos)));
            continue;
          }
          int missing = 0;
          {
            std::vector<bool> hit(static_cast<std::size_t>(d + 1), false);
            for (int v : td) hit[static_cast<std::size_t>(v)] = true;
            while (hit[static_cast<std::size_t>(missing)]) ++missing;
          }
          if (missing != 0) {
            f.push_back(Polynomial(down));
            continue;
          }
          std::vector<int> u = td;
          for (auto& x : u)
            if (x > missing) --x;
          Polynomial img = A.apply_surjection(u, w);
          f.push_back(img.rename(down, old_map(n - 1)));
        }
      }
    }
    if (n < top) {
      const RingPtr& up = B.levels_[static_cast<std::size_t>(n + 1)].ring.ring();
      const std::size_t nold_up = A.level_vars(n + 1).size();
      L.degens.assign(static_cast<std::size_t>(n + 1), {});
      for (int j = 0; j <= n; ++j) {
        auto& s = L.degens[static_cast<std::size_t>(j)];
        for (std::size_t v = 0; v < nold; ++v) s.push_back(old.degens[static_cast<std::size_t>(j)][v].rename(up, old_map(n + 1)));
        if (n < d) continue;
        for (const auto& t : surj[static_cast<std::size_t>(n)]) {
          std::vector<int> ts = t;
          ts.insert(ts.begin() + j, t[static_cast<std::size_t>(j)]);
          const auto& lst = surj[static_cast<std::size_t>(n + 1)];
          auto pos = static_cast<std::size_t>(std::find(lst.begin(), lst.end(), ts) - lst.begin());
          s.push_back(Polynomial::variable(up, static_cast<int>(nb + nold_up + pos)));
        }
      }
    }
  }
  if (d == 1) {
    B.target_ = A.target_.quotient({A.augment(0, w)});
  } else {
    B.target_ = A.target_;
  }
  B.augmentation_ = A.augmentation_;
  if (A.kind_ == HomotopyKind::Koszul && d == 1) {
    B.kind_ = HomotopyKind::Koszul;
    for (const auto& k : A.koszul_) B.koszul_.push_back(k.rename(B.levels_[0].ring.ring(), old_map(0)));
    B.koszul_.push_back(w.rename(B.levels_[0].ring.ring(), old_map(0)));
  } else {
    B.kind_ = HomotopyKind::Other;
  }
  B.provenance_ = A.provenance_ + "+kill(" + std::to_string(d) + ")";
  return B;
}

SimplicialAlgebra SimplicialAlgebra::tensor(const SimplicialAlgebra& A1, const SimplicialAlgebra& A2) {
  if (A1.top() != A2.top()) throw InputError("extensions are built to different levels");
  const bool same_base = A1.base_.ring()->same_as(*A2.base_.ring());
  SimplicialAlgebra T;
  std::vector<int> base2_map;
  if (same_base) {
    T.base_ = A1.base_;
    T.base_weights_ = A1.base_weights_ == A2.base_weights_ ? A1.base_weights_ : std::vector<int>{};
    base2_map = identity_map(A2.base_.nvars());
  } else {
    std::vector<std::string> names = A1.base_.vars();
    for (const auto& v : A2.base_.vars()) {
      if (A1.base_.ring()->index_of(v) >= 0) throw InputError("bases share variable names");
      names.push_back(v);
    }
    RingPtr br = make_ring(A1.base_.field(), names, MonomialOrder{A1.base_.ring()->order().kind, {}});
    base2_map.clear();
    for (std::size_t i = 0; i < A2.base_.nvars(); ++i) base2_map.push_back(static_cast<int>(A1.base_.nvars() + i));
    std::vector<Polynomial> rels;
    for (const auto& p : A1.base_.relations()) rels.push_back(p.rename(br, identity_map(A1.base_.nvars())));
    for (const auto& p : A2.base_.relations()) rels.push_back(p.rename(br, base2_map));
    T.base_ = PresentedAlgebra(br, rels, A1.base_.name() + "*" + A2.base_.name());
    if (A1.base_weights_.size() == A1.base_.nvars() && A2.base_weights_.size() == A2.base_.nvars()) {
      T.base_weights_ = A1.base_weights_;
      for (int w : A2.base_weights_) T.base_weights_.push_back(w);
    }
  }
  const std::size_t nb = T.base_.nvars();
  const int top = A1.top();
  std::vector<std::vector<std::string>> names;
  std::vector<std::vector<int>> map2(static_cast<std::size_t>(top + 1)), map1(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n) {
    std::vector<std::string> v = A1.level_vars(n);
    std::set<std::string> used(v.begin(), v.end());
    for (const auto& b : T.base_.vars()) used.insert(b);
    map1[static_cast<std::size_t>(n)] = identity_map(A1.base_.nvars() + v.size());
    std::vector<int>& m2 = map2[static_cast<std::size_t>(n)];
    m2 = base2_map;
    for (const auto& x : A2.level_vars(n)) {
      std::string nm = x;
      while (used.count(nm)) nm += "'";
      used.insert(nm);
      m2.push_back(static_cast<int>(nb + v.size()));
      v.push_back(nm);
    }
    // level-1 base variables of A1 are at the same indices in T
    names.push_back(v);
  }
  if (!same_base)
    for (int n = 0; n <= top; ++n) {
      // A1 level vars are shifted by the extra base variables of A2
      auto& m1 = map1[static_cast<std::size_t>(n)];
      for (std::size_t i = A1.base_.nvars(); i < m1.size(); ++i) m1[i] = static_cast<int>(nb + (i - A1.base_.nvars()));
    }
  T.finish_rings(names);
  for (int n = 0; n <= top; ++n) {
    Level& L = T.levels_[static_cast<std::size_t>(n)];
    const Level& L1 = A1.level(n);
    const Level& L2 = A2.level(n);
    if (!T.base_weights_.empty() && L1.weights.size() == L1.vars.size() && L2.weights.size() == L2.vars.size()) {
      L.weights = L1.weights;
      for (int w : L2.weights) L.weights.push_back(w);
    }
    if (n >= 1) {
      const RingPtr& down = T.levels_[static_cast<std::size_t>(n - 1)].ring.ring();
      L.faces.assign(static_cast<std::size_t>(n + 1), {});
      for (int i = 0; i <= n; ++i) {
        for (const auto& p : L1.faces[static_cast<std::size_t>(i)]) L.faces[static_cast<std::size_t>(i)].push_back(p.rename(down, map1[static_cast<std::size_t>(n - 1)]));
        for (const auto& p : L2.faces[static_cast<std::size_t>(i)]) L.faces[static_cast<std::size_t>(i)].push_back(p.rename(down, map2[static_cast<std::size_t>(n - 1)]));
      }
    }
    if (n < top) {
      const RingPtr& up = T.levels_[static_cast<std::size_t>(n + 1)].ring.ring();
      L.degens.assign(static_cast<std::size_t>(n + 1), {});
      for (int j = 0; j <= n; ++j) {
        for (const auto& p : L1.degens[static_cast<std::size_t>(j)]) L.degens[static_cast<std::size_t>(j)].push_back(p.rename(up, map1[static_cast<std::size_t>(n + 1)]));
        for (const auto& p : L2.degens[static_cast<std::size_t>(j)]) L.degens[static_cast<std::size_t>(j)].push_back(p.rename(up, map2[static_cast<std::size_t>(n + 1)]));
      }
    }
  }
  // target: T1 (x) T2 over the base
  const PresentedAlgebra& T1 = A1.target_;
  const PresentedAlgebra& T2 = A2.target_;
  std::vector<std::string> tn = T1.vars();
  std::set<std::string> used(tn.begin(), tn.end());
  std::vector<int> t2map;
  for (const auto& v : T2.vars()) {
    std::string nm = v;
    while (used.count(nm)) nm += "'";
    used.insert(nm);
    t2map.push_back(static_cast<int>(tn.size()));
    tn.push_back(nm);
  }
  RingPtr tr = make_ring(T1.field(), tn, MonomialOrder{T1.ring()->order().kind, {}});
  std::vector<Polynomial> trels;
  for (const auto& p : T1.relations()) trels.push_back(p.rename(tr, identity_map(T1.nvars())));
  for (const auto& p : T2.relations()) trels.push_back(p.rename(tr, t2map));
  if (same_base)
    for (std::size_t b = 0; b < nb; ++b)
      trels.push_back(A1.augmentation_[b].rename(tr, identity_map(T1.nvars())) - A2.augmentation_[b].rename(tr, t2map));
  T.target_ = PresentedAlgebra(tr, trels, T1.name() + "*" + T2.name());
  // augmentation of base then level-0 variables
  const std::size_t nb1 = A1.base_.nvars();
  std::vector<Polynomial> aug(nb + T.levels_[0].vars.size(), Polynomial(tr));
  for (std::size_t b = 0; b < nb1; ++b) aug[b] = T.target_.normal_form(A1.augmentation_[b].rename(tr, identity_map(T1.nvars())));
  for (std::size_t b = 0; b < A2.base_.nvars(); ++b)
    aug[static_cast<std::size_t>(base2_map[b])] = T.target_.normal_form(A2.augmentation_[b].rename(tr, t2map));
  for (std::size_t v = 0; v < A1.level_vars(0).size(); ++v)
    aug[static_cast<std::size_t>(map1[0][nb1 + v])] = T.target_.normal_form(A1.augmentation_[nb1 + v].rename(tr, identity_map(T1.nvars())));
  for (std::size_t v = 0; v < A2.level_vars(0).size(); ++v)
    aug[static_cast<std::size_t>(map2[0][A2.base_.nvars() + v])] =
        T.target_.normal_form(A2.augmentation_[A2.base_.nvars() + v].rename(tr, t2map));
  T.augmentation_ = aug;
  if (A1.kind_ == HomotopyKind::Koszul && A2.kind_ == HomotopyKind::Koszul) {
    T.kind_ = HomotopyKind::Koszul;
    for (const auto& k : A1.koszul_) T.koszul_.push_back(k.rename(T.levels_[0].ring.ring(), map1[0]));
    for (const auto& k : A2.koszul_) T.koszul_.push_back(k.rename(T.levels_[0].ring.ring(), map2[0]));
  }
  T.provenance_ = "tensor(" + A1.provenance_ + "," + A2.provenance_ + ")";
  return T;
}

SimplicialAlgebra SimplicialAlgebra::kill_chain(const PresentedAlgebra& R, const std::vector<std::string>& vars,
                                                const std::vector<std::string>& elements, int top) {
  SimplicialAlgebra A = constant(R, vars, top);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    Polynomial w = parse_polynomial(elements[i], A.level_ring(0).ring());
    std::string prefix = elements.size() == 1 ? "x" : "x" + std::to_string(i + 1);
    A = kill_cycle(A, w, 1, prefix);
  }
  A.provenance_ = "killcycles";
  return A;
}

// ---------------------------------------------------------------- validation

namespace {

void check_equal(std::vector<IdentityViolation>& out, const PresentedAlgebra& R, const Polynomial& a,
                 const Polynomial& b, const std::string& id, int n, const std::string& var) {
  if (!R.is_zero(a - b)) out.push_back({id, n, var});
}

}  // namespace

std::vector<IdentityViolation> validate_identities(const SimplicialAlgebra& A) {
  std::vector<IdentityViolation> out;
  const std::size_t nb = A.num_base_vars();
  const int top = A.top();
  for (int n = 0; n <= top; ++n) {
    const auto& L = A.level(n);
    for (std::size_t v = 0; v < L.vars.size(); ++v) {
      Polynomial x = Polynomial::variable(L.ring.ring(), static_cast<int>(nb + v));
      const std::string& name = L.vars[v];
      if (n >= 2)
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i) {
            Polynomial lhs = A.apply_face(n - 1, i, A.apply_face(n, j, x));
            Polynomial rhs = A.apply_face(n - 1, j - 1, A.apply_face(n, i, x));
            check_equal(out, A.level_ring(n - 2), lhs, rhs, "d" + std::to_string(i) + "d" + std::to_string(j), n, name);
          }
      if (n + 1 <= top)
        for (int j = 0; j <= n; ++j) {
          Polynomial sx = A.apply_degeneracy(n, j, x);
          for (int i = 0; i <= n + 1; ++i) {
            Polynomial lhs = A.apply_face(n + 1, i, sx);
            std::string id = "d" + std::to_string(i) + "s" + std::to_string(j);
            if (i == j || i == j + 1) {
              check_equal(out, L.ring, lhs, x, id, n, name);
            } else if (i < j) {
              check_equal(out, L.ring, lhs, A.apply_degeneracy(n - 1, j - 1, A.apply_face(n, i, x)), id, n, name);
            } else {
              check_equal(out, L.ring, lhs, A.apply_degeneracy(n - 1, j, A.apply_face(n, i - 1, x)), id, n, name);
            }
          }
        }
      if (n + 2 <= top)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= j; ++i) {
            Polynomial lhs = A.apply_degeneracy(n + 1, i, A.apply_degeneracy(n, j, x));
            Polynomial rhs = A.apply_degeneracy(n + 1, j + 1, A.apply_degeneracy(n, i, x));
            check_equal(out, A.level_ring(n + 2), lhs, rhs, "s" + std::to_string(i) + "s" + std::to_string(j), n, name);
          }
    }
  }
  return out;
}

bool augmentation_valid(const SimplicialAlgebra& A) {
  const auto& T = A.target();
  // base relations and level-0 structure map into the target
  const auto& A0 = A.level_ring(0);
  for (const auto& r : A0.relations())
    if (!T.is_zero(r.substitute(T.ring(), A.augmentation()))) return false;
  if (A.top() < 1) return true;
  const auto& L1 = A.level(1);
  for (std::size_t v = 0; v < L1.vars.size(); ++v) {
    Polynomial a = T.normal_form(L1.faces[0][v].substitute(T.ring(), A.augmentation()));
    Polynomial b = T.normal_form(L1.faces[1][v].substitute(T.ring(), A.augmentation()));
    if (!T.is_zero(a - b)) return false;
  }
  return true;
}

std::vector<IdentityViolation> validate_identities(const SimplicialModule& V) {
  std::vector<IdentityViolation> out;
  const int top = V.top();
  const auto& R = V.ring;
  auto eq = [&](const PolyMatrix& a, const PolyMatrix& b, const std::string& id, int n) {
    for (std::size_t c = 0; c < a.cols(); ++c)
      for (std::size_t r = 0; r < a.rows(); ++r)
        if (!R.is_zero(a.at(r, c) - b.at(r, c))) {
          out.push_back({id, n, V.labels[static_cast<std::size_t>(n)][c]});
          return;
        }
  };
  auto F = [&](int n, int i) -> const PolyMatrix& { return V.faces[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)]; };
  auto S = [&](int n, int j) -> const PolyMatrix& { return V.degens[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)]; };
  for (int n = 0; n <= top; ++n) {
    if (n >= 2)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          eq(F(n - 1, i) * F(n, j), F(n - 1, j - 1) * F(n, i), "d" + std::to_string(i) + "d" + std::to_string(j), n);
    if (n + 1 <= top)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n + 1; ++i) {
          PolyMatrix lhs = F(n + 1, i) * S(n, j);
          std::string id = "d" + std::to_string(i) + "s" + std::to_string(j);
          if (i == j || i == j + 1) eq(lhs, PolyMatrix::identity(R.ring(), V.ranks[static_cast<std::size_t>(n)]), id, n);
          else if (i < j) eq(lhs, S(n - 1, j - 1) * F(n, i), id, n);
          else eq(lhs, S(n - 1, j) * F(n, i - 1), id, n);
        }
    if (n + 2 <= top)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i)
          eq(S(n + 1, i) * S(n, j), S(n + 1, j + 1) * S(n, i), "s" + std::to_string(i) + "s" + std::to_string(j), n);
  }
  return out;
}

FreeComplex alternating_complex(const SimplicialModule& V) {
  FreeComplex C(V.ring);
  for (int n = 0; n <= V.top(); ++n) C.set_rank(n, V.ranks[static_cast<std::size_t>(n)], V.labels[static_cast<std::size_t>(n)]);
  for (int n = 1; n <= V.top(); ++n) {
    PolyMatrix d(V.ring.ring(), V.ranks[static_cast<std::size_t>(n - 1)], V.ranks[static_cast<std::size_t>(n)]);
    for (int i = 0; i <= n; ++i) {
      const PolyMatrix& f = V.faces[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
      for (std::size_t c = 0; c < d.cols(); ++c)
        for (std::size_t r = 0; r < d.rows(); ++r)
          if (!f.at(r, c).is_zero()) d.at(r, c) = (i % 2 == 0) ? d.at(r, c) + f.at(r, c) : d.at(r, c) - f.at(r, c);
    }
    C.set_differential(n, d);
  }
  return C;
}

FreeComplex normalize(const SimplicialModule& V) {
  const int top = V.top();
  std::vector<std::vector<std::size_t>> keep(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n) {
    std::vector<bool> degenerate(V.ranks[static_cast<std::size_t>(n)], false);
    if (n >= 1)
      for (const auto& s : V.degens[static_cast<std::size_t>(n - 1)])
        for (std::size_t c = 0; c < s.cols(); ++c) {
          std::size_t hits = 0, row = 0;
          for (std::size_t r = 0; r < s.rows(); ++r)
            if (!s.at(r, c).is_zero()) {
              ++hits;
              row = r;
            }
          if (hits != 1 || !(s.at(row, c).is_constant() && s.at(row, c).constant_term() == 1))
            throw AlgebraError("degeneracies do not map basis to basis");
          degenerate[row] = true;
        }
    for (std::size_t b = 0; b < degenerate.size(); ++b)
      if (!degenerate[b]) keep[static_cast<std::size_t>(n)].push_back(b);
  }
  FreeComplex alt = alternating_complex(V);
  FreeComplex N(V.ring);
  for (int n = 0; n <= top; ++n) {
    std::vector<std::string> labels;
    for (auto b : keep[static_cast<std::size_t>(n)]) labels.push_back(V.labels[static_cast<std::size_t>(n)][b]);
    N.set_rank(n, keep[static_cast<std::size_t>(n)].size(), labels);
  }
  for (int n = 1; n <= top; ++n) {
    const auto& rows = keep[static_cast<std::size_t>(n - 1)];
    const auto& cols = keep[static_cast<std::size_t>(n)];
    PolyMatrix full = alt.differential(n);
    PolyMatrix d(V.ring.ring(), rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t r = 0; r < rows.size(); ++r) d.at(r, c) = full.at(rows[r], cols[c]);
    N.set_differential(n, d);
  }
  return N;
}

std::vector<std::size_t> moore_homology_dims_at(const SimplicialModule& V, const RationalPoint& p) {
  const int top = V.top();
  const Field& F = V.ring.field();
  // basis of N_n as columns of a matrix
  std::vector<FieldMatrix> basis(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n) {
    const std::size_t r = V.ranks[static_cast<std::size_t>(n)];
    if (n == 0 || r == 0) {
      FieldMatrix I(F, r, r);
      for (std::size_t i = 0; i < r; ++i) I.at(i, i) = 1;
      basis[static_cast<std::size_t>(n)] = I;
      continue;
    }
    FieldMatrix stacked(F, 0, r);
    for (int i = 1; i <= n; ++i)
      stacked = stacked.vstack(V.faces[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)].evaluate(p.coords));
    basis[static_cast<std::size_t>(n)] = FieldMatrix::from_columns(F, r, stacked.kernel());
  }
  std::vector<std::size_t> out;
  for (int n = 0; n < top; ++n) {
    const FieldMatrix& K = basis[static_cast<std::size_t>(n)];
    std::size_t z = K.cols();
    if (n >= 1 && K.cols() > 0) {
      FieldMatrix d0 = V.faces[static_cast<std::size_t>(n)][0].evaluate(p.coords) * K;
      z = K.cols() - d0.rank();
    }
    const FieldMatrix& K1 = basis[static_cast<std::size_t>(n + 1)];
    std::size_t b = 0;
    if (K1.cols() > 0 && V.ranks[static_cast<std::size_t>(n)] > 0)
      b = (V.faces[static_cast<std::size_t>(n + 1)][0].evaluate(p.coords) * K1).rank();
    out.push_back(z - b);
  }
  return out;
}

SimplicialModule kahler_module(const SimplicialAlgebra& A) {
  const PresentedAlgebra& T = A.target();
  const std::size_t nb = A.num_base_vars();
  const int top = A.top();
  SimplicialModule V;
  V.ring = T;
  // images in T of all variables of each level ring
  std::vector<std::vector<Polynomial>> eps(static_cast<std::size_t>(top + 1));
  eps[0] = A.augmentation();
  for (int n = 1; n <= top; ++n) {
    auto& e = eps[static_cast<std::size_t>(n)];
    for (std::size_t b = 0; b < nb; ++b) e.push_back(eps[0][b]);
    for (const auto& f : A.level(n).faces[0]) e.push_back(T.normal_form(f.substitute(T.ring(), eps[static_cast<std::size_t>(n - 1)])));
  }
  for (int n = 0; n <= top; ++n) {
    V.ranks.push_back(A.level_vars(n).size());
    std::vector<std::string> labels;
    for (const auto& v : A.level_vars(n)) labels.push_back("d" + v);
    V.labels.push_back(labels);
  }
  auto jac = [&](const std::vector<Polynomial>& images, int to_level) {
    const std::size_t rows = A.level_vars(to_level).size();
    PolyMatrix M(T.ring(), rows, images.size());
    for (std::size_t c = 0; c < images.size(); ++c)
      for (std::size_t r = 0; r < rows; ++r) {
        Polynomial d = images[c].derivative(static_cast<int>(nb + r));
        if (!d.is_zero()) M.at(r, c) = T.normal_form(d.substitute(T.ring(), eps[static_cast<std::size_t>(to_level)]));
      }
    return M;
  };
  V.faces.resize(static_cast<std::size_t>(top + 1));
  V.degens.resize(static_cast<std::size_t>(top + 1));
  for (int n = 1; n <= top; ++n)
    for (const auto& f : A.level(n).faces) V.faces[static_cast<std::size_t>(n)].push_back(jac(f, n - 1));
  for (int n = 0; n < top; ++n)
    for (const auto& s : A.level(n).degens) V.degens[static_cast<std::size_t>(n)].push_back(jac(s, n + 1));
  return V;
}

std::optional<FPModule> homotopy_module(const SimplicialAlgebra& A, int n) {
  if (A.homotopy_kind() != HomotopyKind::Koszul) return std::nullopt;
  FreeComplex K = koszul_complex(A.koszul_elements(), A.level_ring(0));
  return complex_homology(K, n);
}

std::optional<bool> is_resolution(const SimplicialAlgebra& A) {
  if (A.homotopy_kind() != HomotopyKind::Koszul) return std::nullopt;
  FreeComplex K = koszul_complex(A.koszul_elements(), A.level_ring(0));
  for (int n = 1; n <= static_cast<int>(A.koszul_elements().size()); ++n)
    if (!complex_homology(K, n).is_zero()) return false;
  return true;
}

namespace {

std::vector<Monomial> monomials_of_weight(std::size_t nvars, const std::vector<int>& w, int e,
                                          const std::vector<Polynomial>& gb) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == nvars) {
      if (left != 0) return;
      for (const auto& g : gb)
        if (g.leading().m.divides(cur)) return;
      out.push_back(cur);
      return;
    }
    for (int k = 0; k * w[i] <= left; ++k) {
      cur.e[i] = k;
      cur.deg += k;
      rec(i + 1, left - k * w[i]);
      cur.deg -= k;
    }
    cur.e[i] = 0;
  };
  rec(0, e);
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> graded_homotopy_dims(const SimplicialAlgebra& A, int max_weight) {
  if (!A.graded()) throw AlgebraError("extension carries no positive grading");
  const int top = A.top();
  std::vector<std::vector<int>> wts(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n) {
    auto& w = wts[static_cast<std::size_t>(n)];
    w = A.base_weights();
    for (int x : A.level(n).weights) w.push_back(x);
    for (int x : w)
      if (x <= 0) throw AlgebraError("weights must be positive");
    for (const auto& r : A.level_ring(n).groebner())
      if (!weighted_degree(r, w)) throw AlgebraError("base relations are not homogeneous");
  }
  PresentedAlgebra k = PresentedAlgebra::polynomial(A.base().field(), {}, "k");
  RationalPoint origin{"", {}};
  std::vector<std::vector<std::size_t>> dims(static_cast<std::size_t>(top), std::vector<std::size_t>(static_cast<std::size_t>(max_weight + 1), 0));
  for (int e = 0; e <= max_weight; ++e) {
    std::vector<std::vector<Monomial>> basis(static_cast<std::size_t>(top + 1));
    for (int n = 0; n <= top; ++n)
      basis[static_cast<std::size_t>(n)] = monomials_of_weight(A.level_ring(n).nvars(), wts[static_cast<std::size_t>(n)], e, A.level_ring(n).groebner());
    SimplicialModule V;
    V.ring = k;
    for (int n = 0; n <= top; ++n) {
      V.ranks.push_back(basis[static_cast<std::size_t>(n)].size());
      V.labels.push_back(std::vector<std::string>(basis[static_cast<std::size_t>(n)].size(), "m"));
    }
    auto matrix = [&](int from, int to, const std::function<Polynomial(const Polynomial&)>& f) {
      const auto& src = basis[static_cast<std::size_t>(from)];
      const auto& dst = basis[static_cast<std::size_t>(to)];
      PolyMatrix M(k.ring(), dst.size(), src.size());
      const RingPtr& rf = A.level_ring(from).ring();
      for (std::size_t c = 0; c < src.size(); ++c) {
        Polynomial img = f(Polynomial::monomial(rf, src[c], Scalar(1)));
        for (const auto& t : img.terms()) {
          auto it = std::find(dst.begin(), dst.end(), t.m);
          if (it == dst.end()) throw AlgebraError("structure map is not homogeneous");
          M.at(static_cast<std::size_t>(it - dst.begin()), c) = Polynomial::constant(k.ring(), t.c);
        }
      }
      return M;
    };
    V.faces.resize(static_cast<std::size_t>(top + 1));
    V.degens.resize(static_cast<std::size_t>(top + 1));
    for (int n = 1; n <= top; ++n)
      for (int i = 0; i <= n; ++i)
        V.faces[static_cast<std::size_t>(n)].push_back(matrix(n, n - 1, [&](const Polynomial& p) { return A.apply_face(n, i, p); }));
    std::vector<std::size_t> h = moore_homology_dims_at(V, origin);
    for (int n = 0; n < top; ++n) dims[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)] = h[static_cast<std::size_t>(n)];
  }
  return dims;
}

bool bar_matches_kill_cycle(const PresentedAlgebra& R, int top) {
  SimplicialAlgebra bar = SimplicialAlgebra::bar_construction(R, top);
  SimplicialAlgebra con = SimplicialAlgebra::constant(bar.base(), {}, top);
  Polynomial y = Polynomial::variable(con.level_ring(0).ring(), static_cast<int>(R.nvars()));
  SimplicialAlgebra kc = SimplicialAlgebra::kill_cycle(con, y, 1);
  const std::size_t nb = bar.num_base_vars();
  // position of x[1; 0^(k+1) 1^(n-k)] in kill-cycle level n
  auto index_in_kill = [&](int n, int k) {
    std::vector<int> t(static_cast<std::size_t>(n + 1), 1);
    for (int i = 0; i <= k; ++i) t[static_cast<std::size_t>(i)] = 0;
    auto lst = monotone_surjections(n, 1);
    return static_cast<int>(std::find(lst.begin(), lst.end(), t) - lst.begin());
  };
  auto var_map = [&](int n) {
    std::vector<int> m;
    for (std::size_t b = 0; b < nb; ++b) m.push_back(static_cast<int>(b));
    for (int k = 0; k < n; ++k) m.push_back(static_cast<int>(nb) + index_in_kill(n, k));
    return m;
  };
  for (int n = 0; n <= top; ++n) {
    if (bar.level_vars(n).size() != kc.level_vars(n).size()) return false;
    for (int k = 0; k < n; ++k) {
      int kk = index_in_kill(n, k);
      if (n >= 1)
        for (int i = 0; i <= n; ++i) {
          Polynomial a = bar.level(n).faces[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].rename(kc.level_ring(n - 1).ring(), var_map(n - 1));
          const Polynomial& b = kc.level(n).faces[static_cast<std::size_t>(i)][static_cast<std::size_t>(kk)];
          if (!kc.level_ring(n - 1).is_zero(a - b)) return false;
        }
      if (n < top)
        for (int j = 0; j <= n; ++j) {
          Polynomial a = bar.level(n).degens[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)].rename(kc.level_ring(n + 1).ring(), var_map(n + 1));
          const Polynomial& b = kc.level(n).degens[static_cast<std::size_t>(j)][static_cast<std::size_t>(kk)];
          if (!kc.level_ring(n + 1).is_zero(a - b)) return false;
        }
    }
  }
  return true;
}

}  // namespace aq
