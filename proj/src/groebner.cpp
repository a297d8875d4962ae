#include "aq/groebner.hpp"

#include <algorithm>
#include <set>

namespace aq {

int pot_compare(const PolyRing& R, const ModTerm& a, const ModTerm& b) {
  if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
  return R.order().compare(a.m, b.m);
}

ModVec modvec_from(const Polynomial& p, int pos) {
  ModVec v;
  v.t.reserve(p.terms().size());
  for (const auto& term : p.terms()) v.t.push_back({pos, term.m, term.c});
  return v;
}

ModVec modvec_from(const PolyVec& vec) {
  ModVec v;
  for (std::size_t i = 0; i < vec.size(); ++i)
    for (const auto& term : vec[i].terms()) v.t.push_back({static_cast<int>(i), term.m, term.c});
  return v;
}

PolyVec modvec_to(const ModVec& v, const RingPtr& ring, std::size_t rank) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : v.t) parts.at(static_cast<std::size_t>(t.pos)).push_back({t.m, t.c});
  PolyVec out;
  out.reserve(rank);
  for (auto& p : parts) out.push_back(Polynomial::from_terms(ring, std::move(p)));
  return out;
}

namespace {

ModVec merge(const PolyRing& R, const ModVec& a, const ModVec& b, bool subtract) {
  ModVec out;
  out.t.reserve(a.t.size() + b.t.size());
  const Field& F = R.field();
  std::size_t i = 0, j = 0;
  while (i < a.t.size() || j < b.t.size()) {
    int c;
    if (i == a.t.size()) c = -1;
    else if (j == b.t.size()) c = 1;
    else c = pot_compare(R, a.t[i], b.t[j]);
    if (c > 0) {
      out.t.push_back(a.t[i++]);
    } else if (c < 0) {
      out.t.push_back({b.t[j].pos, b.t[j].m, subtract ? F.neg(b.t[j].c) : b.t[j].c});
      ++j;
    } else {
      Scalar s = subtract ? F.sub(a.t[i].c, b.t[j].c) : F.add(a.t[i].c, b.t[j].c);
      if (!Field::is_zero(s)) out.t.push_back({a.t[i].pos, a.t[i].m, s});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ModVec modvec_sub(const PolyRing& R, const ModVec& a, const ModVec& b) { return merge(R, a, b, true); }
ModVec modvec_add(const PolyRing& R, const ModVec& a, const ModVec& b) { return merge(R, a, b, false); }

ModVec modvec_mul_term(const PolyRing& R, const ModVec& a, const Monomial& m, const Scalar& c) {
  ModVec out;
  out.t.reserve(a.t.size());
  for (const auto& t : a.t) out.t.push_back({t.pos, t.m * m, R.field().mul(t.c, c)});
  return out;
}

ModVec modvec_monic(const PolyRing& R, const ModVec& a) {
  if (a.is_zero() || Field::is_one(a.lead().c)) return a;
  Scalar inv = R.field().inv(a.lead().c);
  ModVec out = a;
  for (auto& t : out.t) t.c = R.field().mul(t.c, inv);
  return out;
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(const PolyRing& R, std::size_t rank) : R_(R), rank_(rank) {}

  void insert_input(const ModVec& f) {
    ModVec h = full_reduce(f);
    if (!h.is_zero()) add(modvec_monic(R_, h));
  }

  void run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (pair_less(pairs_[k], pairs_[best])) best = k;
      Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      pending_.erase({p.i, p.j});
      if (chain_criterion(p)) continue;
      ModVec s = spoly(p);
      ModVec h = full_reduce(s);
      if (!h.is_zero()) add(modvec_monic(R_, h));
    }
  }

  std::vector<ModVec> reduced_basis() const {
    // minimal basis
    std::vector<ModVec> min;
    for (std::size_t a = 0; a < G_.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < G_.size() && !redundant; ++b) {
        if (a == b || G_[a].lead().pos != G_[b].lead().pos) continue;
        if (G_[b].lead().m.divides(G_[a].lead().m)) {
          if (G_[b].lead().m != G_[a].lead().m || b < a) redundant = true;
        }
      }
      if (!redundant) min.push_back(G_[a]);
    }
    // interreduce tails
    std::vector<ModVec> out;
    for (std::size_t a = 0; a < min.size(); ++a) {
      ModVec head;
      head.t.push_back(min[a].t.front());
      ModVec tail;
      tail.t.assign(min[a].t.begin() + 1, min[a].t.end());
      ModVec r = reduce_against(tail, min, a);
      out.push_back(modvec_add(R_, head, r));
    }
    std::sort(out.begin(), out.end(),
              [&](const ModVec& x, const ModVec& y) { return pot_compare(R_, x.lead(), y.lead()) < 0; });
    return out;
  }

 private:
  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
    int posa = G_[a.i].lead().pos, posb = G_[b.i].lead().pos;
    if (posa != posb) return posa > posb;
    int c = R_.order().compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }

  bool chain_criterion(const Pair& p) const {
    int pos = G_[p.i].lead().pos;
    for (std::size_t k = 0; k < G_.size(); ++k) {
      if (k == p.i || k == p.j || G_[k].lead().pos != pos) continue;
      if (!G_[k].lead().m.divides(p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (pending_.count(key(p.i, k)) || pending_.count(key(p.j, k))) continue;
      return true;
    }
    return false;
  }

  ModVec spoly(const Pair& p) const {
    const ModVec& f = G_[p.i];
    const ModVec& g = G_[p.j];
    ModVec a = modvec_mul_term(R_, f, p.lcm / f.lead().m, Scalar(1));
    ModVec b = modvec_mul_term(R_, g, p.lcm / g.lead().m, Scalar(1));
    return modvec_sub(R_, a, b);
  }

  void add(const ModVec& h) {
    std::size_t n = G_.size();
    G_.push_back(h);
    for (std::size_t i = 0; i < n; ++i) {
      if (G_[i].lead().pos != h.lead().pos) continue;
      if (rank_ == 1 && G_[i].lead().m.coprime(h.lead().m)) continue;
      pairs_.push_back({i, n, G_[i].lead().m.lcm(h.lead().m)});
      pending_.insert({i, n});
    }
  }

  ModVec full_reduce(const ModVec& f) const { return reduce_against(f, G_, G_.size()); }

  ModVec reduce_against(ModVec f, const std::vector<ModVec>& G, std::size_t skip) const {
    ModVec r;
    while (!f.is_zero()) {
      const ModTerm& lt = f.t.front();
      const ModVec* div = nullptr;
      for (std::size_t k = 0; k < G.size(); ++k) {
        if (k == skip) continue;
        const ModTerm& gl = G[k].lead();
        if (gl.pos == lt.pos && gl.m.divides(lt.m)) {
          div = &G[k];
          break;
        }
      }
      if (div) {
        Scalar c = R_.field().div(lt.c, div->lead().c);
        ModVec sub = modvec_mul_term(R_, *div, lt.m / div->lead().m, c);
        f = modvec_sub(R_, f, sub);
      } else {
        r.t.push_back(lt);
        f.t.erase(f.t.begin());
      }
    }
    return r;
  }

  const PolyRing& R_;
  std::size_t rank_;
  std::vector<ModVec> G_;
  std::vector<Pair> pairs_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
};

}  // namespace

ModuleGB::ModuleGB(RingPtr ring, std::size_t rank, const std::vector<ModVec>& gens)
    : ring_(std::move(ring)), rank_(rank) {
  Buchberger bb(*ring_, rank_);
  std::vector<ModVec> sorted;
  for (const auto& g : gens)
    if (!g.is_zero()) sorted.push_back(g);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](const ModVec& x, const ModVec& y) { return pot_compare(*ring_, x.lead(), y.lead()) < 0; });
  for (const auto& g : sorted) bb.insert_input(g);
  bb.run();
  basis_ = bb.reduced_basis();
}

ModVec ModuleGB::reduce(const ModVec& v) const {
  const PolyRing& R = *ring_;
  ModVec f = v;
  ModVec r;
  std::vector<ModTerm> rest;
  while (!f.is_zero()) {
    const ModTerm& lt = f.t.front();
    const ModVec* div = nullptr;
    for (const auto& g : basis_) {
      const ModTerm& gl = g.lead();
      if (gl.pos == lt.pos && gl.m.divides(lt.m)) {
        div = &g;
        break;
      }
    }
    if (div) {
      Scalar c = R.field().div(lt.c, div->lead().c);
      f = modvec_sub(R, f, modvec_mul_term(R, *div, lt.m / div->lead().m, c));
    } else {
      r.t.push_back(lt);
      f.t.erase(f.t.begin());
    }
  }
  return r;
}

bool ModuleGB::is_everything() const {
  std::vector<bool> hit(rank_, false);
  for (const auto& g : basis_)
    if (g.lead().m.is_one()) hit[static_cast<std::size_t>(g.lead().pos)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::vector<Polynomial> ideal_groebner(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  std::vector<ModVec> v;
  for (const auto& g : gens) v.push_back(modvec_from(g));
  ModuleGB gb(ring, 1, v);
  std::vector<Polynomial> out;
  for (const auto& b : gb.basis()) out.push_back(modvec_to(b, ring, 1)[0]);
  return out;
}

Polynomial reduce_by(const Polynomial& f, const ModuleGB& gb) {
  return modvec_to(gb.reduce(modvec_from(f)), f.ring(), 1)[0];
}

}  // namespace aq
