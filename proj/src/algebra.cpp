#include "aq/algebra.hpp"

#include <algorithm>
#include <set>

namespace aq {

PresentedAlgebra::PresentedAlgebra(RingPtr ring, std::vector<Polynomial> relations, std::string name)
    : ring_(std::move(ring)), name_(std::move(name)) {
  for (auto& r : relations) {
    if (!r.ring() || !r.ring()->same_as(*ring_)) throw AlgebraError("relation outside the ambient ring");
    if (!r.is_zero()) relations_.push_back(r);
  }
  std::vector<ModVec> v;
  for (const auto& r : relations_) v.push_back(modvec_from(r));
  gb_ = std::make_shared<const ModuleGB>(ring_, 1, v);
  for (const auto& b : gb_->basis()) gb_polys_.push_back(modvec_to(b, ring_, 1)[0]);
}

PresentedAlgebra PresentedAlgebra::polynomial(Field field, std::vector<std::string> vars, std::string name,
                                              MonomialOrder order) {
  return PresentedAlgebra(make_ring(field, std::move(vars), std::move(order)), {}, std::move(name));
}

PresentedAlgebra PresentedAlgebra::parse(Field field, std::vector<std::string> vars,
                                         const std::vector<std::string>& relations, std::string name,
                                         MonomialOrder order) {
  RingPtr ring = make_ring(field, std::move(vars), std::move(order));
  std::vector<Polynomial> rels;
  for (const auto& r : relations) rels.push_back(parse_polynomial(r, ring));
  return PresentedAlgebra(ring, rels, std::move(name));
}

bool PresentedAlgebra::is_zero_ring() const { return gb_->is_everything(); }

Polynomial PresentedAlgebra::normal_form(const Polynomial& p) const {
  if (!p.ring() || !p.ring()->same_as(*ring_)) throw AlgebraError("element outside the ring " + name_);
  if (gb_polys_.empty()) return p;
  return reduce_by(p, *gb_);
}

Polynomial PresentedAlgebra::parse_element(const std::string& text) const {
  return normal_form(parse_polynomial(text, ring_));
}

PresentedAlgebra PresentedAlgebra::quotient(const std::vector<Polynomial>& extra, std::string name) const {
  std::vector<Polynomial> rels = relations_;
  for (const auto& e : extra) rels.push_back(e);
  return PresentedAlgebra(ring_, rels, name.empty() ? name_ : std::move(name));
}

PresentedAlgebra PresentedAlgebra::with_order(const MonomialOrder& order) const {
  RingPtr r = make_ring(field(), vars(), order);
  std::vector<Polynomial> rels;
  for (const auto& p : relations_) rels.push_back(p.in_ring(r));
  return PresentedAlgebra(r, rels, name_);
}

namespace {

// dimension of k[x]/M for a monomial ideal M given by generators: the largest
// set of variables containing no generator's support
int monomial_dimension(std::size_t n, const std::vector<Monomial>& gens) {
  int best = 0;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    int size = __builtin_popcountl(mask);
    if (size <= best) continue;
    bool ok = true;
    for (const auto& g : gens) {
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i)
        if (g.e[i] > 0 && !(mask & (1UL << i))) inside = false;
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = size;
  }
  return best;
}

}  // namespace

int PresentedAlgebra::krull_dimension() const {
  if (is_zero_ring()) return -1;
  if (nvars() > 20) throw AlgebraError("too many variables for dimension count");
  std::vector<Monomial> lead;
  for (const auto& g : gb_polys_) lead.push_back(g.leading().m);
  return monomial_dimension(nvars(), lead);
}

bool PresentedAlgebra::contains_point(const std::vector<Scalar>& coords) const {
  for (const auto& g : gb_polys_)
    if (!Field::is_zero(g.evaluate(coords))) return false;
  return true;
}

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, const PresentedAlgebra& A) {
  std::vector<Polynomial> all = A.relations();
  for (const auto& g : gens) all.push_back(g);
  auto gb = ideal_groebner(A.ring(), all);
  std::reverse(gb.begin(), gb.end());
  return gb;
}

RationalPoint make_point(const PresentedAlgebra& A, const std::vector<std::pair<std::string, Scalar>>& values,
                         std::string name) {
  RationalPoint p;
  p.name = std::move(name);
  p.coords.assign(A.nvars(), Scalar(0));
  std::vector<bool> seen(A.nvars(), false);
  for (const auto& [var, val] : values) {
    int i = A.ring()->index_of(var);
    if (i < 0) throw InputError("unknown variable '" + var + "' in point");
    if (seen[static_cast<std::size_t>(i)]) throw InputError("coordinate '" + var + "' given twice");
    seen[static_cast<std::size_t>(i)] = true;
    p.coords[static_cast<std::size_t>(i)] = A.field().make(val);
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw InputError("missing coordinate '" + A.vars()[i] + "' in point");
  if (!A.contains_point(p.coords)) throw InputError("not a rational point of " + A.name());
  return p;
}

AlgebraMap::AlgebraMap(PresentedAlgebra source, PresentedAlgebra target, std::vector<Polynomial> images,
                       std::string name)
    : source_(std::move(source)), target_(std::move(target)), name_(std::move(name)) {
  if (source_.field() != target_.field()) throw InputError("map between rings over different fields");
  if (images.size() != source_.nvars()) throw InputError("map needs one image per source variable");
  for (auto& im : images) {
    const bool bare = im.terms().size() == 1 && im.leading().m.deg == 1 && im.leading().c == 1;
    images_.push_back(bare ? im : target_.normal_form(im));
  }
  for (const auto& r : source_.relations())
    if (!target_.is_zero(apply(r)))
      throw InputError("map " + name_ + " does not respect the relation " + r.to_string());
}

AlgebraMap AlgebraMap::parse(PresentedAlgebra source, PresentedAlgebra target,
                             const std::vector<std::pair<std::string, std::string>>& images, std::string name) {
  std::vector<Polynomial> ims(source.nvars());
  std::vector<bool> given(source.nvars(), false);
  for (const auto& [var, text] : images) {
    int i = source.ring()->index_of(var);
    if (i < 0) throw InputError("unknown source variable '" + var + "'");
    ims[static_cast<std::size_t>(i)] = target.parse_element(text);
    given[static_cast<std::size_t>(i)] = true;
  }
  for (std::size_t i = 0; i < ims.size(); ++i) {
    if (given[i]) continue;
    const std::string& v = source.vars()[i];
    if (target.ring()->index_of(v) < 0)
      throw InputError("no image for '" + v + "' and no target variable of that name");
    ims[i] = target.var(v);
  }
  return AlgebraMap(std::move(source), std::move(target), std::move(ims), std::move(name));
}

AlgebraMap AlgebraMap::identity(const PresentedAlgebra& A) {
  std::vector<Polynomial> ims;
  for (std::size_t i = 0; i < A.nvars(); ++i) ims.push_back(A.var(static_cast<int>(i)));
  return AlgebraMap(A, A, ims, "id");
}

Polynomial AlgebraMap::apply(const Polynomial& p) const {
  return target_.normal_form(p.substitute(target_.ring(), images_));
}

RationalPoint AlgebraMap::pullback(const RationalPoint& q) const {
  RationalPoint p;
  p.name = q.name;
  for (const auto& im : images_) p.coords.push_back(im.evaluate(q.coords));
  return p;
}

bool AlgebraMap::is_surjective_presentation() const {
  return relative_presentation(*this).y_vars.empty();
}

AlgebraMap AlgebraMap::compose_after(const AlgebraMap& first) const {
  std::vector<Polynomial> ims;
  for (const auto& im : first.images()) ims.push_back(apply(im));
  return AlgebraMap(first.source(), target_, ims, name_ + "." + first.name());
}

RationalPoint RelativePresentation::point_in_S(const RationalPoint& q) const {
  RationalPoint p;
  p.name = q.name;
  for (const auto& s : S_to_target) p.coords.push_back(s.evaluate(q.coords));
  return p;
}

RelativePresentation relative_presentation(const AlgebraMap& phi) {
  const auto& R = phi.source();
  const auto& T = phi.target();
  const std::size_t nz = R.nvars(), nw = T.nvars();
  // identify target variables hit exactly by a source variable
  std::vector<int> w_to_z(nw, -1);
  std::vector<bool> z_simple(nz, false);
  for (std::size_t z = 0; z < nz; ++z) {
    const Polynomial& im = phi.images()[z];
    if (im.terms().size() != 1 || im.leading().m.deg != 1 || im.leading().c != 1) continue;
    std::size_t w = 0;
    while (im.leading().m.e[w] == 0) ++w;
    if (w_to_z[w] >= 0) continue;
    w_to_z[w] = static_cast<int>(z);
    z_simple[z] = true;
  }
  std::vector<std::string> names = R.vars();
  std::set<std::string> used(names.begin(), names.end());
  std::vector<int> w_index(nw, -1);
  RelativePresentation out;
  for (std::size_t w = 0; w < nw; ++w) {
    if (w_to_z[w] >= 0) {
      w_index[w] = w_to_z[w];
      continue;
    }
    std::string nm = T.vars()[w];
    while (used.count(nm)) nm += "'";
    used.insert(nm);
    w_index[w] = static_cast<int>(names.size());
    out.y_vars.push_back(static_cast<int>(names.size()));
    names.push_back(nm);
  }
  RingPtr pr = make_ring(R.field(), names, MonomialOrder{T.ring()->order().kind, {}});
  std::vector<int> zmap(nz);
  for (std::size_t z = 0; z < nz; ++z) zmap[z] = static_cast<int>(z);
  std::vector<Polynomial> prels;
  for (const auto& r : R.relations()) prels.push_back(r.rename(pr, zmap));
  out.P = PresentedAlgebra(pr, prels, "P");
  std::vector<Polynomial> f;
  auto push = [&](const Polynomial& g) {
    Polynomial h = out.P.normal_form(g);
    if (h.is_zero()) return;
    for (const auto& e : f)
      if (e == h || e == -h) return;
    f.push_back(h);
  };
  for (const auto& r : T.relations()) push(r.rename(pr, w_index));
  for (std::size_t z = 0; z < nz; ++z)
    if (!z_simple[z]) push(Polynomial::variable(pr, static_cast<int>(z)) - phi.images()[z].rename(pr, w_index));
  out.f = f;
  out.S = out.P.quotient(f, T.name());
  for (std::size_t w = 0; w < nw; ++w) out.target_to_S.push_back(Polynomial::variable(pr, w_index[w]));
  out.S_to_target.resize(names.size());
  for (std::size_t z = 0; z < nz; ++z) out.S_to_target[z] = phi.images()[z];
  for (std::size_t w = 0; w < nw; ++w)
    if (w_to_z[w] < 0) out.S_to_target[static_cast<std::size_t>(w_index[w])] = T.var(static_cast<int>(w));
  return out;
}

}  // namespace aq
