#pragma once

#include <vector>

#include "aq/polynomial.hpp"

namespace aq {

struct ModTerm {
  int pos;
  Monomial m;
  Scalar c;
};

// Element of a free module R^rank, terms sorted decreasing in the
// position-over-term order (lower position index is larger).
struct ModVec {
  std::vector<ModTerm> t;
  bool is_zero() const { return t.empty(); }
  const ModTerm& lead() const { return t.front(); }
};

int pot_compare(const PolyRing& R, const ModTerm& a, const ModTerm& b);
ModVec modvec_from(const PolyVec& v);
ModVec modvec_from(const Polynomial& p, int pos = 0);
PolyVec modvec_to(const ModVec& v, const RingPtr& ring, std::size_t rank);
ModVec modvec_sub(const PolyRing& R, const ModVec& a, const ModVec& b);
ModVec modvec_add(const PolyRing& R, const ModVec& a, const ModVec& b);
ModVec modvec_mul_term(const PolyRing& R, const ModVec& a, const Monomial& m, const Scalar& c);
ModVec modvec_monic(const PolyRing& R, const ModVec& a);

// Reduced Groebner basis of a submodule of R^rank (R a polynomial ring) in the
// position-over-term order; rank 1 gives polynomial ideals.
class ModuleGB {
 public:
  ModuleGB() = default;
  ModuleGB(RingPtr ring, std::size_t rank, const std::vector<ModVec>& gens);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<ModVec>& basis() const { return basis_; }
  ModVec reduce(const ModVec& v) const;
  bool contains(const ModVec& v) const { return reduce(v).is_zero(); }
  // the whole free module
  bool is_everything() const;

 private:
  RingPtr ring_;
  std::size_t rank_ = 0;
  std::vector<ModVec> basis_;
};

// Reduced Groebner basis of the ideal generated by gens (all in one ring).
std::vector<Polynomial> ideal_groebner(const RingPtr& ring, const std::vector<Polynomial>& gens);
Polynomial reduce_by(const Polynomial& f, const ModuleGB& gb);

}  // namespace aq
