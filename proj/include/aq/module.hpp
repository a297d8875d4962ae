#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aq/linalg.hpp"

namespace aq {

// Submodule of A^rank generated by the given vectors; for A = P/J the
// Groebner basis also contains J * P^rank.
class Submodule {
 public:
  Submodule(const PresentedAlgebra& A, std::size_t rank, std::vector<PolyVec> gens);

  std::size_t rank() const { return rank_; }
  const std::vector<PolyVec>& generators() const { return gens_; }
  PolyVec reduce(const PolyVec& v) const;
  bool contains(const PolyVec& v) const;
  bool contains(const Submodule& o) const;
  bool same_as(const Submodule& o) const { return contains(o) && o.contains(*this); }
  bool is_everything() const { return gb_.is_everything(); }
  const ModuleGB& groebner() const { return gb_; }

 private:
  PresentedAlgebra A_;
  std::size_t rank_;
  std::vector<PolyVec> gens_;
  ModuleGB gb_;
};

// Generators of {c : sum_j c_j cols[j] = 0 in A^rank}.
std::vector<PolyVec> syzygies(const PresentedAlgebra& A, std::size_t rank, const std::vector<PolyVec>& cols);

// Solves M c = v over A.
class Lifter {
 public:
  Lifter(const PresentedAlgebra& A, const PolyMatrix& M);
  std::optional<PolyVec> lift(const PolyVec& v) const;

 private:
  PresentedAlgebra A_;
  std::size_t rows_, cols_;
  ModuleGB gb_;
};

// Finitely presented module A^g / (columns of relations).
class FPModule {
 public:
  FPModule() = default;
  FPModule(PresentedAlgebra A, std::size_t gens, PolyMatrix relations, std::vector<std::string> labels = {});
  static FPModule free(const PresentedAlgebra& A, std::size_t rank);
  static FPModule cyclic(const PresentedAlgebra& A, const std::vector<Polynomial>& ideal_gens);

  const PresentedAlgebra& ring() const { return A_; }
  std::size_t num_generators() const { return gens_; }
  const PolyMatrix& relations() const { return rel_; }
  const std::vector<std::string>& labels() const { return labels_; }

  // eliminate generators using relations with a unit entry
  FPModule pruned() const;
  bool is_zero() const;
  // rank when pruned presentation has no relations
  std::optional<std::size_t> free_rank() const;
  // dim over k of M (x) k(point)
  std::size_t dim_at(const std::vector<Scalar>& point) const;
  // rank over Frac(A), A a domain
  std::size_t generic_rank() const;
  // dim over k when M has finite length over a finitely generated k-algebra
  std::optional<std::size_t> length_dimension() const;
  std::string describe() const;

 private:
  PresentedAlgebra A_;
  std::size_t gens_ = 0;
  PolyMatrix rel_;
  std::vector<std::string> labels_;
};

// (span(H) + span(U)) / span(U) inside A^rank, presented on the generators H.
FPModule subquotient(const PresentedAlgebra& A, std::size_t rank, const std::vector<PolyVec>& H,
                     const std::vector<PolyVec>& U);

}  // namespace aq
