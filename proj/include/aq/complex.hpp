#pragma once

#include <map>
#include <string>
#include <vector>

#include "aq/module.hpp"

namespace aq {

// Bounded complex of finite free modules over A; differential(n): C_n -> C_{n-1}.
class FreeComplex {
 public:
  FreeComplex() = default;
  explicit FreeComplex(PresentedAlgebra A) : A_(std::move(A)) {}

  const PresentedAlgebra& ring() const { return A_; }
  void set_rank(int n, std::size_t r, std::vector<std::string> labels = {});
  void set_differential(int n, PolyMatrix d);
  std::size_t rank(int n) const;
  const std::vector<std::string>& labels(int n) const;
  PolyMatrix differential(int n) const;
  bool has_differential(int n) const { return d_.count(n) > 0; }
  int min_degree() const { return ranks_.empty() ? 0 : ranks_.begin()->first; }
  int max_degree() const { return ranks_.empty() ? -1 : ranks_.rbegin()->first; }
  // d_{n-1} d_n = 0 for all n
  bool is_complex() const;

 private:
  PresentedAlgebra A_;
  std::map<int, std::size_t> ranks_;
  std::map<int, std::vector<std::string>> labels_;
  std::map<int, PolyMatrix> d_;
};

// Complex C (x) N kept in factored form.
struct TensoredComplex {
  FreeComplex complex;
  FPModule coefficients;
};

TensoredComplex tensor_with_module(const FreeComplex& C, const FPModule& N);
// C (x) k(point) as matrices over k; throws "not a rational point"
std::map<int, FieldMatrix> tensor_with_residue(const FreeComplex& C, const RationalPoint& p);

FPModule complex_homology(const FreeComplex& C, int n);
FPModule complex_homology(const TensoredComplex& T, int n);
// H^n Hom(C, N)
FPModule complex_cohomology(const TensoredComplex& T, int n);
std::size_t homology_dim_at(const FreeComplex& C, int n, const RationalPoint& p);
// rank of H_n(C) (x) Frac(A), A a domain
std::size_t homology_generic_dim(const FreeComplex& C, int n);

// Koszul complex K(f; A) with basis in degree i the i-subsets in lex order.
FreeComplex koszul_complex(const std::vector<Polynomial>& f, const PresentedAlgebra& A);

}  // namespace aq
