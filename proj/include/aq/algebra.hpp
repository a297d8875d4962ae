#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aq/groebner.hpp"

namespace aq {

// k[vars]/(relations) with a cached reduced Groebner basis.
class PresentedAlgebra {
 public:
  PresentedAlgebra() = default;
  PresentedAlgebra(RingPtr ring, std::vector<Polynomial> relations, std::string name = "");

  static PresentedAlgebra polynomial(Field field, std::vector<std::string> vars, std::string name = "",
                                     MonomialOrder order = {});
  static PresentedAlgebra parse(Field field, std::vector<std::string> vars,
                                const std::vector<std::string>& relations, std::string name = "",
                                MonomialOrder order = {});

  const RingPtr& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  const std::vector<std::string>& vars() const { return ring_->vars(); }
  std::size_t nvars() const { return ring_->nvars(); }
  const std::vector<Polynomial>& relations() const { return relations_; }
  const std::vector<Polynomial>& groebner() const { return gb_polys_; }
  const ModuleGB& groebner_module() const { return *gb_; }
  const std::string& name() const { return name_; }
  bool is_polynomial_ring() const { return gb_polys_.empty(); }
  bool is_zero_ring() const;

  Polynomial normal_form(const Polynomial& p) const;
  bool is_zero(const Polynomial& p) const { return normal_form(p).is_zero(); }
  Polynomial var(const std::string& name) const { return Polynomial::variable(ring_, name); }
  Polynomial var(int i) const { return Polynomial::variable(ring_, i); }
  Polynomial constant(long c) const { return Polynomial::constant(ring_, c); }
  Polynomial parse_element(const std::string& text) const;

  PresentedAlgebra quotient(const std::vector<Polynomial>& extra, std::string name = "") const;
  PresentedAlgebra with_order(const MonomialOrder& order) const;
  // Krull dimension via the leading-term ideal
  int krull_dimension() const;
  bool contains_point(const std::vector<Scalar>& coords) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> relations_;
  std::vector<Polynomial> gb_polys_;
  std::shared_ptr<const ModuleGB> gb_;
  std::string name_;
};

// Reduced Groebner basis of the ideal (gens) + relations of A, sorted by
// decreasing leading term.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, const PresentedAlgebra& A);

// Rational point of a presented algebra, coordinates in variable order.
struct RationalPoint {
  std::string name;
  std::vector<Scalar> coords;
};

RationalPoint make_point(const PresentedAlgebra& A, const std::vector<std::pair<std::string, Scalar>>& values,
                         std::string name = "");

// R -> S given by images of the variables of R.
class AlgebraMap {
 public:
  AlgebraMap() = default;
  AlgebraMap(PresentedAlgebra source, PresentedAlgebra target, std::vector<Polynomial> images,
             std::string name = "");
  static AlgebraMap parse(PresentedAlgebra source, PresentedAlgebra target,
                          const std::vector<std::pair<std::string, std::string>>& images, std::string name = "");
  static AlgebraMap identity(const PresentedAlgebra& A);

  const PresentedAlgebra& source() const { return source_; }
  const PresentedAlgebra& target() const { return target_; }
  const std::vector<Polynomial>& images() const { return images_; }
  const std::string& name() const { return name_; }

  Polynomial apply(const Polynomial& p) const;
  // image in the source of a point of the target
  RationalPoint pullback(const RationalPoint& q) const;
  // every target variable is hit by some image modulo relations
  bool is_surjective_presentation() const;
  AlgebraMap compose_after(const AlgebraMap& first) const;  // this o first

 private:
  PresentedAlgebra source_, target_;
  std::vector<Polynomial> images_;
  std::string name_;
};

// Presentation S = P/(f) with P = R[Y]; the ring of P lists the source
// variables first, then the free variables Y.
struct RelativePresentation {
  PresentedAlgebra P;
  std::vector<Polynomial> f;
  std::vector<int> y_vars;     // indices in P of the free variables
  PresentedAlgebra S;          // P/(f), isomorphic to the target
  std::vector<Polynomial> target_to_S;  // images of target variables in S
  std::vector<Polynomial> S_to_target;  // images of S variables in the target

  RationalPoint point_in_S(const RationalPoint& target_point) const;
  std::size_t num_source_vars() const { return P.nvars() - y_vars.size(); }
};

RelativePresentation relative_presentation(const AlgebraMap& phi);

}  // namespace aq
