#pragma once

#include <string>
#include <vector>

#include "aq/complex.hpp"

namespace aq {

// Omega_{S|R} presented on generators dw (w a target variable) by the
// Jacobian of the target relations and of the images of the source variables.
struct KahlerPresentation {
  PolyMatrix jacobian;  // |W| x (#target relations + #source variables)
  FPModule module;
};

KahlerPresentation kahler_presentation(const AlgebraMap& phi);

// Omega_{S|R} computed as I/I^2 for I the kernel of S (x)_R S -> S.
struct DiagonalOracle {
  PresentedAlgebra tensor_square;
  std::vector<Polynomial> diagonal;  // w - w'
  FPModule conormal;                 // I/I^2 over S on the diagonal generators
};

DiagonalOracle kahler_oracle_via_diagonal(const AlgebraMap& phi);
// dim of I/I^2 (x) k(p) = I/MI for M the maximal ideal of (p, p), by membership in S (x)_R S
std::size_t diagonal_conormal_dim_at(const AlgebraMap& phi, const RationalPoint& p);

// d(phi): Omega_R (x) S -> Omega_S as a |W| x |Z| matrix over the target.
PolyMatrix jacobian_of_map(const AlgebraMap& phi);

struct ExactnessReport {
  bool well_defined = false;
  bool exact_middle = false;
  bool surjective_right = false;
  bool holds() const { return well_defined && exact_middle && surjective_right; }
};

// Omega_{R|Q} (x) S -> Omega_{S|Q} -> Omega_{S|R} -> 0 for Q -psi-> R -phi-> S
ExactnessReport jacobi_zariski_right_exact(const AlgebraMap& psi, const AlgebraMap& phi);
// I/I^2 -> Omega_R (x) S -> Omega_S -> 0 for a surjection phi: R -> S
ExactnessReport conormal_sequence(const AlgebraMap& phi);

struct TensorKahler {
  PresentedAlgebra tensor;            // S1 (x)_R S2
  FPModule direct;                    // Omega_{S1 (x) S2 | R}
  FPModule sum_of_base_changes;       // Omega_{S1|R} (x) T  +  Omega_{S2|R} (x) T
  bool isomorphic = false;            // equal relation submodules on the same generators
};

TensorKahler kahler_of_tensor_product(const AlgebraMap& phi1, const AlgebraMap& phi2);

// Der_R(S, k(m)) as the kernel of the transposed Jacobian at m; each basis
// vector lists the values on the target variables.
std::vector<std::vector<Scalar>> derivations_at_point(const AlgebraMap& phi, const RationalPoint& m);
// values on target variables define an R-linear derivation S -> k(m)
bool is_derivation_at(const AlgebraMap& phi, const RationalPoint& m, const std::vector<Scalar>& values);
// values on target variables define an R-linear derivation S -> S
bool is_derivation(const AlgebraMap& phi, const std::vector<Polynomial>& values);
// D(f) for a target element f
Polynomial apply_derivation(const AlgebraMap& phi, const std::vector<Polynomial>& values, const Polynomial& f);

}  // namespace aq
