#pragma once

#include <optional>
#include <string>

#include "aq/algebra.hpp"

namespace aq {

// Irreducibility of a univariate polynomial over the base field: Rabin's test
// over F_p; over Q via reduction modulo small primes or the rational root
// test in degree <= 3. nullopt when undecided.
std::optional<bool> univariate_irreducible(const Polynomial& h, int var);

struct FieldCertificate {
  bool certified = false;
  std::string reason;
};

// A finite k-algebra is a field: zero-dimensional, in shape position with
// respect to some variable, with irreducible eliminant.
FieldCertificate verify_field(const PresentedAlgebra& L);

// f in k[t][x] monic in x and Eisenstein at t - a for a small a.
bool eisenstein_irreducible(const Polynomial& f, int t, int x);

// Polynomial ring after eliminating variables of graph relations c*v + h(others),
// or a verified field.
bool certified_domain(const PresentedAlgebra& S);

// ker(R -> S) = 0, by elimination
bool map_is_injective(const AlgebraMap& phi);

}  // namespace aq
