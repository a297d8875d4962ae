#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aq/cotangent.hpp"

namespace aq {

// A verdict and its independent check disagree.
class OracleDisagreement : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

enum class Property { Smooth, Unramified, Etale, Lci, Regular, CompleteIntersection };

std::string property_name(Property p);
Property parse_property(const std::string& name);

struct PointVerdict {
  std::string point;
  std::vector<Scalar> coords;
  bool verdict = false;
  std::vector<std::size_t> aq;  // AQ_0, AQ_1, AQ_2 with residue coefficients
  bool oracle = false;
  std::string oracle_name;
  bool agrees() const { return verdict == oracle; }
};

struct ClassificationReport {
  std::string subject;
  Property property = Property::Smooth;
  std::vector<PointVerdict> points;
  bool certified = false;  // global certificate that the property holds everywhere
  std::string certificate;
  bool oracle_agreement() const;
  std::string global_flag() const { return certified ? "certified" : "sampled-only"; }
};

// Each throws OracleDisagreement when the oracle disagrees.
PointVerdict is_smooth_at(const AlgebraMap& phi, const RationalPoint& m);
PointVerdict is_unramified_at(const AlgebraMap& phi, const RationalPoint& m);
PointVerdict is_etale_at(const AlgebraMap& phi, const RationalPoint& m);
PointVerdict is_lci_at(const AlgebraMap& phi, const RationalPoint& m);
// AQ_2(k(m)|R; k(m)) = 0
PointVerdict is_regular_local(const PresentedAlgebra& R, const RationalPoint& m);
// AQ_2(R|Q; k(m)) = 0 for Q the polynomial ring on the variables of R
PointVerdict is_complete_intersection(const PresentedAlgebra& R, const RationalPoint& m);

ClassificationReport classify_map(Property prop, const AlgebraMap& phi, const std::vector<RationalPoint>& points);
ClassificationReport classify_ring(Property prop, const PresentedAlgebra& R, const std::vector<RationalPoint>& points);

// minimal generators of I_m among the presentation relations, and the Koszul
// test that they form a regular sequence at m
struct KoszulOracle {
  std::vector<Polynomial> generators;
  std::size_t h1_dim = 0;
  bool regular() const { return h1_dim == 0; }
};
KoszulOracle koszul_regular_sequence_oracle(const AlgebraMap& phi, const RationalPoint& m);

// rank of the Jacobian dF/dY at m against the local number of generators
struct JacobianOracle {
  std::size_t jacobian_rank = 0;
  std::size_t local_generators = 0;
  bool smooth() const { return jacobian_rank == local_generators; }
};
JacobianOracle jacobian_criterion(const AlgebraMap& phi, const RationalPoint& m);

// the c x c minors of dF/dY generate the unit ideal of S
bool standard_smooth_certificate(const AlgebraMap& phi);

struct HkrPoint {
  std::string point;
  bool smooth = false;      // eta at m
  bool lci = false;         // mu at (m, m)
  std::size_t aq1_eta = 0;  // AQ_1(S|K; k)
  std::size_t aq2_mu = 0;   // AQ_2(S|S^e; k)
};
struct HkrReport {
  AlgebraMap mu;  // S^e -> S
  std::vector<HkrPoint> points;
  bool equivalent = false;
};
HkrReport hkr_equivalence_check(const AlgebraMap& eta, const std::vector<RationalPoint>& points);

struct ImperfectionReport {
  std::size_t gamma = 0;       // dim_l AQ_1(l|k; l)
  std::size_t omega_rank = 0;  // dim_l Omega_{l|k}
  std::string field_certificate;
  bool separable() const { return gamma == 0; }
};
// l is the target; a function field is modelled by its generic point
ImperfectionReport module_of_imperfection(const AlgebraMap& eta);

}  // namespace aq
