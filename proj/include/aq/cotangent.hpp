#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aq/domain.hpp"
#include "aq/kahler.hpp"
#include "aq/simplicial.hpp"

namespace aq {

enum class CotangentMode { Resolution, Truncated };

struct CotangentComplex {
  CotangentMode mode = CotangentMode::Truncated;
  FreeComplex complex;     // free S-modules, degrees >= 0
  int valid_degree = 0;    // homology is AQ in degrees <= valid_degree
  std::string provenance;
};

// Omega_{A|B} (x)_A S by the alternating sum of faces (or normalized)
CotangentComplex cotangent_from_resolution(const SimplicialAlgebra& A, bool normalized = false);

// L_3 -> L_2 -> L_1 -> L_0 from a presentation S = P/(f), P = R[Y]:
// L_0 = dY, L_1 = f, L_2 = syzygies of f, L_3 = relations among them modulo
// the Koszul relations. Computes AQ_n and AQ^n for n <= 2.
struct TruncatedCotangent {
  RelativePresentation pres;
  std::vector<PolyVec> syz;   // generators of Syz(f) over P, length m
  CotangentComplex cotangent;
};

TruncatedCotangent cotangent_trunc2(const AlgebraMap& phi);

// ranks of the differentials d_n, n = 2..top, of the hypersurface complex
std::vector<std::size_t> hypersurface_rank_table(const CotangentComplex& L);
// closed form ranks: (n-2)/2 for even n, (n+1)/2 for odd n
std::size_t hypersurface_rank_closed_form(int n);
// sum_{k=l}^{m} (-1)^k
int epsilon(int l, int m);
// exactness at degree n over k(p): rank d_n + rank d_{n+1} = rank L_n
bool rank_exactness_check(const FreeComplex& C, int n, const RationalPoint& p);

struct Coefficients {
  enum class Kind { Module, Residue, Generic };
  Kind kind = Kind::Module;
  FPModule module;       // over the target, for Kind::Module
  RationalPoint point;   // on the target, for Kind::Residue
  static Coefficients target_ring(const PresentedAlgebra& S) { return {Kind::Module, FPModule::free(S, 1), {}}; }
  static Coefficients residue(const RationalPoint& p) { return {Kind::Residue, {}, p}; }
  static Coefficients generic() { return {Kind::Generic, {}, {}}; }
  static Coefficients of_module(const FPModule& N) { return {Kind::Module, N, {}}; }
  std::string describe() const;
};

struct DegreeResult {
  int n = 0;
  std::optional<std::size_t> dim;     // over k or Frac(S)
  std::optional<FPModule> module;     // for module coefficients
};

struct HomologyReport {
  std::string map_name;
  std::string coefficients;
  std::string mode;
  bool cohomology = false;
  int cutoff = 0;
  std::vector<DegreeResult> degrees;
  std::vector<std::string> checks;  // cross-checks that ran and passed
  std::size_t dim(int n) const;
};

// n_max <= 2 uses the truncated complex; higher degrees need the kernel of the
// relative presentation to be generated by a regular sequence.
HomologyReport aq_homology(const AlgebraMap& phi, const Coefficients& N, int n_max);
HomologyReport aq_cohomology(const AlgebraMap& phi, const Coefficients& N, int n_max);
HomologyReport aq_homology(const CotangentComplex& L, const Coefficients& N, int n_max, const std::string& name);

// dims of AQ_n(S|R; k(p)), n = 0..n_max (n_max <= 2), via the truncated complex
std::vector<std::size_t> aq_dims_at(const AlgebraMap& phi, const RationalPoint& p, int n_max = 2);

// Tor^R_n(S, k(p)) for n <= n_max (<= 3) from iterated syzygies of S over P
struct TorReport {
  std::vector<PolyMatrix> differentials;  // d_1..d_{n_max+1} of the resolution over P
  std::vector<std::optional<std::size_t>> dims;
  std::vector<FPModule> modules;          // over k[Y]
};

TorReport tor_modules(const AlgebraMap& phi, const RationalPoint& p, int n_max);

// dim of I/I^2 (x) k(p) = I/mI for I = ker(P -> S), by greedy membership in
// (chosen generators) + m I
std::size_t conormal_dim_at(const AlgebraMap& phi, const RationalPoint& p);
// relations of the presentation whose classes form a basis of I/mI at q (a point of rp.S)
std::vector<Polynomial> minimal_local_generators(const RelativePresentation& rp, const RationalPoint& q);
// Tor^R_n(S, k(p)) for R a polynomial ring, from the Koszul complex on the
// coordinates of p tensored with S; n = 0..n_max
std::vector<std::size_t> tor_dims_via_koszul(const AlgebraMap& phi, const RationalPoint& p, int n_max);

struct FiveTermReport {
  std::size_t aq1 = 0, aq2 = 0, tor1 = 0, tor2 = 0, rank_w = 0;
  bool degree1_agrees = false;
  bool exact = false;
};

// surjective phi: dim AQ_2 = dim Tor_2 - rank(w), w: wedge^2 Tor_1 -> Tor_2
FiveTermReport five_term_check(const AlgebraMap& phi, const RationalPoint& p);

struct JacobiZariskiWindow {
  // AQ_2(S|R), AQ_1(R|Q), AQ_1(S|Q), AQ_1(S|R), AQ_0(R|Q), AQ_0(S|Q), AQ_0(S|R)
  std::vector<std::size_t> dims;
  std::vector<long> ranks;  // forced ranks of the maps, right to left
  bool consistent = false;
};

JacobiZariskiWindow jacobi_zariski_window(const AlgebraMap& psi, const AlgebraMap& phi, const RationalPoint& p);

struct BaseChangeReport {
  AlgebraMap changed;  // R -> S' (x)_{R'} R
  std::vector<std::vector<std::size_t>> dims_original, dims_changed;
  bool equal = false;
};

// phi': R' -> S', rho: R' -> R flat; points on S' (x)_{R'} R given by values of all its variables
BaseChangeReport base_change_check(const AlgebraMap& phi, const AlgebraMap& rho,
                                   const std::vector<std::vector<Scalar>>& points);
AlgebraMap base_change(const AlgebraMap& phi, const AlgebraMap& rho);

struct RetractReport {
  std::vector<std::size_t> s_over_r;  // AQ_n(S|R; k), n = 1, 2
  std::vector<std::size_t> r_over_s;  // AQ_{n-1}(R|S; k), n = 1, 2
  bool equal = false;
};

// S -> S[x] -> S with x -> value
RetractReport retract_check(const PresentedAlgebra& S, const RationalPoint& p);

}  // namespace aq
