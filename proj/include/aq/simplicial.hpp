#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aq/complex.hpp"

namespace aq {

// How the homotopy of an extension is known in closed form.
enum class HomotopyKind {
  Koszul,  // pi_* = H_*(K(koszul_elements; level-0 ring))
  Other,
};

// Levelwise polynomial extension A_n = B[V_n] of a constant base B, built on
// levels 0..top, with faces, degeneracies and an augmentation to a target.
class SimplicialAlgebra {
 public:
  struct Level {
    std::vector<std::string> vars;
    PresentedAlgebra ring;                        // B[V_n]
    std::vector<int> weights;                     // per level variable, empty if ungraded
    std::vector<std::vector<Polynomial>> faces;   // faces[i][v] in ring of level n-1
    std::vector<std::vector<Polynomial>> degens;  // degens[j][v] in ring of level n+1
  };

  const PresentedAlgebra& base() const { return base_; }
  int top() const { return static_cast<int>(levels_.size()) - 1; }
  const Level& level(int n) const { return levels_.at(static_cast<std::size_t>(n)); }
  const PresentedAlgebra& level_ring(int n) const { return level(n).ring; }
  const std::vector<std::string>& level_vars(int n) const { return level(n).vars; }
  std::size_t num_base_vars() const { return base_.nvars(); }
  const std::vector<int>& base_weights() const { return base_weights_; }
  bool graded() const;

  Polynomial apply_face(int n, int i, const Polynomial& p) const;
  Polynomial apply_degeneracy(int n, int j, const Polynomial& p) const;
  // u_* : A_k -> A_m for a monotone surjection u: [m] -> [k] given by values
  Polynomial apply_surjection(const std::vector<int>& u, const Polynomial& p) const;

  const PresentedAlgebra& target() const { return target_; }
  // images in the target of the base variables followed by the level-0 variables
  const std::vector<Polynomial>& augmentation() const { return augmentation_; }
  // image in the target of an element of level n (via d_0^n)
  Polynomial augment(int n, const Polynomial& p) const;

  HomotopyKind homotopy_kind() const { return kind_; }
  const std::vector<Polynomial>& koszul_elements() const { return koszul_; }
  const std::string& provenance() const { return provenance_; }

  // pi_0 = A_0 / (d_0 v - d_1 v : v in V_1)
  PresentedAlgebra pi0() const;

  // builders
  static SimplicialAlgebra constant(const PresentedAlgebra& R, const std::vector<std::string>& vars, int top,
                                    const std::vector<int>& weights = {});
  static SimplicialAlgebra bar_construction(const PresentedAlgebra& R, int top, const std::string& y = "y");
  static SimplicialAlgebra hypersurface(const PresentedAlgebra& R, const Polynomial& r, int top);
  // adjoin variables x_t, t: [n] ->> [d], with d_0(x_id) = w, w a Moore cycle of level d-1
  static SimplicialAlgebra kill_cycle(const SimplicialAlgebra& A, const Polynomial& w, int d,
                                      const std::string& prefix = "x", int zero_weight = 1);
  static SimplicialAlgebra tensor(const SimplicialAlgebra& A1, const SimplicialAlgebra& A2);
  // kill the elements f of R[vars] one after another in level 1
  static SimplicialAlgebra kill_chain(const PresentedAlgebra& R, const std::vector<std::string>& vars,
                                      const std::vector<std::string>& elements, int top);

 private:
  PresentedAlgebra base_;
  std::vector<int> base_weights_;
  std::vector<Level> levels_;
  PresentedAlgebra target_;
  std::vector<Polynomial> augmentation_;
  HomotopyKind kind_ = HomotopyKind::Other;
  std::vector<Polynomial> koszul_;  // in level_ring(0)
  std::string provenance_;

  void finish_rings(const std::vector<std::vector<std::string>>& vars);
};

// Monotone surjections [n] ->> [d] as value sequences, lexicographic order.
std::vector<std::vector<int>> monotone_surjections(int n, int d);

struct IdentityViolation {
  std::string identity;
  int level;
  std::string variable;
};

std::vector<IdentityViolation> validate_identities(const SimplicialAlgebra& A);
bool augmentation_valid(const SimplicialAlgebra& A);

// Levelwise finite free simplicial module over a ring.
struct SimplicialModule {
  PresentedAlgebra ring;
  std::vector<std::size_t> ranks;
  std::vector<std::vector<std::string>> labels;
  std::vector<std::vector<PolyMatrix>> faces;   // faces[n][i]: rank(n-1) x rank(n)
  std::vector<std::vector<PolyMatrix>> degens;  // degens[n][j]: rank(n+1) x rank(n)
  int top() const { return static_cast<int>(ranks.size()) - 1; }
};

std::vector<IdentityViolation> validate_identities(const SimplicialModule& V);
FreeComplex alternating_complex(const SimplicialModule& V);
// quotient by the degenerate basis vectors (degeneracies must send basis to basis)
FreeComplex normalize(const SimplicialModule& V);
// Moore complex (intersection of kernels of d_1..d_n, differential d_0) at a
// point: homology dims in degrees 0..top-1
std::vector<std::size_t> moore_homology_dims_at(const SimplicialModule& V, const RationalPoint& p);

// Omega_{A_n|B} (x)_{A_n} S with S the target of the augmentation.
SimplicialModule kahler_module(const SimplicialAlgebra& A);

// pi_n in closed form for Koszul-type extensions: H_n(K(f; A_0)).
std::optional<FPModule> homotopy_module(const SimplicialAlgebra& A, int n);
// true when every pi_n, n >= 1, vanishes (Koszul homology certificate)
std::optional<bool> is_resolution(const SimplicialAlgebra& A);

// dims[n][e] = dim_k pi_n in weight e, via the Moore complex of each weight
// piece, for n <= top-1 and e <= max_weight
std::vector<std::vector<std::size_t>> graded_homotopy_dims(const SimplicialAlgebra& A, int max_weight);

// explicit bijection between bar_construction(k, L) and kill_cycle(y) on the
// constant extension k[y]: x[n,k] <-> x[1; 0^(k+1) 1^(n-k)]
bool bar_matches_kill_cycle(const PresentedAlgebra& R, int top);

}  // namespace aq
