#include "aq/module.hpp"

#include <functional>
#include <sstream>

namespace aq {

namespace {

std::vector<ModVec> quotient_part(const PresentedAlgebra& A, std::size_t rank) {
  std::vector<ModVec> out;
  for (const auto& g : A.groebner())
    for (std::size_t i = 0; i < rank; ++i) out.push_back(modvec_from(g, static_cast<int>(i)));
  return out;
}

PolyVec nf_vec(const PresentedAlgebra& A, PolyVec v) {
  for (auto& p : v) p = A.normal_form(p);
  return v;
}

bool vec_zero(const PolyVec& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

}  // namespace

Submodule::Submodule(const PresentedAlgebra& A, std::size_t rank, std::vector<PolyVec> gens)
    : A_(A), rank_(rank), gens_(std::move(gens)) {
  std::vector<ModVec> v = quotient_part(A, rank);
  for (const auto& g : gens_) {
    if (g.size() != rank) throw AlgebraError("submodule generator of wrong length");
    v.push_back(modvec_from(g));
  }
  gb_ = ModuleGB(A.ring(), rank, v);
}

PolyVec Submodule::reduce(const PolyVec& v) const { return modvec_to(gb_.reduce(modvec_from(v)), A_.ring(), rank_); }

bool Submodule::contains(const PolyVec& v) const { return gb_.reduce(modvec_from(v)).is_zero(); }

bool Submodule::contains(const Submodule& o) const {
  for (const auto& g : o.gens_)
    if (!contains(g)) return false;
  return true;
}

std::vector<PolyVec> syzygies(const PresentedAlgebra& A, std::size_t rank, const std::vector<PolyVec>& cols) {
  const std::size_t k = cols.size();
  std::vector<PolyVec> out;
  if (k == 0) return out;
  if (rank == 0) {
    for (std::size_t j = 0; j < k; ++j) {
      PolyVec e(k, Polynomial(A.ring()));
      e[j] = A.constant(1);
      out.push_back(e);
    }
    return out;
  }
  std::vector<ModVec> gens = quotient_part(A, rank);
  for (std::size_t j = 0; j < k; ++j) {
    ModVec v = modvec_from(cols[j]);
    v.t.push_back({static_cast<int>(rank + j), Monomial(A.nvars()), Scalar(1)});
    gens.push_back(v);
  }
  ModuleGB gb(A.ring(), rank + k, gens);
  for (const auto& g : gb.basis()) {
    if (g.lead().pos < static_cast<int>(rank)) continue;
    ModVec s;
    for (const auto& t : g.t) s.t.push_back({t.pos - static_cast<int>(rank), t.m, t.c});
    PolyVec v = nf_vec(A, modvec_to(s, A.ring(), k));
    if (!vec_zero(v)) out.push_back(v);
  }
  return out;
}

Lifter::Lifter(const PresentedAlgebra& A, const PolyMatrix& M) : A_(A), rows_(M.rows()), cols_(M.cols()) {
  std::vector<ModVec> gens = quotient_part(A, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    ModVec v = modvec_from(M.column(j));
    v.t.push_back({static_cast<int>(rows_ + j), Monomial(A.nvars()), Scalar(1)});
    gens.push_back(v);
  }
  gb_ = ModuleGB(A.ring(), rows_ + cols_, gens);
}

std::optional<PolyVec> Lifter::lift(const PolyVec& v) const {
  ModVec r = gb_.reduce(modvec_from(v));
  ModVec s;
  for (const auto& t : r.t) {
    if (t.pos < static_cast<int>(rows_)) return std::nullopt;
    s.t.push_back({t.pos - static_cast<int>(rows_), t.m, A_.field().neg(t.c)});
  }
  return nf_vec(A_, modvec_to(s, A_.ring(), cols_));
}

FPModule::FPModule(PresentedAlgebra A, std::size_t gens, PolyMatrix relations, std::vector<std::string> labels)
    : A_(std::move(A)), gens_(gens), rel_(std::move(relations)), labels_(std::move(labels)) {
  if (rel_.rows() != gens_) throw AlgebraError("presentation matrix has wrong number of rows");
  if (labels_.empty())
    for (std::size_t i = 0; i < gens_; ++i) labels_.push_back("e" + std::to_string(i + 1));
}

FPModule FPModule::free(const PresentedAlgebra& A, std::size_t rank) {
  return FPModule(A, rank, PolyMatrix(A.ring(), rank, 0));
}

FPModule FPModule::cyclic(const PresentedAlgebra& A, const std::vector<Polynomial>& ideal_gens) {
  PolyMatrix rel(A.ring(), 1, 0);
  std::vector<PolyVec> cols;
  for (const auto& g : ideal_gens) cols.push_back({g});
  return FPModule(A, 1, PolyMatrix::from_columns(A.ring(), 1, cols));
}

FPModule FPModule::pruned() const {
  std::vector<PolyVec> cols;
  for (const auto& c : rel_.columns()) {
    PolyVec v = nf_vec(A_, c);
    if (!vec_zero(v)) cols.push_back(v);
  }
  std::vector<std::string> labels = labels_;
  std::size_t g = gens_;
  while (true) {
    std::size_t pc = cols.size(), pr = g;
    for (std::size_t c = 0; c < cols.size() && pc == cols.size(); ++c)
      for (std::size_t r = 0; r < g; ++r)
        if (!cols[c][r].is_zero() && cols[c][r].is_constant()) {
          pc = c;
          pr = r;
          break;
        }
    if (pc == cols.size()) break;
    const PolyVec piv = cols[pc];
    const Scalar uinv = A_.field().inv(piv[pr].constant_term());
    std::vector<PolyVec> next;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c == pc) continue;
      PolyVec v = cols[c];
      if (!v[pr].is_zero()) {
        Polynomial f = v[pr].scale(uinv);
        for (std::size_t r = 0; r < g; ++r)
          if (!piv[r].is_zero()) v[r] = A_.normal_form(v[r] - f * piv[r]);
      }
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(pr));
      if (!vec_zero(v)) next.push_back(std::move(v));
    }
    cols = std::move(next);
    labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(pr));
    --g;
  }
  return FPModule(A_, g, PolyMatrix::from_columns(A_.ring(), g, cols), labels);
}

bool FPModule::is_zero() const {
  if (gens_ == 0) return true;
  return Submodule(A_, gens_, rel_.columns()).is_everything();
}

std::optional<std::size_t> FPModule::free_rank() const {
  FPModule p = pruned();
  if (p.rel_.cols() == 0) return p.gens_;
  if (p.is_zero()) return 0;
  return std::nullopt;
}

std::size_t FPModule::dim_at(const std::vector<Scalar>& point) const {
  if (!A_.contains_point(point)) throw InputError("not a rational point");
  return gens_ - rel_.evaluate(point).rank();
}

std::size_t FPModule::generic_rank() const { return gens_ - aq::generic_rank(rel_, A_); }

std::optional<std::size_t> FPModule::length_dimension() const {
  Submodule U(A_, gens_, rel_.columns());
  const std::size_t n = A_.nvars();
  std::size_t total = 0;
  for (std::size_t pos = 0; pos < gens_; ++pos) {
    std::vector<Monomial> leads;
    for (const auto& g : U.groebner().basis())
      if (g.lead().pos == static_cast<int>(pos)) leads.push_back(g.lead().m);
    std::vector<int> bound(n, -1);
    for (const auto& m : leads) {
      if (m.is_one()) {
        bound.assign(n, 0);
        break;
      }
      std::size_t nz = 0, v = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (m.e[i] > 0) {
          ++nz;
          v = i;
        }
      if (nz == 1 && (bound[v] < 0 || m.e[v] < bound[v])) bound[v] = m.e[v];
    }
    bool unit = false;
    for (const auto& m : leads) unit = unit || m.is_one();
    if (unit) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (bound[i] < 0) return std::nullopt;
    double box = 1;
    for (std::size_t i = 0; i < n; ++i) box *= bound[i];
    if (box > 2e6) throw AlgebraError("module too long to count");
    Monomial cur(n);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == n) {
        for (const auto& m : leads)
          if (m.divides(cur)) return;
        ++total;
        return;
      }
      for (int k = 0; k < bound[i]; ++k) {
        cur.e[i] = k;
        cur.deg += k;
        rec(i + 1);
        cur.deg -= k;
      }
      cur.e[i] = 0;
    };
    rec(0);
  }
  return total;
}

std::string FPModule::describe() const {
  std::ostringstream os;
  os << "coker of " << gens_ << "x" << rel_.cols() << " matrix";
  return os.str();
}

FPModule subquotient(const PresentedAlgebra& A, std::size_t rank, const std::vector<PolyVec>& H,
                     const std::vector<PolyVec>& U) {
  std::vector<PolyVec> cols = H;
  for (const auto& u : U) cols.push_back(u);
  std::vector<PolyVec> syz = syzygies(A, rank, cols);
  std::vector<PolyVec> rel;
  for (const auto& s : syz) {
    PolyVec v(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(H.size()));
    if (!vec_zero(v)) rel.push_back(v);
  }
  return FPModule(A, H.size(), PolyMatrix::from_columns(A.ring(), H.size(), rel));
}

}  // namespace aq
