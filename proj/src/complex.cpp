#include "aq/complex.hpp"

#include <algorithm>
#include <functional>

namespace aq {

void FreeComplex::set_rank(int n, std::size_t r, std::vector<std::string> labels) {
  ranks_[n] = r;
  if (labels.empty())
    for (std::size_t i = 0; i < r; ++i) labels.push_back("b" + std::to_string(n) + "_" + std::to_string(i));
  labels_[n] = std::move(labels);
}

void FreeComplex::set_differential(int n, PolyMatrix d) {
  if (d.rows() != rank(n - 1) || d.cols() != rank(n)) throw AlgebraError("differential has wrong shape");
  d_[n] = d.reduced(A_);
}

std::size_t FreeComplex::rank(int n) const {
  auto it = ranks_.find(n);
  return it == ranks_.end() ? 0 : it->second;
}

const std::vector<std::string>& FreeComplex::labels(int n) const {
  static const std::vector<std::string> empty;
  auto it = labels_.find(n);
  return it == labels_.end() ? empty : it->second;
}

PolyMatrix FreeComplex::differential(int n) const {
  auto it = d_.find(n);
  if (it != d_.end()) return it->second;
  return PolyMatrix(A_.ring(), rank(n - 1), rank(n));
}

bool FreeComplex::is_complex() const {
  for (const auto& [n, d] : d_) {
    auto prev = d_.find(n - 1);
    if (prev == d_.end()) continue;
    if (!(prev->second * d).is_zero_in(A_)) return false;
  }
  return true;
}

TensoredComplex tensor_with_module(const FreeComplex& C, const FPModule& N) {
  if (!C.ring().ring()->same_as(*N.ring().ring())) throw AlgebraError("module over a different ring");
  return {C, N};
}

std::map<int, FieldMatrix> tensor_with_residue(const FreeComplex& C, const RationalPoint& p) {
  if (!C.ring().contains_point(p.coords)) throw InputError("not a rational point");
  std::map<int, FieldMatrix> out;
  for (int n = C.min_degree(); n <= C.max_degree() + 1; ++n) out[n] = C.differential(n).evaluate(p.coords);
  return out;
}

namespace {

// block-diagonal copies of the relation columns of N
std::vector<PolyVec> relation_blocks(const FPModule& N, std::size_t copies) {
  const std::size_t g = N.num_generators();
  std::vector<PolyVec> out;
  for (std::size_t k = 0; k < copies; ++k)
    for (const auto& col : N.relations().columns()) {
      PolyVec v(g * copies, Polynomial(N.ring().ring()));
      for (std::size_t i = 0; i < g; ++i) v[k * g + i] = col[i];
      out.push_back(v);
    }
  return out;
}

// ker(out: N^mid -> N^tgt) / im(in: N^src -> N^mid)
FPModule middle_homology(const FPModule& N, std::size_t mid, std::size_t tgt, const PolyMatrix& out_map,
                         const PolyMatrix& in_map) {
  const PresentedAlgebra& A = N.ring();
  const std::size_t g = N.num_generators();
  std::vector<PolyVec> kernel;
  if (tgt == 0 || out_map.is_zero_in(A)) {
    for (std::size_t i = 0; i < g * mid; ++i) {
      PolyVec e(g * mid, Polynomial(A.ring()));
      e[i] = A.constant(1);
      kernel.push_back(e);
    }
  } else {
    PolyMatrix D = out_map.kron_identity(g);
    std::vector<PolyVec> cols = D.columns();
    for (const auto& u : relation_blocks(N, tgt)) cols.push_back(u);
    for (const auto& s : syzygies(A, g * tgt, cols)) {
      PolyVec v(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(g * mid));
      bool zero = std::all_of(v.begin(), v.end(), [](const Polynomial& p) { return p.is_zero(); });
      if (!zero) kernel.push_back(v);
    }
  }
  std::vector<PolyVec> bound = relation_blocks(N, mid);
  if (in_map.cols() > 0) {
    PolyMatrix D = in_map.kron_identity(g);
    for (const auto& c : D.columns()) bound.push_back(c);
  }
  return subquotient(A, g * mid, kernel, bound).pruned();
}

}  // namespace

FPModule complex_homology(const FreeComplex& C, int n) {
  return complex_homology(TensoredComplex{C, FPModule::free(C.ring(), 1)}, n);
}

FPModule complex_homology(const TensoredComplex& T, int n) {
  const FreeComplex& C = T.complex;
  return middle_homology(T.coefficients, C.rank(n), C.rank(n - 1), C.differential(n), C.differential(n + 1));
}

FPModule complex_cohomology(const TensoredComplex& T, int n) {
  const FreeComplex& C = T.complex;
  return middle_homology(T.coefficients, C.rank(n), C.rank(n + 1), C.differential(n + 1).transpose(),
                         C.differential(n).transpose());
}

std::size_t homology_dim_at(const FreeComplex& C, int n, const RationalPoint& p) {
  if (!C.ring().contains_point(p.coords)) throw InputError("not a rational point");
  std::size_t r = C.rank(n);
  std::size_t a = C.rank(n - 1) ? C.differential(n).evaluate(p.coords).rank() : 0;
  std::size_t b = C.rank(n + 1) ? C.differential(n + 1).evaluate(p.coords).rank() : 0;
  return r - a - b;
}

std::size_t homology_generic_dim(const FreeComplex& C, int n) {
  std::size_t r = C.rank(n);
  std::size_t a = C.rank(n - 1) ? generic_rank(C.differential(n), C.ring()) : 0;
  std::size_t b = C.rank(n + 1) ? generic_rank(C.differential(n + 1), C.ring()) : 0;
  return r - a - b;
}

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

FreeComplex koszul_complex(const std::vector<Polynomial>& f, const PresentedAlgebra& A) {
  FreeComplex K(A);
  const std::size_t c = f.size();
  std::vector<std::vector<std::vector<std::size_t>>> basis(c + 1);
  for (std::size_t i = 0; i <= c; ++i) {
    basis[i] = subsets(c, i);
    std::vector<std::string> labels;
    for (const auto& s : basis[i]) {
      std::string l = "e";
      for (auto x : s) l += "_" + std::to_string(x + 1);
      if (s.empty()) l = "1";
      labels.push_back(l);
    }
    K.set_rank(static_cast<int>(i), basis[i].size(), labels);
  }
  for (std::size_t i = 1; i <= c; ++i) {
    PolyMatrix d(A.ring(), basis[i - 1].size(), basis[i].size());
    for (std::size_t col = 0; col < basis[i].size(); ++col) {
      const auto& s = basis[i][col];
      for (std::size_t j = 0; j < s.size(); ++j) {
        std::vector<std::size_t> t = s;
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(j));
        auto row = static_cast<std::size_t>(std::find(basis[i - 1].begin(), basis[i - 1].end(), t) -
                                            basis[i - 1].begin());
        Polynomial v = f[s[j]];
        d.at(row, col) = (j % 2 == 0) ? v : -v;
      }
    }
    K.set_differential(static_cast<int>(i), d);
  }
  return K;
}

}  // namespace aq
