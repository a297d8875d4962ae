#include "aq/linalg.hpp"

namespace aq {

std::vector<std::size_t> FieldMatrix::echelon(std::vector<Scalar>& a) const {
  const Field& F = field_;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && Field::is_zero(a[p * cols_ + c])) ++p;
    if (p == rows_) continue;
    if (p != r)
      for (std::size_t k = 0; k < cols_; ++k) std::swap(a[p * cols_ + k], a[r * cols_ + k]);
    Scalar inv = F.inv(a[r * cols_ + c]);
    for (std::size_t k = c; k < cols_; ++k) a[r * cols_ + k] = F.mul(a[r * cols_ + k], inv);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      Scalar f = a[i * cols_ + c];
      if (Field::is_zero(f)) continue;
      for (std::size_t k = c; k < cols_; ++k) {
        const Scalar& src = a[r * cols_ + k];
        if (!Field::is_zero(src)) a[i * cols_ + k] = F.sub(a[i * cols_ + k], F.mul(f, src));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t FieldMatrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  std::vector<Scalar> a = a_;
  return echelon(a).size();
}

std::vector<std::vector<Scalar>> FieldMatrix::kernel() const {
  std::vector<Scalar> a = a_;
  std::vector<std::size_t> piv = rows_ ? echelon(a) : std::vector<std::size_t>{};
  std::vector<bool> is_piv(cols_, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<Scalar>> out;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_piv[free]) continue;
    std::vector<Scalar> v(cols_, Scalar(0));
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = field_.neg(a[i * cols_ + free]);
    out.push_back(std::move(v));
  }
  return out;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
  if (cols_ != o.rows_) throw AlgebraError("matrix size mismatch");
  FieldMatrix m(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& x = at(r, k);
      if (Field::is_zero(x)) continue;
      for (std::size_t c = 0; c < o.cols_; ++c)
        if (!Field::is_zero(o.at(k, c))) m.at(r, c) = field_.add(m.at(r, c), field_.mul(x, o.at(k, c)));
    }
  return m;
}

bool FieldMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!Field::is_zero(x)) return false;
  return true;
}

FieldMatrix FieldMatrix::hstack(const FieldMatrix& o) const {
  if (rows_ != o.rows_) throw AlgebraError("hstack row mismatch");
  FieldMatrix m(field_, rows_, cols_ + o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
    for (std::size_t c = 0; c < o.cols_; ++c) m.at(r, cols_ + c) = o.at(r, c);
  }
  return m;
}

FieldMatrix FieldMatrix::vstack(const FieldMatrix& o) const {
  if (cols_ != o.cols_) throw AlgebraError("vstack column mismatch");
  FieldMatrix m(field_, rows_ + o.rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
  for (std::size_t r = 0; r < o.rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(rows_ + r, c) = o.at(r, c);
  return m;
}

FieldMatrix FieldMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  FieldMatrix m(field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) m.at(r, c) = at(r, cols[c]);
  return m;
}

FieldMatrix FieldMatrix::select_rows(const std::vector<std::size_t>& rows) const {
  FieldMatrix m(field_, rows.size(), cols_);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(rows[r], c);
  return m;
}

FieldMatrix FieldMatrix::from_columns(Field field, std::size_t rows, const std::vector<std::vector<Scalar>>& cols) {
  FieldMatrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  return m;
}

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols) : ring_(std::move(ring)), rows_(rows) {
  cols_.assign(cols, PolyVec(rows, Polynomial(ring_)));
}

PolyMatrix PolyMatrix::from_columns(RingPtr ring, std::size_t rows, const std::vector<PolyVec>& cols) {
  PolyMatrix m(ring, rows, 0);
  for (const auto& c : cols) {
    if (c.size() != rows) throw AlgebraError("column of wrong length");
    m.cols_.push_back(c);
  }
  return m;
}

FieldMatrix PolyMatrix::evaluate(const std::vector<Scalar>& point) const {
  FieldMatrix m(ring_->field(), rows_, cols_.size());
  for (std::size_t c = 0; c < cols_.size(); ++c)
    for (std::size_t r = 0; r < rows_; ++r) m.at(r, c) = cols_[c][r].evaluate(point);
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols() != o.rows()) throw AlgebraError("matrix size mismatch");
  PolyMatrix m(ring_, rows_, o.cols());
  for (std::size_t c = 0; c < o.cols(); ++c)
    for (std::size_t k = 0; k < cols(); ++k) {
      const Polynomial& y = o.at(k, c);
      if (y.is_zero()) continue;
      for (std::size_t r = 0; r < rows_; ++r)
        if (!at(r, k).is_zero()) m.at(r, c) += at(r, k) * y;
    }
  return m;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols(), rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols(); ++c) t.at(c, r) = at(r, c);
  return t;
}

PolyMatrix PolyMatrix::kron_identity(std::size_t g) const {
  PolyMatrix m(ring_, rows_ * g, cols() * g);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols(); ++c)
      for (std::size_t k = 0; k < g; ++k) m.at(r * g + k, c * g + k) = at(r, c);
  return m;
}

PolyMatrix PolyMatrix::reduced(const PresentedAlgebra& A) const {
  PolyMatrix m = *this;
  for (auto& col : m.cols_)
    for (auto& p : col) p = A.normal_form(p);
  return m;
}

PolyMatrix PolyMatrix::hstack(const PolyMatrix& o) const {
  if (rows_ != o.rows_) throw AlgebraError("hstack row mismatch");
  PolyMatrix m = *this;
  for (const auto& c : o.cols_) m.cols_.push_back(c);
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const auto& col : cols_)
    for (const auto& p : col)
      if (!p.is_zero()) return false;
  return true;
}

bool PolyMatrix::is_zero_in(const PresentedAlgebra& A) const {
  for (const auto& col : cols_)
    for (const auto& p : col)
      if (!A.is_zero(p)) return false;
  return true;
}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(m.ring_, 1);
  return m;
}

std::size_t generic_rank(const PolyMatrix& M, const PresentedAlgebra& A) {
  std::vector<std::vector<Polynomial>> rows(M.rows(), std::vector<Polynomial>(M.cols()));
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c) rows[r][c] = A.normal_form(M.at(r, c));
  std::size_t rank = 0;
  std::vector<bool> used(rows.size(), false);
  for (std::size_t c = 0; c < M.cols(); ++c) {
    // pick the pivot with fewest terms
    std::size_t piv = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r] || rows[r][c].is_zero()) continue;
      if (piv == rows.size() || rows[r][c].terms().size() < rows[piv][c].terms().size()) piv = r;
    }
    if (piv == rows.size()) continue;
    used[piv] = true;
    ++rank;
    const Polynomial a = rows[piv][c];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r] || rows[r][c].is_zero()) continue;
      const Polynomial b = rows[r][c];
      for (std::size_t k = c; k < M.cols(); ++k) rows[r][k] = A.normal_form(a * rows[r][k] - b * rows[piv][k]);
    }
  }
  return rank;
}

}  // namespace aq
