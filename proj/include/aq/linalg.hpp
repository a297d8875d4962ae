#pragma once

#include <vector>

#include "aq/algebra.hpp"

namespace aq {

// Dense matrix over the base field.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }
  Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::size_t rank() const;
  // basis of {v : M v = 0}, each of length cols()
  std::vector<std::vector<Scalar>> kernel() const;
  FieldMatrix transpose() const;
  FieldMatrix operator*(const FieldMatrix& o) const;
  bool is_zero() const;
  // [this | o]
  FieldMatrix hstack(const FieldMatrix& o) const;
  FieldMatrix vstack(const FieldMatrix& o) const;
  FieldMatrix select_columns(const std::vector<std::size_t>& cols) const;
  FieldMatrix select_rows(const std::vector<std::size_t>& rows) const;
  static FieldMatrix from_columns(Field field, std::size_t rows, const std::vector<std::vector<Scalar>>& cols);

 private:
  // row echelon form in place; returns pivot columns
  std::vector<std::size_t> echelon(std::vector<Scalar>& a) const;
  Field field_ = Field::rationals();
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

// Matrix over a polynomial ring stored by columns.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static PolyMatrix from_columns(RingPtr ring, std::size_t rows, const std::vector<PolyVec>& cols);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  Polynomial& at(std::size_t r, std::size_t c) { return cols_[c][r]; }
  const Polynomial& at(std::size_t r, std::size_t c) const { return cols_[c][r]; }
  const PolyVec& column(std::size_t c) const { return cols_[c]; }
  const std::vector<PolyVec>& columns() const { return cols_; }

  FieldMatrix evaluate(const std::vector<Scalar>& point) const;
  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix transpose() const;
  // this (x) identity_g
  PolyMatrix kron_identity(std::size_t g) const;
  PolyMatrix reduced(const PresentedAlgebra& A) const;
  PolyMatrix hstack(const PolyMatrix& o) const;
  bool is_zero() const;
  bool is_zero_in(const PresentedAlgebra& A) const;
  static PolyMatrix identity(RingPtr ring, std::size_t n);

 private:
  RingPtr ring_;
  std::size_t rows_ = 0;
  std::vector<PolyVec> cols_;
};

// Rank over the fraction field of a domain A, by fraction-free elimination.
std::size_t generic_rank(const PolyMatrix& M, const PresentedAlgebra& A);

}  // namespace aq
