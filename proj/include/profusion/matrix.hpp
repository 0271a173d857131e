#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "profusion/ffield.hpp"

namespace profusion {

using FqVector = std::vector<FqElem>;

/// Dense row-major matrix over a Field.
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(Field field, std::size_t rows, std::size_t cols);
  static FqMatrix identity(const Field& field, std::size_t n);
  static FqMatrix from_rows(const Field& field, const std::vector<FqVector>& rows, std::size_t cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FqElem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FqElem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  FqVector row(std::size_t r) const;
  FqVector column(std::size_t c) const;

  FqMatrix operator*(const FqMatrix& rhs) const;
  FqVector apply(const FqVector& v) const;
  FqMatrix transpose() const;

  friend bool operator==(const FqMatrix& a, const FqMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FqElem> data_;
};

struct RrefResult {
  FqMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const FqMatrix& m);
std::size_t rank(const FqMatrix& m);
/// A solution x of a x = b, or nothing. Throws DimensionMismatch.
std::optional<FqVector> solve(const FqMatrix& a, const FqVector& b);
/// Basis of {x : a x = 0}, one vector per free column in increasing order.
std::vector<FqVector> kernel_basis(const FqMatrix& a);

/// Incrementally maintained row-reduced span of vectors; supports
/// membership, reduction and coordinates.
class RowSpace {
 public:
  RowSpace(Field field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

  /// Adds v; returns false when v was already in the span.
  bool insert(FqVector v);
  /// v minus its projection onto the span along pivot columns.
  FqVector reduce(FqVector v) const;
  bool contains(const FqVector& v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<FqVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const Field& field() const { return field_; }

 private:
  Field field_;
  std::size_t dim_;
  std::vector<FqVector> rows_;  // each row has 1 at its pivot
  std::vector<std::size_t> pivots_;
};

}  // namespace profusion
