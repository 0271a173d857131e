#include "profusion/matrix.hpp"

#include "profusion/error.hpp"

namespace profusion {

FqMatrix::FqMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Field::zero()) {}

FqMatrix FqMatrix::identity(const Field& field, std::size_t n) {
  FqMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Field::one();
  return m;
}

FqMatrix FqMatrix::from_rows(const Field& field, const std::vector<FqVector>& rows, std::size_t cols) {
  FqMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::DimensionMismatch, "row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

FqVector FqMatrix::row(std::size_t r) const {
  return FqVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

FqVector FqMatrix::column(std::size_t c) const {
  FqVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

FqMatrix FqMatrix::operator*(const FqMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(Errc::DimensionMismatch, "matrix product shape mismatch");
  FqMatrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      FqElem a = at(i, k);
      if (a == Field::zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out.at(i, j) = field_.add(out.at(i, j), field_.mul(a, rhs.at(k, j)));
    }
  return out;
}

FqVector FqMatrix::apply(const FqVector& v) const {
  if (v.size() != cols_) throw Error(Errc::DimensionMismatch, "vector length differs from column count");
  FqVector out(rows_, Field::zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] = field_.add(out[i], field_.mul(at(i, k), v[k]));
  return out;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

RrefResult rref(const FqMatrix& input) {
  FqMatrix m = input;
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m.at(sel, c) == Field::zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
    FqElem inv = f.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      FqElem k = m.at(i, c);
      if (k == Field::zero()) continue;
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(k, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{std::move(m), r, std::move(pivots)};
}

std::size_t rank(const FqMatrix& m) { return rref(m).rank; }

std::optional<FqVector> solve(const FqMatrix& a, const FqVector& b) {
  if (b.size() != a.rows()) throw Error(Errc::DimensionMismatch, "right-hand side length differs from row count");
  FqMatrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto res = rref(aug);
  if (!res.pivots.empty() && res.pivots.back() == a.cols()) return std::nullopt;
  FqVector x(a.cols(), Field::zero());
  for (std::size_t i = 0; i < res.rank; ++i) x[res.pivots[i]] = res.reduced.at(i, a.cols());
  return x;
}

std::vector<FqVector> kernel_basis(const FqMatrix& a) {
  auto res = rref(a);
  const Field& f = a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : res.pivots) is_pivot[p] = true;
  std::vector<FqVector> out;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    FqVector v(a.cols(), Field::zero());
    v[free] = Field::one();
    for (std::size_t i = 0; i < res.rank; ++i) v[res.pivots[i]] = f.neg(res.reduced.at(i, free));
    out.push_back(std::move(v));
  }
  return out;
}

FqVector RowSpace::reduce(FqVector v) const {
  if (v.size() != dim_) throw Error(Errc::DimensionMismatch, "vector length differs from space dimension");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    FqElem k = v[pivots_[i]];
    if (k == Field::zero()) continue;
    const FqVector& row = rows_[i];
    for (std::size_t j = 0; j < dim_; ++j)
      if (row[j] != Field::zero()) v[j] = field_.sub(v[j], field_.mul(k, row[j]));
  }
  return v;
}

bool RowSpace::contains(const FqVector& v) const {
  for (auto x : reduce(v))
    if (x != Field::zero()) return false;
  return true;
}

bool RowSpace::insert(FqVector v) {
  v = reduce(std::move(v));
  std::size_t pivot = dim_;
  for (std::size_t j = 0; j < dim_; ++j)
    if (v[j] != Field::zero()) {
      pivot = j;
      break;
    }
  if (pivot == dim_) return false;
  FqElem inv = field_.inv(v[pivot]);
  for (auto& x : v) x = field_.mul(x, inv);
  // keep existing rows reduced against the new pivot
  for (auto& row : rows_) {
    FqElem k = row[pivot];
    if (k == Field::zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) row[j] = field_.sub(row[j], field_.mul(k, v[j]));
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace profusion
