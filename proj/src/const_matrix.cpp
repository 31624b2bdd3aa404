#include "sforms/const_matrix.hpp"

#include <utility>

#include "sforms/error.hpp"

namespace sforms {

ConstMatrix::ConstMatrix(std::size_t rows, std::size_t cols, const FieldSpec& field)
    : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, Scalar::zero(field)) {}

ConstMatrix::ConstMatrix(std::size_t rows, std::size_t cols, const FieldSpec& field,
                         std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), field_(field), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw Error(ErrorCode::InvalidArgument, "matrix entry count does not match its shape");
  }
  for (const auto& e : entries_) {
    if (e.field() != field_) throw Error(ErrorCode::FieldMismatch, "matrix entry over wrong field");
  }
}

ConstMatrix ConstMatrix::identity(std::size_t size, const FieldSpec& field) {
  ConstMatrix m(size, size, field);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = Scalar::one(field);
  return m;
}

ConstMatrix ConstMatrix::column(const FieldSpec& field, std::vector<Scalar> entries) {
  const std::size_t size = entries.size();
  return ConstMatrix(size, 1, field, std::move(entries));
}

ConstMatrix ConstMatrix::from_ints(const FieldSpec& field,
                                   const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ConstMatrix m(rows.size(), cols, field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::InvalidArgument, "ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar::from_int(field, rows[i][j]);
  }
  return m;
}

std::vector<Scalar> ConstMatrix::column_values(std::size_t j) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

ConstMatrix ConstMatrix::transpose() const {
  ConstMatrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool ConstMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

ConstMatrix operator*(const ConstMatrix& a, const ConstMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shapes do not chain");
  if (a.field_ != b.field_) throw Error(ErrorCode::FieldMismatch, "matrix product across fields");
  ConstMatrix c(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

ConstMatrix operator+(const ConstMatrix& a, const ConstMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorCode::InvalidArgument, "matrix shapes differ");
  }
  ConstMatrix c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] += b.entries_[i];
  return c;
}

ConstMatrix operator-(const ConstMatrix& a, const ConstMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorCode::InvalidArgument, "matrix shapes differ");
  }
  ConstMatrix c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] -= b.entries_[i];
  return c;
}

bool operator==(const ConstMatrix& a, const ConstMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ &&
         a.entries_ == b.entries_;
}

Echelon row_reduce(ConstMatrix m) {
  Echelon out;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t r = pivot_row;
    while (r < m.rows() && m(r, col).is_zero()) ++r;
    if (r == m.rows()) continue;
    if (r != pivot_row) {
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(r, j), m(pivot_row, j));
    }
    const Scalar inv = m(pivot_row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) {
      if (!m(pivot_row, j).is_zero()) m(pivot_row, j) *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || m(i, col).is_zero()) continue;
      const Scalar factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(pivot_row, j).is_zero()) m(i, j) -= factor * m(pivot_row, j);
      }
    }
    out.pivot_cols.push_back(col);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const ConstMatrix& m) { return row_reduce(m).pivot_cols.size(); }

std::vector<ConstMatrix> nullspace(const ConstMatrix& m) {
  const Echelon e = row_reduce(m);
  const FieldSpec& field = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  std::vector<ConstMatrix> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ConstMatrix v(m.cols(), 1, field);
    v(free, 0) = Scalar::one(field);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
      v(e.pivot_cols[r], 0) = -e.reduced(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

ConstMatrix invert(const ConstMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "cannot invert a non-square matrix");
  const std::size_t n = m.rows();
  ConstMatrix augmented(n, 2 * n, m.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = m(i, j);
    augmented(i, n + i) = Scalar::one(m.field());
  }
  const Echelon e = row_reduce(std::move(augmented));
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) {
    throw Error(ErrorCode::SingularMatrix, "matrix is singular");
  }
  ConstMatrix inv(n, n, m.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Scalar determinant(const ConstMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  ConstMatrix a = m;
  const std::size_t n = a.rows();
  Scalar det = Scalar::one(m.field());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t r = col;
    while (r < n && a(r, col).is_zero()) ++r;
    if (r == n) return Scalar::zero(m.field());
    if (r != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(a(r, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    const Scalar inv = a(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      const Scalar factor = a(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) a(i, j) -= factor * a(col, j);
    }
  }
  return det;
}

std::optional<ConstMatrix> solve(const ConstMatrix& a, const ConstMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::InvalidArgument, "right-hand side has wrong height");
  const std::size_t n = a.cols();
  const std::size_t k = b.cols();
  ConstMatrix augmented(a.rows(), n + k, a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = a(i, j);
    for (std::size_t j = 0; j < k; ++j) augmented(i, n + j) = b(i, j);
  }
  const Echelon e = row_reduce(std::move(augmented));
  std::size_t coefficient_pivots = 0;
  for (std::size_t c : e.pivot_cols) {
    if (c >= n) return std::nullopt;
    ++coefficient_pivots;
  }
  ConstMatrix x(n, k, a.field());
  for (std::size_t r = 0; r < coefficient_pivots; ++r) {
    for (std::size_t j = 0; j < k; ++j) x(e.pivot_cols[r], j) = e.reduced(r, n + j);
  }
  return x;
}

ConstMatrix complete_to_basis(std::span<const std::vector<Scalar>> vectors, std::size_t size,
                              const FieldSpec& field) {
  std::vector<std::vector<Scalar>> chosen;
  auto rank_of = [&](const std::vector<std::vector<Scalar>>& rows) {
    ConstMatrix m(rows.size(), size, field);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < size; ++j) m(i, j) = rows[i][j];
    return rank(m);
  };
  std::vector<std::vector<Scalar>> given(vectors.begin(), vectors.end());
  if (rank_of(given) != given.size()) {
    throw Error(ErrorCode::InvalidArgument, "vectors to complete are dependent");
  }
  std::vector<std::vector<Scalar>> current = given;
  for (std::size_t unit = 0; unit < size && current.size() < size; ++unit) {
    std::vector<Scalar> e(size, Scalar::zero(field));
    e[unit] = Scalar::one(field);
    current.push_back(e);
    if (rank_of(current) == current.size()) {
      chosen.push_back(std::move(e));
    } else {
      current.pop_back();
    }
  }
  ConstMatrix out(size, size, field);
  std::size_t row = 0;
  for (const auto& v : chosen) {
    for (std::size_t j = 0; j < size; ++j) out(row, j) = v[j];
    ++row;
  }
  for (const auto& v : given) {
    for (std::size_t j = 0; j < size; ++j) out(row, j) = v[j];
    ++row;
  }
  return out;
}

ConstMatrix random_matrix(std::size_t rows, std::size_t cols, const FieldSpec& field,
                          std::mt19937_64& rng) {
  ConstMatrix m(rows, cols, field);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(field, rng);
  return m;
}

ConstMatrix random_invertible(std::size_t size, const FieldSpec& field, std::mt19937_64& rng) {
  for (;;) {
    ConstMatrix m = random_matrix(size, size, field, rng);
    if (rank(m) == size) return m;
  }
}

ConstMatrix random_invertible(std::size_t size, const FieldSpec& field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_invertible(size, field, rng);
}

}  // namespace sforms
