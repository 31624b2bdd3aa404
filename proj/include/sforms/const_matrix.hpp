#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "sforms/field.hpp"

namespace sforms {

/// Dense row-major matrix of scalars over a single field.
class ConstMatrix {
 public:
  ConstMatrix() = default;
  ConstMatrix(std::size_t rows, std::size_t cols, const FieldSpec& field);
  ConstMatrix(std::size_t rows, std::size_t cols, const FieldSpec& field,
              std::vector<Scalar> entries);

  static ConstMatrix identity(std::size_t size, const FieldSpec& field);
  static ConstMatrix column(const FieldSpec& field, std::vector<Scalar> entries);
  static ConstMatrix from_ints(const FieldSpec& field,
                               const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldSpec& field() const noexcept { return field_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  std::span<const Scalar> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  std::vector<Scalar> column_values(std::size_t j) const;

  ConstMatrix transpose() const;
  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }

  friend ConstMatrix operator*(const ConstMatrix& a, const ConstMatrix& b);
  friend ConstMatrix operator+(const ConstMatrix& a, const ConstMatrix& b);
  friend ConstMatrix operator-(const ConstMatrix& a, const ConstMatrix& b);
  friend bool operator==(const ConstMatrix& a, const ConstMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldSpec field_;
  std::vector<Scalar> entries_;
};

/// Reduced row echelon form. Pivots are chosen as the first nonzero entry
/// of each column, scanning columns left to right.
struct Echelon {
  ConstMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

Echelon row_reduce(ConstMatrix m);

std::size_t rank(const ConstMatrix& m);

/// Basis of {x : m x = 0} as column vectors. One vector per free column, in
/// index order: that free variable is 1, the other free variables are 0.
std::vector<ConstMatrix> nullspace(const ConstMatrix& m);

/// Throws Error(SingularMatrix) when m is not invertible.
ConstMatrix invert(const ConstMatrix& m);

Scalar determinant(const ConstMatrix& m);

/// A particular solution of a x = b (free variables set to zero), or
/// nothing when the system is inconsistent. b may have several columns.
std::optional<ConstMatrix> solve(const ConstMatrix& a, const ConstMatrix& b);

/// Rows of the result: the given vectors completed to a basis of k^size with
/// unit vectors chosen greedily in index order. Completions come first, the
/// given vectors last. The given vectors must be independent.
ConstMatrix complete_to_basis(std::span<const std::vector<Scalar>> vectors, std::size_t size,
                              const FieldSpec& field);

ConstMatrix random_matrix(std::size_t rows, std::size_t cols, const FieldSpec& field,
                          std::mt19937_64& rng);
ConstMatrix random_invertible(std::size_t size, const FieldSpec& field, std::mt19937_64& rng);
/// Deterministic in (size, field, seed).
ConstMatrix random_invertible(std::size_t size, const FieldSpec& field, std::uint64_t seed);

}  // namespace sforms
