#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sforms/const_matrix.hpp"
#include "sforms/forms.hpp"

namespace sforms {

/// Rectangular matrix of homogeneous forms of a common degree in n variables.
class FormMatrix {
 public:
  FormMatrix() = default;
  FormMatrix(std::size_t rows, std::size_t cols, std::size_t n, unsigned degree,
             const FieldSpec& field);

  /// Builds a degree-1 matrix from rows of linear forms.
  static FormMatrix from_linear(const std::vector<std::vector<LinForm>>& rows);
  /// Row-major entries. Zero entries are re-homed to the common degree.
  static FormMatrix from_entries(std::size_t rows, std::size_t cols, std::vector<Form> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t n() const noexcept { return n_; }
  unsigned degree() const noexcept { return degree_; }
  const FieldSpec& field() const noexcept { return field_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Form& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Form value);
  const std::vector<Form>& entries() const noexcept { return entries_; }

  /// The entries as linear forms (degree must be 1).
  std::vector<LinForm> linear_entries() const;

  FormMatrix transpose() const;
  FormMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  bool is_zero() const;
  ConstMatrix evaluate(std::span<const Scalar> point) const;

  FormVector column(std::size_t j) const;
  FormVector row(std::size_t i) const;

  friend FormMatrix operator*(const ConstMatrix& f, const FormMatrix& x);
  friend FormMatrix operator*(const FormMatrix& x, const ConstMatrix& g);
  friend FormMatrix operator*(const FormMatrix& a, const FormMatrix& b);
  friend bool operator==(const FormMatrix&, const FormMatrix&) = default;

  /// One line per row, entries separated by " | ".
  std::string to_string() const;

 private:
  void check_entry(const Form& f) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t n_ = 0;
  unsigned degree_ = 0;
  FieldSpec field_;
  std::vector<Form> entries_;
};

/// value * Id, as a size x size matrix of forms.
FormMatrix scalar_identity(std::size_t size, const Form& value);

/// x * u for a column vector u.
FormVector apply(const FormMatrix& x, const FormVector& u);
/// u * v^t.
FormMatrix outer_product(const FormVector& u, const FormVector& v);

/// Cofactor expansion along the first row.
Form determinant(const FormMatrix& x);

/// Entry (i, j) is (-1)^(i+j) times the determinant of x with column i and
/// row j removed, so x * adj(x) = adj(x) * x = det(x) * Id.
FormMatrix adjugate(const FormMatrix& x);

/// Rank over the fraction field: the size of the largest nonzero minor.
std::size_t rank_over_K(const FormMatrix& x);

/// Basis of the k-space of vectors u with entries of degree d_u and x u = 0.
std::vector<FormVector> kernel_at_degree(const FormMatrix& x, unsigned d_u);

struct VectorPair {
  FormVector u;
  FormVector v;
};

/// x = u v^t with u primitive of minimal degree. The first nonzero
/// coefficient of u (entries in index order, terms in term order) is 1.
/// A 1 x 1 matrix factors as (normalized entry, leading coefficient).
/// Throws Error(NotRankOne) unless rank_over_K(x) == 1.
VectorPair rank1_factor(const FormMatrix& x);

/// Kernel vectors read off the rank-one adjugate of a square matrix of
/// corank one: x u = 0, v^t x = 0, deg u + deg v = deg x * (size - 1).
/// Throws Error(WrongRank) when rank_over_K(x) != size - 1.
VectorPair cramer_vectors(const FormMatrix& x);

enum class Axis { Rows, Cols };

/// For Axis::Rows, row i concatenates the coefficient vectors of the entries
/// of row i of x (a rows x (cols * n) matrix). Axis::Cols does the same for
/// the columns. Throws Error(DegreeNotOne) for non-linear x.
ConstMatrix coefficient_matrix(const FormMatrix& x, Axis axis);

/// Entries drawn independently with random_linform.
FormMatrix random_linear_matrix(std::size_t rows, std::size_t cols, std::size_t n,
                                const FieldSpec& field, std::mt19937_64& rng);

}  // namespace sforms
