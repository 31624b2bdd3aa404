#include "sforms/form_matrix.hpp"

#include <algorithm>
#include <numeric>

#include "sforms/error.hpp"

namespace sforms {

namespace {

// Calls visit(rows, cols) for every k x k minor position of an a x b matrix.
template <typename Visit>
bool any_minor(std::size_t a, std::size_t b, std::size_t k, Visit visit) {
  std::vector<bool> row_mask(a, false);
  std::fill(row_mask.begin(), row_mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < a; ++i)
      if (row_mask[i]) rows.push_back(i);
    std::vector<bool> col_mask(b, false);
    std::fill(col_mask.begin(), col_mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<std::size_t> cols;
      for (std::size_t j = 0; j < b; ++j)
        if (col_mask[j]) cols.push_back(j);
      if (visit(rows, cols)) return true;
    } while (std::prev_permutation(col_mask.begin(), col_mask.end()));
  } while (std::prev_permutation(row_mask.begin(), row_mask.end()));
  return false;
}

// Index of the first nonzero entry of u, and the scalar that makes the first
// coefficient of that entry equal to 1.
std::pair<std::size_t, Scalar> normalization(const FormVector& u) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!u[i].is_zero()) return {i, u[i].terms().begin()->second.inverse()};
  }
  throw Error(ErrorCode::InternalContradiction, "cannot normalize the zero vector");
}

std::vector<std::size_t> all_but(std::size_t size, std::size_t skip) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size; ++i)
    if (i != skip) out.push_back(i);
  return out;
}

}  // namespace

FormMatrix::FormMatrix(std::size_t rows, std::size_t cols, std::size_t n, unsigned degree,
                       const FieldSpec& field)
    : rows_(rows), cols_(cols), n_(n), degree_(degree), field_(field),
      entries_(rows * cols, Form(n, degree, field)) {}

FormMatrix FormMatrix::from_linear(const std::vector<std::vector<LinForm>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw Error(ErrorCode::WrongShape, "matrix must have at least one row and column");
  }
  const std::size_t cols = rows.front().size();
  const LinForm& first = rows.front().front();
  FormMatrix m(rows.size(), cols, first.n(), 1, first.field());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::WrongShape, "ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j].to_form());
  }
  return m;
}

FormMatrix FormMatrix::from_entries(std::size_t rows, std::size_t cols, std::vector<Form> entries) {
  if (rows == 0 || cols == 0 || entries.size() != rows * cols) {
    throw Error(ErrorCode::WrongShape, "entry count does not match the matrix shape");
  }
  unsigned degree = entries.front().degree();
  for (const auto& e : entries) {
    if (!e.is_zero()) {
      degree = e.degree();
      break;
    }
  }
  FormMatrix m(rows, cols, entries.front().n(), degree, entries.front().field());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, std::move(entries[i * cols + j]));
  return m;
}

void FormMatrix::check_entry(const Form& f) const {
  if (f.n() != n_) throw Error(ErrorCode::InvalidArgument, "entry has the wrong number of variables");
  if (f.field() != field_) throw Error(ErrorCode::FieldMismatch, "entry over the wrong field");
  if (!f.is_zero() && f.degree() != degree_) {
    throw Error(ErrorCode::InvalidArgument, "entries must share one degree");
  }
}

void FormMatrix::set(std::size_t i, std::size_t j, Form value) {
  check_entry(value);
  if (value.is_zero()) value = Form(n_, degree_, field_);
  entries_[i * cols_ + j] = std::move(value);
}

std::vector<LinForm> FormMatrix::linear_entries() const {
  if (degree_ != 1) throw Error(ErrorCode::DegreeNotOne, "matrix entries are not linear");
  std::vector<LinForm> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.to_linform());
  return out;
}

FormMatrix FormMatrix::transpose() const {
  FormMatrix t(cols_, rows_, n_, degree_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.entries_[j * rows_ + i] = (*this)(i, j);
  return t;
}

FormMatrix FormMatrix::submatrix(std::span<const std::size_t> rows,
                                 std::span<const std::size_t> cols) const {
  FormMatrix s(rows.size(), cols.size(), n_, degree_, field_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      s.entries_[i * cols.size() + j] = (*this)(rows[i], cols[j]);
  return s;
}

bool FormMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Form& f) { return f.is_zero(); });
}

ConstMatrix FormMatrix::evaluate(std::span<const Scalar> point) const {
  ConstMatrix out(rows_, cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).evaluate(point);
  return out;
}

FormVector FormMatrix::column(std::size_t j) const {
  std::vector<Form> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return FormVector(std::move(out));
}

FormVector FormMatrix::row(std::size_t i) const {
  std::vector<Form> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back((*this)(i, j));
  return FormVector(std::move(out));
}

FormMatrix operator*(const ConstMatrix& f, const FormMatrix& x) {
  if (f.cols() != x.rows_) throw Error(ErrorCode::WrongShape, "matrix shapes do not chain");
  FormMatrix out(f.rows(), x.cols_, x.n_, x.degree_, x.field_);
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t k = 0; k < f.cols(); ++k) {
      if (f(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < x.cols_; ++j) {
        out.entries_[i * x.cols_ + j] += f(i, k) * x(k, j);
      }
    }
  }
  return out;
}

FormMatrix operator*(const FormMatrix& x, const ConstMatrix& g) {
  if (x.cols_ != g.rows()) throw Error(ErrorCode::WrongShape, "matrix shapes do not chain");
  FormMatrix out(x.rows_, g.cols(), x.n_, x.degree_, x.field_);
  for (std::size_t i = 0; i < x.rows_; ++i) {
    for (std::size_t k = 0; k < x.cols_; ++k) {
      if (x(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < g.cols(); ++j) {
        if (!g(k, j).is_zero()) out.entries_[i * g.cols() + j] += x(i, k) * g(k, j);
      }
    }
  }
  return out;
}

FormMatrix operator*(const FormMatrix& a, const FormMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::WrongShape, "matrix shapes do not chain");
  FormMatrix out(a.rows_, b.cols_, a.n_, a.degree_ + b.degree_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      for (std::size_t k = 0; k < a.cols_; ++k)
        out.entries_[i * b.cols_ + j] += a(i, k) * b(k, j);
  return out;
}

std::string FormMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) out += " | ";
      out += (*this)(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

FormMatrix scalar_identity(std::size_t size, const Form& value) {
  FormMatrix out(size, size, value.n(), value.degree(), value.field());
  for (std::size_t i = 0; i < size; ++i) out.set(i, i, value);
  return out;
}

FormVector apply(const FormMatrix& x, const FormVector& u) {
  if (x.cols() != u.size()) throw Error(ErrorCode::WrongShape, "vector length differs from column count");
  std::vector<Form> out;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    Form sum(x.n(), x.degree() + u.degree(), x.field());
    for (std::size_t j = 0; j < x.cols(); ++j) sum += x(i, j) * u[j];
    out.push_back(std::move(sum));
  }
  return FormVector(std::move(out));
}

FormMatrix outer_product(const FormVector& u, const FormVector& v) {
  FormMatrix out(u.size(), v.size(), u.n(), u.degree() + v.degree(), u.field());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out.set(i, j, u[i] * v[j]);
  return out;
}

Form determinant(const FormMatrix& x) {
  if (!x.is_square() || x.rows() == 0) throw Error(ErrorCode::WrongShape, "determinant needs a square matrix");
  const std::size_t size = x.rows();
  if (size == 1) return x(0, 0);
  if (size == 2) return x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0);
  Form total(x.n(), x.degree() * static_cast<unsigned>(size), x.field());
  const auto rest = all_but(size, 0);
  for (std::size_t j = 0; j < size; ++j) {
    if (x(0, j).is_zero()) continue;
    const auto cols = all_but(size, j);
    const Form term = x(0, j) * determinant(x.submatrix(rest, cols));
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

FormMatrix adjugate(const FormMatrix& x) {
  if (!x.is_square() || x.rows() < 2) throw Error(ErrorCode::WrongShape, "adjugate needs a square matrix of size >= 2");
  const std::size_t size = x.rows();
  FormMatrix out(size, size, x.n(), x.degree() * static_cast<unsigned>(size - 1), x.field());
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const auto rows = all_but(size, j);
      const auto cols = all_but(size, i);
      Form minor = determinant(x.submatrix(rows, cols));
      out.set(i, j, (i + j) % 2 == 0 ? std::move(minor) : -minor);
    }
  }
  return out;
}

std::size_t rank_over_K(const FormMatrix& x) {
  for (std::size_t k = std::min(x.rows(), x.cols()); k > 0; --k) {
    const bool found = any_minor(x.rows(), x.cols(), k, [&](const auto& rows, const auto& cols) {
      return !determinant(x.submatrix(rows, cols)).is_zero();
    });
    if (found) return k;
  }
  return 0;
}

std::vector<FormVector> kernel_at_degree(const FormMatrix& x, unsigned d_u) {
  const FieldSpec& field = x.field();
  const MonomialBasis unknowns(x.n(), d_u);
  const MonomialBasis target(x.n(), x.degree() + d_u);
  const std::size_t nu = unknowns.size();
  const std::size_t nt = target.size();

  ConstMatrix system(x.rows() * nt, x.cols() * nu, field);
  Exponent sum(x.n());
  for (std::size_t j = 0; j < x.cols(); ++j) {
    for (std::size_t k = 0; k < nu; ++k) {
      const Exponent& m = unknowns[k];
      for (std::size_t i = 0; i < x.rows(); ++i) {
        for (const auto& [e, c] : x(i, j).terms()) {
          for (std::size_t t = 0; t < sum.size(); ++t) sum[t] = e[t] + m[t];
          system(i * nt + target.index_of(sum), j * nu + k) += c;
        }
      }
    }
  }

  std::vector<FormVector> out;
  for (const ConstMatrix& v : nullspace(system)) {
    std::vector<Form> entries;
    const auto values = v.column_values(0);
    for (std::size_t j = 0; j < x.cols(); ++j) {
      entries.push_back(Form::from_coefficients(
          unknowns, x.n(), d_u, std::span<const Scalar>(values).subspan(j * nu, nu), field));
    }
    out.emplace_back(std::move(entries));
  }
  return out;
}

VectorPair rank1_factor(const FormMatrix& x) {
  if (rank_over_K(x) != 1) throw Error(ErrorCode::NotRankOne, "matrix does not have rank one");
  const FieldSpec& field = x.field();

  if (x.rows() == 1 && x.cols() == 1) {
    const Scalar content = x(0, 0).terms().begin()->second;
    FormVector u({x(0, 0) * content.inverse()});
    FormVector v({Form::constant(x.n(), content)});
    return {std::move(u), std::move(v)};
  }

  const std::size_t a = x.rows();
  for (unsigned d_u = 0; d_u <= x.degree(); ++d_u) {
    const MonomialBasis unknowns(x.n(), d_u);
    const MonomialBasis target(x.n(), x.degree() + d_u);
    const std::size_t nu = unknowns.size();
    const std::size_t nt = target.size();

    // u_i x_kj - u_k x_ij = 0 for all i < k and all columns j.
    std::vector<std::vector<Scalar>> equations;
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t k = i + 1; k < a; ++k) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
          if (x(k, j).is_zero() && x(i, j).is_zero()) continue;
          std::vector<std::vector<Scalar>> block(nt, std::vector<Scalar>(a * nu, Scalar::zero(field)));
          Exponent sum(x.n());
          for (std::size_t m = 0; m < nu; ++m) {
            for (const auto& [e, c] : x(k, j).terms()) {
              for (std::size_t t = 0; t < sum.size(); ++t) sum[t] = e[t] + unknowns[m][t];
              block[target.index_of(sum)][i * nu + m] += c;
            }
            for (const auto& [e, c] : x(i, j).terms()) {
              for (std::size_t t = 0; t < sum.size(); ++t) sum[t] = e[t] + unknowns[m][t];
              block[target.index_of(sum)][k * nu + m] -= c;
            }
          }
          for (auto& row : block) equations.push_back(std::move(row));
        }
      }
    }
    ConstMatrix system(equations.size(), a * nu, field);
    for (std::size_t r = 0; r < equations.size(); ++r)
      for (std::size_t c = 0; c < a * nu; ++c) system(r, c) = equations[r][c];

    const auto solutions = nullspace(system);
    if (solutions.empty()) continue;
    if (solutions.size() != 1) {
      throw Error(ErrorCode::InternalContradiction,
                  "minimal-degree proportionality space is not one-dimensional");
    }
    const auto values = solutions.front().column_values(0);
    std::vector<Form> u_entries;
    for (std::size_t i = 0; i < a; ++i) {
      u_entries.push_back(Form::from_coefficients(
          unknowns, x.n(), d_u, std::span<const Scalar>(values).subspan(i * nu, nu), field));
    }
    FormVector u(std::move(u_entries));
    const auto [pivot, scale] = normalization(u);
    u = u.scaled(scale);

    std::vector<Form> v_entries;
    for (std::size_t j = 0; j < x.cols(); ++j) v_entries.push_back(exact_divide(x(pivot, j), u[pivot]));
    FormVector v(std::move(v_entries));
    if (outer_product(u, v) != x) {
      throw Error(ErrorCode::InternalContradiction, "rank-one factorization does not reproduce the matrix");
    }
    return {std::move(u), std::move(v)};
  }
  throw Error(ErrorCode::InternalContradiction, "no proportionality vector found for a rank-one matrix");
}

VectorPair cramer_vectors(const FormMatrix& x) {
  if (!x.is_square() || x.rows() < 2) throw Error(ErrorCode::WrongShape, "cramer_vectors needs a square matrix of size >= 2");
  if (rank_over_K(x) + 1 != x.rows()) throw Error(ErrorCode::WrongRank, "matrix rank is not size - 1");
  VectorPair pair = rank1_factor(adjugate(x));
  if (!apply(x, pair.u).is_zero() || !apply(x.transpose(), pair.v).is_zero()) {
    throw Error(ErrorCode::InternalContradiction, "adjugate factors are not kernel vectors");
  }
  return pair;
}

ConstMatrix coefficient_matrix(const FormMatrix& x, Axis axis) {
  if (x.degree() != 1) throw Error(ErrorCode::DegreeNotOne, "coefficient matrix needs linear entries");
  const FormMatrix m = axis == Axis::Rows ? x : x.transpose();
  const std::size_t n = m.n();
  ConstMatrix out(m.rows(), m.cols() * n, m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const LinForm l = m(i, j).to_linform();
      for (std::size_t t = 0; t < n; ++t) out(i, j * n + t) = l[t];
    }
  }
  return out;
}

FormMatrix random_linear_matrix(std::size_t rows, std::size_t cols, std::size_t n,
                                const FieldSpec& field, std::mt19937_64& rng) {
  FormMatrix m(rows, cols, n, 1, field);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_linform(n, field, rng).to_form());
  return m;
}

}  // namespace sforms
