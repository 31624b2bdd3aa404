#include "sforms/classifier.hpp"

#include <array>
#include <cctype>
#include <string>

#include "sforms/error.hpp"
#include "sforms/syzygy.hpp"

namespace sforms {

namespace {

std::vector<Scalar> constant_values(const FormVector& v) {
  std::vector<Scalar> out;
  for (const auto& f : v.entries()) out.push_back(f.coefficient(Exponent(f.n(), 0)));
  return out;
}

FormVector normalized(const FormVector& u) {
  for (const auto& f : u.entries()) {
    if (!f.is_zero()) return u.scaled(f.terms().begin()->second.inverse());
  }
  return u;
}

// Coefficients of a triple of linear forms laid out as one column of length 3n.
void put_triple(ConstMatrix& m, std::size_t col, const LinTriple& t) {
  const std::size_t n = t[0].n();
  for (std::size_t slot = 0; slot < 3; ++slot)
    for (std::size_t s = 0; s < n; ++s) m(slot * n + s, col) = t[slot][s];
}

// Solves for the coordinates of every row of x in the given triples; column
// i of the result holds the coordinates of row i.
ConstMatrix row_coordinates(const FormMatrix& x, const std::vector<LinTriple>& basis) {
  const std::size_t n = x.n();
  ConstMatrix span(3 * n, basis.size(), x.field());
  for (std::size_t k = 0; k < basis.size(); ++k) put_triple(span, k, basis[k]);
  ConstMatrix rows(3 * n, 3, x.field());
  for (std::size_t i = 0; i < 3; ++i) {
    put_triple(rows, i, LinTriple{x(i, 0).to_linform(), x(i, 1).to_linform(), x(i, 2).to_linform()});
  }
  auto coords = solve(span, rows);
  if (!coords) throw Error(ErrorCode::InternalContradiction, "rows of the matrix are not syzygies of its kernel vector");
  return *coords;
}

Witness zero_row_witness(const FormMatrix& x, const std::vector<Scalar>& cokernel) {
  const FieldSpec& field = x.field();
  const std::array<std::vector<Scalar>, 1> given{cokernel};
  ConstMatrix f = complete_to_basis(given, 3, field);
  ConstMatrix g = ConstMatrix::identity(3, field);
  FormMatrix normal = f * x;
  return {std::move(f), std::move(g), ComponentTag::ZeroRow, std::move(normal)};
}

Witness zero_column_witness(const FormMatrix& x, const std::vector<Scalar>& kernel) {
  const FieldSpec& field = x.field();
  const std::array<std::vector<Scalar>, 1> given{kernel};
  ConstMatrix f = ConstMatrix::identity(3, field);
  ConstMatrix g = complete_to_basis(given, 3, field).transpose();
  FormMatrix normal = x * g;
  return {std::move(f), std::move(g), ComponentTag::ZeroColumn, std::move(normal)};
}

Witness antisymmetric_witness(const FormMatrix& x, const FormVector& u, const LinTriple& ulin) {
  const FieldSpec& field = x.field();
  // Row i of x is sum_j C(j, i) K_j with K_j the rows of alternating_matrix(u).
  const ConstMatrix coords = row_coordinates(x, triple_syzygy_basis(ulin));
  ConstMatrix f = invert(coords.transpose());
  return {std::move(f), ConstMatrix::identity(3, field), ComponentTag::Antisymmetric,
          alternating_matrix(u)};
}

Witness zero_square_witness(const FormMatrix& x, const LinTriple& ulin) {
  const FieldSpec& field = x.field();
  const std::vector<LinTriple> basis = triple_syzygy_basis(ulin);
  const ConstMatrix coords = row_coordinates(x, basis);

  // Row i = alpha_i * (Koszul triple) + l_i * phi^t. Rows of f orthogonal to
  // alpha turn into multiples of phi^t.
  ConstMatrix alpha(1, 3, field);
  for (std::size_t i = 0; i < 3; ++i) alpha(0, i) = coords(0, i);
  if (alpha.is_zero()) throw Error(ErrorCode::InternalContradiction, "rows of the matrix are proportional");
  std::vector<std::vector<Scalar>> annihilator;
  for (const auto& v : nullspace(alpha)) annihilator.push_back(v.column_values(0));
  ConstMatrix f = complete_to_basis(annihilator, 3, field);

  // phi^t g = (1, 0, 0).
  const auto phi = constant_relation(ulin);
  ConstMatrix phi_row(1, 3, field);
  for (std::size_t i = 0; i < 3; ++i) phi_row(0, i) = phi[i];
  ConstMatrix g(3, 3, field);
  for (std::size_t k = 0; k < 3; ++k) {
    if (phi[k].is_zero()) continue;
    g(k, 0) = phi[k].inverse();
    break;
  }
  const auto phi_null = nullspace(phi_row);
  for (std::size_t c = 0; c < 2; ++c)
    for (std::size_t i = 0; i < 3; ++i) g(i, c + 1) = phi_null[c](i, 0);

  FormMatrix normal = f * x * g;
  return {std::move(f), std::move(g), ComponentTag::ZeroSquare, std::move(normal)};
}

Witness build_witness(const FormMatrix& x) {
  if (const auto coker = kernel_at_degree(x.transpose(), 0); !coker.empty()) {
    return zero_row_witness(x, constant_values(coker.front()));
  }
  if (const auto ker = kernel_at_degree(x, 0); !ker.empty()) {
    return zero_column_witness(x, constant_values(ker.front()));
  }
  // No constant relation among rows or columns, so the rank is 2 and the
  // kernel is spanned by a single primitive vector of linear forms.
  const auto ker = kernel_at_degree(x, 1);
  if (ker.size() != 1) {
    throw Error(ErrorCode::InternalContradiction,
                "expected a one-dimensional space of linear kernel vectors, found " +
                    std::to_string(ker.size()));
  }
  const FormVector u = normalized(ker.front());
  const LinTriple ulin{u[0].to_linform(), u[1].to_linform(), u[2].to_linform()};
  switch (coefficient_span_dim(ulin)) {
    case 3: return antisymmetric_witness(x, u, ulin);
    case 2: return zero_square_witness(x, ulin);
    default:
      throw Error(ErrorCode::InternalContradiction, "kernel vector is proportional to a constant vector");
  }
}

bool is_linear_3x3(const FormMatrix& x) { return x.rows() == 3 && x.cols() == 3 && x.degree() == 1; }

}  // namespace

std::string_view to_string(ComponentTag tag) noexcept {
  switch (tag) {
    case ComponentTag::ZeroRow: return "ZeroRow";
    case ComponentTag::ZeroColumn: return "ZeroColumn";
    case ComponentTag::ZeroSquare: return "ZeroSquare";
    case ComponentTag::Antisymmetric: return "Antisymmetric";
  }
  return "Unknown";
}

std::optional<ComponentTag> parse_tag(std::string_view text) {
  std::string key;
  for (char ch : text) {
    if (ch == '-' || ch == '_' || ch == ' ') continue;
    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  if (key == "zerorow" || key == "row" || key == "r") return ComponentTag::ZeroRow;
  if (key == "zerocolumn" || key == "zerocol" || key == "column" || key == "col" || key == "c") {
    return ComponentTag::ZeroColumn;
  }
  if (key == "zerosquare" || key == "square" || key == "s") return ComponentTag::ZeroSquare;
  if (key == "antisymmetric" || key == "alternating" || key == "a") return ComponentTag::Antisymmetric;
  return std::nullopt;
}

ReducedMatrix reduce_variables(const FormMatrix& x) {
  if (!is_linear_3x3(x)) throw Error(ErrorCode::WrongShape, "expected a 3x3 matrix of linear forms");
  const auto entries = x.linear_entries();
  const std::size_t n = x.n();
  ConstMatrix coeffs(entries.size(), n, x.field());
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t t = 0; t < n; ++t) coeffs(i, t) = entries[i][t];
  const Echelon echelon = row_reduce(coeffs);
  const std::size_t m = echelon.pivot_cols.size();

  // The echelon basis is the identity on pivot columns, so the coordinate of
  // an entry along basis vector k is its coefficient at pivot k.
  std::vector<std::vector<LinForm>> rows(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      std::vector<Scalar> c;
      for (std::size_t k = 0; k < m; ++k) c.push_back(entries[i * 3 + j][echelon.pivot_cols[k]]);
      rows[i].emplace_back(x.field(), std::move(c));
    }
  }
  return {FormMatrix::from_linear(rows), m};
}

ClassificationReport classify(const FormMatrix& x) {
  if (!is_linear_3x3(x)) throw Error(ErrorCode::WrongShape, "expected a 3x3 matrix of linear forms");
  ClassificationReport report;
  const auto entries = x.linear_entries();
  report.effective_n = coefficient_span_dim(entries);
  report.is_singular = determinant(x).is_zero();
  report.in_R = rank(coefficient_matrix(x, Axis::Rows)) <= 2;
  report.in_C = rank(coefficient_matrix(x, Axis::Cols)) <= 2;
  if (!report.is_singular || x.is_zero()) return report;

  Witness w = build_witness(x);
  if (!verify_witness(x, w)) {
    throw Error(ErrorCode::InternalContradiction, "constructed witness failed verification");
  }
  report.witness = std::move(w);
  return report;
}

bool matches_pattern(const FormMatrix& m, ComponentTag tag) {
  if (m.rows() != 3 || m.cols() != 3) return false;
  auto zero = [&](std::size_t i, std::size_t j) { return m(i, j).is_zero(); };
  switch (tag) {
    case ComponentTag::ZeroRow: return zero(2, 0) && zero(2, 1) && zero(2, 2);
    case ComponentTag::ZeroColumn: return zero(0, 2) && zero(1, 2) && zero(2, 2);
    case ComponentTag::ZeroSquare: return zero(1, 1) && zero(1, 2) && zero(2, 1) && zero(2, 2);
    case ComponentTag::Antisymmetric:
      for (std::size_t i = 0; i < 3; ++i) {
        if (!zero(i, i)) return false;
        for (std::size_t j = i + 1; j < 3; ++j) {
          if (m(i, j) != -m(j, i)) return false;
        }
      }
      return true;
  }
  return false;
}

bool verify_witness(const FormMatrix& x, const Witness& w) {
  try {
    if (w.f.rows() != x.rows() || !w.f.is_square() || w.g.rows() != x.cols() || !w.g.is_square()) {
      return false;
    }
    if (w.f.field() != x.field() || w.g.field() != x.field()) return false;
    if (rank(w.f) != w.f.rows() || rank(w.g) != w.g.rows()) return false;
    if (w.f * x * w.g != w.normal_form) return false;
    return matches_pattern(w.normal_form, w.tag);
  } catch (const Error&) {
    return false;
  }
}

bool span_bound_check(const FormMatrix& x) {
  if (!is_linear_3x3(x)) throw Error(ErrorCode::WrongShape, "expected a 3x3 matrix of linear forms");
  const auto entries = x.linear_entries();
  if (coefficient_span_dim(entries) < 7) return true;
  return !determinant(x).is_zero();
}

FormMatrix alternating_matrix(const FormVector& u) {
  if (u.size() != 3) throw Error(ErrorCode::WrongShape, "alternating matrix needs a vector of length 3");
  FormMatrix m(3, 3, u.n(), u.degree(), u.field());
  m.set(0, 1, u[2]);
  m.set(0, 2, -u[1]);
  m.set(1, 0, -u[2]);
  m.set(1, 2, u[0]);
  m.set(2, 0, u[1]);
  m.set(2, 1, -u[0]);
  return m;
}

}  // namespace sforms
