#include "sforms/syzygy.hpp"

#include "sforms/const_matrix.hpp"
#include "sforms/error.hpp"

namespace sforms {

namespace {

void check_uniform(std::span<const LinForm> ells) {
  if (ells.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one linear form");
  for (const auto& l : ells) {
    if (l.n() != ells.front().n()) throw Error(ErrorCode::InvalidArgument, "linear forms of different length");
    if (l.field() != ells.front().field()) throw Error(ErrorCode::FieldMismatch, "linear forms over different fields");
  }
}

LinTriple koszul_pair(const LinTriple& ells, std::size_t i, std::size_t j) {
  const std::size_t n = ells[0].n();
  const FieldSpec& field = ells[0].field();
  LinTriple t{LinForm(n, field), LinForm(n, field), LinForm(n, field)};
  t[i] = ells[j];
  t[j] = -ells[i];
  return t;
}

}  // namespace

std::size_t syzygy_dimension_formula(std::size_t r, std::size_t n, std::size_t c) {
  return (r - c) * n + c * (c - (c > 0 ? 1 : 0)) / 2;
}

Form syzygy_sum(std::span<const LinForm> fs, std::span<const LinForm> ells) {
  if (fs.size() != ells.size()) throw Error(ErrorCode::InvalidArgument, "tuple lengths differ");
  check_uniform(ells);
  Form total(ells.front().n(), 2, ells.front().field());
  for (std::size_t i = 0; i < fs.size(); ++i) total += fs[i].to_form() * ells[i].to_form();
  return total;
}

SyzygySpace syzygy_space(std::span<const LinForm> ells) {
  check_uniform(ells);
  const std::size_t r = ells.size();
  const std::size_t n = ells.front().n();
  const FieldSpec& field = ells.front().field();
  const MonomialBasis quadrics(n, 2);

  // Unknown (i, s) is the coefficient of x_s in f_i; it contributes
  // coeff(l_i, t) to the monomial x_s x_t.
  ConstMatrix system(quadrics.size(), r * n, field);
  Exponent e(n, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = 0; t < n; ++t) {
        if (ells[i][t].is_zero()) continue;
        e[s] += 1;
        e[t] += 1;
        system(quadrics.index_of(e), i * n + s) += ells[i][t];
        e[s] -= 1;
        e[t] -= 1;
      }
    }
  }

  SyzygySpace out;
  out.r = r;
  out.n = n;
  out.c = coefficient_span_dim(ells);
  for (const ConstMatrix& v : nullspace(system)) {
    std::vector<LinForm> tuple;
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<Scalar> coeffs;
      for (std::size_t s = 0; s < n; ++s) coeffs.push_back(v(i * n + s, 0));
      tuple.emplace_back(field, std::move(coeffs));
    }
    out.basis.push_back(std::move(tuple));
  }
  out.dim = out.basis.size();
  if (out.dim != syzygy_dimension_formula(r, n, out.c)) {
    throw Error(ErrorCode::InternalContradiction, "syzygy dimension disagrees with (r - c) n + C(c, 2)");
  }
  return out;
}

std::array<Scalar, 3> constant_relation(const LinTriple& ells) {
  const std::size_t n = ells[0].n();
  const FieldSpec& field = ells[0].field();
  ConstMatrix columns(n, 3, field);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t t = 0; t < n; ++t) columns(t, i) = ells[i][t];
  const auto relations = nullspace(columns);
  if (relations.size() != 1) {
    throw Error(ErrorCode::InvalidArgument, "triple does not span a plane");
  }
  std::array<Scalar, 3> phi{relations[0](0, 0), relations[0](1, 0), relations[0](2, 0)};
  for (std::size_t i = 3; i-- > 0;) {
    if (phi[i].is_zero()) continue;
    const Scalar inv = phi[i].inverse();
    for (auto& p : phi) p *= inv;
    break;
  }
  return phi;
}

std::vector<LinTriple> triple_syzygy_basis(const LinTriple& ells) {
  check_uniform(ells);
  const std::size_t n = ells[0].n();
  const FieldSpec& field = ells[0].field();
  const std::size_t c = coefficient_span_dim(ells);
  if (c <= 1) throw Error(ErrorCode::SpanTooSmall, "triple spans a space of dimension <= 1");

  std::vector<LinTriple> out;
  if (c == 3) {
    out.push_back(koszul_pair(ells, 1, 2));
    out.push_back(koszul_pair(ells, 2, 0));
    out.push_back(koszul_pair(ells, 0, 1));
  } else {
    bool found = false;
    for (std::size_t i = 0; i < 3 && !found; ++i) {
      for (std::size_t j = i + 1; j < 3 && !found; ++j) {
        const std::array<LinForm, 2> pair{ells[i], ells[j]};
        if (coefficient_span_dim(pair) == 2) {
          out.push_back(koszul_pair(ells, i, j));
          found = true;
        }
      }
    }
    const auto phi = constant_relation(ells);
    for (std::size_t t = 0; t < n; ++t) {
      const LinForm x = LinForm::variable(n, t, field);
      out.push_back(LinTriple{x * phi[0], x * phi[1], x * phi[2]});
    }
  }
  for (const auto& triple : out) {
    if (!syzygy_sum(triple, ells).is_zero()) {
      throw Error(ErrorCode::InternalContradiction, "spanning triple is not a syzygy");
    }
  }
  return out;
}

}  // namespace sforms
