#pragma once

#include <initializer_list>
#include <vector>

#include "sforms/classifier.hpp"
#include "sforms/form_matrix.hpp"
#include "sforms/forms.hpp"

namespace sforms::test {

inline const FieldSpec kQ = FieldSpec::rationals();
inline const FieldSpec kGF = FieldSpec::prime(32003);

inline Scalar s(const FieldSpec& field, long long value) { return Scalar::from_int(field, value); }

inline Scalar frac(const FieldSpec& field, long num, long den) {
  return Scalar::from_fraction(field, mpz_class(num), mpz_class(den));
}

inline LinForm lin(const FieldSpec& field, std::initializer_list<long long> coeffs) {
  std::vector<Scalar> c;
  for (long long v : coeffs) c.push_back(s(field, v));
  return LinForm(field, std::move(c));
}

inline LinForm x(std::size_t n, std::size_t i, const FieldSpec& field = kQ) {
  return LinForm::variable(n, i - 1, field);
}

inline Form xf(std::size_t n, std::size_t i, const FieldSpec& field = kQ) {
  return Form::variable(n, i - 1, field);
}

/// 3 x 3 (or any shape) linear matrix from rows of coefficient lists.
inline FormMatrix linear_matrix(const FieldSpec& field,
                                std::initializer_list<std::initializer_list<std::initializer_list<long long>>> rows) {
  std::vector<std::vector<LinForm>> out;
  for (const auto& row : rows) {
    std::vector<LinForm> r;
    for (const auto& entry : row) r.push_back(lin(field, entry));
    out.push_back(std::move(r));
  }
  return FormMatrix::from_linear(out);
}

/// [[x1, x2, x3], [x4, 0, 0], [x5, 0, 0]] in five variables.
inline FormMatrix zero_square_example(const FieldSpec& field = kQ) {
  return linear_matrix(field, {{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}},
                               {{0, 0, 0, 1, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}},
                               {{0, 0, 0, 0, 1}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}}});
}

/// [[x1, x1], [x2, x2]] in two variables.
inline FormMatrix equal_columns_example(const FieldSpec& field = kQ) {
  return linear_matrix(field, {{{1, 0}, {1, 0}}, {{0, 1}, {0, 1}}});
}

/// [[0, x3, -x2], [-x3, 0, x1], [x2, -x1, 0]] in three variables.
inline FormMatrix standard_alternating(const FieldSpec& field = kQ) {
  return linear_matrix(field, {{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
                               {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
                               {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}});
}

/// Plain 3 x 3 cofactor adjugate of a constant matrix, written out by hand.
inline ConstMatrix adjugate3(const ConstMatrix& m) {
  auto c = [&](std::size_t i, std::size_t j) { return m(i, j); };
  ConstMatrix a(3, 3, m.field());
  a(0, 0) = c(1, 1) * c(2, 2) - c(1, 2) * c(2, 1);
  a(0, 1) = c(0, 2) * c(2, 1) - c(0, 1) * c(2, 2);
  a(0, 2) = c(0, 1) * c(1, 2) - c(0, 2) * c(1, 1);
  a(1, 0) = c(1, 2) * c(2, 0) - c(1, 0) * c(2, 2);
  a(1, 1) = c(0, 0) * c(2, 2) - c(0, 2) * c(2, 0);
  a(1, 2) = c(0, 2) * c(1, 0) - c(0, 0) * c(1, 2);
  a(2, 0) = c(1, 0) * c(2, 1) - c(1, 1) * c(2, 0);
  a(2, 1) = c(0, 1) * c(2, 0) - c(0, 0) * c(2, 1);
  a(2, 2) = c(0, 0) * c(1, 1) - c(0, 1) * c(1, 0);
  return a;
}

inline Scalar det3(const ConstMatrix& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

inline std::vector<Scalar> random_point(std::size_t n, const FieldSpec& field, std::mt19937_64& rng) {
  std::vector<Scalar> p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(random_scalar(field, rng));
  return p;
}

}  // namespace sforms::test
