#include "doctest.h"

#include "sforms/error.hpp"
#include "sforms/form_matrix.hpp"
#include "support.hpp"

using namespace sforms;
using namespace sforms::test;

namespace {

FormMatrix diag_x123(const FieldSpec& f = kQ) {
  return linear_matrix(f, {{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}},
                           {{0, 0, 0}, {0, 1, 0}, {0, 0, 0}},
                           {{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}});
}

FormVector vec(std::vector<Form> entries) { return FormVector(std::move(entries)); }

FormVector constants(std::size_t n, std::initializer_list<long long> values) {
  std::vector<Form> out;
  for (long long v : values) out.push_back(Form::constant(n, s(kQ, v)));
  return FormVector(std::move(out));
}

// Whether two vectors are scalar multiples of one another.
bool proportional(const FormVector& a, const FormVector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (!(a[i] * b[j] == a[j] * b[i])) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("determinants") {
  CHECK(determinant(zero_square_example()).is_zero());
  CHECK(determinant(zero_square_example()).degree() == 3);
  CHECK(determinant(diag_x123()) == xf(3, 1) * xf(3, 2) * xf(3, 3));
  CHECK(determinant(standard_alternating()).is_zero());
}

TEST_CASE("adjugate of a diagonal matrix") {
  const FormMatrix adj = adjugate(diag_x123());
  CHECK(adj.degree() == 2);
  CHECK(adj(0, 0) == xf(3, 2) * xf(3, 3));
  CHECK(adj(1, 1) == xf(3, 1) * xf(3, 3));
  CHECK(adj(2, 2) == xf(3, 1) * xf(3, 2));
  CHECK(adj(0, 1).is_zero());
}

TEST_CASE("adjugate of the standard alternating matrix is w w^t") {
  const FormMatrix a = standard_alternating();
  const FormMatrix adj = adjugate(a);
  // Oracle: pointwise comparison with the hand-written constant adjugate.
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    const auto p = random_point(3, kQ, rng);
    CHECK(adj.evaluate(p) == adjugate3(a.evaluate(p)));
  }
  const FormVector w = vec({xf(3, 1), xf(3, 2), xf(3, 3)});
  CHECK(adj == outer_product(w, w));
}

TEST_CASE("adjugate of a constant matrix") {
  const ConstMatrix c = ConstMatrix::from_ints(kQ, {{2, 1, 0}, {0, 1, 4}, {5, 0, 3}});
  std::vector<Form> entries;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) entries.push_back(Form::constant(2, c(i, j)));
  const FormMatrix x = FormMatrix::from_entries(3, 3, entries);
  const FormMatrix adj = adjugate(x);
  CHECK(adj.evaluate(std::vector<Scalar>{s(kQ, 0), s(kQ, 0)}) == adjugate3(c));
  CHECK(x * adj == scalar_identity(3, determinant(x)));
}

TEST_CASE("rank over the fraction field") {
  CHECK(rank_over_K(equal_columns_example()) == 1);
  CHECK(rank_over_K(zero_square_example()) == 2);
  CHECK(rank_over_K(FormMatrix(3, 3, 4, 1, kQ)) == 0);
  CHECK(rank_over_K(diag_x123()) == 3);
  CHECK(rank_over_K(standard_alternating()) == 2);
}

TEST_CASE("kernels at fixed degree") {
  const auto k = kernel_at_degree(standard_alternating(), 1);
  REQUIRE(k.size() == 1);
  CHECK(proportional(k[0], vec({xf(3, 1), xf(3, 2), xf(3, 3)})));

  CHECK(kernel_at_degree(zero_square_example(), 0).empty());

  const auto c = kernel_at_degree(equal_columns_example(), 0);
  REQUIRE(c.size() == 1);
  CHECK(proportional(c[0], constants(2, {1, -1})));
}

TEST_CASE("rank one factorization examples") {
  {
    const VectorPair p = rank1_factor(equal_columns_example());
    CHECK(p.u == vec({xf(2, 1), xf(2, 2)}));
    CHECK(p.v == constants(2, {1, 1}));
  }
  {
    const FormVector w = vec({xf(3, 1), xf(3, 2), xf(3, 3)});
    const VectorPair p = rank1_factor(outer_product(w, w));
    CHECK(p.u == w);
    CHECK(p.v == w);
  }
  {
    const FormMatrix one = FormMatrix::from_entries(1, 1, {xf(1, 1) * s(kQ, 2)});
    const VectorPair p = rank1_factor(one);
    CHECK(p.u == vec({xf(1, 1)}));
    CHECK(p.v == vec({Form::constant(1, s(kQ, 2))}));
  }
  CHECK_THROWS_AS(rank1_factor(diag_x123()), Error);
}

TEST_CASE("cramer vectors") {
  {
    const VectorPair p = cramer_vectors(standard_alternating());
    const FormVector w = vec({xf(3, 1), xf(3, 2), xf(3, 3)});
    CHECK(proportional(p.u, w));
    CHECK(proportional(p.v, w));
    CHECK(p.u.degree() + p.v.degree() == 2);
  }
  {
    const FormMatrix x = zero_square_example();
    const VectorPair p = cramer_vectors(x);
    CHECK(apply(x, p.u).is_zero());
    CHECK(apply(x.transpose(), p.v).is_zero());
    CHECK(p.u.degree() + p.v.degree() == 2);
  }
  {
    const FormMatrix x = linear_matrix(kQ, {{{1, 0}, {0, 0}, {0, 0}},
                                            {{0, 0}, {0, 1}, {0, 0}},
                                            {{0, 0}, {0, 0}, {0, 0}}});
    const VectorPair p = cramer_vectors(x);
    CHECK(p.u == constants(2, {0, 0, 1}));
    CHECK(apply(x, p.u).is_zero());
    CHECK(p.v.degree() == 2);
  }
  CHECK_THROWS_AS(cramer_vectors(diag_x123()), Error);
}

TEST_CASE("coefficient matrices") {
  const FormMatrix zero_row = linear_matrix(kQ, {{{1, 0}, {0, 1}, {1, 1}},
                                                 {{2, 0}, {0, 3}, {1, 0}},
                                                 {{0, 0}, {0, 0}, {0, 0}}});
  const ConstMatrix rows = coefficient_matrix(zero_row, Axis::Rows);
  CHECK(rows.rows() == 3);
  CHECK(rows.cols() == 6);
  for (std::size_t j = 0; j < 6; ++j) CHECK(rows(2, j).is_zero());
  CHECK(rank(rows) <= 2);
  CHECK(rank(coefficient_matrix(zero_square_example(), Axis::Cols)) == 3);
  CHECK(rank(coefficient_matrix(zero_square_example(), Axis::Rows)) == 3);

  std::mt19937_64 rng(31);
  const FormMatrix generic = random_linear_matrix(3, 3, 4, kQ, rng);
  CHECK(rank(coefficient_matrix(generic, Axis::Rows)) == 3);
  CHECK(rank(coefficient_matrix(generic, Axis::Cols)) == 3);
}

TEST_CASE("property: adjugate identity") {
  std::mt19937_64 rng(12);
  for (const FieldSpec& f : {kQ, kGF}) {
    for (int i = 0; i < 40; ++i) {
      const std::size_t n = 1 + i % 5;
      const FormMatrix x = random_linear_matrix(3, 3, n, f, rng);
      const FormMatrix adj = adjugate(x);
      const FormMatrix d = scalar_identity(3, determinant(x));
      CHECK(x * adj == d);
      CHECK(adj * x == d);
      const auto p = random_point(n, f, rng);
      CHECK(adj.evaluate(p) == adjugate3(x.evaluate(p)));
      CHECK(determinant(x).evaluate(p) == det3(x.evaluate(p)));
    }
  }
}

TEST_CASE("property: determinant is multiplicative under the group action") {
  std::mt19937_64 rng(13);
  for (const FieldSpec& f : {kQ, kGF}) {
    for (int i = 0; i < 30; ++i) {
      const FormMatrix x = random_linear_matrix(3, 3, 3, f, rng);
      const ConstMatrix F = random_invertible(3, f, rng);
      const ConstMatrix G = random_invertible(3, f, rng);
      CHECK(determinant(F * x * G) == determinant(x) * (determinant(F) * determinant(G)));
    }
  }
}

TEST_CASE("property: rank over K agrees with evaluation at a random point") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 60; ++i) {
    const FormVector u = vec({random_form(3, 1, kGF, rng), random_form(3, 1, kGF, rng),
                              random_form(3, 1, kGF, rng)});
    const FormVector v = vec({random_form(3, 0, kGF, rng), random_form(3, 0, kGF, rng),
                              random_form(3, 0, kGF, rng)});
    FormMatrix x = random_linear_matrix(3, 3, 3, kGF, rng);
    if (i % 3 == 0) x = outer_product(u, v);
    if (i % 3 == 1) x = standard_alternating(kGF);
    const auto p = random_point(3, kGF, rng);
    CHECK(rank_over_K(x) == rank(x.evaluate(p)));
  }
}

TEST_CASE("property: rank one factorizations reproduce the matrix") {
  std::mt19937_64 rng(15);
  for (const FieldSpec& f : {kQ, kGF}) {
    for (int i = 0; i < 40; ++i) {
      const unsigned du = i % 3 == 0 ? 0 : 1;
      const unsigned dv = i % 2;
      std::vector<Form> ue, ve;
      for (int k = 0; k < 3; ++k) ue.push_back(random_form(3, du, f, rng));
      for (int k = 0; k < 3; ++k) ve.push_back(random_form(3, dv, f, rng));
      const FormVector u(ue), v(ve);
      if (u.is_zero() || v.is_zero()) continue;
      const FormMatrix x = outer_product(u, v);
      const VectorPair p = rank1_factor(x);
      CHECK(outer_product(p.u, p.v) == x);
      CHECK(p.u.degree() + p.v.degree() == x.degree());
      CHECK(p.u.degree() <= du);
    }
  }
}
