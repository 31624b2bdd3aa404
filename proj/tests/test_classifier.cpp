#include "doctest.h"

#include "sforms/classifier.hpp"
#include "sforms/error.hpp"
#include "sforms/orbits.hpp"
#include "support.hpp"

using namespace sforms;
using namespace sforms::test;

TEST_CASE("tag names") {
  CHECK(to_string(ComponentTag::ZeroSquare) == "ZeroSquare");
  CHECK(parse_tag("zero-row") == ComponentTag::ZeroRow);
  CHECK(parse_tag("ZeroColumn") == ComponentTag::ZeroColumn);
  CHECK(parse_tag("antisymmetric") == ComponentTag::Antisymmetric);
  CHECK(parse_tag("zero_square") == ComponentTag::ZeroSquare);
  CHECK_FALSE(parse_tag("diagonal").has_value());
}

TEST_CASE("the zero-square example is already in normal form") {
  const FormMatrix x = zero_square_example();
  const ClassificationReport r = classify(x);
  CHECK(r.is_singular);
  CHECK_FALSE(r.in_R);
  CHECK_FALSE(r.in_C);
  CHECK(r.effective_n == 5);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->tag == ComponentTag::ZeroSquare);
  CHECK(r.witness->f == ConstMatrix::identity(3, kQ));
  CHECK(r.witness->g == ConstMatrix::identity(3, kQ));
  CHECK(r.witness->normal_form == x);
  CHECK(verify_witness(x, *r.witness));
}

TEST_CASE("the standard alternating matrix") {
  const FormMatrix x = standard_alternating();
  const ClassificationReport r = classify(x);
  CHECK(r.is_singular);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->tag == ComponentTag::Antisymmetric);
  CHECK(r.witness->g == ConstMatrix::identity(3, kQ));
  CHECK(verify_witness(x, *r.witness));
  // The witness only rescales: F is diagonal.
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) CHECK(r.witness->f(i, j).is_zero());
}

TEST_CASE("alternating matrix moved by the group action over GF(32003)") {
  const FormMatrix a = standard_alternating(kGF);
  const ConstMatrix f0 = random_invertible(3, kGF, 101);
  const ConstMatrix g0 = random_invertible(3, kGF, 202);
  const FormMatrix x = f0 * a * g0;
  const ClassificationReport r = classify(x);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->tag == ComponentTag::Antisymmetric);
  CHECK(verify_witness(x, *r.witness));
  CHECK(matches_pattern(r.witness->normal_form, ComponentTag::Antisymmetric));
}

TEST_CASE("equal columns give a zero column") {
  const FormMatrix x = linear_matrix(kQ, {{{1, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}},
                                          {{0, 1, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 1, 0}},
                                          {{0, 0, 1, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 1}}});
  const ClassificationReport r = classify(x);
  CHECK(r.is_singular);
  CHECK(r.in_C);
  CHECK_FALSE(r.in_R);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->tag == ComponentTag::ZeroColumn);
  CHECK(r.witness->f == ConstMatrix::identity(3, kQ));
  CHECK(verify_witness(x, *r.witness));
}

TEST_CASE("zero and nonsingular inputs carry no witness") {
  const ClassificationReport zero = classify(FormMatrix(3, 3, 4, 1, kQ));
  CHECK(zero.is_singular);
  CHECK(zero.in_R);
  CHECK(zero.in_C);
  CHECK(zero.effective_n == 0);
  CHECK_FALSE(zero.witness.has_value());

  const FormMatrix diag = linear_matrix(kQ, {{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}},
                                             {{0, 0, 0}, {0, 1, 0}, {0, 0, 0}},
                                             {{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}});
  const ClassificationReport r = classify(diag);
  CHECK_FALSE(r.is_singular);
  CHECK_FALSE(r.in_R);
  CHECK_FALSE(r.in_C);
  CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("wrong shapes are rejected") {
  CHECK_THROWS_AS(classify(equal_columns_example()), Error);
  const FormMatrix quadratic(3, 3, 2, 2, kQ);
  try {
    (void)classify(quadratic);
    FAIL("expected WrongShape");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WrongShape);
  }
}

TEST_CASE("verify_witness rejects bad witnesses") {
  const FormMatrix x = zero_square_example();
  Witness w = *classify(x).witness;
  CHECK(verify_witness(x, w));

  Witness singular_f = w;
  singular_f.f = ConstMatrix::from_ints(kQ, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
  singular_f.normal_form = singular_f.f * x * singular_f.g;
  CHECK_FALSE(verify_witness(x, singular_f));

  Witness wrong_tag = w;
  wrong_tag.tag = ComponentTag::ZeroRow;
  CHECK_FALSE(verify_witness(x, wrong_tag));

  Witness wrong_product = w;
  wrong_product.f = ConstMatrix::from_ints(kQ, {{2, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK_FALSE(verify_witness(x, wrong_product));
}

TEST_CASE("patterns") {
  CHECK(matches_pattern(zero_square_example(), ComponentTag::ZeroSquare));
  CHECK_FALSE(matches_pattern(zero_square_example(), ComponentTag::ZeroRow));
  CHECK(matches_pattern(standard_alternating(), ComponentTag::Antisymmetric));
  CHECK_FALSE(matches_pattern(standard_alternating(), ComponentTag::ZeroColumn));
  const FormVector u({xf(3, 1), xf(3, 2) + xf(3, 3), xf(3, 3)});
  CHECK(matches_pattern(alternating_matrix(u), ComponentTag::Antisymmetric));
  CHECK(alternating_matrix(FormVector({xf(3, 1), xf(3, 2), xf(3, 3)})) == standard_alternating());
}

TEST_CASE("span bound check") {
  std::mt19937_64 rng(9);
  const FormMatrix generic = random_linear_matrix(3, 3, 9, kQ, rng);
  CHECK(coefficient_span_dim(generic.linear_entries()) == 9);
  CHECK_FALSE(determinant(generic).is_zero());
  CHECK(span_bound_check(generic));
  CHECK(span_bound_check(zero_square_example()));
}

TEST_CASE("variable reduction keeps the span") {
  const FormMatrix x = standard_alternating() * random_invertible(3, kQ, 5);
  std::vector<std::vector<LinForm>> rows;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<LinForm> row;
    for (std::size_t j = 0; j < 3; ++j) {
      std::vector<Scalar> c = x(i, j).to_linform().coeffs();
      c.push_back(c[0] + c[1]);
      c.push_back(s(kQ, 0));
      row.emplace_back(kQ, c);
    }
    rows.push_back(row);
  }
  const FormMatrix wide = FormMatrix::from_linear(rows);
  const ReducedMatrix r = reduce_variables(wide);
  CHECK(r.m == 3);
  CHECK(r.matrix.n() == 3);
  CHECK(determinant(r.matrix).is_zero());
}

TEST_CASE("property: soundness, completeness and consistency on samples") {
  for (const FieldSpec& f : {kQ, kGF}) {
    for (std::size_t n = 2; n <= 5; ++n) {
      for (ComponentTag tag : kAllTags) {
        for (std::uint64_t seed = 0; seed < 12; ++seed) {
          const FormMatrix x = sample_component(tag, n, f, seed * 7919 + n);
          const ClassificationReport r = classify(x);
          CHECK(r.is_singular);
          REQUIRE(r.witness.has_value());
          CHECK(verify_witness(x, *r.witness));
          CHECK(r.in_R == !kernel_at_degree(x.transpose(), 0).empty());
          CHECK(r.in_C == !kernel_at_degree(x, 0).empty());
          if (tag == ComponentTag::ZeroRow) CHECK(r.in_R);
          if (tag == ComponentTag::ZeroColumn) CHECK(r.in_C);
        }
      }
    }
  }
}

TEST_CASE("property: tags are stable under the group action") {
  std::mt19937_64 rng(77);
  std::size_t compared = 0;
  for (const FieldSpec& f : {kQ, kGF}) {
    for (std::size_t n = 2; n <= 5; ++n) {
      for (ComponentTag tag : {ComponentTag::Antisymmetric, ComponentTag::ZeroSquare}) {
        for (int i = 0; i < 8; ++i) {
          const FormMatrix x = sample_component(tag, n, f, rng);
          const ClassificationReport r = classify(x);
          if (r.in_R || r.in_C) continue;
          const FormMatrix moved = random_invertible(3, f, rng) * x * random_invertible(3, f, rng);
          const ClassificationReport m = classify(moved);
          REQUIRE(m.witness.has_value());
          CHECK(m.witness->tag == r.witness->tag);
          ++compared;
        }
      }
    }
  }
  CHECK(compared > 40);
}

TEST_CASE("property: entry span of at least 7 forces a nonzero determinant") {
  std::mt19937_64 rng(55);
  for (const FieldSpec& f : {kQ, kGF}) {
    for (int i = 0; i < 150; ++i) {
      const FormMatrix x = random_linear_matrix(3, 3, 9, f, rng);
      CHECK(span_bound_check(x));
      if (coefficient_span_dim(x.linear_entries()) >= 7) CHECK_FALSE(determinant(x).is_zero());
    }
  }
}
