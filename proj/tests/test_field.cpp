#include "doctest.h"

#include "sforms/error.hpp"
#include "sforms/field.hpp"
#include "support.hpp"

using namespace sforms;
using namespace sforms::test;

TEST_CASE("field names round-trip") {
  CHECK(FieldSpec::parse("q").is_rationals());
  CHECK(FieldSpec::parse("Q").is_rationals());
  CHECK(FieldSpec::parse("gf32003").modulus() == 32003);
  CHECK(FieldSpec::parse("GF(101)").modulus() == 101);
  CHECK(FieldSpec::parse("gf5").name() == "gf5");
  CHECK(FieldSpec::rationals().name() == "q");
  CHECK_THROWS_AS(FieldSpec::parse("gf9"), Error);
  CHECK_THROWS_AS(FieldSpec::parse("gf3"), Error);
  CHECK_THROWS_AS(FieldSpec::parse("r"), Error);
  CHECK_THROWS_AS(FieldSpec::prime(4294967311ULL), Error);
}

TEST_CASE("primality") {
  CHECK(is_prime(5));
  CHECK(is_prime(32003));
  CHECK(is_prime(4294967291ULL));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(32001));
  CHECK_FALSE(is_prime(4294967295ULL));
}

TEST_CASE("rational arithmetic is exact") {
  const Scalar a = frac(kQ, 3, 7);
  const Scalar b = frac(kQ, 7, 3);
  CHECK((a * b).is_one());
  CHECK((a / a).is_one());
  CHECK((a - a).is_zero());
  CHECK((frac(kQ, 1, 2) + frac(kQ, 1, 3)) == frac(kQ, 5, 6));
  CHECK(frac(kQ, -4, 6).to_string() == "-2/3");
  CHECK(s(kQ, 12).to_string() == "12");
  CHECK(a.inverse() == b);
  CHECK_THROWS_AS(Scalar::zero(kQ).inverse(), Error);
}

TEST_CASE("prime field arithmetic") {
  const FieldSpec f = FieldSpec::prime(7);
  CHECK((s(f, 3) * s(f, 5)).residue() == 1);
  CHECK(s(f, 3).inverse() == s(f, 5));
  CHECK(s(f, -1).residue() == 6);
  CHECK(Scalar::parse(f, "1/2").residue() == 4);
  CHECK(Scalar::parse(f, "-10").residue() == 4);
  CHECK(s(f, 14).is_zero());
  CHECK_THROWS_AS(Scalar::parse(f, "1/7"), Error);
}

TEST_CASE("large prime modulus does not overflow") {
  const FieldSpec f = FieldSpec::prime(4294967291ULL);
  const Scalar a = s(f, 4294967290LL);
  CHECK((a * a).is_one());
  CHECK((a + a).residue() == 4294967289ULL);
  CHECK((a * a.inverse()).is_one());
}

TEST_CASE("scalar parsing") {
  CHECK(Scalar::parse(kQ, "6/4") == frac(kQ, 3, 2));
  CHECK(Scalar::parse(kQ, "-3") == s(kQ, -3));
  CHECK(Scalar::parse(kQ, " 5 ") == s(kQ, 5));
  CHECK_THROWS_AS(Scalar::parse(kQ, "x1"), Error);
  CHECK_THROWS_AS(Scalar::parse(kQ, "1/0"), Error);
  CHECK_THROWS_AS(Scalar::parse(kQ, ""), Error);
}

TEST_CASE("mixing fields is rejected") {
  CHECK_THROWS_AS(s(kQ, 1) + s(kGF, 1), Error);
  try {
    (void)(s(kQ, 1) * s(kGF, 1));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
}

TEST_CASE("random scalars respect their ranges") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Scalar q = random_scalar(kQ, rng);
    CHECK(abs(q.rational().get_num()) <= 10);
    CHECK(q.rational().get_den() <= 10);
    const Scalar r = random_nonzero_scalar(kGF, rng);
    CHECK_FALSE(r.is_zero());
    CHECK(r.residue() < 32003);
  }
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(5);
  for (const FieldSpec& f : {kQ, kGF, FieldSpec::prime(5)}) {
    for (int i = 0; i < 200; ++i) {
      const Scalar a = random_scalar(f, rng);
      const Scalar b = random_scalar(f, rng);
      const Scalar c = random_scalar(f, rng);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) - b == a);
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }
}
