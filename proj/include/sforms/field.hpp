#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace sforms {

/// The base field: the rationals or a prime field GF(p) with 5 <= p < 2^32.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec prime(std::uint64_t p);

  /// Accepts "q", "Q", "gf<p>", "GF(<p>)", "gfp<p>".
  static FieldSpec parse(std::string_view name);

  Kind kind() const noexcept { return kind_; }
  bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
  /// Zero for the rationals.
  std::uint64_t modulus() const noexcept { return p_; }

  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_ = Kind::Rationals;
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t p) noexcept;

/// Exact field element. Rationals are kept canonical by GMP (lowest terms,
/// positive denominator); residues are kept in [0, p).
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  static Scalar from_int(const FieldSpec& field, long long value);
  static Scalar from_fraction(const FieldSpec& field, const mpz_class& num,
                              const mpz_class& den);
  /// Parses "17", "-3", "a/b". Over GF(p) the value is reduced mod p.
  static Scalar parse(const FieldSpec& field, std::string_view text);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Decimal integer, "a/b", or the residue "r".
  std::string to_string() const;

  const mpq_class& rational() const;
  std::uint64_t residue() const;

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  explicit Scalar(Residue r) : value_(r) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}

  void check_same_field(const Scalar& other) const;

  std::variant<mpq_class, Residue> value_;
};

/// Uniform residue over GF(p); over Q a fraction with numerator in [-10, 10]
/// and denominator in [1, 10].
Scalar random_scalar(const FieldSpec& field, std::mt19937_64& rng);
Scalar random_nonzero_scalar(const FieldSpec& field, std::mt19937_64& rng);

}  // namespace sforms
