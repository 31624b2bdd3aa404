#include "sforms/field.hpp"

#include <cctype>
#include <charconv>

#include "sforms/error.hpp"

namespace sforms {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;  // p < 2^32
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& value, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t p) noexcept {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p < 5 || p >= (std::uint64_t{1} << 32) || !is_prime(p)) {
    throw Error(ErrorCode::InvalidArgument,
                "prime field modulus must be a prime in [5, 2^32), got " +
                    std::to_string(p));
  }
  return FieldSpec(Kind::PrimeField, p);
}

FieldSpec FieldSpec::parse(std::string_view name) {
  std::string lower;
  for (char ch : name) {
    if (ch == '(' || ch == ')' || std::isspace(static_cast<unsigned char>(ch))) continue;
    lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  if (lower == "q" || lower == "qq" || lower == "rationals") return rationals();
  std::string_view digits = lower;
  if (digits.starts_with("gfp")) {
    digits.remove_prefix(3);
  } else if (digits.starts_with("gf")) {
    digits.remove_prefix(2);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown field '" + std::string(name) + "'");
  }
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    throw Error(ErrorCode::InvalidArgument, "unknown field '" + std::string(name) + "'");
  }
  return prime(p);
}

std::string FieldSpec::name() const {
  return is_rationals() ? std::string("q") : "gf" + std::to_string(p_);
}

Scalar Scalar::zero(const FieldSpec& field) { return from_int(field, 0); }

Scalar Scalar::one(const FieldSpec& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const FieldSpec& field, long long value) {
  if (field.is_rationals()) return Scalar(mpq_class(static_cast<long>(value)));
  const auto p = static_cast<long long>(field.modulus());
  long long r = value % p;
  if (r < 0) r += p;
  return Scalar(Residue{static_cast<std::uint64_t>(r), field.modulus()});
}

Scalar Scalar::from_fraction(const FieldSpec& field, const mpz_class& num,
                             const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  if (field.is_rationals()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  const std::uint64_t p = field.modulus();
  const std::uint64_t d = reduce(den, p);
  if (d == 0) {
    throw Error(ErrorCode::InvalidArgument,
                "denominator is divisible by the field characteristic");
  }
  return Scalar(Residue{mul_mod(reduce(num, p), pow_mod(d, p - 2, p), p), p});
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  const auto last = text.find_last_not_of(" \t\r\n");
  text = first == std::string_view::npos ? std::string_view() : text.substr(first, last - first + 1);
  auto parse_int = [&](std::string_view part) {
    std::string s(part);
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    bool ok = !s.empty();
    for (std::size_t i = 0; i < s.size() && ok; ++i) {
      const bool sign = i == 0 && s[i] == '-' && s.size() > 1;
      ok = sign || std::isdigit(static_cast<unsigned char>(s[i]));
    }
    if (!ok) {
      throw Error(ErrorCode::MalformedInput, "invalid scalar '" + std::string(text) + "'");
    }
    return mpz_class(s, 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_fraction(field, parse_int(text), 1);
  mpz_class den = parse_int(text.substr(slash + 1));
  if (den == 0 || (!field.is_rationals() && den % field.modulus() == 0)) {
    throw Error(ErrorCode::MalformedInput, "zero denominator in '" + std::string(text) + "'");
  }
  return from_fraction(field, parse_int(text.substr(0, slash)), den);
}

FieldSpec Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return FieldSpec::prime(r->modulus);
  return FieldSpec::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

void Scalar::check_same_field(const Scalar& other) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&other.value_);
  if ((a == nullptr) != (b == nullptr) || (a && a->modulus != b->modulus)) {
    throw Error(ErrorCode::FieldMismatch,
                "arithmetic between " + field().name() + " and " + other.field().name());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{pow_mod(r->value, r->modulus - 2, r->modulus), r->modulus});
  }
  mpq_class q = 1 / std::get<mpq_class>(value_);
  return Scalar(std::move(q));
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  }
  mpq_class q = -std::get<mpq_class>(value_);
  return Scalar(std::move(q));
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same_field(other);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = (r->value + std::get<Residue>(other.value_).value) % r->modulus;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  check_same_field(other);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = (r->value + r->modulus - std::get<Residue>(other.value_).value) % r->modulus;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same_field(other);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = mul_mod(r->value, std::get<Residue>(other.value_).value, r->modulus);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  check_same_field(other);
  return *this *= other.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw Error(ErrorCode::FieldMismatch, "scalar is not rational");
}

std::uint64_t Scalar::residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw Error(ErrorCode::FieldMismatch, "scalar is not a residue");
}

Scalar random_scalar(const FieldSpec& field, std::mt19937_64& rng) {
  if (field.is_rationals()) {
    std::uniform_int_distribution<long> num(-10, 10);
    std::uniform_int_distribution<long> den(1, 10);
    const long a = num(rng);
    const long b = den(rng);
    return Scalar::from_fraction(field, mpz_class(a), mpz_class(b));
  }
  std::uniform_int_distribution<std::uint64_t> residue(0, field.modulus() - 1);
  return Scalar::from_int(field, static_cast<long long>(residue(rng)));
}

Scalar random_nonzero_scalar(const FieldSpec& field, std::mt19937_64& rng) {
  for (;;) {
    Scalar s = random_scalar(field, rng);
    if (!s.is_zero()) return s;
  }
}

}  // namespace sforms
