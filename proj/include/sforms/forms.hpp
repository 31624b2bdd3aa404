#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sforms/field.hpp"

namespace sforms {

/// Exponent vector of a monomial; its length is the number of variables.
using Exponent = std::vector<int>;

/// Terms iterate in lexicographic order with x1 largest (x1^2 before x1*x2
/// before x2^2).
using TermMap = std::map<Exponent, Scalar, std::greater<>>;

/// C(n + d - 1, d): the number of monomials of degree d in n variables.
std::size_t monomial_count(std::size_t n, unsigned d);

/// All exponent vectors of degree d in n variables, in term order.
std::vector<Exponent> monomials(std::size_t n, unsigned d);

/// Monomials of a fixed degree together with a reverse index.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t n, unsigned d);

  std::size_t size() const noexcept { return exponents_.size(); }
  const Exponent& operator[](std::size_t i) const { return exponents_[i]; }
  std::size_t index_of(const Exponent& e) const;

 private:
  std::vector<Exponent> exponents_;
  std::map<Exponent, std::size_t> index_;
};

class LinForm;

/// Homogeneous polynomial of a fixed degree, stored sparsely. No zero
/// coefficients are stored and every exponent vector sums to degree().
class Form {
 public:
  Form() = default;
  Form(std::size_t n, unsigned degree, const FieldSpec& field);

  static Form constant(std::size_t n, const Scalar& value);
  static Form variable(std::size_t n, std::size_t index, const FieldSpec& field);
  static Form monomial(const Exponent& exponent, const Scalar& coeff);

  std::size_t n() const noexcept { return n_; }
  unsigned degree() const noexcept { return degree_; }
  const FieldSpec& field() const noexcept { return field_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Scalar coefficient(const Exponent& e) const;
  /// Accumulates coeff into the term; drops it if the sum vanishes.
  void add_term(const Exponent& e, const Scalar& coeff);

  /// Coefficients in the order of MonomialBasis(n, degree).
  std::vector<Scalar> coefficients(const MonomialBasis& basis) const;
  static Form from_coefficients(const MonomialBasis& basis, std::size_t n, unsigned degree,
                                std::span<const Scalar> coeffs, const FieldSpec& field);

  Scalar evaluate(std::span<const Scalar> point) const;
  LinForm to_linform() const;

  Form operator-() const;
  Form& operator+=(const Form& other);
  Form& operator-=(const Form& other);
  Form& operator*=(const Scalar& s);

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const Scalar& s) { return a *= s; }
  friend Form operator*(const Scalar& s, Form a) { return a *= s; }
  friend Form operator*(const Form& a, const Form& b);
  friend bool operator==(const Form& a, const Form& b);

  /// Signed monomial sum such as "x1^2 - 2*x1*x3"; "0" for the zero form.
  std::string to_string() const;

 private:
  void check_compatible(const Form& other) const;

  std::size_t n_ = 0;
  unsigned degree_ = 0;
  FieldSpec field_;
  TermMap terms_;
};

Form mul(const Form& a, const Form& b);

/// The homogeneous q with b * q = a, found by solving for the coefficients of
/// q. Throws Error(NotDivisible) when no such q exists.
Form exact_divide(const Form& a, const Form& b);

/// Dense linear form: coefficient i multiplies x_{i+1}.
class LinForm {
 public:
  LinForm() = default;
  LinForm(std::size_t n, const FieldSpec& field);
  LinForm(const FieldSpec& field, std::vector<Scalar> coeffs);

  static LinForm variable(std::size_t n, std::size_t index, const FieldSpec& field);

  std::size_t n() const noexcept { return coeffs_.size(); }
  const FieldSpec& field() const noexcept { return field_; }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
  Scalar& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;

  Form to_form() const;

  LinForm operator-() const;
  LinForm& operator+=(const LinForm& other);
  LinForm& operator-=(const LinForm& other);
  LinForm& operator*=(const Scalar& s);
  friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
  friend LinForm operator-(LinForm a, const LinForm& b) { return a -= b; }
  friend LinForm operator*(LinForm a, const Scalar& s) { return a *= s; }
  friend LinForm operator*(const Scalar& s, LinForm a) { return a *= s; }
  friend bool operator==(const LinForm&, const LinForm&) = default;

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::vector<Scalar> coeffs_;
};

/// Rank of the (#forms) x n matrix of coefficients.
std::size_t coefficient_span_dim(std::span<const LinForm> forms);

LinForm random_linform(std::size_t n, const FieldSpec& field, std::mt19937_64& rng);
Form random_form(std::size_t n, unsigned degree, const FieldSpec& field, std::mt19937_64& rng);

/// Column vector of forms sharing n and degree.
class FormVector {
 public:
  FormVector() = default;
  FormVector(std::size_t length, std::size_t n, unsigned degree, const FieldSpec& field);
  explicit FormVector(std::vector<Form> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t n() const noexcept { return n_; }
  unsigned degree() const noexcept { return degree_; }
  const FieldSpec& field() const noexcept { return field_; }
  const Form& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Form>& entries() const noexcept { return entries_; }
  bool is_zero() const;

  FormVector scaled(const Scalar& s) const;
  friend bool operator==(const FormVector&, const FormVector&) = default;

 private:
  std::size_t n_ = 0;
  unsigned degree_ = 0;
  FieldSpec field_;
  std::vector<Form> entries_;
};

}  // namespace sforms
