#include "sforms/forms.hpp"

#include <sstream>

#include "sforms/const_matrix.hpp"
#include "sforms/error.hpp"

namespace sforms {

namespace {

void append_monomials(std::size_t var, unsigned remaining, Exponent& current,
                      std::vector<Exponent>& out) {
  if (var + 1 == current.size()) {
    current[var] = static_cast<int>(remaining);
    out.push_back(current);
    return;
  }
  for (int e = static_cast<int>(remaining); e >= 0; --e) {
    current[var] = e;
    append_monomials(var + 1, remaining - static_cast<unsigned>(e), current, out);
  }
  current[var] = 0;
}

std::string monomial_string(const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

// Appends "c*m" with sign handling to a running signed sum.
void append_signed_term(std::string& out, const Scalar& coeff, const std::string& monomial) {
  std::string c = coeff.to_string();
  bool negative = !c.empty() && c.front() == '-';
  if (negative) c.erase(0, 1);
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (monomial.empty()) {
    out += c;
  } else if (c == "1") {
    out += monomial;
  } else {
    out += c + '*' + monomial;
  }
}

}  // namespace

std::size_t monomial_count(std::size_t n, unsigned d) {
  if (n == 0) return d == 0 ? 1 : 0;
  // C(n + d - 1, d), computed incrementally so every intermediate is exact.
  std::size_t result = 1;
  for (unsigned i = 1; i <= d; ++i) result = result * (n - 1 + i) / i;
  return result;
}

std::vector<Exponent> monomials(std::size_t n, unsigned d) {
  std::vector<Exponent> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  out.reserve(monomial_count(n, d));
  Exponent current(n, 0);
  append_monomials(0, d, current, out);
  return out;
}

MonomialBasis::MonomialBasis(std::size_t n, unsigned d) : exponents_(monomials(n, d)) {
  for (std::size_t i = 0; i < exponents_.size(); ++i) index_.emplace(exponents_[i], i);
}

std::size_t MonomialBasis::index_of(const Exponent& e) const {
  const auto it = index_.find(e);
  if (it == index_.end()) throw Error(ErrorCode::InvalidArgument, "monomial outside basis");
  return it->second;
}

Form::Form(std::size_t n, unsigned degree, const FieldSpec& field)
    : n_(n), degree_(degree), field_(field) {}

Form Form::constant(std::size_t n, const Scalar& value) {
  Form f(n, 0, value.field());
  f.add_term(Exponent(n, 0), value);
  return f;
}

Form Form::variable(std::size_t n, std::size_t index, const FieldSpec& field) {
  if (index >= n) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  Exponent e(n, 0);
  e[index] = 1;
  return monomial(e, Scalar::one(field));
}

Form Form::monomial(const Exponent& exponent, const Scalar& coeff) {
  int degree = 0;
  for (int e : exponent) {
    if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
    degree += e;
  }
  Form f(exponent.size(), static_cast<unsigned>(degree), coeff.field());
  f.add_term(exponent, coeff);
  return f;
}

Scalar Form::coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Form::add_term(const Exponent& e, const Scalar& coeff) {
  if (e.size() != n_) throw Error(ErrorCode::InvalidArgument, "exponent length differs from n");
  int sum = 0;
  for (int x : e) {
    if (x < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
    sum += x;
  }
  if (static_cast<unsigned>(sum) != degree_) {
    throw Error(ErrorCode::InvalidArgument, "term degree differs from form degree");
  }
  if (coeff.field() != field_) throw Error(ErrorCode::FieldMismatch, "coefficient over wrong field");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::vector<Scalar> Form::coefficients(const MonomialBasis& basis) const {
  std::vector<Scalar> out(basis.size(), Scalar::zero(field_));
  for (const auto& [e, c] : terms_) out[basis.index_of(e)] = c;
  return out;
}

Form Form::from_coefficients(const MonomialBasis& basis, std::size_t n, unsigned degree,
                             std::span<const Scalar> coeffs, const FieldSpec& field) {
  Form f(n, degree, field);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) f.terms_.emplace(basis[i], coeffs[i]);
  }
  return f;
}

Scalar Form::evaluate(std::span<const Scalar> point) const {
  if (point.size() != n_) throw Error(ErrorCode::InvalidArgument, "point has wrong dimension");
  Scalar total = Scalar::zero(field_);
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < n_; ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

LinForm Form::to_linform() const {
  if (degree_ != 1) throw Error(ErrorCode::DegreeNotOne, "form is not linear");
  LinForm out(n_, field_);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (e[i] == 1) out[i] = c;
    }
  }
  return out;
}

void Form::check_compatible(const Form& other) const {
  if (n_ != other.n_) throw Error(ErrorCode::InvalidArgument, "forms in different numbers of variables");
  if (field_ != other.field_) throw Error(ErrorCode::FieldMismatch, "forms over different fields");
}

Form Form::operator-() const {
  Form out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Form& Form::operator+=(const Form& other) {
  check_compatible(other);
  if (other.is_zero()) return *this;
  if (degree_ != other.degree_) {
    if (!is_zero()) throw Error(ErrorCode::InvalidArgument, "sum of forms of different degrees");
    degree_ = other.degree_;
  }
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Form& Form::operator-=(const Form& other) { return *this += -other; }

Form& Form::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    if (s.field() != field_) throw Error(ErrorCode::FieldMismatch, "scalar over wrong field");
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Form operator*(const Form& a, const Form& b) {
  a.check_compatible(b);
  Form out(a.n_, a.degree_ + b.degree_, a.field_);
  Exponent sum(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.n_; ++i) sum[i] = ea[i] + eb[i];
      auto [it, inserted] = out.terms_.try_emplace(sum, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

bool operator==(const Form& a, const Form& b) {
  if (a.n_ != b.n_ || a.field_ != b.field_) return false;
  if (a.is_zero() && b.is_zero()) return a.degree_ == b.degree_;
  return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

std::string Form::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) append_signed_term(out, c, monomial_string(e));
  return out;
}

Form mul(const Form& a, const Form& b) { return a * b; }

Form exact_divide(const Form& a, const Form& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero form");
  if (a.n() != b.n()) throw Error(ErrorCode::InvalidArgument, "forms in different numbers of variables");
  if (a.degree() < b.degree()) {
    if (a.is_zero()) return Form(a.n(), 0, a.field());
    throw Error(ErrorCode::NotDivisible, "dividend has lower degree than divisor");
  }
  const unsigned qdeg = a.degree() - b.degree();
  const MonomialBasis unknowns(a.n(), qdeg);
  const MonomialBasis target(a.n(), a.degree());
  const FieldSpec& field = a.field();

  ConstMatrix system(target.size(), unknowns.size(), field);
  for (std::size_t k = 0; k < unknowns.size(); ++k) {
    const Form image = b * Form::monomial(unknowns[k], Scalar::one(field));
    for (const auto& [e, c] : image.terms()) system(target.index_of(e), k) = c;
  }
  const auto rhs = ConstMatrix::column(field, a.coefficients(target));
  const auto solution = solve(system, rhs);
  if (!solution) {
    throw Error(ErrorCode::NotDivisible, a.to_string() + " is not divisible by " + b.to_string());
  }
  return Form::from_coefficients(unknowns, a.n(), qdeg, solution->column_values(0), field);
}

LinForm::LinForm(std::size_t n, const FieldSpec& field)
    : field_(field), coeffs_(n, Scalar::zero(field)) {}

LinForm::LinForm(const FieldSpec& field, std::vector<Scalar> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.field() != field_) throw Error(ErrorCode::FieldMismatch, "coefficient over wrong field");
  }
}

LinForm LinForm::variable(std::size_t n, std::size_t index, const FieldSpec& field) {
  if (index >= n) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  LinForm out(n, field);
  out[index] = Scalar::one(field);
  return out;
}

bool LinForm::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

Form LinForm::to_form() const {
  Form f(n(), 1, field_);
  Exponent e(n(), 0);
  for (std::size_t i = 0; i < n(); ++i) {
    e[i] = 1;
    f.add_term(e, coeffs_[i]);
    e[i] = 0;
  }
  return f;
}

LinForm LinForm::operator-() const {
  LinForm out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LinForm& LinForm::operator+=(const LinForm& other) {
  if (n() != other.n()) throw Error(ErrorCode::InvalidArgument, "linear forms of different length");
  for (std::size_t i = 0; i < n(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

LinForm& LinForm::operator-=(const LinForm& other) { return *this += -other; }

LinForm& LinForm::operator*=(const Scalar& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

std::string LinForm::to_string() const { return to_form().to_string(); }

std::size_t coefficient_span_dim(std::span<const LinForm> forms) {
  if (forms.empty()) return 0;
  const std::size_t n = forms.front().n();
  ConstMatrix m(forms.size(), n, forms.front().field());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].n() != n) throw Error(ErrorCode::InvalidArgument, "linear forms of different length");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = forms[i][j];
  }
  return rank(m);
}

LinForm random_linform(std::size_t n, const FieldSpec& field, std::mt19937_64& rng) {
  LinForm out(n, field);
  for (std::size_t i = 0; i < n; ++i) out[i] = random_scalar(field, rng);
  return out;
}

Form random_form(std::size_t n, unsigned degree, const FieldSpec& field, std::mt19937_64& rng) {
  Form f(n, degree, field);
  for (const auto& e : monomials(n, degree)) f.add_term(e, random_scalar(field, rng));
  return f;
}

FormVector::FormVector(std::size_t length, std::size_t n, unsigned degree, const FieldSpec& field)
    : n_(n), degree_(degree), field_(field), entries_(length, Form(n, degree, field)) {}

FormVector::FormVector(std::vector<Form> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorCode::InvalidArgument, "empty form vector");
  n_ = entries_.front().n();
  field_ = entries_.front().field();
  // Zero entries carry no degree information of their own.
  degree_ = entries_.front().degree();
  for (const auto& e : entries_) {
    if (!e.is_zero()) {
      degree_ = e.degree();
      break;
    }
  }
  for (auto& e : entries_) {
    if (e.n() != n_) throw Error(ErrorCode::InvalidArgument, "vector entries in different n");
    if (e.field() != field_) throw Error(ErrorCode::FieldMismatch, "vector entries over different fields");
    if (e.is_zero()) {
      e = Form(n_, degree_, field_);
    } else if (e.degree() != degree_) {
      throw Error(ErrorCode::InvalidArgument, "vector entries of different degrees");
    }
  }
}

bool FormVector::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

FormVector FormVector::scaled(const Scalar& s) const {
  FormVector out = *this;
  for (auto& e : out.entries_) e *= s;
  return out;
}

}  // namespace sforms
