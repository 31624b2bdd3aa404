#include "sforms/acceptance.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "sforms/classifier.hpp"
#include "sforms/error.hpp"
#include "sforms/form_matrix.hpp"
#include "sforms/orbits.hpp"
#include "sforms/syzygy.hpp"

namespace sforms {

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t value) {
  std::uint64_t z = seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<FieldSpec> acceptance_fields() {
  return {FieldSpec::rationals(), FieldSpec::prime(32003)};
}

std::size_t scaled(std::size_t count) { return std::max<std::size_t>(1, count / 20); }

std::size_t binomial2(std::size_t c) { return c * (c - (c > 0 ? 1 : 0)) / 2; }

FormVector random_vector(std::size_t length, std::size_t n, unsigned degree, const FieldSpec& field,
                         std::mt19937_64& rng) {
  for (;;) {
    std::vector<Form> entries;
    for (std::size_t i = 0; i < length; ++i) entries.push_back(random_form(n, degree, field, rng));
    FormVector v(std::move(entries));
    if (!v.is_zero()) return v;
  }
}

// A vector with no nonconstant common factor among its entries.
FormVector primitive_vector(std::size_t length, std::size_t n, unsigned degree,
                            const FieldSpec& field, std::mt19937_64& rng) {
  if (degree == 0) return random_vector(length, n, 0, field, rng);
  if (degree == 1) {
    // Entries spanning at least a plane share no linear factor.
    for (;;) {
      FormVector v = random_vector(length, n, 1, field, rng);
      std::vector<LinForm> ls;
      for (const auto& f : v.entries()) ls.push_back(f.to_linform());
      if (coefficient_span_dim(ls) >= 2) return v;
    }
  }
  // Degree 2: x1^2 in one slot and a quadric with a nonzero x2^2 term in
  // another; x1 does not divide the latter, so the gcd is 1.
  std::vector<Form> entries;
  for (std::size_t i = 0; i < length; ++i) entries.push_back(random_form(n, 2, field, rng));
  std::uniform_int_distribution<std::size_t> slot(0, length - 1);
  const std::size_t a = slot(rng);
  std::size_t b = slot(rng);
  while (b == a) b = slot(rng);
  Exponent x1sq(n, 0);
  x1sq[0] = 2;
  Exponent x2sq(n, 0);
  x2sq[1] = 2;
  entries[a] = Form::monomial(x1sq, Scalar::one(field));
  Form fixed = entries[b];
  fixed.add_term(x2sq, -fixed.coefficient(x2sq) + random_nonzero_scalar(field, rng));
  entries[b] = fixed;
  return FormVector(std::move(entries));
}

std::vector<Scalar> stacked_coefficients(const FormVector& v) {
  const MonomialBasis basis(v.n(), v.degree());
  std::vector<Scalar> out;
  for (const auto& f : v.entries()) {
    const auto c = f.coefficients(basis);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

bool proportional(const FormVector& a, const FormVector& b) {
  if (a.size() != b.size() || a.degree() != b.degree()) return false;
  const auto ca = stacked_coefficients(a);
  const auto cb = stacked_coefficients(b);
  ConstMatrix m(2, ca.size(), a.field());
  for (std::size_t k = 0; k < ca.size(); ++k) {
    m(0, k) = ca[k];
    m(1, k) = cb[k];
  }
  return rank(m) == 1;
}

bool first_coefficient_is_one(const FormVector& u) {
  for (const auto& f : u.entries()) {
    if (!f.is_zero()) return f.terms().begin()->second.is_one();
  }
  return false;
}

}  // namespace

AcceptanceOptions AcceptanceOptions::quick() {
  AcceptanceOptions o;
  o.classifier_samples = scaled(o.classifier_samples);
  o.syzygy_tuples = scaled(o.syzygy_tuples);
  o.adjugate_samples = scaled(o.adjugate_samples);
  o.rank1_samples = scaled(o.rank1_samples);
  o.span_samples = scaled(o.span_samples);
  return o;
}

CriterionResult check_classifier_and_membership(const AcceptanceOptions& opts,
                                                CriterionResult* membership) {
  CriterionResult result{1, "classifier completeness and soundness", true, ""};
  std::size_t total = 0;
  std::size_t failures = 0;
  std::size_t disagreements = 0;
  std::string first_failure;
  for (const FieldSpec& field : acceptance_fields()) {
    for (ComponentTag tag : kAllTags) {
      for (std::size_t n = 2; n <= 5; ++n) {
        for (std::size_t k = 0; k < opts.classifier_samples; ++k) {
          const std::uint64_t seed =
              mix(mix(mix(mix(opts.seed, field.modulus()), static_cast<std::uint64_t>(tag)), n), k);
          const FormMatrix x = sample_component(tag, n, field, seed);
          ++total;
          std::string failure;
          try {
            const ClassificationReport report = classify(x);
            if (!report.witness || !verify_witness(x, *report.witness)) failure = "no verified witness";
            const bool constant_cokernel = !kernel_at_degree(x.transpose(), 0).empty();
            const bool constant_kernel = !kernel_at_degree(x, 0).empty();
            if (report.in_R != constant_cokernel || report.in_C != constant_kernel) ++disagreements;
          } catch (const Error& e) {
            failure = e.what();
            ++disagreements;
          }
          if (failure.empty()) continue;
          if (failures++ == 0) {
            first_failure = std::string(to_string(tag)) + " n=" + std::to_string(n) + " " +
                            field.name() + " seed=" + std::to_string(seed) + ": " + failure;
          }
        }
      }
    }
  }
  result.passed = failures == 0;
  result.detail = std::to_string(total) + " samples, " + std::to_string(failures) + " failures" +
                  (first_failure.empty() ? "" : " (first: " + first_failure + ")");
  if (membership) {
    membership->id = 8;
    membership->title = "R/C membership equals constant (co)kernel existence";
    membership->passed = disagreements == 0;
    membership->detail = std::to_string(total) + " samples, " + std::to_string(disagreements) +
                         " disagreements";
  }
  return result;
}

CriterionResult check_syzygy_dimensions(const AcceptanceOptions& opts) {
  CriterionResult result{2, "syzygy dimension formula", true, ""};
  std::size_t total = 0;
  std::size_t failures = 0;
  for (const FieldSpec& field : acceptance_fields()) {
    std::mt19937_64 rng(mix(opts.seed, 2 + field.modulus()));
    for (std::size_t r = 1; r <= 5; ++r) {
      for (std::size_t n = 1; n <= 6; ++n) {
        for (std::size_t k = 0; k < opts.syzygy_tuples; ++k) {
          // Forms drawn from a random subspace so every span dimension occurs.
          std::uniform_int_distribution<std::size_t> span_dist(0, std::min(r, n));
          const std::size_t target = span_dist(rng);
          std::vector<LinForm> generators;
          for (std::size_t g = 0; g < target; ++g) generators.push_back(random_linform(n, field, rng));
          std::vector<LinForm> ells;
          for (std::size_t i = 0; i < r; ++i) {
            LinForm l(n, field);
            for (const auto& g : generators) l += random_scalar(field, rng) * g;
            ells.push_back(std::move(l));
          }
          ++total;
          const std::size_t c = coefficient_span_dim(ells);
          try {
            const SyzygySpace s = syzygy_space(ells);
            if (s.dim != (r - c) * n + binomial2(c)) ++failures;
          } catch (const Error&) {
            ++failures;
          }
        }
      }
    }
    // The two explicit triples.
    const FieldSpec& f = field;
    const std::vector<LinForm> independent{LinForm::variable(3, 0, f), LinForm::variable(3, 1, f),
                                           LinForm::variable(3, 2, f)};
    if (syzygy_space(independent).dim != 3) ++failures;
    for (std::size_t n = 2; n <= 6; ++n) {
      const LinForm x1 = LinForm::variable(n, 0, f);
      const LinForm x2 = LinForm::variable(n, 1, f);
      const std::vector<LinForm> dependent{x1, x2, x1 + x2};
      if (syzygy_space(dependent).dim != n + 1) ++failures;
      total += 1;
    }
    total += 1;
  }
  result.passed = failures == 0;
  result.detail = std::to_string(total) + " tuples, " + std::to_string(failures) + " mismatches";
  return result;
}

CriterionResult check_orbit_dimensions() {
  CriterionResult result{3, "orbit dimensions 6n+1, 5n+3, 3n+7, 6n+3", true, ""};
  std::ostringstream mismatches;
  const char* sep = " ";
  auto expected = [](ComponentTag tag, std::size_t n) -> std::size_t {
    switch (tag) {
      case ComponentTag::ZeroRow: return 6 * n + 1;
      case ComponentTag::ZeroSquare: return 5 * n + 3;
      case ComponentTag::Antisymmetric: return 3 * n + 7;
      case ComponentTag::ZeroColumn: return 6 * n + 3;
    }
    return 0;
  };
  for (std::size_t n = 2; n <= 8; ++n) {
    for (ComponentTag tag : kAllTags) {
      const std::size_t got = orbit_dim(tag, n);
      if (got != expected(tag, n)) {
        result.passed = false;
        mismatches << sep << to_string(tag) << "(n=" << n << "): got " << got << " expected "
                   << expected(tag, n);
        sep = ", ";
      }
    }
  }
  bool all_thirteen = true;
  for (ComponentTag tag : kAllTags) all_thirteen = all_thirteen && orbit_dim(tag, 2) == 13;
  if (!all_thirteen) {
    result.passed = false;
    mismatches << sep << "n=2 dimensions are not all 13";
  }
  result.detail = std::string("n=2..8 closed forms") + (all_thirteen ? ", all four equal 13 at n=2" : "") +
                  (result.passed ? "" : "; mismatches:" + mismatches.str());
  return result;
}

CriterionResult check_stabilizer_dimensions() {
  CriterionResult result{4, "stabilizer Lie algebra dimensions 16, 14, 10, 16", true, ""};
  const std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::prime(5),
                                      FieldSpec::prime(101), FieldSpec::prime(32003)};
  auto expected = [](ComponentTag tag) -> std::size_t {
    switch (tag) {
      case ComponentTag::ZeroRow: return 16;
      case ComponentTag::ZeroSquare: return 14;
      case ComponentTag::Antisymmetric: return 10;
      case ComponentTag::ZeroColumn: return 16;
    }
    return 0;
  };
  std::size_t checks = 0;
  std::ostringstream mismatches;
  const char* sep = " ";
  for (const FieldSpec& field : fields) {
    for (std::size_t n = 2; n <= 8; ++n) {
      for (ComponentTag tag : kAllTags) {
        ++checks;
        const std::size_t got = stabilizer_lie_dim(tag, n, field);
        if (got != expected(tag)) {
          result.passed = false;
          mismatches << sep << to_string(tag) << '/' << field.name() << "/n=" << n << ": " << got;
          sep = ", ";
        }
      }
    }
  }
  result.detail = std::to_string(checks) + " (tag, n, field) cases over q, gf5, gf101, gf32003" +
                  (result.passed ? "" : "; mismatches:" + mismatches.str());
  return result;
}

CriterionResult check_adjugate_identity(const AcceptanceOptions& opts) {
  CriterionResult result{5, "X adj(X) = adj(X) X = det(X) Id", true, ""};
  std::size_t total = 0;
  std::size_t failures = 0;
  for (const FieldSpec& field : acceptance_fields()) {
    std::mt19937_64 rng(mix(opts.seed, 5 + field.modulus()));
    std::uniform_int_distribution<std::size_t> n_dist(1, 5);
    for (std::size_t k = 0; k < opts.adjugate_samples; ++k) {
      const FormMatrix x = random_linear_matrix(3, 3, n_dist(rng), field, rng);
      const FormMatrix adj = adjugate(x);
      const FormMatrix expected = scalar_identity(3, determinant(x));
      ++total;
      if (x * adj != expected || adj * x != expected) ++failures;
    }
  }
  result.passed = failures == 0;
  result.detail = std::to_string(total) + " matrices, " + std::to_string(failures) + " failures";
  return result;
}

CriterionResult check_rank1_factorization(const AcceptanceOptions& opts) {
  CriterionResult result{6, "rank-one factorization X = u v^t", true, ""};
  std::size_t total = 0;
  std::size_t failures = 0;
  for (const FieldSpec& field : acceptance_fields()) {
    std::mt19937_64 rng(mix(opts.seed, 6 + field.modulus()));
    std::uniform_int_distribution<std::size_t> size_dist(1, 3);
    std::uniform_int_distribution<std::size_t> n_dist(2, 4);
    std::uniform_int_distribution<unsigned> deg_dist(0, 2);
    for (std::size_t k = 0; k < opts.rank1_samples; ++k) {
      const std::size_t a = size_dist(rng);
      const std::size_t b = size_dist(rng);
      const std::size_t n = n_dist(rng);
      const unsigned du = a == 1 ? 0 : deg_dist(rng);
      std::uniform_int_distribution<unsigned> dv_dist(0, 2 - du);
      const unsigned dv = dv_dist(rng);
      const FormVector u0 = primitive_vector(a, n, du, field, rng);
      const FormVector v0 = random_vector(b, n, dv, field, rng);
      const FormMatrix x = outer_product(u0, v0);
      ++total;
      try {
        const VectorPair uv = rank1_factor(x);
        bool ok = outer_product(uv.u, uv.v) == x && first_coefficient_is_one(uv.u) &&
                  uv.u.degree() + uv.v.degree() == x.degree();
        if (a == 1 && b == 1) {
          // The single entry is split as (normalized entry, its content).
          ok = ok && uv.v.degree() == 0;
        } else {
          ok = ok && proportional(uv.u, u0);
        }
        if (!ok) ++failures;
      } catch (const Error&) {
        ++failures;
      }
    }
  }
  result.passed = failures == 0;
  result.detail = std::to_string(total) + " matrices, " + std::to_string(failures) + " failures";
  return result;
}

CriterionResult check_span_bound(const AcceptanceOptions& opts) {
  CriterionResult result{7, "entry span >= 7 forces a nonzero determinant", true, ""};
  std::size_t total = 0;
  std::size_t failures = 0;
  constexpr std::size_t n = 9;
  for (const FieldSpec& field : acceptance_fields()) {
    std::mt19937_64 rng(mix(opts.seed, 7 + field.modulus()));
    std::uniform_int_distribution<std::size_t> span_dist(7, 9);
    for (std::size_t k = 0; k < opts.span_samples; ++k) {
      // Entries drawn from a random subspace of dimension 7, 8 or 9.
      const std::size_t target = span_dist(rng);
      std::vector<LinForm> generators;
      for (std::size_t g = 0; g < target; ++g) generators.push_back(random_linform(n, field, rng));
      std::vector<std::vector<LinForm>> rows(3);
      for (auto& row : rows) {
        for (std::size_t j = 0; j < 3; ++j) {
          LinForm l(n, field);
          for (const auto& g : generators) l += random_scalar(field, rng) * g;
          row.push_back(std::move(l));
        }
      }
      const FormMatrix x = FormMatrix::from_linear(rows);
      if (coefficient_span_dim(x.linear_entries()) < 7) continue;
      ++total;
      if (determinant(x).is_zero() || !span_bound_check(x)) ++failures;
    }
  }
  result.passed = failures == 0 && total > 0;
  result.detail = std::to_string(total) + " matrices with span >= 7, " + std::to_string(failures) +
                  " with vanishing determinant";
  return result;
}

std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& opts, const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  auto record = [&](CriterionResult r) {
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  };
  CriterionResult membership;
  record(check_classifier_and_membership(opts, &membership));
  record(check_syzygy_dimensions(opts));
  record(check_orbit_dimensions());
  record(check_stabilizer_dimensions());
  record(check_adjugate_identity(opts));
  record(check_rank1_factorization(opts));
  record(check_span_bound(opts));
  record(membership);
  return out;
}

std::string format_result(const CriterionResult& r) {
  return std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + ". " + r.title +
         ": " + r.detail;
}

}  // namespace sforms
