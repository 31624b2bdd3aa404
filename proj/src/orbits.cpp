#include "sforms/orbits.hpp"

#include <array>
#include <utility>

#include "sforms/error.hpp"

namespace sforms {

namespace {

using Position = std::pair<std::size_t, std::size_t>;

std::vector<Position> free_positions(ComponentTag tag) {
  std::vector<Position> out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      bool zero = false;
      switch (tag) {
        case ComponentTag::ZeroRow: zero = i == 2; break;
        case ComponentTag::ZeroColumn: zero = j == 2; break;
        case ComponentTag::ZeroSquare: zero = i >= 1 && j >= 1; break;
        case ComponentTag::Antisymmetric: zero = true; break;
      }
      if (!zero) out.emplace_back(i, j);
    }
  }
  return out;
}

// Alternating generators with a 1 above the diagonal at (0,1), (1,2), (0,2).
constexpr std::array<Position, 3> kAlternatingSlots{{{0, 1}, {1, 2}, {0, 2}}};

// Coordinates a^t_ij of a degree-1 matrix, indexed (3i + j) n + t.
std::vector<Scalar> coordinates(const FormMatrix& m) {
  const std::size_t n = m.n();
  std::vector<Scalar> out(9 * n, Scalar::zero(m.field()));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const LinForm l = m(i, j).to_linform();
      for (std::size_t t = 0; t < n; ++t) out[(3 * i + j) * n + t] = l[t];
    }
  }
  return out;
}

ConstMatrix stacked(const std::vector<FormMatrix>& ms, std::size_t n, const FieldSpec& field) {
  ConstMatrix out(ms.size(), 9 * n, field);
  for (std::size_t r = 0; r < ms.size(); ++r) {
    const auto c = coordinates(ms[r]);
    for (std::size_t k = 0; k < c.size(); ++k) out(r, k) = c[k];
  }
  return out;
}

std::size_t closed_form_linear_dim(ComponentTag tag, std::size_t n) {
  switch (tag) {
    case ComponentTag::ZeroRow:
    case ComponentTag::ZeroColumn: return 6 * n - 1;
    case ComponentTag::ZeroSquare: return 5 * n - 1;
    case ComponentTag::Antisymmetric: return 3 * n - 1;
  }
  return 0;
}

void require_n_at_least_two(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "orbit computations need n >= 2");
}

}  // namespace

std::vector<FormMatrix> linear_space_spanning_set(ComponentTag tag, std::size_t n,
                                                  const FieldSpec& field) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "need at least one variable");
  std::vector<FormMatrix> out;
  for (std::size_t t = 0; t < n; ++t) {
    const Form x = Form::variable(n, t, field);
    if (tag == ComponentTag::Antisymmetric) {
      for (const auto& [i, j] : kAlternatingSlots) {
        FormMatrix m(3, 3, n, 1, field);
        m.set(i, j, x);
        m.set(j, i, -x);
        out.push_back(std::move(m));
      }
    } else {
      for (const auto& [i, j] : free_positions(tag)) {
        FormMatrix m(3, 3, n, 1, field);
        m.set(i, j, x);
        out.push_back(std::move(m));
      }
    }
  }
  return out;
}

std::size_t linear_space_dim(ComponentTag tag, std::size_t n) {
  const FieldSpec field = FieldSpec::rationals();
  const std::size_t dim = rank(stacked(linear_space_spanning_set(tag, n, field), n, field)) - 1;
  if (dim != closed_form_linear_dim(tag, n)) {
    throw Error(ErrorCode::InternalContradiction, "linear space dimension disagrees with its closed form");
  }
  return dim;
}

std::size_t stabilizer_lie_dim(ComponentTag tag, std::size_t n, const FieldSpec& field) {
  require_n_at_least_two(n);
  const auto span = linear_space_spanning_set(tag, n, field);
  // Functionals vanishing on L: w with S w = 0, S the stacked spanning set.
  const auto annihilator = nullspace(stacked(span, n, field));

  // Unknown k < 9 is a_(k/3, k%3); unknown 9 + k is b_(k/3, k%3).
  // Equation (M, w): w . vec(a M + M b^t) = 0.
  ConstMatrix system(span.size() * annihilator.size(), 18, field);
  for (std::size_t unknown = 0; unknown < 18; ++unknown) {
    ConstMatrix e(3, 3, field);
    e((unknown % 9) / 3, unknown % 3) = Scalar::one(field);
    for (std::size_t s = 0; s < span.size(); ++s) {
      const FormMatrix image = unknown < 9 ? e * span[s] : span[s] * e.transpose();
      const auto c = coordinates(image);
      for (std::size_t w = 0; w < annihilator.size(); ++w) {
        Scalar dot = Scalar::zero(field);
        for (std::size_t k = 0; k < c.size(); ++k) {
          if (!c[k].is_zero()) dot += c[k] * annihilator[w](k, 0);
        }
        system(s * annihilator.size() + w, unknown) = dot;
      }
    }
  }
  return nullspace(system).size();
}

std::size_t orbit_dim(ComponentTag tag, std::size_t n) {
  return stabilizer_report(tag, n, FieldSpec::rationals()).orbit_dim;
}

StabilizerReport stabilizer_report(ComponentTag tag, std::size_t n, const FieldSpec& field) {
  require_n_at_least_two(n);
  StabilizerReport report;
  report.tag = tag;
  report.n = n;
  report.linear_space_dim = linear_space_dim(tag, n);
  report.stab_lie_dim = stabilizer_lie_dim(tag, n, field);
  report.orbit_dim = report.linear_space_dim + (18 - report.stab_lie_dim);
  return report;
}

FormMatrix sample_linear_space(ComponentTag tag, std::size_t n, const FieldSpec& field,
                               std::mt19937_64& rng) {
  FormMatrix m(3, 3, n, 1, field);
  if (tag == ComponentTag::Antisymmetric) {
    for (const auto& [i, j] : kAlternatingSlots) {
      const Form l = random_linform(n, field, rng).to_form();
      m.set(i, j, l);
      m.set(j, i, -l);
    }
  } else {
    for (const auto& [i, j] : free_positions(tag)) m.set(i, j, random_linform(n, field, rng).to_form());
  }
  return m;
}

FormMatrix sample_component(ComponentTag tag, std::size_t n, const FieldSpec& field,
                            std::mt19937_64& rng) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "need at least one variable");
  const FormMatrix m = sample_linear_space(tag, n, field, rng);
  const ConstMatrix f0 = random_invertible(3, field, rng);
  const ConstMatrix g0 = random_invertible(3, field, rng);
  return f0 * m * g0.transpose();
}

FormMatrix sample_component(ComponentTag tag, std::size_t n, const FieldSpec& field,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_component(tag, n, field, rng);
}

}  // namespace sforms
