#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "sforms/classifier.hpp"
#include "sforms/form_matrix.hpp"

namespace sforms {

/// Dimensions attached to the linear space of a normal form and its orbit
/// under GL3 x GL3 acting by (f, g) . m = f m g^t.
struct StabilizerReport {
  ComponentTag tag = ComponentTag::ZeroRow;
  std::size_t n = 0;
  /// Projective dimension of the linear space of matrices with the pattern.
  std::size_t linear_space_dim = 0;
  /// Dimension of the stabilizer Lie algebra inside gl3 + gl3.
  std::size_t stab_lie_dim = 0;
  /// linear_space_dim + (18 - stab_lie_dim).
  std::size_t orbit_dim = 0;
};

/// The pattern positions times each variable, e.g. 6n matrices for ZeroRow;
/// for Antisymmetric the three alternating generators times each variable.
std::vector<FormMatrix> linear_space_spanning_set(ComponentTag tag, std::size_t n,
                                                  const FieldSpec& field);

/// Projective dimension, counted as the rank of the spanning set minus one.
std::size_t linear_space_dim(ComponentTag tag, std::size_t n);

/// dim{(a, b) in gl3 + gl3 : a M + M b^t in L for every M in L}.
/// Requires n >= 2.
std::size_t stabilizer_lie_dim(ComponentTag tag, std::size_t n, const FieldSpec& field);

/// Requires n >= 2.
std::size_t orbit_dim(ComponentTag tag, std::size_t n);

StabilizerReport stabilizer_report(ComponentTag tag, std::size_t n, const FieldSpec& field);

/// A random element of the linear space of the tag.
FormMatrix sample_linear_space(ComponentTag tag, std::size_t n, const FieldSpec& field,
                               std::mt19937_64& rng);

/// f0 m g0^t for random m in the linear space and random invertible f0, g0.
/// Deterministic in all arguments; the result is always singular.
FormMatrix sample_component(ComponentTag tag, std::size_t n, const FieldSpec& field,
                            std::uint64_t seed);
FormMatrix sample_component(ComponentTag tag, std::size_t n, const FieldSpec& field,
                            std::mt19937_64& rng);

}  // namespace sforms
