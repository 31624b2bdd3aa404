#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "sforms/forms.hpp"

namespace sforms {

/// Linear syzygies of a tuple of linear forms l_1..l_r: the tuples of linear
/// forms (f_1..f_r) with sum f_i l_i = 0.
struct SyzygySpace {
  std::size_t r = 0;
  std::size_t n = 0;
  /// Dimension of the span of the l_i.
  std::size_t c = 0;
  std::size_t dim = 0;
  std::vector<std::vector<LinForm>> basis;
};

/// (r - c) n + C(c, 2).
std::size_t syzygy_dimension_formula(std::size_t r, std::size_t n, std::size_t c);

/// Nullspace of (f_1..f_r) -> sum f_i l_i into the quadrics. Throws
/// Error(InternalContradiction) if the dimension disagrees with the formula.
SyzygySpace syzygy_space(std::span<const LinForm> ells);

/// sum f_i l_i, a quadric.
Form syzygy_sum(std::span<const LinForm> fs, std::span<const LinForm> ells);

using LinTriple = std::array<LinForm, 3>;

/// Explicit spanning set of the syzygies of a triple whose span has
/// dimension 2 or 3.
///
/// Span 3: the Koszul triples (0, l3, -l2), (-l3, 0, l1), (l2, -l1, 0).
/// Span 2: the Koszul triple of the first independent pair (i, j), i.e. l_j
/// in slot i and -l_i in slot j, followed by x_t * phi for t = 1..n, where
/// phi is the constant relation sum phi_i l_i = 0 normalized so its last
/// nonzero entry is 1.
///
/// Throws Error(SpanTooSmall) when the span has dimension <= 1.
std::vector<LinTriple> triple_syzygy_basis(const LinTriple& ells);

/// The relation phi used by triple_syzygy_basis for a triple of span 2.
std::array<Scalar, 3> constant_relation(const LinTriple& ells);

}  // namespace sforms
