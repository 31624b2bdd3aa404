#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "sforms/const_matrix.hpp"
#include "sforms/form_matrix.hpp"

namespace sforms {

/// The four normal forms of a singular 3 x 3 matrix of linear forms.
///
///   ZeroRow        row 3 is zero
///   ZeroColumn     column 3 is zero
///   ZeroSquare     entries (2,2), (2,3), (3,2), (3,3) are zero
///   Antisymmetric  zero diagonal and entry (i,j) = -entry (j,i)
enum class ComponentTag { ZeroRow, ZeroColumn, ZeroSquare, Antisymmetric };

inline constexpr ComponentTag kAllTags[] = {ComponentTag::ZeroRow, ComponentTag::ZeroSquare,
                                            ComponentTag::Antisymmetric, ComponentTag::ZeroColumn};

std::string_view to_string(ComponentTag tag) noexcept;
/// Accepts "ZeroRow", "zero-row", "zero_row", "row", "R" and the analogues.
std::optional<ComponentTag> parse_tag(std::string_view text);

/// f * x * g == normal_form, with f and g invertible constant matrices.
struct Witness {
  ConstMatrix f;
  ConstMatrix g;
  ComponentTag tag;
  FormMatrix normal_form;
};

struct ClassificationReport {
  bool is_singular = false;
  /// The rows (resp. columns) admit a nontrivial constant relation.
  bool in_R = false;
  bool in_C = false;
  std::optional<Witness> witness;
  /// Dimension of the span of the entries.
  std::size_t effective_n = 0;
};

struct ReducedMatrix {
  FormMatrix matrix;
  std::size_t m = 0;
};

/// Rewrites every entry in the reduced echelon basis of the entry span, so
/// the result lives in m = dim(span) variables.
ReducedMatrix reduce_variables(const FormMatrix& x);

/// Decides singularity and produces a verified witness for every nonzero
/// singular input. Throws Error(WrongShape) unless x is 3 x 3 and linear.
ClassificationReport classify(const FormMatrix& x);

/// True iff f and g are invertible, f x g equals the normal form, and the
/// normal form has the zero pattern of the tag.
bool verify_witness(const FormMatrix& x, const Witness& w);

bool matches_pattern(const FormMatrix& m, ComponentTag tag);

/// False exactly when the entries span at least 7 dimensions and yet the
/// determinant vanishes.
bool span_bound_check(const FormMatrix& x);

/// [[0, u3, -u2], [-u3, 0, u1], [u2, -u1, 0]].
FormMatrix alternating_matrix(const FormVector& u);

}  // namespace sforms
