#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "sforms/classifier.hpp"
#include "sforms/orbits.hpp"
#include "sforms/syzygy.hpp"

namespace sforms::io {

using nlohmann::json;

/// Parses JSON text; failures become Error(MalformedInput) carrying the
/// parser's line and column.
json parse_json(std::string_view text);

json to_json(const Scalar& s);
Scalar scalar_from_json(const FieldSpec& field, const json& j);

/// A linear form is its coefficient list.
json to_json(const LinForm& l);
LinForm linform_from_json(const FieldSpec& field, const json& j);

/// {"n", "degree", "terms": [{"exp": [...], "coeff": "..."}]}
json to_json(const Form& f);
Form form_from_json(const FieldSpec& field, const json& j);

/// {"n", "rows", "cols", "entries": [[coefficient lists]]} for linear
/// matrices. Other degrees add "degree" and store entries as form objects.
json to_json(const FormMatrix& m);
FormMatrix matrix_from_json(const FieldSpec& field, const json& j);

json to_json(const ConstMatrix& m);
ConstMatrix const_matrix_from_json(const FieldSpec& field, const json& j);

/// {"singular", "in_R", "in_C", "tag", "F", "G", "normal_form", "effective_n"};
/// the witness fields are null when there is no witness.
json to_json(const ClassificationReport& r);
ClassificationReport report_from_json(const FieldSpec& field, const json& j);

/// {"r", "n", "c", "dim", "basis": [[linear forms]]}
json to_json(const SyzygySpace& s);

/// Either a bare list of coefficient lists or {"forms": [...]}.
std::vector<LinForm> linforms_from_json(const FieldSpec& field, const json& j);

json to_json(const StabilizerReport& r);

std::string format_matrix(const FormMatrix& m);
std::string format_const_matrix(const ConstMatrix& m);
std::string format_report(const ClassificationReport& r);
std::string format_syzygy(const SyzygySpace& s);
std::string format_stabilizers(const std::vector<StabilizerReport>& reports);

}  // namespace sforms::io
