#include "sforms/io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "sforms/error.hpp"

namespace sforms::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t count_field(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    malformed(std::string("field \"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

bool bool_field(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_boolean()) malformed(std::string("field \"") + key + "\" must be a boolean");
  return v.get<bool>();
}

}  // namespace

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
}

json to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const FieldSpec& field, const json& j) {
  if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
  if (j.is_number_unsigned()) return Scalar::parse(field, std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Scalar::from_int(field, j.get<long long>());
  malformed("scalar must be a string or an integer, got " + j.dump());
}

json to_json(const LinForm& l) {
  json out = json::array();
  for (const auto& c : l.coeffs()) out.push_back(to_json(c));
  return out;
}

LinForm linform_from_json(const FieldSpec& field, const json& j) {
  if (!j.is_array()) malformed("linear form must be a list of coefficients, got " + j.dump());
  std::vector<Scalar> coeffs;
  for (const auto& c : j) coeffs.push_back(scalar_from_json(field, c));
  return LinForm(field, std::move(coeffs));
}

json to_json(const Form& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", e}, {"coeff", c.to_string()}});
  return {{"n", f.n()}, {"degree", f.degree()}, {"terms", std::move(terms)}};
}

Form form_from_json(const FieldSpec& field, const json& j) {
  const std::size_t n = count_field(j, "n");
  const auto degree = static_cast<unsigned>(count_field(j, "degree"));
  const json& terms = member(j, "terms");
  if (!terms.is_array()) malformed("\"terms\" must be a list");
  Form f(n, degree, field);
  for (const auto& t : terms) {
    const json& exp = member(t, "exp");
    if (!exp.is_array() || exp.size() != n) malformed("exponent must be a list of length n");
    Exponent e;
    for (const auto& x : exp) {
      if (!x.is_number_integer() || x.get<long long>() < 0) malformed("exponents must be non-negative integers");
      e.push_back(x.get<int>());
    }
    try {
      f.add_term(e, scalar_from_json(field, member(t, "coeff")));
    } catch (const Error& err) {
      if (err.code() == ErrorCode::MalformedInput) throw;
      malformed(err.what());
    }
  }
  return f;
}

json to_json(const FormMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(m.degree() == 1 ? to_json(m(i, j).to_linform()) : to_json(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  json out = {{"n", m.n()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
  if (m.degree() != 1) out["degree"] = m.degree();
  return out;
}

FormMatrix matrix_from_json(const FieldSpec& field, const json& j) {
  const std::size_t n = count_field(j, "n");
  const std::size_t rows = j.contains("rows") ? count_field(j, "rows") : 3;
  const std::size_t cols = j.contains("cols") ? count_field(j, "cols") : 3;
  const unsigned degree = j.contains("degree") ? static_cast<unsigned>(count_field(j, "degree")) : 1;
  const json& entries = member(j, "entries");
  if (!entries.is_array() || entries.size() != rows) {
    malformed("\"entries\" must be a list of " + std::to_string(rows) + " rows");
  }
  if (rows == 0 || cols == 0) malformed("matrix must have at least one row and column");
  FormMatrix m(rows, cols, n, degree, field);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = entries[i];
    if (!row.is_array() || row.size() != cols) {
      malformed("row " + std::to_string(i + 1) + " must have " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      Form f;
      if (row[c].is_array()) {
        const LinForm l = linform_from_json(field, row[c]);
        if (l.n() != n) {
          malformed("entry (" + std::to_string(i + 1) + "," + std::to_string(c + 1) + ") has " +
                    std::to_string(l.n()) + " coefficients, expected " + std::to_string(n));
        }
        f = l.to_form();
      } else {
        f = form_from_json(field, row[c]);
      }
      if (f.n() != n || (!f.is_zero() && f.degree() != degree)) {
        malformed("entry (" + std::to_string(i + 1) + "," + std::to_string(c + 1) +
                  ") does not match the matrix degree or variable count");
      }
      m.set(i, c, std::move(f));
    }
  }
  return m;
}

json to_json(const ConstMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

ConstMatrix const_matrix_from_json(const FieldSpec& field, const json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array()) malformed("constant matrix must be a list of rows");
  const std::size_t cols = j.front().size();
  ConstMatrix m(j.size(), cols, field);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) malformed("ragged constant matrix");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from_json(field, j[i][c]);
  }
  return m;
}

json to_json(const ClassificationReport& r) {
  json out = {{"singular", r.is_singular}, {"in_R", r.in_R}, {"in_C", r.in_C},
              {"tag", nullptr}, {"F", nullptr}, {"G", nullptr}, {"normal_form", nullptr},
              {"effective_n", r.effective_n}};
  if (r.witness) {
    out["tag"] = std::string(to_string(r.witness->tag));
    out["F"] = to_json(r.witness->f);
    out["G"] = to_json(r.witness->g);
    out["normal_form"] = to_json(r.witness->normal_form);
  }
  return out;
}

ClassificationReport report_from_json(const FieldSpec& field, const json& j) {
  ClassificationReport r;
  r.is_singular = bool_field(j, "singular");
  r.in_R = bool_field(j, "in_R");
  r.in_C = bool_field(j, "in_C");
  r.effective_n = count_field(j, "effective_n");
  const json& tag = member(j, "tag");
  if (!tag.is_null()) {
    if (!tag.is_string()) malformed("\"tag\" must be a string or null");
    const auto parsed = parse_tag(tag.get<std::string>());
    if (!parsed) malformed("unknown tag " + tag.dump());
    r.witness = Witness{const_matrix_from_json(field, member(j, "F")),
                        const_matrix_from_json(field, member(j, "G")), *parsed,
                        matrix_from_json(field, member(j, "normal_form"))};
  }
  return r;
}

json to_json(const SyzygySpace& s) {
  json basis = json::array();
  for (const auto& tuple : s.basis) {
    json t = json::array();
    for (const auto& f : tuple) t.push_back(to_json(f));
    basis.push_back(std::move(t));
  }
  return {{"r", s.r}, {"n", s.n}, {"c", s.c}, {"dim", s.dim}, {"basis", std::move(basis)}};
}

std::vector<LinForm> linforms_from_json(const FieldSpec& field, const json& j) {
  const json& list = j.is_object() ? member(j, "forms") : j;
  if (!list.is_array() || list.empty()) malformed("expected a non-empty list of linear forms");
  std::vector<LinForm> out;
  for (const auto& l : list) out.push_back(linform_from_json(field, l));
  for (const auto& l : out) {
    if (l.n() != out.front().n()) malformed("linear forms have different numbers of coefficients");
  }
  if (j.is_object() && j.contains("n") && count_field(j, "n") != out.front().n()) {
    malformed("\"n\" does not match the coefficient lists");
  }
  return out;
}

json to_json(const StabilizerReport& r) {
  return {{"tag", std::string(to_string(r.tag))}, {"n", r.n},
          {"linear_space_dim", r.linear_space_dim}, {"stab_lie_dim", r.stab_lie_dim},
          {"orbit_dim", r.orbit_dim}};
}

std::string format_matrix(const FormMatrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (const auto& e : m.entries()) {
    cells.push_back(e.to_string());
    width = std::max(width, cells.back().size());
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "[ ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << std::left << std::setw(static_cast<int>(width)) << cells[i * m.cols() + j];
      out << (j + 1 < m.cols() ? "  " : " ]\n");
    }
  }
  return out.str();
}

std::string format_const_matrix(const ConstMatrix& m) {
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) width = std::max(width, m(i, j).to_string().size());
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "[ ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << std::right << std::setw(static_cast<int>(width)) << m(i, j).to_string();
      out << (j + 1 < m.cols() ? "  " : " ]\n");
    }
  }
  return out.str();
}

std::string format_report(const ClassificationReport& r) {
  std::ostringstream out;
  out << "singular:    " << (r.is_singular ? "yes" : "no") << '\n'
      << "in R:        " << (r.in_R ? "yes" : "no") << '\n'
      << "in C:        " << (r.in_C ? "yes" : "no") << '\n'
      << "effective n: " << r.effective_n << '\n';
  if (!r.witness) {
    out << "tag:         none\n";
    return out.str();
  }
  out << "tag:         " << to_string(r.witness->tag) << '\n'
      << "F =\n" << format_const_matrix(r.witness->f)
      << "G =\n" << format_const_matrix(r.witness->g)
      << "F * X * G =\n" << format_matrix(r.witness->normal_form);
  return out.str();
}

std::string format_syzygy(const SyzygySpace& s) {
  std::ostringstream out;
  out << "r = " << s.r << ", n = " << s.n << ", c = " << s.c << ", dim = " << s.dim << '\n';
  for (const auto& tuple : s.basis) {
    out << "  (";
    for (std::size_t i = 0; i < tuple.size(); ++i) out << (i ? ", " : "") << tuple[i].to_string();
    out << ")\n";
  }
  return out.str();
}

std::string format_stabilizers(const std::vector<StabilizerReport>& reports) {
  std::ostringstream out;
  out << std::left << std::setw(15) << "tag" << std::setw(4) << "n" << std::setw(14) << "linear_dim"
      << std::setw(10) << "stab_dim" << "orbit_dim\n";
  for (const auto& r : reports) {
    out << std::left << std::setw(15) << to_string(r.tag) << std::setw(4) << r.n << std::setw(14)
        << r.linear_space_dim << std::setw(10) << r.stab_lie_dim << r.orbit_dim << '\n';
  }
  return out.str();
}

}  // namespace sforms::io
