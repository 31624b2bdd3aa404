#include "sforms/c_api.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "sforms/acceptance.hpp"
#include "sforms/classifier.hpp"
#include "sforms/error.hpp"
#include "sforms/io.hpp"
#include "sforms/orbits.hpp"
#include "sforms/syzygy.hpp"

struct sf_field {
  sforms::FieldSpec spec;
};

struct sf_matrix {
  sforms::FormMatrix value;
};

struct sf_report {
  sforms::FormMatrix input;
  sforms::ClassificationReport value;
  std::string tag;
};

namespace {

thread_local std::string last_error;

sf_status status_of(sforms::ErrorCode code) {
  using sforms::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return SF_ERR_INVALID_ARGUMENT;
    case ErrorCode::MalformedInput: return SF_ERR_MALFORMED_INPUT;
    case ErrorCode::FieldMismatch: return SF_ERR_FIELD_MISMATCH;
    case ErrorCode::SingularMatrix: return SF_ERR_SINGULAR_MATRIX;
    case ErrorCode::NotDivisible: return SF_ERR_NOT_DIVISIBLE;
    case ErrorCode::NotRankOne: return SF_ERR_NOT_RANK_ONE;
    case ErrorCode::WrongRank: return SF_ERR_WRONG_RANK;
    case ErrorCode::DegreeNotOne: return SF_ERR_DEGREE_NOT_ONE;
    case ErrorCode::SpanTooSmall: return SF_ERR_SPAN_TOO_SMALL;
    case ErrorCode::WrongShape: return SF_ERR_WRONG_SHAPE;
    case ErrorCode::InternalContradiction: return SF_ERR_INTERNAL;
  }
  return SF_ERR_INTERNAL;
}

sf_status fail(sf_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
sf_status guarded(Body body) {
  try {
    last_error.clear();
    body();
    return SF_OK;
  } catch (const sforms::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SF_ERR_INTERNAL, e.what());
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool missing(const void* p, const char* name, sf_status* status) {
  if (p) return false;
  *status = fail(SF_ERR_INVALID_ARGUMENT, std::string(name) + " must not be NULL");
  return true;
}

}  // namespace

extern "C" {

const char* sf_version(void) { return "1.0.0"; }

const char* sf_status_name(sf_status status) {
  switch (status) {
    case SF_OK: return "OK";
    case SF_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case SF_ERR_MALFORMED_INPUT: return "MalformedInput";
    case SF_ERR_FIELD_MISMATCH: return "FieldMismatch";
    case SF_ERR_SINGULAR_MATRIX: return "SingularMatrix";
    case SF_ERR_NOT_DIVISIBLE: return "NotDivisible";
    case SF_ERR_NOT_RANK_ONE: return "NotRankOne";
    case SF_ERR_WRONG_RANK: return "WrongRank";
    case SF_ERR_DEGREE_NOT_ONE: return "DegreeNotOne";
    case SF_ERR_SPAN_TOO_SMALL: return "SpanTooSmall";
    case SF_ERR_WRONG_SHAPE: return "WrongShape";
    case SF_ERR_INTERNAL: return "InternalContradiction";
  }
  return "Unknown";
}

const char* sf_last_error(void) { return last_error.c_str(); }

void sf_string_free(char* s) { std::free(s); }

sf_status sf_field_create(const char* name, sf_field** out) {
  sf_status status = SF_OK;
  if (missing(name, "name", &status) || missing(out, "out", &status)) return status;
  return guarded([&] { *out = new sf_field{sforms::FieldSpec::parse(name)}; });
}

void sf_field_free(sf_field* field) { delete field; }

sf_status sf_matrix_parse_json(const sf_field* field, const char* json, sf_matrix** out) {
  sf_status status = SF_OK;
  if (missing(field, "field", &status) || missing(json, "json", &status) ||
      missing(out, "out", &status)) {
    return status;
  }
  return guarded([&] {
    auto m = sforms::io::matrix_from_json(field->spec, sforms::io::parse_json(json));
    *out = new sf_matrix{std::move(m)};
  });
}

sf_status sf_matrix_format(const sf_matrix* m, sf_format format, char** out) {
  sf_status status = SF_OK;
  if (missing(m, "matrix", &status) || missing(out, "out", &status)) return status;
  return guarded([&] {
    *out = duplicate(format == SF_FORMAT_TABLE ? sforms::io::format_matrix(m->value)
                                               : sforms::io::to_json(m->value).dump());
  });
}

void sf_matrix_free(sf_matrix* m) { delete m; }

sf_status sf_generate(const sf_field* field, const char* tag, int n, uint64_t seed, sf_matrix** out) {
  sf_status status = SF_OK;
  if (missing(field, "field", &status) || missing(tag, "tag", &status) ||
      missing(out, "out", &status)) {
    return status;
  }
  const auto parsed = sforms::parse_tag(tag);
  if (!parsed) return fail(SF_ERR_INVALID_ARGUMENT, std::string("unknown tag '") + tag + "'");
  if (n < 1) return fail(SF_ERR_INVALID_ARGUMENT, "n must be at least 1");
  return guarded([&] {
    *out = new sf_matrix{sforms::sample_component(*parsed, static_cast<std::size_t>(n), field->spec, seed)};
  });
}

sf_status sf_classify(const sf_matrix* m, sf_report** out) {
  sf_status status = SF_OK;
  if (missing(m, "matrix", &status) || missing(out, "out", &status)) return status;
  return guarded([&] {
    auto report = sforms::classify(m->value);
    std::string tag = report.witness ? std::string(sforms::to_string(report.witness->tag)) : "";
    *out = new sf_report{m->value, std::move(report), std::move(tag)};
  });
}

int sf_report_is_singular(const sf_report* r) { return r && r->value.is_singular ? 1 : 0; }
int sf_report_in_r(const sf_report* r) { return r && r->value.in_R ? 1 : 0; }
int sf_report_in_c(const sf_report* r) { return r && r->value.in_C ? 1 : 0; }

const char* sf_report_tag(const sf_report* r) {
  return r && r->value.witness ? r->tag.c_str() : nullptr;
}

int sf_report_effective_n(const sf_report* r) {
  return r ? static_cast<int>(r->value.effective_n) : 0;
}

int sf_report_verify(const sf_report* r) {
  return r && r->value.witness && sforms::verify_witness(r->input, *r->value.witness) ? 1 : 0;
}

sf_status sf_report_format(const sf_report* r, sf_format format, char** out) {
  sf_status status = SF_OK;
  if (missing(r, "report", &status) || missing(out, "out", &status)) return status;
  return guarded([&] {
    *out = duplicate(format == SF_FORMAT_TABLE ? sforms::io::format_report(r->value)
                                               : sforms::io::to_json(r->value).dump());
  });
}

void sf_report_free(sf_report* r) { delete r; }

sf_status sf_syzygy(const sf_field* field, const char* forms_json, sf_format format, char** out) {
  sf_status status = SF_OK;
  if (missing(field, "field", &status) || missing(forms_json, "forms_json", &status) ||
      missing(out, "out", &status)) {
    return status;
  }
  return guarded([&] {
    const auto forms = sforms::io::linforms_from_json(field->spec, sforms::io::parse_json(forms_json));
    const auto space = sforms::syzygy_space(forms);
    *out = duplicate(format == SF_FORMAT_TABLE ? sforms::io::format_syzygy(space)
                                               : sforms::io::to_json(space).dump());
  });
}

sf_status sf_orbit_dims(const sf_field* field, int n, sf_format format, char** out) {
  sf_status status = SF_OK;
  if (missing(field, "field", &status) || missing(out, "out", &status)) return status;
  if (n < 2) return fail(SF_ERR_INVALID_ARGUMENT, "orbit dimensions need n >= 2");
  return guarded([&] {
    std::vector<sforms::StabilizerReport> reports;
    for (auto tag : sforms::kAllTags) {
      reports.push_back(sforms::stabilizer_report(tag, static_cast<std::size_t>(n), field->spec));
    }
    if (format == SF_FORMAT_TABLE) {
      *out = duplicate(sforms::io::format_stabilizers(reports));
    } else {
      auto j = nlohmann::json::array();
      for (const auto& r : reports) j.push_back(sforms::io::to_json(r));
      *out = duplicate(j.dump());
    }
  });
}

sf_status sf_selftest(int quick, uint64_t seed, char** out, int* failures) {
  sf_status status = SF_OK;
  if (missing(out, "out", &status) || missing(failures, "failures", &status)) return status;
  return guarded([&] {
    auto opts = quick ? sforms::AcceptanceOptions::quick() : sforms::AcceptanceOptions{};
    opts.seed = seed;
    std::string text;
    int failed = 0;
    for (const auto& r : sforms::run_acceptance(opts)) {
      text += sforms::format_result(r) + '\n';
      if (!r.passed) ++failed;
    }
    *out = duplicate(text);
    *failures = failed;
  });
}

}  // extern "C"
