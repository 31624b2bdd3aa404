#include "doctest.h"

#include <string>

#include "sforms/c_api.h"

namespace {

const char* kZeroSquare =
    R"({"n":5,"rows":3,"cols":3,"entries":[)"
    R"([["1","0","0","0","0"],["0","1","0","0","0"],["0","0","1","0","0"]],)"
    R"([["0","0","0","1","0"],["0","0","0","0","0"],["0","0","0","0","0"]],)"
    R"([["0","0","0","0","1"],["0","0","0","0","0"],["0","0","0","0","0"]]]})";

std::string take(char* s) {
  std::string out(s);
  sf_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("field creation") {
  sf_field* f = nullptr;
  CHECK(sf_field_create("gf32003", &f) == SF_OK);
  sf_field_free(f);
  CHECK(sf_field_create("gf6", &f) == SF_ERR_INVALID_ARGUMENT);
  CHECK(std::string(sf_last_error()).size() > 0);
  CHECK(sf_field_create(nullptr, &f) == SF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("classification through the C API") {
  sf_field* f = nullptr;
  REQUIRE(sf_field_create("q", &f) == SF_OK);
  sf_matrix* m = nullptr;
  REQUIRE(sf_matrix_parse_json(f, kZeroSquare, &m) == SF_OK);
  sf_report* r = nullptr;
  REQUIRE(sf_classify(m, &r) == SF_OK);
  CHECK(sf_report_is_singular(r) == 1);
  CHECK(sf_report_in_r(r) == 0);
  CHECK(sf_report_in_c(r) == 0);
  CHECK(std::string(sf_report_tag(r)) == "ZeroSquare");
  CHECK(sf_report_effective_n(r) == 5);
  CHECK(sf_report_verify(r) == 1);
  char* out = nullptr;
  REQUIRE(sf_report_format(r, SF_FORMAT_JSON, &out) == SF_OK);
  CHECK(take(out).find("\"tag\":\"ZeroSquare\"") != std::string::npos);
  sf_report_free(r);
  sf_matrix_free(m);
  sf_field_free(f);
}

TEST_CASE("generate and classify round-trip") {
  sf_field* f = nullptr;
  REQUIRE(sf_field_create("gf32003", &f) == SF_OK);
  for (const char* tag : {"zero-row", "zero-column", "zero-square", "antisymmetric"}) {
    sf_matrix* m = nullptr;
    REQUIRE(sf_generate(f, tag, 3, 7, &m) == SF_OK);
    char* text = nullptr;
    REQUIRE(sf_matrix_format(m, SF_FORMAT_JSON, &text) == SF_OK);
    const std::string json = take(text);
    sf_matrix* again = nullptr;
    REQUIRE(sf_matrix_parse_json(f, json.c_str(), &again) == SF_OK);
    sf_report* r = nullptr;
    REQUIRE(sf_classify(again, &r) == SF_OK);
    CHECK(sf_report_verify(r) == 1);
    CHECK(sf_report_tag(r) != nullptr);
    sf_report_free(r);
    sf_matrix_free(again);
    sf_matrix_free(m);
  }
  sf_matrix* m = nullptr;
  CHECK(sf_generate(f, "diagonal", 3, 7, &m) == SF_ERR_INVALID_ARGUMENT);
  CHECK(sf_generate(f, "zero-row", 0, 7, &m) == SF_ERR_INVALID_ARGUMENT);
  sf_field_free(f);
}

TEST_CASE("error codes") {
  sf_field* f = nullptr;
  REQUIRE(sf_field_create("q", &f) == SF_OK);
  sf_matrix* m = nullptr;
  CHECK(sf_matrix_parse_json(f, "{\"n\": 3,", &m) == SF_ERR_MALFORMED_INPUT);
  CHECK(std::string(sf_last_error()).find("line 1") != std::string::npos);
  CHECK(sf_matrix_parse_json(f, R"({"n":1,"rows":2,"cols":2,"entries":[[["1"],["0"]],[["0"],["1"]]]})",
                             &m) == SF_OK);
  sf_report* r = nullptr;
  CHECK(sf_classify(m, &r) == SF_ERR_WRONG_SHAPE);
  sf_matrix_free(m);
  char* out = nullptr;
  CHECK(sf_orbit_dims(f, 1, SF_FORMAT_JSON, &out) == SF_ERR_INVALID_ARGUMENT);
  CHECK(sf_syzygy(f, "[[\"1\"]]", SF_FORMAT_TABLE, &out) == SF_OK);
  CHECK(take(out).find("dim = 0") != std::string::npos);
  CHECK(sf_classify(nullptr, &r) == SF_ERR_INVALID_ARGUMENT);
  CHECK(std::string(sf_status_name(SF_ERR_NOT_DIVISIBLE)) == "NotDivisible");
  sf_field_free(f);
}

TEST_CASE("orbit dimensions through the C API") {
  sf_field* f = nullptr;
  REQUIRE(sf_field_create("q", &f) == SF_OK);
  char* out = nullptr;
  REQUIRE(sf_orbit_dims(f, 2, SF_FORMAT_JSON, &out) == SF_OK);
  const std::string text = take(out);
  std::size_t count = 0;
  for (std::size_t pos = 0; (pos = text.find("\"orbit_dim\":13", pos)) != std::string::npos; ++pos) ++count;
  CHECK(count == 4);
  sf_field_free(f);
}
