#include "doctest.h"

#include <string>

#include "sforms/error.hpp"
#include "sforms/io.hpp"
#include "sforms/orbits.hpp"
#include "support.hpp"

using namespace sforms;
using namespace sforms::test;
using sforms::io::json;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalContradiction;
}

}  // namespace

TEST_CASE("parse errors carry a position") {
  try {
    (void)io::parse_json("{\"n\": 3,\n  \"rows\": }");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedInput);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("matrix JSON") {
  const FormMatrix x = zero_square_example();
  const json j = io::to_json(x);
  CHECK(j["n"] == 5);
  CHECK(j["rows"] == 3);
  CHECK(j["entries"][1][0] == json({"0", "0", "0", "1", "0"}));
  CHECK(io::matrix_from_json(kQ, j) == x);
  CHECK(io::matrix_from_json(kQ, io::parse_json(j.dump())) == x);
}

TEST_CASE("malformed matrices") {
  auto parse = [](const std::string& text) {
    return code_of([&] { (void)io::matrix_from_json(kQ, io::parse_json(text)); });
  };
  CHECK(parse(R"({"n": 2, "rows": 1, "cols": 1, "entries": [[["1"]]]})") == ErrorCode::MalformedInput);
  CHECK(parse(R"({"n": 1, "rows": 1, "cols": 1, "entries": [[["x"]]]})") == ErrorCode::MalformedInput);
  CHECK(parse(R"({"n": 1, "rows": 2, "cols": 1, "entries": [[["1"]]]})") == ErrorCode::MalformedInput);
  CHECK(parse(R"({"rows": 1, "cols": 1, "entries": [[["1"]]]})") == ErrorCode::MalformedInput);
  CHECK(parse(R"([1, 2])") == ErrorCode::MalformedInput);
  CHECK(code_of([] {
          (void)io::matrix_from_json(FieldSpec::prime(5),
                                     io::parse_json(R"({"n":1,"rows":1,"cols":1,"entries":[[["1/5"]]]})"));
        }) == ErrorCode::MalformedInput);
}

TEST_CASE("integers are accepted as scalars") {
  const FormMatrix x = io::matrix_from_json(
      kQ, io::parse_json(R"({"n": 2, "rows": 1, "cols": 1, "entries": [[[3, "-1/2"]]]})"));
  CHECK(x(0, 0).to_linform() == LinForm(kQ, {s(kQ, 3), frac(kQ, -1, 2)}));
}

TEST_CASE("forms and higher degree matrices round-trip") {
  std::mt19937_64 rng(3);
  const Form f = random_form(3, 2, kQ, rng);
  CHECK(io::form_from_json(kQ, io::to_json(f)) == f);
  const FormMatrix adj = adjugate(random_linear_matrix(3, 3, 3, kGF, rng));
  const json j = io::to_json(adj);
  CHECK(j["degree"] == 2);
  CHECK(io::matrix_from_json(kGF, io::parse_json(j.dump())) == adj);
}

TEST_CASE("property: reports round-trip through JSON text") {
  for (const FieldSpec& f : {kQ, kGF}) {
    for (ComponentTag tag : kAllTags) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const FormMatrix x = sample_component(tag, 3, f, seed);
        const ClassificationReport r = classify(x);
        const json j = io::to_json(r);
        const ClassificationReport back = io::report_from_json(f, io::parse_json(j.dump()));
        CHECK(back.is_singular == r.is_singular);
        CHECK(back.in_R == r.in_R);
        CHECK(back.in_C == r.in_C);
        CHECK(back.effective_n == r.effective_n);
        REQUIRE(back.witness.has_value());
        CHECK(back.witness->tag == r.witness->tag);
        CHECK(back.witness->f == r.witness->f);
        CHECK(back.witness->g == r.witness->g);
        CHECK(back.witness->normal_form == r.witness->normal_form);
        CHECK(io::to_json(back) == j);
        CHECK(io::matrix_from_json(f, io::parse_json(io::to_json(x).dump())) == x);
      }
    }
  }
}

TEST_CASE("reports without a witness") {
  const ClassificationReport zero = classify(FormMatrix(3, 3, 2, 1, kQ));
  const json j = io::to_json(zero);
  CHECK(j["tag"].is_null());
  CHECK(j["F"].is_null());
  CHECK(j["singular"] == true);
  CHECK_FALSE(io::report_from_json(kQ, j).witness.has_value());
}

TEST_CASE("syzygy input formats") {
  const auto a = io::linforms_from_json(kQ, io::parse_json(R"([["1","0"],["0","1"]])"));
  const auto b = io::linforms_from_json(kQ, io::parse_json(R"({"forms": [["1","0"],["0","1"]]})"));
  CHECK(a == b);
  CHECK(a.size() == 2);
  const json j = io::to_json(syzygy_space(a));
  CHECK(j["dim"] == 1);
  CHECK(j["c"] == 2);
}

TEST_CASE("table output") {
  const std::string m = io::format_matrix(zero_square_example());
  CHECK(m.find("x4") != std::string::npos);
  const std::string r = io::format_report(classify(zero_square_example()));
  CHECK(r.find("ZeroSquare") != std::string::npos);
  std::vector<StabilizerReport> reports;
  for (ComponentTag tag : kAllTags) reports.push_back(stabilizer_report(tag, 2, kQ));
  const std::string t = io::format_stabilizers(reports);
  CHECK(t.find("Antisymmetric") != std::string::npos);
  CHECK(io::to_json(reports[0])["orbit_dim"] == 13);
}
