// Command-line front end. Talks to the library only through the C API.
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "sforms/c_api.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitMalformed = 2;

struct FieldDeleter {
  void operator()(sf_field* f) const { sf_field_free(f); }
};
struct MatrixDeleter {
  void operator()(sf_matrix* m) const { sf_matrix_free(m); }
};
struct ReportDeleter {
  void operator()(sf_report* r) const { sf_report_free(r); }
};
using FieldHandle = std::unique_ptr<sf_field, FieldDeleter>;
using MatrixHandle = std::unique_ptr<sf_matrix, MatrixDeleter>;
using ReportHandle = std::unique_ptr<sf_report, ReportDeleter>;

int exit_code(sf_status status) {
  if (status == SF_OK) return kExitOk;
  return status == SF_ERR_MALFORMED_INPUT ? kExitMalformed : kExitDomain;
}

int report_error(sf_status status, const std::string& context = "") {
  std::cerr << "error: " << sf_status_name(status) << ": " << (context.empty() ? "" : context + ": ")
            << sf_last_error() << '\n';
  return exit_code(status);
}

std::string take(char* s) {
  std::string out(s);
  sf_string_free(s);
  return out;
}

std::optional<std::string> read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) return std::nullopt;
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

struct Common {
  std::string field = "q";
  std::string output = "json";
  sf_format format() const { return output == "table" ? SF_FORMAT_TABLE : SF_FORMAT_JSON; }
};

std::optional<FieldHandle> open_field(const std::string& name, int& code) {
  sf_field* f = nullptr;
  if (sf_status s = sf_field_create(name.c_str(), &f); s != SF_OK) {
    report_error(s, "--field");
    code = kExitMalformed;
    return std::nullopt;
  }
  return FieldHandle(f);
}

struct Classified {
  sf_status status = SF_OK;
  std::string text;
  std::string error;
};

Classified classify_text(const sf_field* field, const std::string& json, sf_format format) {
  Classified out;
  sf_matrix* raw = nullptr;
  out.status = sf_matrix_parse_json(field, json.c_str(), &raw);
  if (out.status != SF_OK) {
    out.error = sf_last_error();
    return out;
  }
  MatrixHandle matrix(raw);
  sf_report* report = nullptr;
  out.status = sf_classify(matrix.get(), &report);
  if (out.status != SF_OK) {
    out.error = sf_last_error();
    return out;
  }
  ReportHandle guard(report);
  char* text = nullptr;
  out.status = sf_report_format(report, format, &text);
  if (out.status != SF_OK) {
    out.error = sf_last_error();
    return out;
  }
  out.text = take(text);
  return out;
}

int run_classify(const Common& common, const std::string& input, bool batch) {
  int code = kExitOk;
  auto field = open_field(common.field, code);
  if (!field) return code;
  const auto text = read_input(input);
  if (!text) {
    std::cerr << "error: cannot read '" << input << "'\n";
    return kExitMalformed;
  }
  if (!batch) {
    const Classified c = classify_text(field->get(), *text, common.format());
    if (c.status != SF_OK) {
      std::cerr << "error: " << sf_status_name(c.status) << ": " << c.error << '\n';
      return exit_code(c.status);
    }
    std::cout << c.text << (common.format() == SF_FORMAT_JSON ? "\n" : "");
    return kExitOk;
  }

  // One matrix per line; lines are classified concurrently, printed in order.
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::istringstream in(*text);
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.emplace_back(number, line);
  }
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<Classified> results(lines.size());
  for (std::size_t start = 0; start < lines.size(); start += workers) {
    std::vector<std::future<Classified>> batch_futures;
    for (std::size_t k = start; k < std::min(lines.size(), start + workers); ++k) {
      batch_futures.push_back(std::async(std::launch::async, classify_text, field->get(),
                                         lines[k].second, common.format()));
    }
    for (std::size_t k = 0; k < batch_futures.size(); ++k) results[start + k] = batch_futures[k].get();
  }
  for (std::size_t k = 0; k < results.size(); ++k) {
    const Classified& c = results[k];
    if (c.status != SF_OK) {
      std::cerr << "error: " << sf_status_name(c.status) << ": line " << lines[k].first << ": "
                << c.error << '\n';
      code = std::max(code, exit_code(c.status));
      continue;
    }
    std::cout << c.text << (common.format() == SF_FORMAT_JSON ? "\n" : "\n");
  }
  return code;
}

std::optional<std::uint64_t> env_seed() {
  const char* value = std::getenv("SINGULAR_FORMS_SEED");
  if (!value || !*value) return std::nullopt;
  try {
    return std::stoull(value);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int run_generate(const Common& common, const std::string& tag, int n, std::optional<std::uint64_t> seed) {
  if (!seed) seed = env_seed();
  if (!seed) {
    std::cerr << "error: generate needs --seed or SINGULAR_FORMS_SEED\n";
    return kExitMalformed;
  }
  int code = kExitOk;
  auto field = open_field(common.field, code);
  if (!field) return code;
  sf_matrix* raw = nullptr;
  if (sf_status s = sf_generate(field->get(), tag.c_str(), n, *seed, &raw); s != SF_OK) {
    return report_error(s);
  }
  MatrixHandle matrix(raw);
  char* text = nullptr;
  if (sf_status s = sf_matrix_format(matrix.get(), common.format(), &text); s != SF_OK) {
    return report_error(s);
  }
  std::cout << take(text) << (common.format() == SF_FORMAT_JSON ? "\n" : "");
  return kExitOk;
}

int run_syzygy(const Common& common, const std::string& input) {
  int code = kExitOk;
  auto field = open_field(common.field, code);
  if (!field) return code;
  const auto text = read_input(input);
  if (!text) {
    std::cerr << "error: cannot read '" << input << "'\n";
    return kExitMalformed;
  }
  char* out = nullptr;
  if (sf_status s = sf_syzygy(field->get(), text->c_str(), common.format(), &out); s != SF_OK) {
    return report_error(s);
  }
  std::cout << take(out) << (common.format() == SF_FORMAT_JSON ? "\n" : "");
  return kExitOk;
}

int run_orbit_dims(const Common& common, int n) {
  int code = kExitOk;
  auto field = open_field(common.field, code);
  if (!field) return code;
  char* out = nullptr;
  if (sf_status s = sf_orbit_dims(field->get(), n, common.format(), &out); s != SF_OK) {
    return report_error(s);
  }
  std::cout << take(out) << (common.format() == SF_FORMAT_JSON ? "\n" : "");
  return kExitOk;
}

int run_selftest(bool quick, std::optional<std::uint64_t> seed) {
  if (!seed) seed = env_seed();
  char* out = nullptr;
  int failures = 0;
  if (sf_status s = sf_selftest(quick ? 1 : 0, seed.value_or(0x5eed2024), &out, &failures); s != SF_OK) {
    return report_error(s);
  }
  std::cout << take(out);
  std::cout << (8 - failures) << " passed, " << failures << " failed\n";
  return failures == 0 ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify 3x3 matrices of linear forms with vanishing determinant"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sf_version()));

  Common common;
  auto add_common = [&](CLI::App* sub, bool with_output = true) {
    sub->add_option("--field", common.field, "q or gf<p>")->capture_default_str();
    if (with_output) {
      sub->add_option("--output", common.output, "json or table")
          ->check(CLI::IsMember({"json", "table"}))
          ->capture_default_str();
    }
  };

  std::string input = "-";
  bool batch = false;
  auto* classify = app.add_subcommand("classify", "classify a matrix given as JSON");
  classify->add_option("input", input, "matrix file, or - for standard input")->capture_default_str();
  classify->add_flag("--batch", batch, "one matrix per line");
  add_common(classify);

  std::string tag;
  int n = 3;
  std::optional<std::uint64_t> seed;
  auto* generate = app.add_subcommand("generate", "sample a matrix from one of the four components");
  generate->add_option("--tag", tag, "zero-row, zero-column, zero-square or antisymmetric")->required();
  generate->add_option("--n", n, "number of variables")->capture_default_str();
  generate->add_option("--seed", seed, "random seed (default: $SINGULAR_FORMS_SEED)");
  add_common(generate);

  auto* syzygy = app.add_subcommand("syzygy", "linear syzygies of a list of linear forms");
  syzygy->add_option("input", input, "forms file, or - for standard input")->capture_default_str();
  add_common(syzygy);

  int orbit_n = 2;
  auto* orbit = app.add_subcommand("orbit-dims", "stabilizer and orbit dimensions of the components");
  orbit->add_option("--n", orbit_n, "number of variables (>= 2)")->capture_default_str();
  add_common(orbit);

  bool quick = false;
  std::optional<std::uint64_t> selftest_seed;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
  selftest->add_flag("--quick", quick, "divide sample counts by 20");
  selftest->add_option("--seed", selftest_seed, "random seed (default: $SINGULAR_FORMS_SEED)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  if (classify->parsed()) return run_classify(common, input, batch);
  if (generate->parsed()) return run_generate(common, tag, n, seed);
  if (syzygy->parsed()) return run_syzygy(common, input);
  if (orbit->parsed()) return run_orbit_dims(common, orbit_n);
  if (selftest->parsed()) return run_selftest(quick, selftest_seed);
  return kExitMalformed;
}
