#include <cstdio>
#include <exception>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "mahler/classify.hpp"
#include "mahler/compile.hpp"
#include "mahler/error.hpp"
#include "mahler/expand.hpp"
#include "mahler/json_io.hpp"
#include "mahler/linrep.hpp"
#include "mahler/rational.hpp"
#include "mahler/semigroup.hpp"
#include "mahler/series_spec.hpp"
#include "mahler/zoo.hpp"

namespace {

using mahler::Json;

struct Options {
  std::string input;
  std::string zoo_name;
  std::size_t n = 4096;
  std::size_t closure_cap = 20000;
  std::size_t depth_cap = 16;
  unsigned long precision_bits = 2048;
  double tau = 0.35;
  bool strict = false;
  std::string format = "json";
};

void add_spec_source(CLI::App* cmd, Options& opt) {
  cmd->add_option("--input", opt.input, "Spec JSON file")->envname("MAHLER_INPUT");
  cmd->add_option("--zoo", opt.zoo_name, "Catalog entry name")->envname("MAHLER_ZOO");
}

void add_length(CLI::App* cmd, Options& opt) {
  cmd->add_option("--n", opt.n, "Expansion length (coefficients 0..n)")
      ->check(CLI::PositiveNumber)
      ->envname("MAHLER_N");
}

void add_format(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->envname("MAHLER_FORMAT");
}

void add_analysis(CLI::App* cmd, Options& opt) {
  cmd->add_option("--closure-cap", opt.closure_cap, "Closure element budget")
      ->check(CLI::PositiveNumber)
      ->envname("MAHLER_CLOSURE_CAP");
  cmd->add_option("--depth-cap", opt.depth_cap, "Witness sampling depth")
      ->check(CLI::PositiveNumber)
      ->envname("MAHLER_DEPTH_CAP");
  cmd->add_option("--precision-bits", opt.precision_bits, "Root isolation precision")
      ->check(CLI::PositiveNumber)
      ->envname("MAHLER_PRECISION_BITS");
  cmd->add_option("--tau", opt.tau, "Relative-spread convergence threshold")
      ->check(CLI::PositiveNumber)
      ->envname("MAHLER_TAU");
  cmd->add_flag("--strict", opt.strict, "Nonzero exit on disagreement or inconclusive analysis")
      ->envname("MAHLER_STRICT");
}

void emit_error(const char* kind, const std::string& message) {
  Json j;
  j["error"] = Json{{"kind", kind}, {"message", message}};
  std::cerr << j.dump(2) << "\n";
}

template <typename F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const mahler::Error& e) {
    emit_error(mahler::error_kind_name(e.kind()), e.what());
    return 1;
  } catch (const Json::exception& e) {
    emit_error("SchemaError", e.what());
    return 1;
  } catch (const std::exception& e) {
    emit_error("InternalError", e.what());
    return 1;
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    mahler::fail(mahler::ErrorKind::SchemaError, "cannot open input file: " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

mahler::SeriesSpec load_spec(const Options& opt) {
  const bool has_input = !opt.input.empty();
  const bool has_zoo = !opt.zoo_name.empty();
  if (has_input == has_zoo) {
    mahler::fail(mahler::ErrorKind::SchemaError, "give exactly one of --input or --zoo");
  }
  if (has_zoo) return mahler::zoo(opt.zoo_name, 0).spec;
  return mahler::parse_spec(slurp(opt.input));
}

mahler::ClassifyOptions analysis_options(const Options& opt) {
  mahler::ClassifyOptions c;
  c.empirical.tau = opt.tau;
  c.structural.closure_cap = opt.closure_cap;
  c.structural.depth_cap = opt.depth_cap;
  c.structural.precision_bits = opt.precision_bits;
  return c;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int run_validate(const Options& opt) {
  mahler::SeriesSpec spec = load_spec(opt);
  std::optional<std::size_t> bad = mahler::residual_order(spec, opt.n);
  Json j{{"checked_to", opt.n},
         {"k", spec.equation.k},
         {"name", spec.name},
         {"order", spec.equation.order()},
         {"residual", bad ? "fail" : "pass"},
         {"seeds", spec.seeds.size()}};
  if (bad) {
    j["first_bad_order"] = *bad;
    print_json(j);
    return 1;
  }
  print_json(j);
  return 0;
}

int run_coeffs(const Options& opt) {
  mahler::SeriesSpec spec = load_spec(opt);
  std::vector<mahler::Rat> values = mahler::expand(spec, opt.n);
  if (opt.format == "csv") {
    std::cout << "n,numerator,denominator\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
      std::cout << i << ',' << values[i].get_num().get_str() << ','
                << values[i].get_den().get_str() << '\n';
    }
    return 0;
  }
  Json vals = Json::array();
  for (const mahler::Rat& v : values) vals.push_back(mahler::rat_to_string(v));
  print_json(Json{{"k", spec.equation.k}, {"n", opt.n}, {"name", spec.name}, {"values", vals}});
  return 0;
}

int run_heights(const Options& opt) {
  mahler::SeriesSpec spec = load_spec(opt);
  std::vector<double> h = mahler::height_sequence(mahler::expand(spec, opt.n));
  if (opt.format == "csv") {
    std::cout << "n,height\n";
    for (std::size_t i = 0; i < h.size(); ++i) {
      std::cout << i << ',' << fmt_double(h[i]) << '\n';
    }
    return 0;
  }
  print_json(Json{{"heights", h}, {"k", spec.equation.k}, {"n", opt.n}, {"name", spec.name}});
  return 0;
}

// Strict-mode exit policy: an inconclusive structural route outranks a mere
// disagreement between the routes.
int strict_exit(const mahler::ClassificationReport& report, bool strict) {
  if (!strict) return 0;
  const bool inconclusive = !report.structural || !report.structural->value.has_value();
  if (inconclusive) return 3;
  if (!report.agreement) return 2;
  return 0;
}

void print_report_csv(const std::vector<mahler::ClassificationReport>& reports,
                      const std::vector<int>& expected) {
  std::cout << "name,k,expected,class,label,agreement,confidence,verified_to\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const mahler::ClassificationReport& r = reports[i];
    std::cout << r.name << ',' << r.k << ',';
    if (i < expected.size()) std::cout << expected[i];
    std::cout << ',' << static_cast<int>(r.value) << ',' << mahler::growth_class_name(r.value)
              << ',' << (r.agreement ? "yes" : "no") << ','
              << mahler::confidence_name(r.confidence) << ',' << r.verified_to << '\n';
  }
}

int run_classify(const Options& opt) {
  mahler::SeriesSpec spec = load_spec(opt);
  mahler::ClassificationReport report = mahler::classify(spec, opt.n, analysis_options(opt));
  if (opt.format == "csv") {
    print_report_csv({report}, {});
  } else {
    print_json(mahler::to_json(report));
  }
  return strict_exit(report, opt.strict);
}

int run_compile(const Options& opt) {
  mahler::SeriesSpec spec = load_spec(opt);
  print_json(mahler::to_json(mahler::regular_compile(spec)));
  return 0;
}

int run_semigroup(const Options& opt) {
  if (opt.input.empty()) {
    mahler::fail(mahler::ErrorKind::SchemaError, "semigroup needs --input <representation.json>");
  }
  mahler::LinearRepresentation rep = mahler::linrep_from_json(Json::parse(slurp(opt.input)));
  mahler::SemigroupTask task;
  task.generators = rep.mu;
  task.dim = rep.dim();
  task.closure_cap = opt.closure_cap;
  task.depth_cap = opt.depth_cap;
  mahler::SemigroupVerdict verdict = mahler::analyze_semigroup(task);
  print_json(mahler::to_json(verdict));
  if (opt.strict && verdict.kind == mahler::VerdictKind::Inconclusive) return 3;
  return 0;
}

int run_zoo(const Options& opt) {
  const std::vector<std::string>& names = mahler::zoo_names();
  mahler::ClassifyOptions copts = analysis_options(opt);
  std::vector<std::future<mahler::ClassificationReport>> pending;
  pending.reserve(names.size());
  for (const std::string& name : names) {
    pending.push_back(std::async(std::launch::async, [name, n = opt.n, copts]() {
      return mahler::classify(mahler::zoo(name, 0).spec, n, copts);
    }));
  }
  std::vector<mahler::ClassificationReport> reports;
  std::vector<int> expected;
  for (std::size_t i = 0; i < names.size(); ++i) {
    reports.push_back(pending[i].get());
    expected.push_back(mahler::zoo(names[i], 0).expected_class);
  }
  int rc = 0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    int entry_rc = strict_exit(reports[i], opt.strict);
    if (opt.strict && entry_rc == 0 && static_cast<int>(reports[i].value) != expected[i]) {
      entry_rc = 2;
    }
    if (entry_rc == 3 || (entry_rc == 2 && rc != 3)) rc = entry_rc;
  }
  if (opt.format == "csv") {
    print_report_csv(reports, expected);
    return rc;
  }
  Json rows = Json::array();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const mahler::ClassificationReport& r = reports[i];
    rows.push_back(Json{{"agreement", r.agreement},
                        {"class", static_cast<int>(r.value)},
                        {"confidence", mahler::confidence_name(r.confidence)},
                        {"expected", expected[i]},
                        {"label", mahler::growth_class_name(r.value)},
                        {"name", r.name}});
  }
  print_json(rows);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for k-Mahler series: expansion, heights, and growth-class analysis"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* validate = app.add_subcommand("validate", "Parse a spec and replay the recurrence residual");
  add_spec_source(validate, opt);
  add_length(validate, opt);

  CLI::App* coeffs = app.add_subcommand("coeffs", "Exact series coefficients");
  add_spec_source(coeffs, opt);
  add_length(coeffs, opt);
  add_format(coeffs, opt);

  CLI::App* heights = app.add_subcommand("heights", "Logarithmic heights of the coefficients");
  add_spec_source(heights, opt);
  add_length(heights, opt);
  add_format(heights, opt);

  CLI::App* classify = app.add_subcommand("classify", "Empirical and structural growth-class report");
  add_spec_source(classify, opt);
  add_length(classify, opt);
  add_format(classify, opt);
  add_analysis(classify, opt);

  CLI::App* compile = app.add_subcommand("compile", "Linear representation of a regular solution");
  add_spec_source(compile, opt);

  CLI::App* semigroup = app.add_subcommand("semigroup", "Finiteness analysis of a representation file");
  semigroup->add_option("--input", opt.input, "Representation JSON file")->envname("MAHLER_INPUT");
  add_analysis(semigroup, opt);

  CLI::App* zoo = app.add_subcommand("zoo", "Classify the whole catalog");
  add_length(zoo, opt);
  add_format(zoo, opt);
  add_analysis(zoo, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  if (validate->parsed()) return guarded([&] { return run_validate(opt); });
  if (coeffs->parsed()) return guarded([&] { return run_coeffs(opt); });
  if (heights->parsed()) return guarded([&] { return run_heights(opt); });
  if (classify->parsed()) return guarded([&] { return run_classify(opt); });
  if (compile->parsed()) return guarded([&] { return run_compile(opt); });
  if (semigroup->parsed()) return guarded([&] { return run_semigroup(opt); });
  if (zoo->parsed()) return guarded([&] { return run_zoo(opt); });
  return 1;
}
