// Copyright 2026 The paretogof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "paretogof/critical_values.hpp"
#include "paretogof/data_app.hpp"
#include "paretogof/error.hpp"
#include "paretogof/power_study.hpp"

namespace {

using namespace paretogof;

constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;
constexpr std::size_t kCostWarnN = 100;

// Flag-content problems detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  std::string format;
  std::string output;
};

void add_common(CLI::App* sub, Common& c, bool with_seed = true) {
  if (with_seed) sub->add_option("--seed", c.seed, "RNG seed (drawn from entropy if omitted)");
  sub->add_option("--threads", c.threads, "worker threads (default: PARETOGOF_THREADS or all cores)");
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
  sub->add_option("-o,--output", c.output, "output file (default: standard output)");
}

std::uint64_t resolve_seed(const Common& c) {
  if (c.seed) return *c.seed;
  std::random_device rd;
  const std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  std::cerr << "seed: " << seed << '\n';
  return seed;
}

std::string resolve_format(const Common& c) {
  if (!c.format.empty()) return c.format;
  auto ends_with = [&](const char* ext) {
    const std::string e(ext);
    return c.output.size() >= e.size() && c.output.compare(c.output.size() - e.size(), e.size(), e) == 0;
  };
  if (ends_with(".csv")) return "csv";
  if (ends_with(".json")) return "json";
  return "text";
}

template <class Writer>
void emit(const Common& c, Writer&& write) {
  const std::string format = resolve_format(c);
  if (c.output.empty()) {
    write(std::cout, format);
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + c.output + "'");
  write(out, format);
}

template <class F>
auto as_usage(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

void warn_cost(const std::vector<TestId>& tests, std::size_t n) {
  if (n <= kCostWarnN) return;
  for (const auto& t : tests) {
    if (t.expensive()) {
      std::cerr << "warning: " << t.name() << " is cubic in n; n = " << n
                << " may take a long time\n";
    }
  }
}

struct TestArgs {
  Common common;
  std::string input;
  std::size_t column = 0;
  bool degroup_input = false;
  std::string tests = "all";
  std::string estimator = "mle";
  std::optional<double> sigma;
  bool two_param = false;
  std::size_t B = 10000;
};

int run_test(const TestArgs& a) {
  std::optional<Sample> sample;
  std::optional<double> sigma = a.sigma;
  const auto tests = as_usage([&] { return parse_test_list(a.tests); });
  const Estimator est = as_usage([&] { return parse_estimator(a.estimator); });
  if (a.input.empty()) {
    sample.emplace(wind_degrouped_published());
    if (!sigma && !a.two_param) sigma = kWindKnownSigma;
  } else {
    std::vector<double> values = read_values_file(a.input, a.column);
    if (a.degroup_input) {
      GroupedData g;
      for (double v : values) {
        if (v != std::round(v)) throw UsageError("--degroup requires integer data");
        g.values.push_back(static_cast<int>(v));
      }
      sample.emplace(degroup(g));
    } else {
      sample.emplace(std::move(values));
    }
  }
  if (a.two_param) sigma.reset();
  if (a.B < 1) throw UsageError("--B must be at least 1");
  warn_cost(tests, sample->size());
  const std::uint64_t seed = resolve_seed(a.common);
  const PValueReport r =
      bootstrap_pvalue(tests, *sample, Scenario{est, sigma}, a.B, seed, a.common.threads);
  emit(a.common, [&](std::ostream& out, const std::string& format) {
    if (format == "csv") r.write_csv(out);
    else if (format == "json") r.write_json(out);
    else r.write_text(out);
  });
  std::cerr << "elapsed: " << std::fixed << std::setprecision(2) << r.wall_seconds << " s\n";
  return 0;
}

struct PowerArgs {
  Common common;
  std::string preset;
  std::size_t n = 20;
  double alpha = 0.05;
  std::string estimator = "mle";
  int params = 1;
  std::string tests;
  std::string alternatives;
  std::size_t reps = 5000;
  std::size_t cv_reps = 20000;
  bool size_audit = false;
  bool unrounded = false;
  bool quiet = false;
};

std::vector<AlternativeSpec> parse_alternatives(const std::string& text) {
  std::vector<AlternativeSpec> out;
  // Labels such as "P(2,1)" contain commas, so split on ';' or on commas outside parentheses.
  int depth = 0;
  std::string cur;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if ((ch == ';' || (ch == ',' && depth == 0))) {
      if (!cur.empty()) out.push_back(AlternativeSpec::parse(cur));
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(AlternativeSpec::parse(cur));
  return out;
}

int run_power(const PowerArgs& a, const CLI::App& sub) {
  StudyConfig cfg = as_usage([&] {
    StudyConfig c;
    if (!a.preset.empty()) {
      c = study_preset(a.preset);
    } else {
      c.name = "custom";
      c.tests = power_suite();
      c.alternatives = standard_alternatives();
    }
    if (a.preset.empty() || sub.count("--n")) c.n = a.n;
    if (a.preset.empty() || sub.count("--estimator")) c.estimator = parse_estimator(a.estimator);
    if (a.preset.empty() || sub.count("--params")) c.params_estimated = a.params;
    if (!a.tests.empty()) c.tests = parse_test_list(a.tests);
    if (!a.alternatives.empty()) c.alternatives = parse_alternatives(a.alternatives);
    c.alpha = a.alpha;
    c.reps = a.reps;
    c.cv_reps = a.cv_reps;
    c.threads = a.common.threads;
    if (a.size_audit) c.alternatives = pareto_nulls();
    c.validate();
    return c;
  });
  cfg.seed = resolve_seed(a.common);
  warn_cost(cfg.tests, cfg.n);
  ProgressReporter progress([&](std::size_t done, std::size_t total, const std::string& label) {
    if (!a.quiet) std::cerr << "[" << done << "/" << total << "] " << label << '\n';
  });
  const PowerTable table = run_study(cfg, &progress);
  for (const auto& w : table.warnings) std::cerr << "warning: " << w << '\n';
  emit(a.common, [&](std::ostream& out, const std::string& format) {
    if (format == "csv") table.write_csv(out, !a.unrounded);
    else if (format == "json") table.write_json(out, !a.unrounded);
    else table.write_text(out);
  });
  return 0;
}

struct CvArgs {
  Common common;
  std::string tests = "all";
  std::size_t n = 20;
  std::vector<double> alphas{0.05};
  int params = 2;
  std::size_t reps = 20000;
};

int run_cv(const CvArgs& a) {
  const auto tests = as_usage([&] { return parse_test_list(a.tests); });
  if (a.params != 1 && a.params != 2) throw UsageError("--params must be 1 or 2");
  warn_cost(tests, a.n);
  const std::uint64_t seed = resolve_seed(a.common);
  const CriticalValueTable table =
      build_cv_table(tests, a.n, a.alphas, a.params, a.reps, seed, a.common.threads);
  emit(a.common, [&](std::ostream& out, const std::string&) { table.write_csv(out); });
  return 0;
}

struct DegroupArgs {
  Common common;
  std::string input;
  int decimals = -1;
};

void write_values(std::ostream& out, std::span<const double> values, int decimals) {
  for (double v : values) {
    if (decimals >= 0) out << std::fixed << std::setprecision(decimals) << v << '\n';
    else out << std::setprecision(17) << v << '\n';
  }
}

int run_degroup(const DegroupArgs& a) {
  GroupedData g;
  std::vector<double> values;
  if (a.input.empty()) {
    g = wind_dataset();
  } else {
    values = read_values_file(a.input);
    for (double v : values) {
      if (v != std::round(v)) throw UsageError("degroup input must contain integers");
      g.values.push_back(static_cast<int>(v));
    }
  }
  const Sample s = degroup(g);
  emit(a.common, [&](std::ostream& out, const std::string&) {
    write_values(out, s.values(), a.decimals);
  });
  return 0;
}

struct DatasetArgs {
  Common common;
  std::string name = "wind";
  bool degrouped = false;
  bool published = false;
};

int run_dataset(const DatasetArgs& a) {
  std::vector<double> values;
  if (a.published) {
    values = wind_degrouped_published();
  } else if (a.degrouped) {
    const Sample s = degroup(wind_dataset());
    values.assign(s.values().begin(), s.values().end());
  } else {
    for (int v : wind_dataset().values) values.push_back(v);
  }
  emit(a.common, [&](std::ostream& out, const std::string&) {
    write_values(out, values, a.published ? 2 : -1);
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Goodness-of-fit tests for the Pareto type I distribution"};
  app.require_subcommand(1);

  TestArgs ta;
  auto* test = app.add_subcommand("test", "bootstrap p-values for a sample");
  test->add_option("-i,--input", ta.input, "data file (default: bundled de-grouped wind data)");
  test->add_option("--column", ta.column, "zero-based CSV column");
  test->add_flag("--degroup", ta.degroup_input, "de-group integer-rounded input first");
  test->add_option("--tests", ta.tests, "comma-separated test ids or 'all'");
  test->add_option("--estimator", ta.estimator, "mle or mme");
  test->add_option("--sigma", ta.sigma, "known scale (omit to estimate both parameters)");
  test->add_flag("--two-param", ta.two_param, "estimate sigma even for the bundled data");
  test->add_option("--B", ta.B, "bootstrap resamples");
  add_common(test, ta.common);

  PowerArgs pa;
  auto* power = app.add_subcommand("power", "Monte Carlo power study");
  std::string preset_help = "preset: table3..table10 or";
  for (const auto& p : preset_names()) preset_help += " " + p;
  power->add_option("--paper-preset", pa.preset, preset_help);
  power->add_option("--n", pa.n, "sample size");
  power->add_option("--alpha", pa.alpha, "significance level");
  power->add_option("--estimator", pa.estimator, "mle or mme");
  power->add_option("--params", pa.params, "number of estimated parameters (1 or 2)");
  power->add_option("--tests", pa.tests, "comma-separated test ids or 'all'");
  power->add_option("--alternatives", pa.alternatives, "e.g. 'W(1.5);G(1)' or 'weibull:1.5'");
  power->add_option("--reps", pa.reps, "replications per alternative");
  power->add_option("--cv-reps", pa.cv_reps, "replications for fixed critical values");
  power->add_flag("--size-audit", pa.size_audit, "only the Pareto null rows");
  power->add_flag("--unrounded", pa.unrounded, "export unrounded percentages");
  power->add_flag("-q,--quiet", pa.quiet, "no progress output");
  add_common(power, pa.common);

  CvArgs ca;
  auto* cv = app.add_subcommand("cv", "fixed Monte Carlo critical values (MLE pipeline)");
  cv->add_option("--tests", ca.tests, "comma-separated test ids or 'all'");
  cv->add_option("--n", ca.n, "sample size");
  cv->add_option("--alpha", ca.alphas, "one or more levels")->delimiter(',');
  cv->add_option("--params", ca.params, "number of estimated parameters (1 or 2)");
  cv->add_option("--reps", ca.reps, "null replications");
  add_common(cv, ca.common);

  DegroupArgs da;
  auto* dg = app.add_subcommand("degroup", "de-group integer-rounded data");
  dg->add_option("-i,--input", da.input, "grouped data file (default: bundled wind data)");
  dg->add_option("--decimals", da.decimals, "round output to this many decimals");
  add_common(dg, da.common, false);

  DatasetArgs dsa;
  auto* ds = app.add_subcommand("dataset", "print a bundled dataset");
  ds->add_option("name", dsa.name, "dataset name")->check(CLI::IsMember({"wind"}));
  ds->add_flag("--degrouped", dsa.degrouped, "full-precision de-grouped values");
  ds->add_flag("--published", dsa.published, "de-grouped values as published (2 decimals)");
  add_common(ds, dsa.common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*test) return run_test(ta);
    if (*power) return run_power(pa, *power);
    if (*cv) return run_cv(ca);
    if (*dg) return run_degroup(da);
    if (*ds) return run_dataset(dsa);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return kExitComputation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitUsage;
}
