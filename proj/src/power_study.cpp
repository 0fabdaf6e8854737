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

#include "paretogof/power_study.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "paretogof/critical_values.hpp"
#include "paretogof/error.hpp"
#include "paretogof/parallel.hpp"
#include "paretogof/pipeline.hpp"

namespace paretogof {

namespace {

Scenario fixed_scenario(const StudyConfig& cfg) {
  Scenario s{Estimator::kMLE, std::nullopt};
  if (cfg.params_estimated == 1) s.known_sigma = 1.0;
  return s;
}

bool uses_warp_speed(const StudyConfig& cfg, const TestId& t) {
  return cfg.estimator == Estimator::kMME && t.needs_fit();
}

// Rejection fractions for fixed-cv columns; rep r reads stream r of `seed`.
std::vector<double> fixed_cv_power(const StudyConfig& cfg, std::span<const TestId> tests,
                                   std::span<const double> cvs, const AlternativeSpec& alt,
                                   std::uint64_t seed, std::size_t& redraws_out) {
  const Scenario scenario = fixed_scenario(cfg);
  std::vector<std::vector<char>> reject(tests.size(), std::vector<char>(cfg.reps, 0));
  std::vector<std::size_t> redraws(cfg.reps, 0);
  parallel_for(cfg.reps, cfg.threads, [&](std::size_t r) {
    Rng rng = Rng::stream(seed, r);
    for (int a = 0;; ++a) {
      if (a == kMaxAttempts) {
        throw Error(ErrorCode::kResampleExhausted,
                    "replication failed " + std::to_string(kMaxAttempts) + " times");
      }
      try {
        const auto values = evaluate(tests, sample_alternative(alt, cfg.n, rng), scenario);
        for (std::size_t t = 0; t < tests.size(); ++t) {
          reject[t][r] = values[t].score() > cvs[t] ? 1 : 0;
        }
        redraws[r] = static_cast<std::size_t>(a);
        return;
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kInvalidArgument) throw;
      }
    }
  });
  for (std::size_t r : redraws) redraws_out += r;
  std::vector<double> out;
  for (const auto& col : reject) {
    const auto hits = std::count(col.begin(), col.end(), char{1});
    out.push_back(static_cast<double>(hits) / static_cast<double>(cfg.reps));
  }
  return out;
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

nlohmann::json config_json(const StudyConfig& c) {
  nlohmann::json tests = nlohmann::json::array();
  for (const auto& t : c.tests) tests.push_back(t.name());
  nlohmann::json alts = nlohmann::json::array();
  for (const auto& a : c.alternatives) alts.push_back(a.label());
  return {{"name", c.name},
          {"n", c.n},
          {"alpha", c.alpha},
          {"estimator", std::string(to_string(c.estimator))},
          {"params_estimated", c.params_estimated},
          {"reps", c.reps},
          {"cv_reps", c.cv_reps},
          {"seed", c.seed},
          {"tests", tests},
          {"alternatives", alts}};
}

double cell_value(double v, bool rounded) { return rounded ? std::round(v) : v; }

}  // namespace

void StudyConfig::validate() const {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "n must be at least 3");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must lie in (0, 1)");
  }
  if (params_estimated != 1 && params_estimated != 2) {
    throw Error(ErrorCode::kInvalidArgument, "params_estimated must be 1 or 2");
  }
  if (reps < 100) throw Error(ErrorCode::kInvalidArgument, "reps must be at least 100");
  if (tests.empty()) throw Error(ErrorCode::kInvalidArgument, "no tests selected");
  if (alternatives.empty()) throw Error(ErrorCode::kInvalidArgument, "no alternatives selected");
  const bool any_fixed =
      std::any_of(tests.begin(), tests.end(), [&](const TestId& t) { return !uses_warp_speed(*this, t); });
  if (any_fixed && static_cast<double>(cv_reps) * alpha < 5.0) {
    throw Error(ErrorCode::kInsufficientResolution, "cv_reps * alpha must be at least 5");
  }
}

void ProgressReporter::start(std::size_t total) {
  std::lock_guard lock(mutex_);
  done_ = 0;
  total_ = total;
}

void ProgressReporter::advance(const std::string& label) {
  std::lock_guard lock(mutex_);
  ++done_;
  if (cb_) cb_(done_, total_, label);
}

PowerTable run_study(const StudyConfig& cfg, ProgressReporter* progress) {
  cfg.validate();
  PowerTable table;
  table.config = cfg;

  std::vector<TestId> fixed_tests, warp_tests;
  std::vector<std::size_t> fixed_cols, warp_cols;
  for (std::size_t t = 0; t < cfg.tests.size(); ++t) {
    if (uses_warp_speed(cfg, cfg.tests[t])) {
      warp_tests.push_back(cfg.tests[t]);
      warp_cols.push_back(t);
    } else {
      fixed_tests.push_back(cfg.tests[t]);
      fixed_cols.push_back(t);
    }
    if (cfg.tests[t].expensive() && cfg.n > kCharacterizationWarnN) {
      table.warnings.push_back(cfg.tests[t].name() + " is cubic in n; n = " +
                               std::to_string(cfg.n) + " will be slow");
    }
  }

  if (progress) progress->start(cfg.alternatives.size() + (fixed_tests.empty() ? 0 : 1));

  table.critical_values.assign(cfg.tests.size(), std::numeric_limits<double>::quiet_NaN());
  std::vector<double> cvs;
  std::size_t total_reps = 0;
  if (!fixed_tests.empty()) {
    const ScoreMatrix null_scores = simulate_null_scores(
        fixed_tests, cfg.n, cfg.params_estimated, cfg.cv_reps, derive_seed(cfg.seed, 0),
        cfg.threads);
    table.redraws += null_scores.redraws;
    total_reps += cfg.cv_reps;
    for (std::size_t j = 0; j < fixed_tests.size(); ++j) {
      cvs.push_back(upper_quantile(null_scores.scores[j], cfg.alpha));
      table.critical_values[fixed_cols[j]] = cvs.back();
    }
    if (progress) progress->advance("critical values");
  }

  Scenario warp_scenario{Estimator::kMME, std::nullopt};
  if (cfg.params_estimated == 1) warp_scenario.known_sigma = 1.0;

  for (std::size_t i = 0; i < cfg.alternatives.size(); ++i) {
    const AlternativeSpec& alt = cfg.alternatives[i];
    const std::uint64_t alt_seed = derive_seed(cfg.seed, i + 1);
    std::vector<double> row(cfg.tests.size(), 0.0);
    if (!fixed_tests.empty()) {
      const auto power =
          fixed_cv_power(cfg, fixed_tests, cvs, alt, derive_seed(alt_seed, 1), table.redraws);
      total_reps += cfg.reps;
      for (std::size_t j = 0; j < fixed_tests.size(); ++j) row[fixed_cols[j]] = 100.0 * power[j];
    }
    if (!warp_tests.empty()) {
      const WarpSpeedResult w = warp_speed_power(warp_tests, alt, cfg.n, cfg.alpha,
                                                 warp_scenario, cfg.reps,
                                                 derive_seed(alt_seed, 2), cfg.threads);
      table.redraws += w.redraws;
      total_reps += 2 * cfg.reps;
      for (std::size_t j = 0; j < warp_tests.size(); ++j) row[warp_cols[j]] = 100.0 * w.power[j];
    }
    table.percent.push_back(std::move(row));
    if (progress) progress->advance(alt.label());
  }

  if (total_reps > 0 &&
      static_cast<double>(table.redraws) > kRedrawWarnRate * static_cast<double>(total_reps)) {
    table.warnings.push_back("redraw rate above 1%: " + std::to_string(table.redraws) +
                             " redraws in " + std::to_string(total_reps) + " replications");
  }
  return table;
}

std::vector<AlternativeSpec> pareto_nulls() {
  return {{Family::kPareto, 1.0}, {Family::kPareto, 2.0}, {Family::kPareto, 5.0},
          {Family::kPareto, 10.0}};
}

PowerTable size_audit(StudyConfig cfg, ProgressReporter* progress) {
  cfg.alternatives = pareto_nulls();
  return run_study(cfg, progress);
}

std::vector<AlternativeSpec> standard_alternatives() {
  std::vector<AlternativeSpec> out = pareto_nulls();
  auto add = [&](Family f, std::initializer_list<double> thetas) {
    for (double t : thetas) out.push_back({f, t});
  };
  add(Family::kGamma, {0.5, 0.8, 1.0, 1.2});
  add(Family::kWeibull, {0.5, 0.8, 1.2, 1.5});
  add(Family::kLogNormal, {1.0, 1.2, 1.5, 2.5});
  add(Family::kLinearFailureRate, {0.2, 0.5, 0.8, 1.0});
  add(Family::kBetaExponential, {0.5, 0.8, 1.0, 1.5});
  add(Family::kTiltedPareto, {0.5, 1.0, 2.0, 3.0});
  add(Family::kDhillon, {0.2, 0.4, 0.6, 0.8});
  add(Family::kHalfNormal, {0.8, 1.0});
  return out;
}

namespace {

struct PresetSpec {
  const char* name;
  const char* alias;
  std::size_t n;
  Estimator estimator;
  int params;
};

constexpr PresetSpec kPresets[] = {
    {"n20-mle-1", "table3", 20, Estimator::kMLE, 1},
    {"n20-mme-1", "table4", 20, Estimator::kMME, 1},
    {"n20-mle-2", "table5", 20, Estimator::kMLE, 2},
    {"n20-mme-2", "table6", 20, Estimator::kMME, 2},
    {"n30-mle-1", "table7", 30, Estimator::kMLE, 1},
    {"n30-mme-1", "table8", 30, Estimator::kMME, 1},
    {"n30-mle-2", "table9", 30, Estimator::kMLE, 2},
    {"n30-mme-2", "table10", 30, Estimator::kMME, 2},
};

}  // namespace

StudyConfig study_preset(std::string_view name) {
  for (const auto& p : kPresets) {
    if (name == p.name || name == p.alias) {
      StudyConfig cfg;
      cfg.name = p.name;
      cfg.n = p.n;
      cfg.estimator = p.estimator;
      cfg.params_estimated = p.params;
      cfg.tests = power_suite();
      cfg.alternatives = standard_alternatives();
      return cfg;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown preset '" + std::string(name) + "'");
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& p : kPresets) out.emplace_back(p.name);
  return out;
}

double PowerTable::at(std::string_view alt_label, std::string_view test_name) const {
  for (std::size_t i = 0; i < config.alternatives.size(); ++i) {
    if (config.alternatives[i].label() != alt_label) continue;
    for (std::size_t t = 0; t < config.tests.size(); ++t) {
      if (config.tests[t].name() == test_name) return at(i, t);
    }
  }
  throw Error(ErrorCode::kInvalidArgument,
              "no cell (" + std::string(alt_label) + ", " + std::string(test_name) + ")");
}

void PowerTable::write_csv(std::ostream& out, bool rounded) const {
  out << "# " << config_json(config).dump() << '\n';
  out << "# redraws=" << redraws << '\n';
  for (const auto& w : warnings) out << "# warning: " << w << '\n';
  out << "alternative";
  for (const auto& t : config.tests) out << ',' << t.name();
  out << '\n';
  for (std::size_t i = 0; i < percent.size(); ++i) {
    out << config.alternatives[i].label();
    for (double v : percent[i]) out << ',' << format_double(cell_value(v, rounded));
    out << '\n';
  }
}

void PowerTable::write_json(std::ostream& out, bool rounded) const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < percent.size(); ++i) {
    nlohmann::json cells = nlohmann::json::array();
    for (double v : percent[i]) cells.push_back(cell_value(v, rounded));
    rows.push_back({{"alternative", config.alternatives[i].label()}, {"power", cells}});
  }
  nlohmann::json cvs = nlohmann::json::array();
  for (double v : critical_values) {
    cvs.push_back(std::isnan(v) ? nlohmann::json(nullptr) : nlohmann::json(v));
  }
  const nlohmann::json doc = {{"config", config_json(config)},
                              {"critical_values", cvs},
                              {"rows", rows},
                              {"redraws", redraws},
                              {"warnings", warnings}};
  out << doc.dump(2) << '\n';
}

void PowerTable::write_text(std::ostream& out) const {
  out << "# " << (config.name.empty() ? "custom" : config.name) << ": n=" << config.n
      << " alpha=" << config.alpha << " estimator=" << to_string(config.estimator)
      << " params=" << config.params_estimated << " reps=" << config.reps
      << " cv_reps=" << config.cv_reps << " seed=" << config.seed << '\n';
  out << std::left << std::setw(10) << "alt" << std::right;
  for (const auto& t : config.tests) out << std::setw(std::max<int>(6, t.name().size() + 1)) << t.name();
  out << '\n';
  for (std::size_t i = 0; i < percent.size(); ++i) {
    out << std::left << std::setw(10) << config.alternatives[i].label() << std::right;
    for (std::size_t t = 0; t < percent[i].size(); ++t) {
      out << std::setw(std::max<int>(6, config.tests[t].name().size() + 1))
          << std::lround(percent[i][t]);
    }
    out << '\n';
  }
  for (const auto& w : warnings) out << "warning: " << w << '\n';
}

}  // namespace paretogof
