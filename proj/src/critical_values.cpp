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

#include "paretogof/critical_values.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "paretogof/error.hpp"
#include "paretogof/parallel.hpp"

namespace paretogof {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must lie in (0, 1)");
  }
}

double order_statistic(std::span<const double> values, std::size_t k) {
  std::vector<double> v(values.begin(), values.end());
  auto it = v.begin() + static_cast<std::ptrdiff_t>(k - 1);
  std::nth_element(v.begin(), it, v.end());
  return *it;
}

// Runs `attempt(rng)` up to kMaxAttempts times on one stream; returns the number of
// failed attempts before success.
template <class Attempt>
std::size_t with_redraws(Rng& rng, Attempt&& attempt) {
  for (int a = 0; a < kMaxAttempts; ++a) {
    try {
      attempt(rng);
      return static_cast<std::size_t>(a);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kInvalidArgument || e.code() == ErrorCode::kParse) throw;
    }
  }
  throw Error(ErrorCode::kResampleExhausted,
              "replication failed " + std::to_string(kMaxAttempts) + " times");
}

ScoreMatrix make_matrix(std::size_t tests, std::size_t reps) {
  ScoreMatrix m;
  m.scores.assign(tests, std::vector<double>(reps));
  return m;
}

void store(ScoreMatrix& m, std::size_t rep, const std::vector<StatisticValue>& values) {
  for (std::size_t t = 0; t < values.size(); ++t) m.scores[t][rep] = values[t].score();
}

}  // namespace

double upper_quantile(std::span<const double> values, double alpha) {
  check_alpha(alpha);
  if (values.empty()) throw Error(ErrorCode::kInvalidArgument, "no values");
  const double reps = static_cast<double>(values.size());
  auto k = static_cast<std::size_t>(std::ceil(reps * (1.0 - alpha) - 1e-9));
  k = std::clamp<std::size_t>(k, 1, values.size());
  return order_statistic(values, k);
}

double bootstrap_quantile(std::span<const double> values, double alpha) {
  check_alpha(alpha);
  if (values.empty()) throw Error(ErrorCode::kInvalidArgument, "no values");
  const double b = static_cast<double>(values.size());
  auto k = static_cast<std::size_t>(std::floor(b * (1.0 - alpha) + 1e-9));
  k = std::clamp<std::size_t>(k, 1, values.size());
  return order_statistic(values, k);
}

ScoreMatrix simulate_null_scores(std::span<const TestId> tests, std::size_t n,
                                 int params_estimated, std::size_t reps, std::uint64_t seed,
                                 unsigned threads, ParetoParams null_law) {
  if (params_estimated != 1 && params_estimated != 2) {
    throw Error(ErrorCode::kInvalidArgument, "params_estimated must be 1 or 2");
  }
  Scenario scenario{Estimator::kMLE, std::nullopt};
  if (params_estimated == 1) scenario.known_sigma = null_law.sigma;
  ScoreMatrix m = make_matrix(tests.size(), reps);
  std::vector<std::size_t> redraws(reps, 0);
  parallel_for(reps, threads, [&](std::size_t r) {
    Rng rng = Rng::stream(seed, r);
    redraws[r] = with_redraws(rng, [&](Rng& g) {
      store(m, r, evaluate(tests, pareto_sample(null_law, n, g), scenario));
    });
  });
  m.redraws = std::accumulate(redraws.begin(), redraws.end(), std::size_t{0});
  return m;
}

double mc_fixed_cv(const TestId& test, std::size_t n, double alpha, std::size_t reps,
                   std::uint64_t seed, int params_estimated, unsigned threads,
                   ParetoParams null_law) {
  check_alpha(alpha);
  if (static_cast<double>(reps) * alpha < 5.0) {
    throw Error(ErrorCode::kInsufficientResolution, "reps * alpha must be at least 5");
  }
  const TestId tests[] = {test};
  const ScoreMatrix m = simulate_null_scores(tests, n, params_estimated, reps, seed, threads,
                                             null_law);
  return upper_quantile(m.scores.front(), alpha);
}

ScoreMatrix bootstrap_scores(std::span<const TestId> tests, const Sample& s,
                             const Scenario& scenario, std::size_t B, std::uint64_t seed,
                             unsigned threads) {
  if (B < 1) throw Error(ErrorCode::kInvalidArgument, "B must be at least 1");
  const FitResult f = fit(scenario.estimator, s, scenario.known_sigma);
  ScoreMatrix m = make_matrix(tests.size(), B);
  std::vector<std::size_t> redraws(B, 0);
  parallel_for(B, threads, [&](std::size_t b) {
    Rng rng = Rng::stream(seed, b);
    redraws[b] = with_redraws(rng, [&](Rng& g) {
      store(m, b, evaluate(tests, pareto_sample(f.params, s.size(), g), scenario));
    });
  });
  m.redraws = std::accumulate(redraws.begin(), redraws.end(), std::size_t{0});
  return m;
}

double bootstrap_cv(const TestId& test, const Sample& s, const Scenario& scenario,
                    double alpha, std::size_t B, std::uint64_t seed, unsigned threads) {
  check_alpha(alpha);
  const TestId tests[] = {test};
  const ScoreMatrix m = bootstrap_scores(tests, s, scenario, B, seed, threads);
  return bootstrap_quantile(m.scores.front(), alpha);
}

WarpSpeedResult warp_speed_power(std::span<const TestId> tests, const AlternativeSpec& alt,
                                 std::size_t n, double alpha, const Scenario& scenario,
                                 std::size_t reps, std::uint64_t seed, unsigned threads) {
  check_alpha(alpha);
  ScoreMatrix observed = make_matrix(tests.size(), reps);
  ScoreMatrix resampled = make_matrix(tests.size(), reps);
  std::vector<std::size_t> redraws(reps, 0);
  parallel_for(reps, threads, [&](std::size_t r) {
    Rng rng = Rng::stream(seed, r);
    FitResult f;
    redraws[r] = with_redraws(rng, [&](Rng& g) {
      const Sample x = sample_alternative(alt, n, g);
      f = fit(scenario.estimator, x, scenario.known_sigma);
      store(observed, r, evaluate(tests, x, scenario));
    });
    redraws[r] += with_redraws(rng, [&](Rng& g) {
      store(resampled, r, evaluate(tests, pareto_sample(f.params, n, g), scenario));
    });
  });
  WarpSpeedResult out;
  out.redraws = std::accumulate(redraws.begin(), redraws.end(), std::size_t{0});
  for (std::size_t t = 0; t < tests.size(); ++t) {
    const double cv = upper_quantile(resampled.scores[t], alpha);
    const auto& obs = observed.scores[t];
    const auto rejected = std::count_if(obs.begin(), obs.end(), [&](double v) { return v > cv; });
    out.power.push_back(static_cast<double>(rejected) / static_cast<double>(reps));
  }
  return out;
}

std::string cv_estimator_label(Estimator e, int params_estimated) {
  return std::string(to_string(e)) + std::to_string(params_estimated);
}

std::optional<double> CriticalValueTable::lookup(const std::string& test, std::size_t n,
                                                 double alpha,
                                                 const std::string& estimator) const {
  for (const auto& e : entries_) {
    if (e.test == test && e.n == n && std::abs(e.alpha - alpha) < 1e-12 &&
        e.estimator == estimator) {
      return e.cv;
    }
  }
  return std::nullopt;
}

void CriticalValueTable::write_csv(std::ostream& out) const {
  out << "# paretogof critical values v" << kFormatVersion << '\n';
  out << "test,n,alpha,estimator,cv,reps,seed\n";
  std::ostringstream line;
  line.precision(17);
  for (const auto& e : entries_) {
    line.str("");
    line << e.test << ',' << e.n << ',' << e.alpha << ',' << e.estimator << ',' << e.cv << ','
         << e.reps << ',' << e.seed << '\n';
    out << line.str();
  }
}

CriticalValueTable CriticalValueTable::read_csv(std::istream& in) {
  std::string line;
  const std::string version = "# paretogof critical values v" + std::to_string(kFormatVersion);
  if (!std::getline(in, line) || line != version) {
    throw Error(ErrorCode::kParse, "missing or unsupported critical-value table version");
  }
  if (!std::getline(in, line) || line != "test,n,alpha,estimator,cv,reps,seed") {
    throw Error(ErrorCode::kParse, "unexpected critical-value table header");
  }
  CriticalValueTable table;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 7) throw Error(ErrorCode::kParse, "bad row '" + line + "'");
    try {
      table.add(CvEntry{cells[0], std::stoull(cells[1]), std::stod(cells[2]), cells[3],
                        std::stod(cells[4]), std::stoull(cells[5]), std::stoull(cells[6])});
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kParse, "bad row '" + line + "'");
    }
  }
  return table;
}

CriticalValueTable build_cv_table(std::span<const TestId> tests, std::size_t n,
                                  std::span<const double> alphas, int params_estimated,
                                  std::size_t reps, std::uint64_t seed, unsigned threads) {
  for (double a : alphas) {
    check_alpha(a);
    if (static_cast<double>(reps) * a < 5.0) {
      throw Error(ErrorCode::kInsufficientResolution, "reps * alpha must be at least 5");
    }
  }
  const ScoreMatrix m = simulate_null_scores(tests, n, params_estimated, reps, seed, threads);
  CriticalValueTable table;
  for (std::size_t t = 0; t < tests.size(); ++t) {
    for (double a : alphas) {
      table.add(CvEntry{tests[t].name(), n, a, cv_estimator_label(Estimator::kMLE, params_estimated),
                        upper_quantile(m.scores[t], a), reps, seed});
    }
  }
  return table;
}

}  // namespace paretogof
