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

#ifndef PARETOGOF_CRITICAL_VALUES_HPP_
#define PARETOGOF_CRITICAL_VALUES_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paretogof/distributions.hpp"
#include "paretogof/pipeline.hpp"
#include "paretogof/test_id.hpp"

namespace paretogof {

// A replication whose fit or statistic fails is redrawn from the same stream at most
// this many times before Error(kResampleExhausted).
inline constexpr int kMaxAttempts = 10;

// Per-test score matrix: scores[test][replication].
struct ScoreMatrix {
  std::vector<std::vector<double>> scores;
  std::size_t redraws = 0;
};

// k-th order statistic with k = ceil(reps (1 - alpha)), 1-based.
double upper_quantile(std::span<const double> values, double alpha);
// S*_(floor(B (1 - alpha))), the bootstrap convention.
double bootstrap_quantile(std::span<const double> values, double alpha);

// Statistics of `reps` samples of size n drawn from `null_law` and pushed through the
// maximum-likelihood pipeline. params_estimated == 1 fixes sigma at null_law.sigma.
ScoreMatrix simulate_null_scores(std::span<const TestId> tests, std::size_t n,
                                 int params_estimated, std::size_t reps, std::uint64_t seed,
                                 unsigned threads = 0,
                                 ParetoParams null_law = ParetoParams{1.0, 1.0});

// Fixed critical value under maximum likelihood. Throws Error(kInsufficientResolution)
// when reps * alpha < 5.
double mc_fixed_cv(const TestId& test, std::size_t n, double alpha, std::size_t reps,
                   std::uint64_t seed, int params_estimated = 2, unsigned threads = 0,
                   ParetoParams null_law = ParetoParams{1.0, 1.0});

// Bootstrap distribution: B resamples from the law fitted to `s` under `scenario`,
// each refitted and tested the same way.
ScoreMatrix bootstrap_scores(std::span<const TestId> tests, const Sample& s,
                             const Scenario& scenario, std::size_t B, std::uint64_t seed,
                             unsigned threads = 0);

double bootstrap_cv(const TestId& test, const Sample& s, const Scenario& scenario,
                    double alpha, std::size_t B, std::uint64_t seed, unsigned threads = 0);

// Warp-speed power: one bootstrap resample per Monte Carlo replication; the critical
// value is the upper alpha quantile of the pooled resample statistics. Returns one
// rejection fraction per test.
struct WarpSpeedResult {
  std::vector<double> power;
  std::size_t redraws = 0;
};
WarpSpeedResult warp_speed_power(std::span<const TestId> tests, const AlternativeSpec& alt,
                                 std::size_t n, double alpha, const Scenario& scenario,
                                 std::size_t reps, std::uint64_t seed, unsigned threads = 0);

std::string cv_estimator_label(Estimator e, int params_estimated);

struct CvEntry {
  std::string test;
  std::size_t n = 0;
  double alpha = 0.05;
  std::string estimator;  // "mle1" (sigma known) or "mle2"
  double cv = 0.0;
  std::size_t reps = 0;
  std::uint64_t seed = 0;
};

class CriticalValueTable {
 public:
  static constexpr int kFormatVersion = 1;

  void add(CvEntry e) { entries_.push_back(std::move(e)); }
  const std::vector<CvEntry>& entries() const noexcept { return entries_; }
  std::optional<double> lookup(const std::string& test, std::size_t n, double alpha,
                               const std::string& estimator) const;

  void write_csv(std::ostream& out) const;
  // Throws Error(kParse) on a missing/unknown version line or malformed rows.
  static CriticalValueTable read_csv(std::istream& in);

 private:
  std::vector<CvEntry> entries_;
};

// All tests and alphas from a single null simulation, so values are monotone in alpha.
CriticalValueTable build_cv_table(std::span<const TestId> tests, std::size_t n,
                                  std::span<const double> alphas, int params_estimated,
                                  std::size_t reps, std::uint64_t seed, unsigned threads = 0);

}  // namespace paretogof

#endif  // PARETOGOF_CRITICAL_VALUES_HPP_
