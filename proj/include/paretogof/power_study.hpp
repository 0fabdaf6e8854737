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

#ifndef PARETOGOF_POWER_STUDY_HPP_
#define PARETOGOF_POWER_STUDY_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "paretogof/distributions.hpp"
#include "paretogof/estimation.hpp"
#include "paretogof/test_id.hpp"

namespace paretogof {

// One power-table configuration. With params_estimated == 1 the scale is pinned to 1.
struct StudyConfig {
  std::string name;
  std::size_t n = 20;
  double alpha = 0.05;
  Estimator estimator = Estimator::kMLE;
  int params_estimated = 1;
  std::vector<TestId> tests;
  std::vector<AlternativeSpec> alternatives;
  std::size_t reps = 5000;
  std::size_t cv_reps = 20000;
  std::uint64_t seed = 1;
  unsigned threads = 0;

  void validate() const;
};

// Rejection percentages, rows = alternatives, columns = tests. Stored unrounded.
struct PowerTable {
  StudyConfig config;
  std::vector<std::vector<double>> percent;
  std::vector<double> critical_values;  // fixed cvs per test, NaN for warp-speed columns
  std::size_t redraws = 0;
  std::vector<std::string> warnings;

  double at(std::size_t alt, std::size_t test) const { return percent.at(alt).at(test); }
  double at(std::string_view alt_label, std::string_view test_name) const;

  void write_csv(std::ostream& out, bool rounded = true) const;
  void write_json(std::ostream& out, bool rounded = true) const;
  void write_text(std::ostream& out) const;
};

// Thread-safe progress sink; the callback receives (completed cells, total cells, label).
class ProgressReporter {
 public:
  using Callback = std::function<void(std::size_t, std::size_t, const std::string&)>;
  explicit ProgressReporter(Callback cb) : cb_(std::move(cb)) {}

  void start(std::size_t total);
  void advance(const std::string& label);

 private:
  std::mutex mutex_;
  Callback cb_;
  std::size_t done_ = 0;
  std::size_t total_ = 0;
};

inline constexpr double kRedrawWarnRate = 0.01;
inline constexpr std::size_t kCharacterizationWarnN = 200;

PowerTable run_study(const StudyConfig& cfg, ProgressReporter* progress = nullptr);

// Runs cfg with alternatives replaced by P(1,1), P(2,1), P(5,1), P(10,1).
PowerTable size_audit(StudyConfig cfg, ProgressReporter* progress = nullptr);

std::vector<AlternativeSpec> pareto_nulls();
std::vector<AlternativeSpec> standard_alternatives();

// Accepts configuration names such as "n20-mle-1" and the aliases table3..table10.
StudyConfig study_preset(std::string_view name);
std::vector<std::string> preset_names();

}  // namespace paretogof

#endif  // PARETOGOF_POWER_STUDY_HPP_
