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

#ifndef PARETOGOF_PIPELINE_HPP_
#define PARETOGOF_PIPELINE_HPP_

#include <optional>
#include <span>
#include <vector>

#include "paretogof/estimation.hpp"
#include "paretogof/sample.hpp"
#include "paretogof/statistics.hpp"
#include "paretogof/test_id.hpp"

namespace paretogof {

// How a sample is fitted before testing: estimator plus, for the one-parameter
// hypothesis, the known support bound.
struct Scenario {
  Estimator estimator = Estimator::kMLE;
  std::optional<double> known_sigma;

  int params_estimated() const noexcept { return known_sigma ? 1 : 2; }
};

// Data in the coordinates a statistic is evaluated in, with the matching fitted law.
//   MLE: Y = (X / sigma)^beta with the minimum clamped, fitted law P(1, 1)
//        (half exponent and P(2, 1) for the inequality-curve slope).
//   MME: Y = X / sigma, fitted law P(beta, 1).
struct PreparedSample {
  Sample data;
  ParetoParams params;
};

enum class Transform { kUnit, kHalf };

PreparedSample prepare(const Sample& raw, const FitResult& fit, Transform t = Transform::kUnit);

// Fitted cdf values kept inside [1e-15, 1 - 1e-15].
inline constexpr double kCdfGuard = 1e-15;
std::vector<double> guarded_cdf_values(const PreparedSample& p);

StatisticValue evaluate_prepared(const TestId& test, const PreparedSample& prepared);

// Fits the sample under `scenario` and evaluates every test. Exceptions from fitting
// or from a statistic propagate.
std::vector<StatisticValue> evaluate(std::span<const TestId> tests, const Sample& raw,
                                     const Scenario& scenario);
StatisticValue evaluate(const TestId& test, const Sample& raw, const Scenario& scenario);

}  // namespace paretogof

#endif  // PARETOGOF_PIPELINE_HPP_
