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

#include "paretogof/pipeline.hpp"

#include <algorithm>

#include "paretogof/error.hpp"

namespace paretogof {

PreparedSample prepare(const Sample& raw, const FitResult& fit, Transform t) {
  if (fit.estimator == Estimator::kMLE) {
    if (t == Transform::kHalf) return {transform_half(raw, fit), ParetoParams{2.0, 1.0}};
    return {clamp_minimum(transform_unit(raw, fit)), ParetoParams{1.0, 1.0}};
  }
  return {raw.scaled(1.0 / fit.params.sigma), ParetoParams{fit.params.beta, 1.0}};
}

std::vector<double> guarded_cdf_values(const PreparedSample& p) {
  auto u = fitted_cdf_values(p.data, p.params);
  for (double& v : u) v = std::clamp(v, kCdfGuard, 1.0 - kCdfGuard);
  return u;
}

StatisticValue evaluate_prepared(const TestId& test, const PreparedSample& prepared) {
  const Sample& s = prepared.data;
  const ParetoParams& p = prepared.params;
  switch (test.kind) {
    case TestKind::kKS: return edf_statistic(EdfKind::kKS, guarded_cdf_values(prepared));
    case TestKind::kCM: return edf_statistic(EdfKind::kCM, guarded_cdf_values(prepared));
    case TestKind::kAD: return edf_statistic(EdfKind::kAD, guarded_cdf_values(prepared));
    case TestKind::kMA: return edf_statistic(EdfKind::kMA, guarded_cdf_values(prepared));
    case TestKind::kZA: return zhang_statistic(ZhangKind::kZA, guarded_cdf_values(prepared));
    case TestKind::kZB: return zhang_statistic(ZhangKind::kZB, guarded_cdf_values(prepared));
    case TestKind::kZC: return zhang_statistic(ZhangKind::kZC, guarded_cdf_values(prepared));
    case TestKind::kKL: return entropy_statistic(EntropyKind::kKL, test.m, s, p);
    case TestKind::kHD: return entropy_statistic(EntropyKind::kHD, test.m, s, p);
    case TestKind::kDK: return phi_divergence_statistic(PhiKind::kDK, s, p);
    case TestKind::kDH: return phi_divergence_statistic(PhiKind::kDH, s, p);
    case TestKind::kDJ: return phi_divergence_statistic(PhiKind::kDJ, s, p);
    case TestKind::kDT: return phi_divergence_statistic(PhiKind::kDT, s, p);
    case TestKind::kEcf: return ecf_statistic(guarded_cdf_values(prepared), test.a);
    case TestKind::kMellin: return mellin_statistic(s, p, test.a);
    case TestKind::kIneqSlope: return inequality_slope_statistic(s);
    case TestKind::kTChar: return char_ratio_statistics(s).t;
    case TestKind::kVChar: return char_ratio_statistics(s).v;
    case TestKind::kIChar: return char_min_statistics(test.m, s).i;
    case TestKind::kKChar: return char_min_statistics(test.m, s).k;
    case TestKind::kMChar: return char_min_statistics(test.m, s).m;
    case TestKind::kI1: return char_rossberg_statistics(s).integral;
    case TestKind::kD1: return char_rossberg_statistics(s).sup;
    case TestKind::kI2: return char_order_statistics(s).integral;
    case TestKind::kD2: return char_order_statistics(s).sup;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown test kind");
}

std::vector<StatisticValue> evaluate(std::span<const TestId> tests, const Sample& raw,
                                     const Scenario& scenario) {
  const FitResult f = fit(scenario.estimator, raw, scenario.known_sigma);
  std::optional<PreparedSample> unit, half;
  std::vector<StatisticValue> out;
  out.reserve(tests.size());
  for (const TestId& t : tests) {
    if (t.kind == TestKind::kIneqSlope) {
      if (!half) half = prepare(raw, f, Transform::kHalf);
      out.push_back(evaluate_prepared(t, *half));
    } else {
      if (!unit) unit = prepare(raw, f, Transform::kUnit);
      out.push_back(evaluate_prepared(t, *unit));
    }
  }
  return out;
}

StatisticValue evaluate(const TestId& test, const Sample& raw, const Scenario& scenario) {
  return evaluate(std::span<const TestId>(&test, 1), raw, scenario).front();
}

}  // namespace paretogof
