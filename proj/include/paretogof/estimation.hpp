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

#ifndef PARETOGOF_ESTIMATION_HPP_
#define PARETOGOF_ESTIMATION_HPP_

#include <optional>
#include <string_view>

#include "paretogof/distributions.hpp"
#include "paretogof/sample.hpp"

namespace paretogof {

enum class Estimator { kMLE, kMME };

std::string_view to_string(Estimator e) noexcept;
// Accepts "mle" / "mme" in any case. Throws Error(kParse).
Estimator parse_estimator(std::string_view text);

struct FitResult {
  ParetoParams params;
  Estimator estimator = Estimator::kMLE;
  bool sigma_known = false;
};

// Sum of log(X_j / sigma) below this is treated as a degenerate sample.
inline constexpr double kDegenerateLogSum = 1e-12;

// Maximum likelihood: sigma = X_(1) (or the supplied value), beta = n / sum log(X_j / sigma).
// Throws Error(kSupportViolation) if an observation lies below known_sigma and
// Error(kDegenerateSample) when all observations coincide (or n < 2 with sigma estimated).
FitResult fit_mle(const Sample& s, std::optional<double> known_sigma = std::nullopt);

// Adjusted method of moments. With both parameters unknown, sigma and beta match the
// sample mean and the expected sample minimum. With sigma known, beta solves the
// first-moment equation beta * sigma / (beta - 1) = mean.
FitResult fit_mme(const Sample& s, std::optional<double> known_sigma = std::nullopt);

FitResult fit(Estimator e, const Sample& s, std::optional<double> known_sigma = std::nullopt);

// Y_j = (X_j / sigma)^beta. Refitting by maximum likelihood gives (1, 1).
// Throws Error(kContractViolation) for a non-MLE fit.
Sample transform_unit(const Sample& s, const FitResult& f);

// Y_j = (X_j / sigma)^(beta / 2); the refitted shape is 2, so the fitted mean is finite.
Sample transform_half(const Sample& s, const FitResult& f);

inline constexpr double kUnitFloor = 1.0001;

// Replaces the sample minimum by `floor` when it sits on the unit-transform boundary
// (minimum <= 1). Only that single position changes; otherwise the sample is returned
// unchanged.
Sample clamp_minimum(const Sample& s, double floor = kUnitFloor);

}  // namespace paretogof

#endif  // PARETOGOF_ESTIMATION_HPP_
