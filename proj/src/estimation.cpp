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

#include "paretogof/estimation.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>
#include <vector>

#include "paretogof/error.hpp"

namespace paretogof {

std::string_view to_string(Estimator e) noexcept {
  return e == Estimator::kMLE ? "mle" : "mme";
}

Estimator parse_estimator(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "mle") return Estimator::kMLE;
  if (s == "mme") return Estimator::kMME;
  throw Error(ErrorCode::kParse, "unknown estimator '" + std::string(text) + "'");
}

namespace {

double checked_sigma(const Sample& s, std::optional<double> known_sigma) {
  if (!known_sigma) {
    if (s.size() < 2) {
      throw Error(ErrorCode::kDegenerateSample, "need n >= 2 to estimate sigma");
    }
    return s.min();
  }
  const double sigma = *known_sigma;
  if (!(std::isfinite(sigma) && sigma > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "known sigma must be positive");
  }
  if (s.min() < sigma) {
    throw Error(ErrorCode::kSupportViolation, "observation below the known support bound");
  }
  return sigma;
}

}  // namespace

FitResult fit_mle(const Sample& s, std::optional<double> known_sigma) {
  const double sigma = checked_sigma(s, known_sigma);
  double log_sum = 0.0;
  for (double x : s.sorted()) log_sum += std::log(x / sigma);
  if (!(log_sum >= kDegenerateLogSum)) {
    throw Error(ErrorCode::kDegenerateSample, "sum of log(X/sigma) vanishes");
  }
  const double beta = static_cast<double>(s.size()) / log_sum;
  return FitResult{ParetoParams{beta, sigma}, Estimator::kMLE, known_sigma.has_value()};
}

FitResult fit_mme(const Sample& s, std::optional<double> known_sigma) {
  const double n = static_cast<double>(s.size());
  const double mean = s.mean();
  if (known_sigma) {
    const double sigma = checked_sigma(s, known_sigma);
    if (!(mean > sigma * (1.0 + 1e-12))) {
      throw Error(ErrorCode::kDegenerateSample, "sample mean equals the support bound");
    }
    const double beta = mean / (mean - sigma);
    return FitResult{ParetoParams{beta, sigma}, Estimator::kMME, true};
  }
  if (s.size() < 2) throw Error(ErrorCode::kDegenerateSample, "need n >= 2");
  const double x1 = s.min();
  const double gap = mean - x1;
  if (!(gap > 1e-12 * mean)) {
    throw Error(ErrorCode::kDegenerateSample, "sample mean equals the minimum");
  }
  const double beta = (n * mean - x1) / (n * gap);
  const double sigma = mean * (beta - 1.0) / beta;
  if (!(beta > 1.0) || !(sigma > 0.0)) {
    throw Error(ErrorCode::kDegenerateSample, "moment estimates out of range");
  }
  return FitResult{ParetoParams{beta, sigma}, Estimator::kMME, false};
}

FitResult fit(Estimator e, const Sample& s, std::optional<double> known_sigma) {
  return e == Estimator::kMLE ? fit_mle(s, known_sigma) : fit_mme(s, known_sigma);
}

namespace {

Sample power_transform(const Sample& s, const FitResult& f, double exponent) {
  if (f.estimator != Estimator::kMLE) {
    throw Error(ErrorCode::kContractViolation,
                "the unit transformation is defined for maximum likelihood fits only");
  }
  std::vector<double> out(s.values().begin(), s.values().end());
  for (double& v : out) v = std::pow(v / f.params.sigma, exponent);
  return Sample(std::move(out));
}

}  // namespace

Sample transform_unit(const Sample& s, const FitResult& f) {
  return power_transform(s, f, f.params.beta);
}

Sample transform_half(const Sample& s, const FitResult& f) {
  return power_transform(s, f, f.params.beta / 2.0);
}

Sample clamp_minimum(const Sample& s, double floor) {
  if (s.min() > 1.0) return s;
  std::vector<double> out(s.values().begin(), s.values().end());
  // First position holding the minimum; ties beyond it are left alone.
  auto it = std::min_element(out.begin(), out.end());
  *it = floor;
  return Sample(std::move(out));
}

}  // namespace paretogof
