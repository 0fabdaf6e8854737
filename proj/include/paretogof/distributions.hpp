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

#ifndef PARETOGOF_DISTRIBUTIONS_HPP_
#define PARETOGOF_DISTRIBUTIONS_HPP_

#include <cstddef>
#include <string>
#include <string_view>

#include "paretogof/rng.hpp"
#include "paretogof/sample.hpp"

namespace paretogof {

// Pareto type I law with cdf 1 - (x / sigma)^(-beta) on x >= sigma.
struct ParetoParams {
  double beta = 1.0;   // shape
  double sigma = 1.0;  // scale, lower end of the support

  // Throws Error(kInvalidArgument) unless both parameters are finite and positive.
  static ParetoParams checked(double beta, double sigma);
};

double pareto_cdf(const ParetoParams& p, double x) noexcept;
double pareto_pdf(const ParetoParams& p, double x) noexcept;
// Inverse cdf for u in [0, 1).
double pareto_quantile(const ParetoParams& p, double u) noexcept;
Sample pareto_sample(const ParetoParams& p, std::size_t n, Rng& rng);

enum class Family {
  kPareto,
  kGamma,
  kWeibull,
  kLogNormal,
  kHalfNormal,
  kLinearFailureRate,
  kBetaExponential,
  kTiltedPareto,
  kDhillon,
};

// One alternative law of the power study. For kPareto, theta is the shape and the
// scale is 1. Every other family lives on x > 1.
struct AlternativeSpec {
  Family family = Family::kPareto;
  double theta = 1.0;

  // Short label in the power-table notation, e.g. "W(1.5)", "P(2,1)".
  std::string label() const;
  // Parses labels produced by label(); also accepts lowercase names such as
  // "weibull:1.5". Throws Error(kParse).
  static AlternativeSpec parse(std::string_view text);
};

// Draws n i.i.d. observations. Throws Error(kUnsupportedFamily) for an unknown
// family tag and Error(kInvalidArgument) for theta <= 0.
Sample sample_alternative(const AlternativeSpec& alt, std::size_t n, Rng& rng);

// Single draw from the alternative given uniform u (inverse-transform families only);
// exposed for oracle checks. Throws Error(kUnsupportedFamily) for families sampled
// by other means.
double alternative_quantile(const AlternativeSpec& alt, double u);

// Cdf of the alternative on its support (closed forms where available).
double alternative_cdf(const AlternativeSpec& alt, double x);

}  // namespace paretogof

#endif  // PARETOGOF_DISTRIBUTIONS_HPP_
