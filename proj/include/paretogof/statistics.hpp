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

#ifndef PARETOGOF_STATISTICS_HPP_
#define PARETOGOF_STATISTICS_HPP_

#include <optional>
#include <span>
#include <vector>

#include "paretogof/distributions.hpp"
#include "paretogof/sample.hpp"

namespace paretogof {

enum class RejectionSide { kUpper, kAbsUpper };

struct StatisticValue {
  double value = 0.0;
  RejectionSide side = RejectionSide::kUpper;

  // The quantity compared against critical values: |value| for two-sided statistics.
  double score() const noexcept;
};

// Fitted cdf values F(X_(1)) <= ... <= F(X_(n)) of the sorted sample.
std::vector<double> fitted_cdf_values(const Sample& s, const ParetoParams& p);

// ---------------------------------------------------------------------------
// Distance between the edf and the fitted cdf.

enum class EdfKind { kKS, kCM, kAD, kMA };

// `u` holds F(X_(j)) in ascending order. AD and MA throw Error(kNonfiniteStatistic)
// when a logarithm argument is 0.
StatisticValue edf_statistic(EdfKind kind, std::span<const double> u);
StatisticValue edf_statistic(EdfKind kind, const Sample& s, const ParetoParams& p);

// ---------------------------------------------------------------------------
// Likelihood-ratio statistics with F_n(X_(j)) = (j - 1/2) / n.

enum class ZhangKind { kZA, kZB, kZC };

// `u` as for edf_statistic; every value must lie strictly inside (0, 1).
StatisticValue zhang_statistic(ZhangKind kind, std::span<const double> u);
StatisticValue zhang_statistic(ZhangKind kind, const Sample& s, const ParetoParams& p);

// ---------------------------------------------------------------------------
// Spacing (entropy) statistics.

enum class EntropyKind { kKL, kHD };

// Vasicek estimator with window m, X_(j) clamped to X_(1) / X_(n) outside 1..n.
// Throws Error(kInvalidArgument) unless 1 <= m <= n/2 and Error(kDegenerateSpacing)
// when a spacing vanishes.
double vasicek_entropy(std::span<const double> sorted, int m);
StatisticValue entropy_statistic(EntropyKind kind, int m, const Sample& s,
                                 const ParetoParams& p);

// ---------------------------------------------------------------------------
// Phi-divergence between a Gaussian kernel density estimate and the fitted density.

enum class PhiKind { kDK, kDH, kDJ, kDT };

// 1.06 * s * n^(-1/5) with s the unbiased standard deviation.
double silverman_bandwidth(const Sample& s);
double gaussian_kde(std::span<const double> data, double bandwidth, double x);

// Divergence from paired density values kde[j] (estimate) and model[j] (fitted).
StatisticValue phi_divergence_statistic(PhiKind kind, std::span<const double> kde,
                                        std::span<const double> model);
// Throws Error(kBandwidth) when the default bandwidth is zero (constant sample) or a
// supplied bandwidth is not positive.
StatisticValue phi_divergence_statistic(PhiKind kind, const Sample& s, const ParetoParams& p,
                                        std::optional<double> bandwidth = std::nullopt);

// ---------------------------------------------------------------------------
// Weighted L2 distance between the ecf of U_j = F(X_j) and the uniform cf,
// weight exp(-a|t|), scaled by n.

StatisticValue ecf_statistic(std::span<const double> u, double a);
StatisticValue ecf_statistic(const Sample& s, const ParetoParams& p, double a);

// ---------------------------------------------------------------------------
// Mellin-transform statistic, weight exp(-a t).

// I^(m)_a(x) = int_0^inf (t - 1)^m x^(-t) e^(-a t) dt for m in {0, 1, 2}.
double mellin_weight(int order, double a, double x);

// Works on X_j / sigma so the statistic does not depend on the measurement scale.
// Throws Error(kWeightSingularity) if a + log(x) <= 0 for an argument used.
StatisticValue mellin_statistic(const Sample& s, const ParetoParams& p, double a);

// ---------------------------------------------------------------------------
// Slope of the fitted inequality curve; two-sided.

// Empirical inequality-curve values lambda_j, j = 1..n - floor(sqrt n).
std::vector<double> inequality_curve(const Sample& s);
StatisticValue inequality_slope_statistic(const Sample& s);

// ---------------------------------------------------------------------------
// Characterisation-based statistics. None of them uses a fitted parameter; they
// assume unit support (apply them to X / sigma or to unit-transformed data).

struct RatioStatistics {
  StatisticValue t;  // integral of (M_n - F_n) dF_n
  StatisticValue v;  // sup |M_n - F_n|
};
RatioStatistics char_ratio_statistics(const Sample& s);

struct MinStatistics {
  StatisticValue i;  // integral of Delta dF_n
  StatisticValue k;  // sup |Delta|
  StatisticValue m;  // integral of Delta^2 dF_n
};
// Throws Error(kInvalidArgument) for m < 2.
MinStatistics char_min_statistics(int m, const Sample& s);

struct DiscrepancyStatistics {
  StatisticValue integral;  // integral of (A_n - B_n) dF_n
  StatisticValue sup;       // sup |A_n - B_n|
};
// G_n (median / min over triples) against H_n (min over pairs).
DiscrepancyStatistics char_rossberg_statistics(const Sample& s);
// J_n (max / median) against K_n (median / min^2), both over triples.
DiscrepancyStatistics char_order_statistics(const Sample& s);

}  // namespace paretogof

#endif  // PARETOGOF_STATISTICS_HPP_
