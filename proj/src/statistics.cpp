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

#include "paretogof/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "paretogof/error.hpp"

namespace paretogof {

double StatisticValue::score() const noexcept {
  return side == RejectionSide::kAbsUpper ? std::abs(value) : value;
}

std::vector<double> fitted_cdf_values(const Sample& s, const ParetoParams& p) {
  std::vector<double> u(s.size());
  std::transform(s.sorted().begin(), s.sorted().end(), u.begin(),
                 [&](double x) { return pareto_cdf(p, x); });
  return u;
}

namespace {

StatisticValue upper(double v) {
  if (!std::isfinite(v)) throw Error(ErrorCode::kNonfiniteStatistic, "statistic is not finite");
  return StatisticValue{v, RejectionSide::kUpper};
}

void require_nonempty(std::span<const double> u) {
  if (u.empty()) throw Error(ErrorCode::kInvalidArgument, "empty sample");
}

void require_open_unit(std::span<const double> u) {
  for (double v : u) {
    if (!(v > 0.0 && v < 1.0)) {
      throw Error(ErrorCode::kNonfiniteStatistic, "fitted cdf value on the boundary of (0,1)");
    }
  }
}

}  // namespace

StatisticValue edf_statistic(EdfKind kind, std::span<const double> u) {
  require_nonempty(u);
  const std::size_t n = u.size();
  const double nd = static_cast<double>(n);
  double acc = 0.0;
  switch (kind) {
    case EdfKind::kKS: {
      double plus = -1.0, minus = -1.0;
      for (std::size_t j = 1; j <= n; ++j) {
        plus = std::max(plus, static_cast<double>(j) / nd - u[j - 1]);
        minus = std::max(minus, u[j - 1] - static_cast<double>(j - 1) / nd);
      }
      return upper(std::max(plus, minus));
    }
    case EdfKind::kCM:
      for (std::size_t j = 1; j <= n; ++j) {
        const double d = u[j - 1] - (2.0 * static_cast<double>(j) - 1.0) / (2.0 * nd);
        acc += d * d;
      }
      return upper(1.0 / (12.0 * nd) + acc);
    case EdfKind::kAD:
      require_open_unit(u);
      for (std::size_t j = 1; j <= n; ++j) {
        acc += (2.0 * static_cast<double>(j) - 1.0) *
               (std::log(u[j - 1]) + std::log1p(-u[n - j]));
      }
      return upper(-nd - acc / nd);
    case EdfKind::kMA: {
      double sum_u = 0.0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (!(u[j - 1] < 1.0)) {
          throw Error(ErrorCode::kNonfiniteStatistic, "fitted cdf value equals 1");
        }
        sum_u += u[j - 1];
        acc += (2.0 - (2.0 * static_cast<double>(j) - 1.0) / nd) * std::log1p(-u[j - 1]);
      }
      return upper(nd / 2.0 - 2.0 * sum_u - acc);
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown edf statistic");
}

StatisticValue edf_statistic(EdfKind kind, const Sample& s, const ParetoParams& p) {
  return edf_statistic(kind, fitted_cdf_values(s, p));
}

StatisticValue zhang_statistic(ZhangKind kind, std::span<const double> u) {
  require_nonempty(u);
  require_open_unit(u);
  const std::size_t n = u.size();
  const double nd = static_cast<double>(n);
  double acc = 0.0;
  for (std::size_t j = 1; j <= n; ++j) {
    const double jd = static_cast<double>(j);
    const double f = u[j - 1];
    switch (kind) {
      case ZhangKind::kZA:
        acc += std::log(f) / (nd - jd + 0.5) + std::log1p(-f) / (jd - 0.5);
        break;
      case ZhangKind::kZB: {
        const double l = std::log((1.0 / f - 1.0) / ((nd - 0.5) / (jd - 0.75) - 1.0));
        acc += l * l;
        break;
      }
      case ZhangKind::kZC: {
        const double tail = nd - jd + 0.5;
        acc += nd * (jd - 0.5) / (tail * tail) * std::log((jd - 0.5) / (nd * f)) +
               nd / tail * std::log(tail / (nd * (1.0 - f)));
        break;
      }
    }
  }
  switch (kind) {
    case ZhangKind::kZA: return upper(-acc);
    case ZhangKind::kZB: return upper(acc);
    case ZhangKind::kZC: return upper(2.0 * acc);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown likelihood-ratio statistic");
}

StatisticValue zhang_statistic(ZhangKind kind, const Sample& s, const ParetoParams& p) {
  return zhang_statistic(kind, fitted_cdf_values(s, p));
}

namespace {

// (n / 2m) (X_(j+m) - X_(j-m)) for j = 1..n with indices clamped into 1..n.
std::vector<double> slope_estimates(std::span<const double> x, int m) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
  if (m < 1 || 2 * m > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "window m must satisfy 1 <= m <= n/2 (m=" + std::to_string(m) + ")");
  }
  const double scale = static_cast<double>(n) / (2.0 * m);
  std::vector<double> out(static_cast<std::size_t>(n));
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    const double hi = x[static_cast<std::size_t>(std::min(j + m, n - 1))];
    const double lo = x[static_cast<std::size_t>(std::max(j - m, std::ptrdiff_t{0}))];
    const double spacing = hi - lo;
    if (!(spacing > 0.0)) throw Error(ErrorCode::kDegenerateSpacing, "zero spacing (ties)");
    out[static_cast<std::size_t>(j)] = scale * spacing;
  }
  return out;
}

}  // namespace

double vasicek_entropy(std::span<const double> sorted, int m) {
  const auto slopes = slope_estimates(sorted, m);
  double acc = 0.0;
  for (double s : slopes) acc += std::log(s);
  return acc / static_cast<double>(slopes.size());
}

StatisticValue entropy_statistic(EntropyKind kind, int m, const Sample& s,
                                 const ParetoParams& p) {
  const auto x = s.sorted();
  const double nd = static_cast<double>(x.size());
  if (kind == EntropyKind::kKL) {
    double mean_log = 0.0;
    for (double v : x) mean_log += std::log(v);
    mean_log /= nd;
    const double h = vasicek_entropy(x, m);
    return upper(-h - std::log(p.beta) - p.beta * std::log(p.sigma) +
                 (p.beta + 1.0) * mean_log);
  }
  const auto slopes = slope_estimates(x, m);
  double acc = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double d = 1.0 / std::sqrt(slopes[j]) - std::sqrt(pareto_pdf(p, x[j]));
    acc += d * d * slopes[j];
  }
  return upper(acc / (2.0 * nd));
}

double silverman_bandwidth(const Sample& s) {
  return 1.06 * s.stddev() * std::pow(static_cast<double>(s.size()), -0.2);
}

double gaussian_kde(std::span<const double> data, double bandwidth, double x) {
  constexpr double kInvSqrt2Pi = 0.5 * std::numbers::inv_sqrtpi * std::numbers::sqrt2;
  double acc = 0.0;
  for (double xj : data) {
    const double z = (x - xj) / bandwidth;
    acc += std::exp(-0.5 * z * z);
  }
  return acc * kInvSqrt2Pi / (static_cast<double>(data.size()) * bandwidth);
}

StatisticValue phi_divergence_statistic(PhiKind kind, std::span<const double> kde,
                                        std::span<const double> model) {
  if (kde.size() != model.size() || kde.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "density vectors must be nonempty and paired");
  }
  double acc = 0.0;
  for (std::size_t j = 0; j < kde.size(); ++j) {
    if (!(kde[j] > 0.0) || !(model[j] > 0.0)) {
      throw Error(ErrorCode::kNonfiniteStatistic, "density ratio undefined");
    }
    const double r = kde[j] / model[j];
    switch (kind) {
      case PhiKind::kDK: acc += std::log(r); break;
      case PhiKind::kDH: {
        const double d = 1.0 - std::sqrt(r);
        acc += d * d / r;
        break;
      }
      case PhiKind::kDJ: acc += (1.0 - 1.0 / r) * std::log(r); break;
      case PhiKind::kDT: acc += std::abs(r - 1.0) / r; break;
    }
  }
  const double nd = static_cast<double>(kde.size());
  return upper(kind == PhiKind::kDH ? acc / (2.0 * nd) : acc / nd);
}

StatisticValue phi_divergence_statistic(PhiKind kind, const Sample& s, const ParetoParams& p,
                                        std::optional<double> bandwidth) {
  const double h = bandwidth ? *bandwidth : silverman_bandwidth(s);
  if (!(std::isfinite(h) && h > 0.0)) {
    throw Error(ErrorCode::kBandwidth, "kernel bandwidth must be positive");
  }
  const auto x = s.sorted();
  std::vector<double> kde(x.size()), model(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    kde[j] = gaussian_kde(x, h, x[j]);
    model[j] = pareto_pdf(p, x[j]);
  }
  return phi_divergence_statistic(kind, kde, model);
}

StatisticValue ecf_statistic(std::span<const double> u_in, double a) {
  require_nonempty(u_in);
  if (!(a > 0.0)) throw Error(ErrorCode::kInvalidArgument, "tuning parameter a must be positive");
  std::vector<double> u(u_in.begin(), u_in.end());
  std::sort(u.begin(), u.end());
  const double nd = static_cast<double>(u.size());
  double pairs = 0.0;
  for (double uj : u) {
    for (double uk : u) {
      const double d = uj - uk;
      pairs += 2.0 * a / (d * d + a * a);
    }
  }
  double singles = 0.0;
  for (double uj : u) singles += std::atan(uj / a) + std::atan((1.0 - uj) / a);
  const double constant = 2.0 * std::atan(1.0 / a) - a * std::log1p(1.0 / (a * a));
  return upper(pairs / nd + 2.0 * nd * constant - 4.0 * singles);
}

StatisticValue ecf_statistic(const Sample& s, const ParetoParams& p, double a) {
  return ecf_statistic(fitted_cdf_values(s, p), a);
}

double mellin_weight(int order, double a, double x) {
  const double l = std::log(x);
  const double c = a + l;
  if (!(c > 0.0)) throw Error(ErrorCode::kWeightSingularity, "a + log(x) must be positive");
  switch (order) {
    case 0: return 1.0 / c;
    case 1: return (1.0 - a - l) / (c * c);
    case 2: return (2.0 - 2.0 * a + a * a + 2.0 * (a - 1.0) * l + l * l) / (c * c * c);
  }
  throw Error(ErrorCode::kInvalidArgument, "Mellin weight order must be 0, 1 or 2");
}

StatisticValue mellin_statistic(const Sample& s, const ParetoParams& p, double a) {
  if (!(a > 0.0)) throw Error(ErrorCode::kInvalidArgument, "tuning parameter a must be positive");
  std::vector<double> z(s.sorted().begin(), s.sorted().end());
  for (double& v : z) v /= p.sigma;
  const double b = p.beta;
  const double nd = static_cast<double>(z.size());
  double s0 = 0.0, s1 = 0.0, s2 = 0.0;
  for (double zj : z) {
    for (double zk : z) {
      const double prod = zj * zk;
      s0 += mellin_weight(0, a, prod);
      s1 += mellin_weight(1, a, prod);
      s2 += mellin_weight(2, a, prod);
    }
  }
  double t0 = 0.0, t1 = 0.0;
  for (double zj : z) {
    t0 += mellin_weight(0, a, zj);
    t1 += mellin_weight(1, a, zj);
  }
  const double quad = ((b + 1.0) * (b + 1.0) * s0 + s2 + 2.0 * (b + 1.0) * s1) / nd;
  const double lin = b * (nd * b * mellin_weight(0, a, 1.0) - 2.0 * (b + 1.0) * t0 - 2.0 * t1);
  return upper(quad + lin);
}

std::vector<double> inequality_curve(const Sample& s) {
  const auto x = s.sorted();
  const std::size_t n = x.size();
  const std::size_t m = n - static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(n))));
  if (n < 4 || m < 2) {
    throw Error(ErrorCode::kInvalidArgument, "inequality-curve slope needs n >= 4");
  }
  double total = 0.0;
  for (double v : x) total += v;
  std::vector<double> lambda(m);
  double partial = 0.0;
  for (std::size_t j = 1; j <= m; ++j) {
    partial += x[j - 1];
    const double l = partial / total;
    const double p = static_cast<double>(j) / static_cast<double>(n);
    if (!(l < 1.0)) throw Error(ErrorCode::kNonfiniteStatistic, "L_n(p) reached 1");
    lambda[j - 1] = 1.0 - std::log1p(-l) / std::log1p(-p);
  }
  return lambda;
}

StatisticValue inequality_slope_statistic(const Sample& s) {
  const auto lambda = inequality_curve(s);
  const double m = static_cast<double>(lambda.size());
  const double n = static_cast<double>(s.size());
  // Least squares slope of lambda_j on p_j = j/n.
  const double p_mean = (m + 1.0) / (2.0 * n);
  const double p_ss = m * (m * m - 1.0) / (12.0 * n * n);
  double acc = 0.0;
  for (std::size_t j = 1; j <= lambda.size(); ++j) {
    acc += lambda[j - 1] * (static_cast<double>(j) / n - p_mean);
  }
  const double slope = acc / p_ss;
  if (!std::isfinite(slope)) throw Error(ErrorCode::kNonfiniteStatistic, "slope is not finite");
  return StatisticValue{slope, RejectionSide::kAbsUpper};
}

}  // namespace paretogof
