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

// Characterisation statistics. Every U/V-empirical distribution is stored as a sorted
// list of (value, integer multiplicity), so each evaluation is a binary search and the
// counts stay exact integers.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "paretogof/error.hpp"
#include "paretogof/statistics.hpp"

namespace paretogof {

namespace {

class WeightedStep {
 public:
  void add(double value, std::uint64_t weight) {
    if (weight > 0) points_.emplace_back(value, weight);
  }

  // Call once after all add() calls.
  void finalize(std::uint64_t total) {
    total_ = total;
    std::sort(points_.begin(), points_.end());
    cumulative_.resize(points_.size());
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < points_.size(); ++i) {
      acc += points_[i].second;
      cumulative_[i] = acc;
    }
  }

  // Fraction of the (weighted) mass at or below x.
  double operator()(double x) const {
    auto it = std::upper_bound(points_.begin(), points_.end(), x,
                               [](double v, const auto& p) { return v < p.first; });
    const std::size_t k = static_cast<std::size_t>(it - points_.begin());
    const std::uint64_t count = k == 0 ? 0 : cumulative_[k - 1];
    return static_cast<double>(count) / static_cast<double>(total_);
  }

  void append_points(std::vector<double>& out) const {
    for (const auto& p : points_) out.push_back(p.first);
  }

 private:
  std::vector<std::pair<double, std::uint64_t>> points_;
  std::vector<std::uint64_t> cumulative_;
  std::uint64_t total_ = 1;
};

// Edf of the sample, right-continuous.
double edf(std::span<const double> sorted, double x) {
  auto it = std::upper_bound(sorted.begin(), sorted.end(), x);
  return static_cast<double>(it - sorted.begin()) / static_cast<double>(sorted.size());
}

// Fraction of pairs/tuples whose minimum exceeds x equals (#{X > x} / n)^m.
double min_survival(std::span<const double> sorted, double x, int m) {
  const double above = 1.0 - edf(sorted, x);
  return std::pow(above, m);
}

// Candidate points for a supremum over x >= 1: x = 1 and every jump point >= 1.
std::vector<double> sup_points(std::vector<double> jumps) {
  jumps.push_back(1.0);
  std::erase_if(jumps, [](double v) { return v < 1.0; });
  std::sort(jumps.begin(), jumps.end());
  jumps.erase(std::unique(jumps.begin(), jumps.end()), jumps.end());
  return jumps;
}

template <class Diff>
double integral_dfn(std::span<const double> sorted, Diff diff) {
  double acc = 0.0;
  for (double x : sorted) {
    if (x >= 1.0) acc += diff(x);
  }
  return acc / static_cast<double>(sorted.size());
}

template <class Diff>
double sup_abs(const std::vector<double>& points, Diff diff) {
  double best = 0.0;
  for (double x : points) best = std::max(best, std::abs(diff(x)));
  return best;
}

void require_two(const Sample& s) {
  if (s.size() < 2) throw Error(ErrorCode::kInvalidArgument, "need at least two observations");
}

StatisticValue up(double v) { return StatisticValue{v, RejectionSide::kUpper}; }

}  // namespace

RatioStatistics char_ratio_statistics(const Sample& s) {
  require_two(s);
  const auto x = s.sorted();
  const std::size_t n = x.size();
  WeightedStep ratio;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) ratio.add(x[j] / x[i], 1);
  }
  ratio.finalize(static_cast<std::uint64_t>(n * (n - 1) / 2));
  auto diff = [&](double t) { return ratio(t) - edf(x, t); };

  std::vector<double> jumps(x.begin(), x.end());
  ratio.append_points(jumps);
  return RatioStatistics{up(integral_dfn(x, diff)), up(sup_abs(sup_points(jumps), diff))};
}

MinStatistics char_min_statistics(int m, const Sample& s) {
  if (m < 2) throw Error(ErrorCode::kInvalidArgument, "order m must be at least 2");
  const auto x = s.sorted();
  std::vector<double> roots(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) roots[j] = std::pow(x[j], 1.0 / m);
  auto delta = [&](double t) {
    return edf(roots, t) - (1.0 - min_survival(x, t, m));
  };
  double i_acc = 0.0, m_acc = 0.0;
  for (double t : x) {
    if (t < 1.0) continue;
    const double d = delta(t);
    i_acc += d;
    m_acc += d * d;
  }
  const double nd = static_cast<double>(x.size());
  std::vector<double> jumps(x.begin(), x.end());
  jumps.insert(jumps.end(), roots.begin(), roots.end());
  return MinStatistics{up(i_acc / nd), up(sup_abs(sup_points(jumps), delta)), up(m_acc / nd)};
}

DiscrepancyStatistics char_rossberg_statistics(const Sample& s) {
  require_two(s);
  const auto x = s.sorted();
  const std::uint64_t n = x.size();
  // median/min over all n^3 index triples. With sorted positions a < b the triple
  // patterns {a,b,c>b} (six orderings) and {a,b,b} (three) give x_b / x_a; patterns
  // with the minimum repeated give 1.
  WeightedStep g;
  g.add(1.0, 3 * (n * (n - 1) / 2) + n);
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = a + 1; b < n; ++b) g.add(x[b] / x[a], 6 * (n - 1 - b) + 3);
  }
  g.finalize(n * n * n);
  auto diff = [&](double t) { return g(t) - (1.0 - min_survival(x, t, 2)); };

  std::vector<double> jumps(x.begin(), x.end());
  g.append_points(jumps);
  return DiscrepancyStatistics{up(integral_dfn(x, diff)),
                               up(sup_abs(sup_points(jumps), diff))};
}

DiscrepancyStatistics char_order_statistics(const Sample& s) {
  require_two(s);
  const auto x = s.sorted();
  const std::uint64_t n = x.size();
  // max/median: {c<a, a, b} (six orderings, a positions below) and {a,a,b} (three)
  // give x_b / x_a; {a,b,b} and {a,a,a} give 1.
  WeightedStep j_dist;
  j_dist.add(1.0, 3 * (n * (n - 1) / 2) + n);
  // median/min^2: {a,b,c>b} and {a,b,b} give x_b / x_a^2; {a,a,b>a} and {a,a,a}
  // give 1 / x_a.
  WeightedStep k_dist;
  for (std::uint64_t a = 0; a < n; ++a) {
    k_dist.add(x[a] / (x[a] * x[a]), 3 * (n - 1 - a) + 1);
    for (std::uint64_t b = a + 1; b < n; ++b) {
      j_dist.add(x[b] / x[a], 6 * a + 3);
      k_dist.add(x[b] / (x[a] * x[a]), 6 * (n - 1 - b) + 3);
    }
  }
  j_dist.finalize(n * n * n);
  k_dist.finalize(n * n * n);
  auto diff = [&](double t) { return j_dist(t) - k_dist(t); };

  std::vector<double> jumps;
  j_dist.append_points(jumps);
  k_dist.append_points(jumps);
  return DiscrepancyStatistics{up(integral_dfn(x, diff)),
                               up(sup_abs(sup_points(jumps), diff))};
}

}  // namespace paretogof
