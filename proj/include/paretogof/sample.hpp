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

#ifndef PARETOGOF_SAMPLE_HPP_
#define PARETOGOF_SAMPLE_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace paretogof {

// A batch of positive observations together with its ascending order statistics.
// Immutable once built; every statistic reads `sorted()`.
class Sample {
 public:
  // Throws Error(kInvalidArgument) when empty or when any value is not a finite,
  // strictly positive number.
  explicit Sample(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> sorted() const noexcept { return sorted_; }
  std::size_t size() const noexcept { return values_.size(); }

  double min() const noexcept { return sorted_.front(); }
  double max() const noexcept { return sorted_.back(); }
  double mean() const noexcept;
  // Unbiased (n - 1) standard deviation; 0 for a single observation.
  double stddev() const noexcept;

  // c * x for every observation.
  Sample scaled(double c) const;

 private:
  std::vector<double> values_;
  std::vector<double> sorted_;
};

}  // namespace paretogof

#endif  // PARETOGOF_SAMPLE_HPP_
