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

#include "paretogof/sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "paretogof/error.hpp"

namespace paretogof {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error(ErrorCode::kInvalidArgument, "sample is empty");
  for (double v : values_) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw Error(ErrorCode::kInvalidArgument, "observations must be finite and positive");
    }
  }
  sorted_ = values_;
  std::sort(sorted_.begin(), sorted_.end());
}

double Sample::mean() const noexcept {
  return std::accumulate(sorted_.begin(), sorted_.end(), 0.0) /
         static_cast<double>(sorted_.size());
}

double Sample::stddev() const noexcept {
  const std::size_t n = sorted_.size();
  if (n < 2) return 0.0;
  const double m = mean();
  double ss = 0.0;
  for (double v : sorted_) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(n - 1));
}

Sample Sample::scaled(double c) const {
  std::vector<double> out(values_);
  for (double& v : out) v *= c;
  return Sample(std::move(out));
}

}  // namespace paretogof
