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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "paretogof/distributions.hpp"
#include "paretogof/error.hpp"
#include "paretogof/statistics.hpp"

using namespace paretogof;

namespace {

const std::vector<double> kFive{1.1, 1.4, 2.0, 3.5, 9.0};

bool close(double a, double b) { return std::abs(a - b) <= 1e-12; }

void compare_all(const std::vector<double>& x) {
  const Sample s(x);
  const RatioStatistics tv = char_ratio_statistics(s);
  const oracle::Pair otv = oracle::ratio_tv(x);
  CHECK(close(tv.t.value, otv.integral));
  CHECK(close(tv.v.value, otv.sup));
  for (int m : {2, 3}) {
    CAPTURE(m);
    const MinStatistics ikm = char_min_statistics(m, s);
    const oracle::Triple3 o = oracle::min_ikm(x, m);
    CHECK(close(ikm.i.value, o.i));
    CHECK(close(ikm.k.value, o.k));
    CHECK(close(ikm.m.value, o.m));
  }
  const DiscrepancyStatistics r = char_rossberg_statistics(s);
  const oracle::Pair orr = oracle::rossberg(x);
  CHECK(close(r.integral.value, orr.integral));
  CHECK(close(r.sup.value, orr.sup));
  const DiscrepancyStatistics o2 = char_order_statistics(s);
  const oracle::Pair oo = oracle::order_jk(x);
  CHECK(close(o2.integral.value, oo.integral));
  CHECK(close(o2.sup.value, oo.sup));
}

}  // namespace

TEST_CASE("ratio statistics on {1, 2}") {
  const RatioStatistics r = char_ratio_statistics(Sample({1.0, 2.0}));
  CHECK(close(r.t.value, -0.25));
  CHECK(close(r.v.value, 0.5));
}

TEST_CASE("rossberg statistics on {1, 2}") {
  // G(1) = 5/8 and H(1) = 3/4, so the integral picks up (5/8 - 3/4) / 2 at x = 1;
  // at x = 2 both functions equal 1.
  const DiscrepancyStatistics d = char_rossberg_statistics(Sample({1.0, 2.0}));
  CHECK(close(d.integral.value, (5.0 / 8.0 - 3.0 / 4.0) / 2.0));
  CHECK(close(d.sup.value, 1.0 / 8.0));
}

TEST_CASE("order statistics on {1, 2} against enumeration") {
  const oracle::Pair o = oracle::order_jk({1.0, 2.0});
  const DiscrepancyStatistics d = char_order_statistics(Sample({1.0, 2.0}));
  CHECK(close(d.integral.value, o.integral));
  CHECK(close(d.sup.value, o.sup));
}

TEST_CASE("minimum statistics and the survival-count identity") {
  const std::vector<double> mins = oracle::tuple_minima({1, 2, 3}, 2);
  CHECK(close(oracle::frac_le(mins, 2.0), 1.0 - 1.0 / 9.0));
  CHECK_THROWS_AS(char_min_statistics(1, Sample({1.0, 2.0})), Error);
}

TEST_CASE("five-point sample matches brute force") { compare_all(kFive); }

TEST_CASE("random unit-scale samples match brute force") {
  Rng rng(31);
  for (int rep = 0; rep < 5; ++rep) {
    const Sample s = pareto_sample({1.0, 1.0}, 9, rng);
    std::vector<double> x(s.values().begin(), s.values().end());
    const double mn = s.min();
    for (double& v : x) v /= mn;
    compare_all(x);
  }
}

TEST_CASE("statistics are invariant under powers of the data") {
  std::vector<double> sq;
  for (double v : kFive) sq.push_back(v * v);
  const Sample a(kFive), b(sq);
  CHECK(close(char_ratio_statistics(a).t.value, char_ratio_statistics(b).t.value));
  CHECK(close(char_ratio_statistics(a).v.value, char_ratio_statistics(b).v.value));
  CHECK(close(char_min_statistics(2, a).k.value, char_min_statistics(2, b).k.value));
  CHECK(close(char_rossberg_statistics(a).sup.value, char_rossberg_statistics(b).sup.value));
  CHECK(close(char_order_statistics(a).integral.value, char_order_statistics(b).integral.value));
}
