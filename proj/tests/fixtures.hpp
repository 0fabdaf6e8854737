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

// Shared helpers for the unit tests and the acceptance binary.

#ifndef PARETOGOF_TESTS_FIXTURES_HPP_
#define PARETOGOF_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "paretogof/pipeline.hpp"
#include "paretogof/test_id.hpp"

namespace fixtures {

inline const std::vector<double> kFivePoint{1.1, 1.4, 2.0, 3.5, 9.0};

// One representative of every statistic family.
inline std::vector<paretogof::TestId> full_battery() {
  return paretogof::parse_test_list(
      "ks,cm,ad,ma,za,zb,zc,kl1,kl2,hd1,hd2,dk,dh,dj,dt,s05,s1,g05,g2,tslope,t,v,i2,i3,k2,k3,m2,"
      "m3,i1char,d1char,i2char,d2char");
}

inline std::vector<double> map_values(const paretogof::Sample& s,
                                      const std::function<double(double)>& f) {
  std::vector<double> out(s.values().begin(), s.values().end());
  for (double& v : out) v = f(v);
  return out;
}

// Largest |a - b| / max(1, |b|) over the battery, with the offending test name.
struct Deviation {
  double worst = 0.0;
  std::string test;
};

inline Deviation compare_scenarios(const std::vector<paretogof::TestId>& tests,
                                   const paretogof::Sample& a, const paretogof::Scenario& sa,
                                   const paretogof::Sample& b, const paretogof::Scenario& sb) {
  const auto va = paretogof::evaluate(tests, a, sa);
  const auto vb = paretogof::evaluate(tests, b, sb);
  Deviation d;
  for (std::size_t i = 0; i < tests.size(); ++i) {
    const double rel = std::abs(va[i].value - vb[i].value) / std::max(1.0, std::abs(vb[i].value));
    if (rel > d.worst || !std::isfinite(rel)) {
      d.worst = std::isfinite(rel) ? rel : INFINITY;
      d.test = tests[i].name();
    }
  }
  return d;
}

}  // namespace fixtures

#endif  // PARETOGOF_TESTS_FIXTURES_HPP_
