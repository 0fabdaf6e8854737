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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "paretogof/critical_values.hpp"
#include "paretogof/error.hpp"

using namespace paretogof;

namespace {

double exceed_rate(const std::vector<double>& scores, double cv) {
  double c = 0.0;
  for (double v : scores) c += v > cv;
  return c / scores.size();
}

// Rejection rate of a full parametric bootstrap test over fresh samples.
double full_bootstrap_rate(const TestId& test, const AlternativeSpec& alt, const Scenario& sc,
                           std::size_t outer, std::size_t B, std::uint64_t seed) {
  std::size_t rejections = 0;
  for (std::size_t r = 0; r < outer; ++r) {
    Rng rng = Rng::stream(seed, r);
    const Sample s = sample_alternative(alt, 20, rng);
    const double obs = evaluate(test, s, sc).score();
    rejections += obs > bootstrap_cv(test, s, sc, 0.05, B, derive_seed(seed, r + outer));
  }
  return static_cast<double>(rejections) / outer;
}

}  // namespace

TEST_CASE("quantile indices") {
  std::vector<double> v(100);
  for (int i = 0; i < 100; ++i) v[i] = 100 - i;  // shuffled order is irrelevant
  CHECK(bootstrap_quantile(v, 0.05) == 95.0);
  CHECK(upper_quantile(v, 0.05) == 95.0);
  CHECK(bootstrap_quantile(v, 0.5) == 50.0);
  std::vector<double> w(20000);
  for (int i = 0; i < 20000; ++i) w[i] = i + 1;
  CHECK(upper_quantile(w, 0.05) == 19000.0);
  CHECK(bootstrap_quantile(w, 0.05) == 19000.0);
  CHECK(upper_quantile(std::vector<double>{1, 2, 3}, 0.5) == 2.0);
  CHECK_THROWS_AS(upper_quantile(v, 0.0), Error);
  CHECK_THROWS_AS(upper_quantile(v, 1.0), Error);
  CHECK_THROWS_AS(upper_quantile(std::vector<double>{}, 0.05), Error);
}

TEST_CASE("fixed critical values") {
  const TestId ks = TestId::parse("ks");
  SUBCASE("monotone in alpha") {
    const double c01 = mc_fixed_cv(ks, 20, 0.01, 4000, 1);
    const double c05 = mc_fixed_cv(ks, 20, 0.05, 4000, 1);
    const double c10 = mc_fixed_cv(ks, 20, 0.10, 4000, 1);
    CHECK(c01 >= c05);
    CHECK(c05 >= c10);
  }
  SUBCASE("alpha 0.5 is the null median") {
    const TestId t[] = {ks};
    const ScoreMatrix m = simulate_null_scores(t, 20, 2, 1001, 3);
    std::vector<double> v = m.scores[0];
    std::nth_element(v.begin(), v.begin() + 500, v.end());
    CHECK(mc_fixed_cv(ks, 20, 0.5, 1001, 3) == v[500]);
  }
  SUBCASE("independent of the thread count") {
    const auto tests = parse_test_list("ks,ad,kl1,dk,g2,t");
    const ScoreMatrix a = simulate_null_scores(tests, 20, 2, 300, 9, 1);
    const ScoreMatrix b = simulate_null_scores(tests, 20, 2, 300, 9, 3);
    CHECK(a.scores == b.scores);
  }
  SUBCASE("too few replications") {
    try {
      mc_fixed_cv(ks, 20, 0.01, 100, 1);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kInsufficientResolution);
    }
  }
  SUBCASE("shape independence within the 99% binomial band") {
    const TestId t[] = {ks};
    const std::size_t reps = 20000;
    const ScoreMatrix a = simulate_null_scores(t, 20, 2, reps, 11, 0, {1.0, 1.0});
    const ScoreMatrix b = simulate_null_scores(t, 20, 2, reps, 12, 0, {5.0, 1.0});
    const double cv_b = upper_quantile(b.scores[0], 0.05);
    const double band = 2.576 * std::sqrt(2.0 * 0.05 * 0.95 / reps);
    CHECK(std::abs(exceed_rate(a.scores[0], cv_b) - 0.05) < band);
  }
  SUBCASE("size round trip on P(2,1)") {
    const auto tests = parse_test_list("ks,cm,ma,kl10,s1");
    const ScoreMatrix null = simulate_null_scores(tests, 20, 2, 10000, 21);
    const ScoreMatrix fresh = simulate_null_scores(tests, 20, 2, 10000, 22, 0, {2.0, 1.0});
    for (std::size_t i = 0; i < tests.size(); ++i) {
      CAPTURE(tests[i].name());
      const double rate = exceed_rate(fresh.scores[i], upper_quantile(null.scores[i], 0.05));
      CHECK(rate >= 0.035);
      CHECK(rate <= 0.065);
    }
  }
}

TEST_CASE("bootstrap critical values") {
  Rng rng(2);
  const Sample s = pareto_sample({2.0, 1.0}, 20, rng);
  const Scenario mme{Estimator::kMME, std::nullopt};
  const TestId ks = TestId::parse("ks");
  SUBCASE("B = 100 returns the 95th order statistic") {
    const TestId t[] = {ks};
    std::vector<double> v = bootstrap_scores(t, s, mme, 100, 4).scores[0];
    std::sort(v.begin(), v.end());
    CHECK(bootstrap_cv(ks, s, mme, 0.05, 100, 4) == v[94]);
  }
  SUBCASE("monotone in alpha") {
    CHECK(bootstrap_cv(ks, s, mme, 0.01, 500, 4) >= bootstrap_cv(ks, s, mme, 0.10, 500, 4));
  }
  SUBCASE("deterministic across thread counts") {
    const auto tests = parse_test_list("ks,ma,dk,g2");
    CHECK(bootstrap_scores(tests, s, mme, 200, 6, 1).scores ==
          bootstrap_scores(tests, s, mme, 200, 6, 4).scores);
  }
  SUBCASE("full bootstrap size on P(2,1)") {
    const double rate = full_bootstrap_rate(ks, {Family::kPareto, 2.0}, mme, 1000, 500, 17);
    CHECK(rate >= 0.03);
    CHECK(rate <= 0.07);
  }
}

TEST_CASE("warp-speed power") {
  const Scenario mme2{Estimator::kMME, std::nullopt};
  SUBCASE("null rejection rate") {
    const auto tests = parse_test_list("ks,ma");
    const WarpSpeedResult r =
        warp_speed_power(tests, {Family::kPareto, 2.0}, 20, 0.05, mme2, 50000, 3);
    for (double p : r.power) {
      CHECK(p >= 0.035);
      CHECK(p <= 0.065);
    }
  }
  SUBCASE("MA against TP(3)") {
    const auto tests = parse_test_list("ma");
    const WarpSpeedResult r =
        warp_speed_power(tests, {Family::kTiltedPareto, 3.0}, 20, 0.05, mme2, 20000, 5);
    CHECK(std::abs(r.power[0] - 0.92) < 0.03);
  }
  SUBCASE("agrees with the full bootstrap") {
    const auto tests = parse_test_list("ks,cm,ma,s1,g2");
    const AlternativeSpec alt{Family::kWeibull, 1.2};
    const WarpSpeedResult warp = warp_speed_power(tests, alt, 20, 0.05, mme2, 2000, 8);
    for (std::size_t i = 0; i < tests.size(); ++i) {
      CAPTURE(tests[i].name());
      const double full = full_bootstrap_rate(tests[i], alt, mme2, 2000, 500, 40 + i);
      CHECK(std::abs(warp.power[i] - full) < 0.03);
    }
  }
}

TEST_CASE("critical-value tables") {
  const auto tests = parse_test_list("ks,ad");
  const std::vector<double> alphas{0.05, 0.10};
  const CriticalValueTable t = build_cv_table(tests, 20, alphas, 2, 2000, 5);
  CHECK(t.entries().size() == 4);
  std::stringstream ss;
  t.write_csv(ss);
  CHECK(ss.str().rfind("# paretogof critical values v1\n", 0) == 0);
  const CriticalValueTable back = CriticalValueTable::read_csv(ss);
  REQUIRE(back.entries().size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(back.entries()[i].cv == t.entries()[i].cv);
    CHECK(back.entries()[i].test == t.entries()[i].test);
    CHECK(back.entries()[i].estimator == "mle2");
  }
  CHECK(back.lookup("ad", 20, 0.10, "mle2") == t.entries()[3].cv);
  CHECK_FALSE(back.lookup("ad", 30, 0.10, "mle2").has_value());
  CHECK(cv_estimator_label(Estimator::kMLE, 1) == "mle1");
  std::stringstream bad("# paretogof critical values v9\n");
  CHECK_THROWS_AS(CriticalValueTable::read_csv(bad), Error);
  std::stringstream bad_row(
      "# paretogof critical values v1\ntest,n,alpha,estimator,cv,reps,seed\nks,20\n");
  CHECK_THROWS_AS(CriticalValueTable::read_csv(bad_row), Error);
  CHECK_THROWS_AS(build_cv_table(tests, 20, std::vector<double>{0.001}, 2, 2000, 5), Error);
}
