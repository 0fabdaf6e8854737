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
#include <set>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "doctest.h"
#include "oracles.hpp"
#include "paretogof/distributions.hpp"
#include "paretogof/error.hpp"
#include "paretogof/rng.hpp"
#include "paretogof/sample.hpp"

using namespace paretogof;

namespace {

// Kolmogorov distance between the edf of xs and a continuous cdf.
template <class F>
double kolmogorov(std::vector<double> xs, F cdf) {
  std::sort(xs.begin(), xs.end());
  const double n = xs.size();
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

std::vector<double> to_vec(const Sample& s) { return {s.values().begin(), s.values().end()}; }

}  // namespace

TEST_CASE("rng streams are deterministic and uniforms are open") {
  Rng a = Rng::stream(42, 7), b = Rng::stream(42, 7), c = Rng::stream(42, 8);
  bool differs = false;
  for (int i = 0; i < 1000; ++i) {
    const double ua = a.uniform(), ub = b.uniform(), uc = c.uniform();
    CHECK(ua == ub);
    differs |= ua != uc;
    CHECK(ua > 0.0);
    CHECK(ua < 1.0);
  }
  CHECK(differs);
  CHECK(derive_seed(1, 2) != derive_seed(2, 1));
}

TEST_CASE("sample validation and accessors") {
  CHECK_THROWS_AS(Sample({}), Error);
  CHECK_THROWS_AS(Sample({1.0, -2.0}), Error);
  CHECK_THROWS_AS(Sample({1.0, 0.0}), Error);
  CHECK_THROWS_AS(Sample({1.0, std::nan("")}), Error);
  CHECK_THROWS_AS(Sample({1.0, INFINITY}), Error);
  const Sample s({3.0, 1.0, 2.0});
  CHECK(s.min() == 1.0);
  CHECK(s.max() == 3.0);
  CHECK(s.mean() == doctest::Approx(2.0));
  CHECK(s.stddev() == doctest::Approx(1.0));
  CHECK(s.values()[0] == 3.0);
  CHECK(s.sorted()[0] == 1.0);
  CHECK(s.scaled(2.0).max() == 6.0);
  CHECK(Sample({5.0}).stddev() == 0.0);
}

TEST_CASE("pareto cdf and pdf") {
  CHECK(pareto_cdf({1, 1}, 1.0) == 0.0);
  CHECK(pareto_cdf({1, 1}, 0.5) == 0.0);
  CHECK(pareto_cdf({1, 1}, 2.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(pareto_pdf({1, 1}, 1.0) == doctest::Approx(1.0));
  CHECK(pareto_pdf({2, 1}, 2.0) == doctest::Approx(0.25));
  CHECK(pareto_pdf({2, 1}, 0.9) == 0.0);

  const ParetoParams p{2.5, 1.3};
  boost::math::quadrature::gauss_kronrod<double, 61> gk;
  const double integral =
      gk.integrate([&](double x) { return pareto_pdf(p, x); }, 1.3, 3.7, 15, 1e-14);
  CHECK(std::abs(pareto_cdf(p, 3.7) - integral) < 1e-10);

  const ParetoParams q{1.4, 1.1};
  const double h = 1e-5;
  const double fd = (pareto_cdf(q, 1.7 + h) - pareto_cdf(q, 1.7 - h)) / (2 * h);
  CHECK(std::abs(fd - pareto_pdf(q, 1.7)) < 1e-6);

  CHECK_THROWS_AS(ParetoParams::checked(0.0, 1.0), Error);
  CHECK_THROWS_AS(ParetoParams::checked(1.0, -1.0), Error);
}

TEST_CASE("pareto pdf integrates to one") {
  const ParetoParams p{1.7, 2.0};
  boost::math::quadrature::tanh_sinh<double> ts;
  const double upper = 2.0e6;
  const double body = ts.integrate([&](double x) { return pareto_pdf(p, x); }, 2.0, upper);
  const double tail = std::pow(p.sigma / upper, p.beta);
  CHECK(std::abs(body + tail - 1.0) < 1e-6);
}

TEST_CASE("pareto cdf is monotone and inverts the quantile") {
  const ParetoParams p{0.7, 3.0};
  double prev = 0.0;
  for (double x = 2.0; x < 100.0; x += 0.37) {
    const double f = pareto_cdf(p, x);
    CHECK(f >= prev);
    prev = f;
  }
  for (double u = 0.01; u < 1.0; u += 0.01) {
    CHECK(std::abs(pareto_cdf(p, pareto_quantile(p, u)) - u) < 1e-10);
  }
  CHECK(pareto_quantile({1, 1}, 0.5) == doctest::Approx(2.0));
  CHECK(pareto_quantile({2, 3}, 0.75) == doctest::Approx(6.0));
}

TEST_CASE("pareto sampler matches its cdf") {
  Rng rng(11);
  const ParetoParams p{2.0, 1.5};
  const Sample s = pareto_sample(p, 100000, rng);
  CHECK(s.min() >= 1.5);
  CHECK(kolmogorov(to_vec(s), [&](double x) { return pareto_cdf(p, x); }) < 0.01);

  Rng r1(5), r2(5);
  const Sample a = pareto_sample(p, 50, r1), b = pareto_sample(p, 50, r2);
  CHECK(std::equal(a.values().begin(), a.values().end(), b.values().begin()));
}

TEST_CASE("alternative samplers") {
  Rng rng(3);
  SUBCASE("gamma(1) is a shifted exponential") {
    const Sample s = sample_alternative({Family::kGamma, 1.0}, 100000, rng);
    CHECK(std::abs(s.mean() - 2.0) < 0.02);
  }
  SUBCASE("tilted pareto inverse cdf") {
    CHECK(alternative_quantile({Family::kTiltedPareto, 1.0}, 0.5) == doctest::Approx(3.0));
    CHECK(alternative_cdf({Family::kTiltedPareto, 1.0}, 3.0) == doctest::Approx(0.5));
  }
  SUBCASE("dhillon edf against the quadrature of its density") {
    const double theta = 0.2;
    auto density = [&](double x) {
      const double l = std::log(x);
      return (theta + 1.0) / x * std::exp(-std::pow(l, theta + 1.0)) * std::pow(l, theta);
    };
    boost::math::quadrature::tanh_sinh<double> ts;
    auto numeric_cdf = [&](double x) { return x <= 1.0 ? 0.0 : ts.integrate(density, 1.0, x); };
    const Sample s = sample_alternative({Family::kDhillon, theta}, 100000, rng);
    CHECK(s.min() > 1.0);
    // Quadrature cdf on a grid, closed-form cdf on the full edf.
    std::vector<double> xs = to_vec(s);
    std::sort(xs.begin(), xs.end());
    double d = 0.0;
    for (double x : {1.01, 1.1, 1.5, 2.0, 3.0, 5.0, 10.0, 30.0}) {
      const double edf =
          static_cast<double>(std::upper_bound(xs.begin(), xs.end(), x) - xs.begin()) / xs.size();
      d = std::max(d, std::abs(edf - numeric_cdf(x)));
      CHECK(std::abs(numeric_cdf(x) - alternative_cdf({Family::kDhillon, theta}, x)) < 1e-8);
    }
    CHECK(d < 0.01);
    CHECK(kolmogorov(xs, [&](double x) { return alternative_cdf({Family::kDhillon, theta}, x); }) <
          0.01);
  }
  SUBCASE("closed-form samplers follow their cdf") {
    for (const AlternativeSpec& alt : std::vector<AlternativeSpec>{
             {Family::kWeibull, 1.5}, {Family::kLogNormal, 1.0}, {Family::kHalfNormal, 1.0},
             {Family::kLinearFailureRate, 1.0}, {Family::kBetaExponential, 0.5},
             {Family::kTiltedPareto, 3.0}}) {
      const Sample s = sample_alternative(alt, 50000, rng);
      CAPTURE(alt.label());
      CHECK(kolmogorov(to_vec(s), [&](double x) { return alternative_cdf(alt, x); }) < 0.01);
    }
  }
  SUBCASE("gamma has no closed-form cdf") {
    CHECK_THROWS_AS(alternative_cdf({Family::kGamma, 1.0}, 2.0), Error);
    CHECK_THROWS_AS(alternative_quantile({Family::kGamma, 1.0}, 0.5), Error);
  }
}

TEST_CASE("every non-pareto alternative has minimum above one") {
  Rng rng(17);
  for (const AlternativeSpec& alt : std::vector<AlternativeSpec>{
           {Family::kGamma, 0.5}, {Family::kGamma, 1.2}, {Family::kWeibull, 0.5},
           {Family::kWeibull, 1.2}, {Family::kLogNormal, 1.0}, {Family::kHalfNormal, 1.0},
           {Family::kLinearFailureRate, 1.0}, {Family::kBetaExponential, 0.5},
           {Family::kTiltedPareto, 0.5}, {Family::kDhillon, 0.8}}) {
    CAPTURE(alt.label());
    CHECK(sample_alternative(alt, 20000, rng).min() > 1.0);
  }
}

TEST_CASE("alternative labels round trip") {
  for (const char* label : {"P(2,1)", "G(0.5)", "W(1.5)", "LN(1)", "HN(1)", "LFR(1)", "BE(0.5)",
                            "TP(3)", "D(0.8)"}) {
    CHECK(AlternativeSpec::parse(label).label() == label);
  }
  CHECK(AlternativeSpec::parse("weibull:1.5").label() == "W(1.5)");
  CHECK_THROWS_AS(AlternativeSpec::parse("Q(1)"), Error);
  CHECK_THROWS_AS(AlternativeSpec::parse("W(x)"), Error);
}
