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

#include "paretogof/distributions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <vector>

#include "paretogof/error.hpp"

namespace paretogof {

ParetoParams ParetoParams::checked(double beta, double sigma) {
  if (!(std::isfinite(beta) && beta > 0.0) || !(std::isfinite(sigma) && sigma > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "Pareto parameters must be positive");
  }
  return ParetoParams{beta, sigma};
}

double pareto_cdf(const ParetoParams& p, double x) noexcept {
  if (x <= p.sigma) return 0.0;
  return -std::expm1(-p.beta * std::log(x / p.sigma));
}

double pareto_pdf(const ParetoParams& p, double x) noexcept {
  if (x < p.sigma) return 0.0;
  return p.beta / p.sigma * std::exp(-(p.beta + 1.0) * std::log(x / p.sigma));
}

double pareto_quantile(const ParetoParams& p, double u) noexcept {
  return p.sigma * std::exp(-std::log1p(-u) / p.beta);
}

Sample pareto_sample(const ParetoParams& p, std::size_t n, Rng& rng) {
  std::vector<double> out(n);
  for (double& v : out) v = pareto_quantile(p, rng.uniform());
  return Sample(std::move(out));
}

namespace {

struct FamilyName {
  Family family;
  const char* label;
  const char* name;
};

constexpr FamilyName kFamilies[] = {
    {Family::kPareto, "P", "pareto"},
    {Family::kGamma, "G", "gamma"},
    {Family::kWeibull, "W", "weibull"},
    {Family::kLogNormal, "LN", "lognormal"},
    {Family::kHalfNormal, "HN", "halfnormal"},
    {Family::kLinearFailureRate, "LFR", "lfr"},
    {Family::kBetaExponential, "BE", "betaexp"},
    {Family::kTiltedPareto, "TP", "tiltedpareto"},
    {Family::kDhillon, "D", "dhillon"},
};

std::string format_theta(double theta) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, theta);
  (void)ec;
  return std::string(buf, end);
}

double parse_double(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParse, "bad number '" + std::string(s) + "'");
  }
  return v;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

void check_theta(const AlternativeSpec& alt) {
  if (!(std::isfinite(alt.theta) && alt.theta > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "alternative parameter must be positive");
  }
}

}  // namespace

std::string AlternativeSpec::label() const {
  for (const auto& f : kFamilies) {
    if (f.family == family) {
      std::string s = std::string(f.label) + "(" + format_theta(theta);
      if (family == Family::kPareto) s += ",1";
      return s + ")";
    }
  }
  throw Error(ErrorCode::kUnsupportedFamily, "unknown family tag");
}

AlternativeSpec AlternativeSpec::parse(std::string_view text) {
  std::string_view head;
  std::string_view arg;
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    head = text.substr(0, colon);
    arg = text.substr(colon + 1);
  } else {
    auto open = text.find('(');
    if (open == std::string_view::npos || text.back() != ')') {
      throw Error(ErrorCode::kParse, "bad alternative '" + std::string(text) + "'");
    }
    head = text.substr(0, open);
    arg = text.substr(open + 1, text.size() - open - 2);
    // "P(2,1)": the scale is always 1.
    if (auto comma = arg.find(','); comma != std::string_view::npos) {
      if (parse_double(arg.substr(comma + 1)) != 1.0) {
        throw Error(ErrorCode::kParse, "only unit-scale Pareto alternatives are supported");
      }
      arg = arg.substr(0, comma);
    }
  }
  const std::string h = lower(head);
  for (const auto& f : kFamilies) {
    if (h == lower(f.label) || h == f.name) {
      AlternativeSpec spec{f.family, parse_double(arg)};
      check_theta(spec);
      return spec;
    }
  }
  throw Error(ErrorCode::kParse, "unknown family '" + std::string(head) + "'");
}

double alternative_quantile(const AlternativeSpec& alt, double u) {
  check_theta(alt);
  const double t = alt.theta;
  const double e = -std::log1p(-u);  // standard exponential quantile
  switch (alt.family) {
    case Family::kPareto:
      return pareto_quantile(ParetoParams{t, 1.0}, u);
    case Family::kWeibull:
      return 1.0 + std::pow(e, 1.0 / t);
    case Family::kLinearFailureRate:
      // Root of y + t y^2 / 2 = e, written to avoid cancellation.
      return 1.0 + 2.0 * e / (1.0 + std::sqrt(1.0 + 2.0 * t * e));
    case Family::kBetaExponential:
      return 1.0 - std::log1p(-std::pow(u, 1.0 / t));
    case Family::kTiltedPareto:
      return (1.0 + t) / (1.0 - u) - t;
    case Family::kDhillon:
      return std::exp(std::pow(e, 1.0 / (t + 1.0)));
    default:
      throw Error(ErrorCode::kUnsupportedFamily,
                  "no closed-form quantile for " + alt.label());
  }
}

double alternative_cdf(const AlternativeSpec& alt, double x) {
  check_theta(alt);
  const double t = alt.theta;
  const double y = x - 1.0;
  if (y <= 0.0) return 0.0;
  switch (alt.family) {
    case Family::kPareto:
      return pareto_cdf(ParetoParams{t, 1.0}, x);
    case Family::kWeibull:
      return -std::expm1(-std::pow(y, t));
    case Family::kLogNormal:
      return 0.5 * std::erfc(-std::log(y) / (t * std::numbers::sqrt2));
    case Family::kHalfNormal:
      return std::erf(y / (t * std::numbers::sqrt2));
    case Family::kLinearFailureRate:
      return -std::expm1(-y - t * y * y / 2.0);
    case Family::kBetaExponential:
      return std::pow(-std::expm1(-y), t);
    case Family::kTiltedPareto:
      return 1.0 - (1.0 + t) / (x + t);
    case Family::kDhillon:
      return -std::expm1(-std::pow(std::log(x), t + 1.0));
    default:
      throw Error(ErrorCode::kUnsupportedFamily, "no closed-form cdf for " + alt.label());
  }
}

Sample sample_alternative(const AlternativeSpec& alt, std::size_t n, Rng& rng) {
  check_theta(alt);
  std::vector<double> out(n);
  switch (alt.family) {
    case Family::kGamma:
      for (double& v : out) v = 1.0 + rng.gamma(alt.theta);
      break;
    case Family::kLogNormal:
      for (double& v : out) v = 1.0 + std::exp(alt.theta * rng.normal());
      break;
    case Family::kHalfNormal:
      for (double& v : out) v = 1.0 + alt.theta * std::abs(rng.normal());
      break;
    case Family::kPareto:
    case Family::kWeibull:
    case Family::kLinearFailureRate:
    case Family::kBetaExponential:
    case Family::kTiltedPareto:
    case Family::kDhillon:
      for (double& v : out) v = alternative_quantile(alt, rng.uniform());
      break;
    default:
      throw Error(ErrorCode::kUnsupportedFamily, "unknown family tag");
  }
  return Sample(std::move(out));
}

}  // namespace paretogof
