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

#include "paretogof/data_app.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "paretogof/critical_values.hpp"
#include "paretogof/error.hpp"

namespace paretogof {

void GroupedData::validate() const {
  if (values.empty()) throw Error(ErrorCode::kInvalidArgument, "grouped data is empty");
  for (int v : values) {
    if (v < 1) throw Error(ErrorCode::kInvalidArgument, "grouped values must be at least 1");
  }
}

Sample degroup(const GroupedData& g) {
  g.validate();
  std::vector<int> v = g.values;
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size();) {
    std::size_t k = 1;
    while (i + k < v.size() && v[i + k] == v[i]) ++k;
    const double lower = v[i] - 0.5;
    for (std::size_t j = 1; j <= k; ++j) {
      out.push_back(lower + static_cast<double>(j) / static_cast<double>(k + 1));
    }
    i += k;
  }
  return Sample(std::move(out));
}

GroupedData wind_dataset() {
  return GroupedData{{2, 2,  2,  2,  2,  2,  2,  2,  2,  2,  2,  2,  3,  3,
                      3, 3,  4,  4,  4,  5,  5,  5,  5,  6,  6,  6,  6,  8,
                      8, 9,  15, 17, 22, 23, 24, 24, 25, 27, 32, 43}};
}

std::vector<double> wind_degrouped_published() {
  return {1.58, 1.65, 1.73, 1.81, 1.88, 1.96, 2.04, 2.12, 2.19,  2.27,
          2.35, 2.42, 2.70, 2.90, 3.10, 3.30, 3.75, 4.00, 4.25,  4.70,
          4.90, 5.10, 5.30, 5.70, 5.90, 6.10, 6.30, 7.83, 8.17,  9.00,
          15.0, 17.0, 22.0, 23.0, 23.83, 24.17, 25.0, 27.0, 32.0, 43.0};
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::optional<double> parse_double(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) return std::nullopt;
  std::size_t used = 0;
  try {
    const double v = std::stod(t, &used);
    if (used != t.size()) return std::nullopt;
    return v;
  } catch (const std::logic_error&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<double> read_values(std::istream& in, std::size_t column) {
  std::vector<double> out;
  std::string line;
  bool first_row = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(t);
    std::string cell;
    while (std::getline(ss, cell, ',')) fields.push_back(cell);
    if (column >= fields.size()) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": missing column " +
                                         std::to_string(column));
    }
    const auto v = parse_double(fields[column]);
    if (!v) {
      if (first_row) {
        first_row = false;
        continue;
      }
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": not a number: '" +
                                         trim(fields[column]) + "'");
    }
    first_row = false;
    out.push_back(*v);
  }
  if (out.empty()) throw Error(ErrorCode::kParse, "no observations found");
  return out;
}

std::vector<double> read_values_file(const std::string& path, std::size_t column) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  return read_values(in, column);
}

void write_dataset(std::ostream& out, const std::string& name, std::span<const double> values) {
  out << "# paretogof dataset " << name << " v" << kDatasetFormatVersion << '\n';
  for (double v : values) out << std::setprecision(17) << v << '\n';
}

double add_one_pvalue(std::span<const double> bootstrap, double observed) {
  const auto exceed = std::count_if(bootstrap.begin(), bootstrap.end(),
                                    [&](double v) { return v >= observed; });
  return static_cast<double>(1 + exceed) / static_cast<double>(bootstrap.size() + 1);
}

PValueReport bootstrap_pvalue(std::span<const TestId> tests, const Sample& s,
                              const Scenario& scenario, std::size_t B, std::uint64_t seed,
                              unsigned threads) {
  const auto t0 = std::chrono::steady_clock::now();
  PValueReport r;
  r.tests.assign(tests.begin(), tests.end());
  r.scenario = scenario;
  r.n = s.size();
  r.B = B;
  r.seed = seed;
  r.fit = fit(scenario.estimator, s, scenario.known_sigma);
  for (const auto& v : evaluate(tests, s, scenario)) r.statistic.push_back(v.score());
  const ScoreMatrix boot = bootstrap_scores(tests, s, scenario, B, seed, threads);
  r.redraws = boot.redraws;
  for (std::size_t t = 0; t < tests.size(); ++t) {
    r.p_value.push_back(add_one_pvalue(boot.scores[t], r.statistic[t]));
  }
  r.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

namespace {

nlohmann::json report_meta(const PValueReport& r) {
  nlohmann::json meta = {{"estimator", std::string(to_string(r.scenario.estimator))},
                         {"params_estimated", r.scenario.params_estimated()},
                         {"beta", r.fit.params.beta},
                         {"sigma", r.fit.params.sigma},
                         {"n", r.n},
                         {"B", r.B},
                         {"seed", r.seed},
                         {"redraws", r.redraws}};
  meta["known_sigma"] = r.scenario.known_sigma ? nlohmann::json(*r.scenario.known_sigma)
                                               : nlohmann::json(nullptr);
  return meta;
}

}  // namespace

void PValueReport::write_text(std::ostream& out) const {
  out << "# estimator=" << to_string(scenario.estimator)
      << " params=" << scenario.params_estimated();
  if (scenario.known_sigma) out << " sigma=" << *scenario.known_sigma;
  out << " n=" << n << " B=" << B << " seed=" << seed << '\n';
  out << "# fit: beta=" << std::setprecision(6) << fit.params.beta
      << " sigma=" << fit.params.sigma << '\n';
  out << std::left << std::setw(10) << "test" << std::right << std::setw(16) << "statistic"
      << std::setw(10) << "p" << '\n';
  for (std::size_t t = 0; t < tests.size(); ++t) {
    out << std::left << std::setw(10) << tests[t].name() << std::right << std::setw(16)
        << std::setprecision(8) << statistic[t] << std::setw(10) << std::fixed
        << std::setprecision(3) << p_value[t] << std::defaultfloat << '\n';
  }
  if (redraws > 0) out << "# redraws=" << redraws << '\n';
}

void PValueReport::write_csv(std::ostream& out) const {
  out << "# " << report_meta(*this).dump() << '\n';
  out << "test,statistic,p_value\n";
  for (std::size_t t = 0; t < tests.size(); ++t) {
    out << tests[t].name() << ',' << std::setprecision(17) << statistic[t] << ','
        << p_value[t] << '\n';
  }
}

void PValueReport::write_json(std::ostream& out) const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t t = 0; t < tests.size(); ++t) {
    rows.push_back(
        {{"test", tests[t].name()}, {"statistic", statistic[t]}, {"p_value", p_value[t]}});
  }
  out << nlohmann::json{{"meta", report_meta(*this)}, {"results", rows}}.dump(2) << '\n';
}

}  // namespace paretogof
