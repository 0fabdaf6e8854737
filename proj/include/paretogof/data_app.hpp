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

#ifndef PARETOGOF_DATA_APP_HPP_
#define PARETOGOF_DATA_APP_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paretogof/estimation.hpp"
#include "paretogof/pipeline.hpp"
#include "paretogof/sample.hpp"
#include "paretogof/test_id.hpp"

namespace paretogof {

// Integer-rounded observations; every value must be at least 1.
struct GroupedData {
  std::vector<int> values;

  void validate() const;
};

// Replaces each run of k tied values x by x - 1/2 + j/(k+1), j = 1..k. Output is sorted.
Sample degroup(const GroupedData& g);

// 1977 wind catastrophe losses, millions of USD, rounded to integers (40 values).
GroupedData wind_dataset();

// The de-grouped wind data as published, rounded to two decimals.
std::vector<double> wind_degrouped_published();

inline constexpr double kWindKnownSigma = 1.5;
inline constexpr int kDatasetFormatVersion = 1;

// Reads one observation per line; `column` selects a field of comma-separated rows.
// Blank lines and lines starting with '#' are skipped, as is a non-numeric first row.
std::vector<double> read_values(std::istream& in, std::size_t column = 0);
std::vector<double> read_values_file(const std::string& path, std::size_t column = 0);

// Writes a dataset in the versioned resource format.
void write_dataset(std::ostream& out, const std::string& name, std::span<const double> values);

struct PValueReport {
  std::vector<TestId> tests;
  std::vector<double> statistic;  // observed score (|S| for two-sided tests)
  std::vector<double> p_value;
  FitResult fit;
  Scenario scenario;
  std::size_t n = 0;
  std::size_t B = 0;
  std::uint64_t seed = 0;
  std::size_t redraws = 0;
  double wall_seconds = 0.0;

  void write_text(std::ostream& out) const;
  void write_csv(std::ostream& out) const;
  void write_json(std::ostream& out) const;
};

// (1 + #{b : S*_b >= observed}) / (B + 1).
double add_one_pvalue(std::span<const double> bootstrap, double observed);

PValueReport bootstrap_pvalue(std::span<const TestId> tests, const Sample& s,
                              const Scenario& scenario, std::size_t B, std::uint64_t seed,
                              unsigned threads = 0);

}  // namespace paretogof

#endif  // PARETOGOF_DATA_APP_HPP_
