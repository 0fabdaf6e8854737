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
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "paretogof/data_app.hpp"
#include "paretogof/error.hpp"

using namespace paretogof;

namespace {

double round2(double x) { return std::round(x * 100.0) / 100.0; }

bool three_decimals(double x, double expected) { return std::abs(x - expected) < 5e-4 + 1e-12; }

}  // namespace

TEST_CASE("degrouping examples") {
  const Sample one = degroup(GroupedData{{2}});
  CHECK(one.size() == 1);
  CHECK(one.values()[0] == doctest::Approx(2.0));
  const Sample twelve = degroup(GroupedData{std::vector<int>(12, 2)});
  CHECK(twelve.sorted()[0] == doctest::Approx(1.5 + 1.0 / 13.0));
  CHECK(twelve.sorted()[1] == doctest::Approx(1.5 + 2.0 / 13.0));
  CHECK(round2(twelve.sorted()[0]) == doctest::Approx(1.58));
  CHECK(round2(twelve.sorted()[1]) == doctest::Approx(1.65));
  CHECK_THROWS_AS(degroup(GroupedData{}), Error);
  CHECK_THROWS_AS(degroup(GroupedData{{0, 2}}), Error);
}

TEST_CASE("wind data") {
  const GroupedData w = wind_dataset();
  CHECK(w.values.size() == 40);
  CHECK(std::accumulate(w.values.begin(), w.values.end(), 0) == 369);
  const Sample d = degroup(w);
  CHECK(std::abs(d.mean() - 369.0 / 40.0) < 1e-12);
  const std::vector<double> published = wind_degrouped_published();
  REQUIRE(published.size() == 40);
  for (std::size_t i = 0; i < 40; ++i) {
    CAPTURE(i);
    CHECK(std::abs(round2(d.sorted()[i]) - published[i]) < 1e-9);
  }
}

TEST_CASE("wind estimates on the published values") {
  const Sample s(wind_degrouped_published());
  CHECK(three_decimals(fit_mle(s, kWindKnownSigma).params.beta, 0.764));
  CHECK(three_decimals(fit_mme(s, kWindKnownSigma).params.beta, 1.194));
  const FitResult mle2 = fit_mle(s), mme2 = fit_mme(s);
  CHECK(three_decimals(mle2.params.beta, 0.796));
  CHECK(three_decimals(mle2.params.sigma / kWindKnownSigma, 1.053));
  CHECK(three_decimals(mme2.params.beta, 1.202));
  CHECK(three_decimals(mme2.params.sigma / kWindKnownSigma, 1.031));
}

TEST_CASE("reading values") {
  std::stringstream plain("# comment\n\n1.5\n2\n 3.25 \n");
  CHECK(read_values(plain) == std::vector<double>{1.5, 2.0, 3.25});
  std::stringstream csv("name,value\na,1.5\nb,4\n");
  CHECK(read_values(csv, 1) == std::vector<double>{1.5, 4.0});
  std::stringstream bad("1\nfoo\n");
  CHECK_THROWS_AS(read_values(bad), Error);
  std::stringstream empty("# nothing\n");
  CHECK_THROWS_AS(read_values(empty), Error);
  std::stringstream short_row("1,2\n3\n");
  CHECK_THROWS_AS(read_values(short_row, 1), Error);
  CHECK_THROWS_AS(read_values_file("/nonexistent/file.txt"), Error);

  std::stringstream out;
  const std::vector<double> v{1.25, 3.0};
  write_dataset(out, "demo", v);
  CHECK(out.str().rfind("# paretogof dataset demo v1\n", 0) == 0);
  CHECK(read_values(out) == v);
}

TEST_CASE("shipped wind file matches the grouped data") {
  const std::vector<double> v = read_values_file(std::string(PARETOGOF_DATA_DIR) + "/wind_v1.txt");
  const GroupedData w = wind_dataset();
  REQUIRE(v.size() == w.values.size());
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == w.values[i]);
}

TEST_CASE("add-one p-values") {
  const std::vector<double> same(50, 2.0);
  CHECK(add_one_pvalue(same, 2.0) == 1.0);
  const std::vector<double> low(99, 1.0);
  CHECK(add_one_pvalue(low, 2.0) == doctest::Approx(0.01));
  const std::vector<double> mixed{1, 2, 3, 4};
  CHECK(add_one_pvalue(mixed, 3.0) == doctest::Approx(3.0 / 5.0));
}

TEST_CASE("bootstrap p-value reports") {
  const Sample s(wind_degrouped_published());
  const auto tests = parse_test_list("ks,ma,tslope");
  const Scenario sc{Estimator::kMLE, kWindKnownSigma};
  const PValueReport a = bootstrap_pvalue(tests, s, sc, 400, 7, 1);
  const PValueReport b = bootstrap_pvalue(tests, s, sc, 400, 7, 2);
  CHECK(a.p_value == b.p_value);
  CHECK(a.statistic == b.statistic);
  for (double p : a.p_value) {
    CHECK(p >= 1.0 / 401.0);
    CHECK(p <= 1.0);
  }
  CHECK(a.fit.params.sigma == kWindKnownSigma);
  CHECK(a.statistic[2] >= 0.0);

  std::stringstream csv1, csv2;
  a.write_csv(csv1);
  b.write_csv(csv2);
  CHECK(csv1.str() == csv2.str());
  CHECK(csv1.str().find("test,statistic,p_value\nks,") != std::string::npos);

  std::stringstream js;
  a.write_json(js);
  const auto doc = nlohmann::json::parse(js.str());
  CHECK(doc["meta"]["B"] == 400);
  CHECK(doc["meta"]["known_sigma"] == kWindKnownSigma);
  CHECK(doc["results"].size() == 3);
  CHECK(doc["meta"].find("wall_seconds") == doc["meta"].end());

  std::stringstream txt;
  a.write_text(txt);
  CHECK(txt.str().find("tslope") != std::string::npos);
}
