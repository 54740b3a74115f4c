// Copyright 2026 The footprint Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <nlohmann/json.hpp>

#include "footprint/errors.h"
#include "footprint/event_log.h"
#include "footprint/metrics.h"
#include "footprint/series_io.h"
#include "test_support.h"

namespace footprint {
namespace {

Profile pmf(std::vector<double> v) { return Profile{std::move(v), 1}; }

TEST(L1, Examples) {
  EXPECT_EQ(l1(pmf({0.5, 0.5}), pmf({0.5, 0.5})), 0.0);
  EXPECT_EQ(l1(pmf({1, 0}), pmf({0, 1})), 2.0);
  EXPECT_DOUBLE_EQ(l1(pmf({0.75, 0.25}), pmf({0.5, 0.5})), 0.5);
}

TEST(L1, Errors) {
  EXPECT_THROW(l1(Profile{{0, 0}, 0}, pmf({1, 0})), UndefinedDistanceError);
  EXPECT_THROW(l1(pmf({1, 0}), Profile{{0, 0}, 0}), UndefinedDistanceError);
  EXPECT_THROW(l1(pmf({1, 0}), pmf({1, 0, 0})), DimensionError);
  EXPECT_THROW(l2(pmf({1, 0}), pmf({1})), DimensionError);
  EXPECT_THROW(kl(Profile{{0, 0}, 0}, pmf({1, 0})), UndefinedDistanceError);
}

TEST(L2, Examples) {
  EXPECT_EQ(l2(pmf({0.3, 0.7}), pmf({0.3, 0.7})), 0.0);
  EXPECT_DOUBLE_EQ(l2(pmf({1, 0}), pmf({0, 1})), std::sqrt(2.0));
  EXPECT_NEAR(l2(pmf({0.75, 0.25}), pmf({0.5, 0.5})), std::sqrt(0.125), 1e-9);
  EXPECT_NEAR(l2(pmf({0.75, 0.25}), pmf({0.5, 0.5})), 0.353553, 1e-6);
}

TEST(Kl, Examples) {
  EXPECT_LE(kl(pmf({0.2, 0.3, 0.5}), pmf({0.2, 0.3, 0.5}), 1e-12), 1e-9);
  EXPECT_NEAR(kl(pmf({1, 0}), pmf({0.5, 0.5}), 1e-9), 1.0, 1e-6);
  const double v = kl(pmf({0.5, 0.5}), pmf({1, 0}), 1e-6);
  EXPECT_TRUE(std::isfinite(v));
  EXPECT_GT(v, 0.0);
  EXPECT_NEAR(v, testing::brute_kl({0.5, 0.5}, {1, 0}, 1e-6), 1e-9);
}

TEST(Kl, EpsilonMustBePositive) {
  EXPECT_THROW(kl(pmf({1, 0}), pmf({0.5, 0.5}), 0.0), ParameterError);
  EXPECT_THROW(kl(pmf({1, 0}), pmf({0.5, 0.5}), -1e-9), ParameterError);
  EXPECT_THROW(distance(Metric::kKl, pmf({1, 0}), pmf({0.5, 0.5}), std::nan("")), ParameterError);
}

TEST(Kl, AsymmetryWitness) {
  const auto p = pmf({0.9, 0.1});
  const auto q = pmf({0.5, 0.5});
  // 0.9 log2(1.8) + 0.1 log2(0.2) versus 0.5 log2(5/9) + 0.5 log2(5).
  EXPECT_NEAR(kl(p, q), 0.531004406410719, 1e-8);
  EXPECT_NEAR(kl(q, p), 0.736965594166206, 1e-8);
  EXPECT_GT(std::fabs(kl(p, q) - kl(q, p)), 0.1);
}

TEST(MetricProperties, L1L2OverRandomPairs) {
  testing::Gen gen(1);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t L = gen.between(2, 20);
    const auto p = gen.profile(L);
    const auto q = gen.profile(L);
    const auto r = gen.profile(L);
    const double d1 = l1(p, q);
    const double d2 = l2(p, q);
    ASSERT_GE(d1, 0.0);
    ASSERT_LE(d1, 2.0);
    ASSERT_GE(d2, 0.0);
    ASSERT_LE(d2, std::sqrt(2.0));
    ASSERT_NEAR(d1, l1(q, p), 1e-12);
    ASSERT_NEAR(d2, l2(q, p), 1e-12);
    ASSERT_LE(d1, l1(p, r) + l1(r, q) + 1e-12);
    ASSERT_LE(d2, l2(p, r) + l2(r, q) + 1e-12);
    ASSERT_EQ(l1(p, p), 0.0);
    ASSERT_EQ(l2(p, p), 0.0);
    if (p.pmf != q.pmf) {
      ASSERT_GT(d1, 0.0);
    }
    ASSERT_NEAR(d1, testing::brute_l1(p.pmf, q.pmf), 1e-12);
    ASSERT_NEAR(d2, testing::brute_l2(p.pmf, q.pmf), 1e-12);
  }
}

TEST(MetricProperties, KlNonNegativeAndMatchesBruteForce) {
  testing::Gen gen(2);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t L = gen.between(2, 20);
    const auto p = gen.profile(L);
    const auto q = gen.profile(L);
    const double eps = std::pow(10.0, -static_cast<double>(gen.between(3, 12)));
    const double v = kl(p, q, eps);
    ASSERT_GE(v, -1e-9);
    ASSERT_NEAR(v, testing::brute_kl(p.pmf, q.pmf, eps), 1e-9 * std::max(1.0, v));
  }
}

TEST(MetricNames, RoundTrip) {
  for (Metric m : {Metric::kL1, Metric::kL2, Metric::kKl}) {
    EXPECT_EQ(metric_from_string(to_string(m)), m);
  }
  EXPECT_THROW(metric_from_string("cosine"), ParameterError);
}

DistanceSeries series_of(std::vector<double> values) {
  DistanceSeries s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    s.points.push_back({i + 1, Timestamp::from_seconds(static_cast<std::int64_t>(i)), values[i], 1, 1});
  }
  return s;
}

TEST(ConvergenceVisits, Examples) {
  const auto s = series_of({2.0, 1.2, 0.4, 0.3});
  EXPECT_EQ(convergence_visits(s, 0.5), 3u);
  EXPECT_EQ(convergence_visits(s, 0.1), std::nullopt);
  EXPECT_EQ(convergence_visits(s, 3.0), 1u);
  EXPECT_EQ(convergence_visits(s, 0.3), std::nullopt);
  EXPECT_THROW(convergence_visits(s, 0.0), ParameterError);
}

class FixtureSeries : public ::testing::Test {
 protected:
  void SetUp() override {
    load_into(store_, load_event_log(testing::fixture_path("golden/session.events.jsonl")));
    for (const auto& e : store_.events("fixture-user")) times_.push_back(e.timestamp);
  }
  EventStore store_;
  std::vector<Timestamp> times_;
};

TEST_F(FixtureSeries, GoldenL1Series) {
  const auto& tax = Taxonomy::demo();
  const auto& cfg = AdParamConfig::example();
  const auto series = distance_series(store_, "fixture-user", times_, tax, cfg);
  ASSERT_EQ(series.points.size(), 5u);
  EXPECT_TRUE(series.skipped.empty());
  for (std::size_t i = 0; i < times_.size(); ++i) {
    const auto p = user_profile_at(store_, "fixture-user", times_[i], tax);
    const auto q = ad_profile_at(store_, "fixture-user", times_[i], tax, cfg);
    EXPECT_EQ(series.points[i].value, l1(p, q));
    EXPECT_EQ(series.points[i].user_support, p.support_count);
    EXPECT_EQ(series.points[i].ad_support, q.support_count);
  }
  // Visit 1: user all Sports, ads 2/3 Sports and 1/3 Recreation.
  EXPECT_DOUBLE_EQ(series.points[0].value, 2.0 / 3.0);
  // Visit 5 worked over a common denominator of 17 * 13.
  EXPECT_DOUBLE_EQ(series.points[4].value, 64.0 / 221.0);
  EXPECT_EQ(series_to_csv(series), testing::read_fixture("golden/session.series_l1.csv"));
}

TEST_F(FixtureSeries, NoAdsMeansEverythingSkipped) {
  const auto cfg = AdParamConfig::parse_json(
      R"({"network_hosts":["nowhere.example"],"topical_params":["topics"],"token_delimiters":"|"})");
  const auto series = distance_series(store_, "fixture-user", times_, Taxonomy::demo(), cfg);
  EXPECT_TRUE(series.points.empty());
  ASSERT_EQ(series.skipped.size(), 5u);
  EXPECT_EQ(series.skipped[0].visit_index, 1u);
  EXPECT_NE(series.skipped[0].reason.find("ad profile"), std::string::npos);
}

TEST_F(FixtureSeries, TimestampsMustIncrease) {
  std::vector<Timestamp> bad{times_[1], times_[0]};
  EXPECT_THROW(distance_series(store_, "fixture-user", bad, Taxonomy::demo(),
                               AdParamConfig::example()),
               ParameterError);
}

TEST(DistanceSeries, SingleMatchingStep) {
  const auto tax = Taxonomy::parse("category\tSports\ncategory\tArts\ncycling\tSports\n");
  EventStore store;
  BrowsingEvent e;
  e.identity = {"u", "u"};
  e.url = "https://example.org/";
  e.timestamp = Timestamp::from_seconds(5);
  e.keywords = {{"cycling", KeywordSource::kMeta}};
  e.requests = {{"https://ads.adnet.example/serve?topics=cycling", "example.org"}};
  store.append(e);
  const auto series = distance_series(store, "u", {e.timestamp}, tax, AdParamConfig::example(),
                                      {Metric::kL2, kDefaultKlEpsilon});
  ASSERT_EQ(series.points.size(), 1u);
  EXPECT_EQ(series.points[0].value, 0.0);
  EXPECT_EQ(series.metric, Metric::kL2);
}

TEST(SeriesIo, CsvRoundTripAndFormat) {
  auto s = series_of({2.0, 0.1, 1.0 / 3.0});
  s.points[1].timestamp = Timestamp::from_millis(1500);
  const std::string csv = series_to_csv(s);
  EXPECT_EQ(csv,
            "visit,timestamp,value,user_support,ad_support\n"
            "1,1970-01-01T00:00:00Z,2,1,1\n"
            "2,1970-01-01T00:00:01.500Z,0.1,1,1\n"
            "3,1970-01-01T00:00:02Z,0.3333333333333333,1,1\n");
  const auto back = series_from_csv(csv, Metric::kL1);
  EXPECT_EQ(back.points, s.points);
  EXPECT_THROW(series_from_csv("visit,value\n1,2\n", Metric::kL1), FormatError);
  EXPECT_THROW(series_from_csv(std::string(kSeriesCsvHeader) + "\n1,nope,2,1,1\n", Metric::kL1),
               FormatError);
}

TEST(SeriesIo, FormatDoubleRoundTrips) {
  testing::Gen gen(4);
  for (int i = 0; i < 1000; ++i) {
    const double x = gen.unit() * std::pow(10.0, static_cast<double>(gen.between(0, 6))) - 3.0;
    ASSERT_EQ(std::stod(format_double(x)), x);
  }
}

TEST(SeriesIo, JsonAndReport) {
  const auto s = series_of({0.5, 0.25});
  const auto j = nlohmann::json::parse(series_to_json(s));
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1]["visit"], 2);
  EXPECT_EQ(j[1]["value"], 0.25);
  EXPECT_EQ(j[1]["timestamp"], "1970-01-01T00:00:01Z");

  const auto none = nlohmann::json::parse(report_to_json(make_report(s, 0.1)));
  EXPECT_TRUE(none["visits_to_threshold"].is_null());
  EXPECT_EQ(none["final_value"], 0.25);
  EXPECT_EQ(none["metric"], "l1");
  const auto hit = nlohmann::json::parse(report_to_json(make_report(s, 0.3, {"w"})));
  EXPECT_EQ(hit["visits_to_threshold"], 2);
  EXPECT_EQ(hit["warnings"], nlohmann::json({"w"}));
  const auto empty = nlohmann::json::parse(report_to_json(make_report(DistanceSeries{}, 0.3)));
  EXPECT_TRUE(empty["final_value"].is_null());
}

TEST(SeriesIo, SvgPlot) {
  const std::string svg = series_to_svg(series_of({2.0, 1.0, 0.2}), 0.3);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("<polyline"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_NO_THROW(series_to_svg(DistanceSeries{}));
}

}  // namespace
}  // namespace footprint
