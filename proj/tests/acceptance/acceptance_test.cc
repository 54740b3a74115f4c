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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "footprint/ad_extractor.h"
#include "footprint/event_log.h"
#include "footprint/har.h"
#include "footprint/metrics.h"
#include "footprint/profile.h"
#include "footprint/rake.h"
#include "footprint/series_io.h"
#include "footprint/simulator.h"
#include "footprint/taxonomy.h"
#include "test_support.h"

namespace footprint {
namespace {

using testing::Gen;

struct Verdict {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

Verdict metric_properties() {
  Verdict v;
  Gen gen(1);
  const double root2 = std::sqrt(2.0);
  for (int i = 0; i < 1000 && v.pass; ++i) {
    const std::size_t L = gen.between(2, 20);
    const Profile p = gen.profile(L);
    const Profile q = gen.profile(L);
    const Profile r = gen.profile(L);
    const std::string at = "pair " + std::to_string(i);
    const double d1 = l1(p, q);
    const double d2 = l2(p, q);
    v.check(d1 >= 0.0 && d1 <= 2.0, at + ": l1 out of range " + num(d1));
    v.check(d2 >= 0.0 && d2 <= root2, at + ": l2 out of range " + num(d2));
    v.check(std::fabs(d1 - l1(q, p)) <= 1e-12, at + ": l1 not symmetric");
    v.check(std::fabs(d2 - l2(q, p)) <= 1e-12, at + ": l2 not symmetric");
    v.check(d1 <= l1(p, r) + l1(r, q) + 1e-12, at + ": l1 triangle inequality");
    v.check(d2 <= l2(p, r) + l2(r, q) + 1e-12, at + ": l2 triangle inequality");
    v.check(l1(p, p) == 0.0, at + ": l1(p,p) != 0");
    v.check(std::fabs(d1 - testing::brute_l1(p.pmf, q.pmf)) <= 1e-12, at + ": l1 oracle");
    v.check(std::fabs(d2 - testing::brute_l2(p.pmf, q.pmf)) <= 1e-12, at + ": l2 oracle");
  }
  return v;
}

Verdict rake_oracle() {
  Verdict v;
  const auto& cfg = default_rake_config();
  Gen gen(20260101);
  for (int i = 0; i <= 100 && v.pass; ++i) {
    const std::string text = i < 100 ? testing::random_text(gen, 300)
                                     : testing::read_fixture("rake_paragraph.txt");
    const auto candidates = rake_candidates(text, cfg);
    v.check(rake_scores(candidates) == testing::brute_rake_scores(candidates),
            i < 100 ? "random text " + std::to_string(i) : "fixture paragraph");
    if (i == 100) v.check(!candidates.empty(), "fixture paragraph has no candidates");
  }
  return v;
}

Verdict profile_invariants() {
  Verdict v;
  Gen gen(3);
  bool saw_zero = false;
  for (int i = 0; i < 1000 && v.pass; ++i) {
    const std::size_t L = gen.between(1, 20);
    const CategoryCounts c = gen.counts(L);
    const Profile p = profile_from_counts(c);
    std::int64_t total = 0;
    for (auto x : c.counts) total += x;
    const std::string at = "vector " + std::to_string(i);
    v.check(p.support_count == total, at + ": support count");
    if (total == 0) {
      saw_zero = true;
      v.check(p.empty(), at + ": all-zero counts not flagged empty");
      continue;
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < L; ++k) {
      sum += p.pmf[k];
      v.check(p.pmf[k] == static_cast<double>(c.counts[k]) / static_cast<double>(total),
              at + ": pmf entry");
    }
    v.check(std::fabs(sum - 1.0) <= 1e-9, at + ": sums to " + num(sum));
    const auto s = static_cast<std::int64_t>(gen.between(2, 1000));
    CategoryCounts scaled = c;
    for (auto& x : scaled.counts) x *= s;
    v.check(profile_from_counts(scaled).pmf == p.pmf, at + ": not scale invariant");
  }
  v.check(saw_zero, "no all-zero vector generated");
  return v;
}

DistanceSeries expected_mode_series(const std::vector<std::string>& categories) {
  const MockAdServer server(Taxonomy::demo(), {10, 1, 0, ServeMode::kExpected});
  return replay(testing::synthetic_script(categories), server, Taxonomy::demo()).series;
}

Verdict convergence() {
  Verdict v;
  const auto series = expected_mode_series(std::vector<std::string>(10, "Sports"));
  v.check(series.points.size() == 10, "expected 10 points");
  if (!v.pass) return v;
  const double first = series.points[0].value;
  const double third = series.points[2].value;
  v.check(third <= 0.8 * first, "visit 1 " + num(first) + " -> visit 3 " + num(third));
  const auto converged = convergence_visits(series, 0.3);
  v.check(converged.has_value(), "never below 0.3");
  if (v.pass) {
    v.detail = "l1 " + num(first) + " -> " + num(third) + ", below 0.3 at visit " +
               std::to_string(*converged);
  }
  return v;
}

// Steps 1-9 read Sports pages, steps 10-20 Arts pages.
Verdict category_shift() {
  Verdict v;
  std::vector<std::string> categories(9, "Sports");
  categories.resize(20, "Arts");
  const auto series = expected_mode_series(categories);
  v.check(series.points.size() == 20, "expected 20 points");
  if (!v.pass) return v;
  const std::size_t shift = 9;  // 0-based index of visit 10
  const double before = series.points[shift - 1].value;
  const double at = series.points[shift].value;
  v.check(at > before, "no increase at the shift: " + num(before) + " -> " + num(at));
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = shift + 1; k <= shift + 5; ++k) best = std::min(best, series.points[k].value);
  v.check(best <= 0.8 * at, "after the shift only down to " + num(best) + " from " + num(at));
  if (v.pass) v.detail = num(before) + " -> " + num(at) + " -> " + num(best);
  return v;
}

Verdict pipeline_round_trip() {
  Verdict v;
  const Taxonomy& tax = Taxonomy::demo();
  const AdParamConfig& ads = AdParamConfig::example();
  EventStore store;
  const auto events = build_events(store, {"fixture-user", "Fixture User"},
                                   ingest_har(testing::fixture_path("session.har")));
  std::ostringstream log;
  write_event_log(log, events);
  v.check(log.str() == testing::read_fixture("golden/session.events.jsonl"), "events.jsonl");

  EventStore reloaded;
  std::istringstream in(log.str());
  load_into(reloaded, read_event_log(in));
  const Timestamp end = Timestamp::max();
  v.check(profile_to_json(user_profile_at(reloaded, "fixture-user", end, tax), tax) + "\n" ==
              testing::read_fixture("golden/session.user_profile.json"),
          "user profile");
  v.check(profile_to_json(ad_profile_at(reloaded, "fixture-user", end, tax, ads), tax) + "\n" ==
              testing::read_fixture("golden/session.ad_profile.json"),
          "ad profile");
  std::vector<Timestamp> visits;
  for (const auto& e : reloaded.events("fixture-user")) visits.push_back(e.timestamp);
  const auto series = distance_series(reloaded, "fixture-user", visits, tax, ads);
  v.check(series_to_csv(series) == testing::read_fixture("golden/session.series_l1.csv"),
          "l1 series");
  return v;
}

Verdict kl_suite() {
  Verdict v;
  Gen gen(7);
  for (int i = 0; i < 1000 && v.pass; ++i) {
    const std::size_t L = gen.between(2, 20);
    const Profile p = gen.profile(L);
    const Profile q = gen.profile(L);
    const double d = kl(p, q);
    v.check(d >= -1e-9, "pair " + std::to_string(i) + ": kl = " + num(d));
    v.check(std::fabs(d - testing::brute_kl(p.pmf, q.pmf, kDefaultKlEpsilon)) <= 1e-9 * (1 + d),
            "pair " + std::to_string(i) + ": kl oracle");
    v.check(kl(p, p, 1e-12) <= 1e-9, "pair " + std::to_string(i) + ": kl(p,p) too large");
  }
  const Profile a{{0.5, 0.5}, 2};
  const Profile b{{0.9, 0.1}, 10};
  const double ab = kl(a, b);
  const double ba = kl(b, a);
  v.check(std::fabs(ab - ba) > 1e-3, "no asymmetry: " + num(ab) + " vs " + num(ba));
  if (v.pass) v.detail = "asymmetry witness " + num(ab) + " vs " + num(ba);
  return v;
}

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;
  std::function<Verdict()> run;
};

}  // namespace
}  // namespace footprint

int main() {
  using namespace footprint;
  const std::vector<Criterion> criteria{
      {1, "metric properties", 5, metric_properties},
      {2, "rake oracle equivalence", 10, rake_oracle},
      {3, "profile invariants", 2, profile_invariants},
      {4, "expected-mode convergence", 5, convergence},
      {5, "category shift", 5, category_shift},
      {6, "pipeline round-trip", 5, pipeline_round_trip},
      {7, "kl suite", 5, kl_suite},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      v.check(false, "took " + num(seconds) + " s, budget " + num(c.budget_seconds) + " s");
    }
    std::printf("%s criterion %d (%s) %.3fs%s%s\n", v.pass ? "PASS" : "FAIL", c.number,
                c.name.c_str(), seconds, v.detail.empty() ? "" : ": ", v.detail.c_str());
    if (!v.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
