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

#include <atomic>
#include <sstream>
#include <thread>

#include "footprint/errors.h"
#include "footprint/event_log.h"
#include "footprint/event_model.h"
#include "footprint/html.h"
#include "test_support.h"

namespace footprint {
namespace {

const Identity kAlice{"alice", "Alice"};

HtmlDocument page(std::string raw) { return HtmlDocument{std::move(raw), ""}; }

Timestamp at(std::int64_t s) { return Timestamp::from_seconds(s); }

TEST(NewEvent, MetaKeywords) {
  EventStore store;
  const auto e = store.new_event(
      kAlice, "https://example.org/a", at(100), 15,
      page("<head><meta name=\"keywords\" content=\"cycling, sport\"></head>"), {});
  EXPECT_EQ(e.keywords, (std::vector<Keyword>{{"cycling", KeywordSource::kMeta},
                                              {"sport", KeywordSource::kMeta}}));
  EXPECT_EQ(e.identity, kAlice);
  EXPECT_EQ(e.dwell, 15);
  EXPECT_EQ(store.size(), 1u);
}

TEST(NewEvent, NonMonotoneTimestampIsAnOrderingError) {
  EventStore store;
  store.new_event(kAlice, "https://example.org/a", at(100), 15, page("<p>x</p>"), {});
  EXPECT_THROW(store.new_event(kAlice, "https://example.org/a", at(90), 15, page("<p>x</p>"), {}),
               OrderingError);
  EXPECT_THROW(store.new_event(kAlice, "https://example.org/a", at(100), 15, page("<p>x</p>"), {}),
               OrderingError);
  EXPECT_EQ(store.size(), 1u);
  // Other identities keep their own clocks.
  EXPECT_NO_THROW(store.new_event({"bob", "Bob"}, "https://example.org/a", at(50), 0,
                                  page("<p>x</p>"), {}));
}

TEST(NewEvent, BodyKeywordsMatchExtraction) {
  std::string body = "<html><body>";
  testing::Gen gen(400);
  std::string words;
  static const char* vocab[] = {"cycling", "trails", "and", "the", "mountain", "opera",
                                "jazz", "with", "bikes", "carbon", "frames", "museum."};
  for (int i = 0; i < 400; ++i) words += std::string(vocab[gen.below(12)]) + " ";
  body += "<p>" + words + "</p></body></html>";
  const std::vector<RequestRecord> requests{
      {"https://cdn.example.org/a.js", "example.org"},
      {"https://ads.adnet.example/serve?topics=golf", "example.org"},
      {"https://fonts.example.net/f.css", "example.org"}};

  EventStore store;
  const HtmlDocument doc{body, "https://example.org/b"};
  const auto e = store.new_event(kAlice, "https://example.org/b", at(200), 15, doc, requests);
  std::vector<Keyword> expected;
  const auto scored =
      rake_scores(rake_candidates(html::visible_text(body), default_rake_config()));
  const auto keep = top_phrase_count(scored.size(), default_rake_config().top_fraction);
  ASSERT_GT(keep, 0u);
  for (std::size_t i = 0; i < keep; ++i) {
    expected.push_back({scored[i].phrase, KeywordSource::kBody});
  }
  EXPECT_EQ(e.keywords, expected);
  EXPECT_EQ(e.requests, requests);
}

TEST(NewEvent, InvalidInputs) {
  EventStore store;
  EXPECT_THROW(store.new_event(kAlice, "/relative", at(1), 0, page("<p>x</p>"), {}), InputError);
  EXPECT_THROW(store.new_event(kAlice, "https://example.org/", at(1), -1, page("<p>x</p>"), {}),
               InputError);
  EXPECT_THROW(store.new_event({"", "x"}, "https://example.org/", at(1), 0, page("<p>x</p>"), {}),
               InputError);
  EXPECT_THROW(store.new_event(kAlice, "https://example.org/", at(1), 0, page("<p>x</p>"),
                               {{"not a url", "example.org"}}),
               InputError);
  store.new_event(kAlice, "https://example.org/", at(1), 0, page("<p>x</p>"), {});
  EXPECT_THROW(store.new_event({"alice", "Someone else"}, "https://example.org/", at(2), 0,
                               page("<p>x</p>"), {}),
               InputError);
}

class EventsUntil : public ::testing::Test {
 protected:
  void SetUp() override {
    for (int i = 1; i <= 5; ++i) {
      store_.new_event(kAlice, "https://example.org/" + std::to_string(i), at(i * 10), 1,
                       page("<p>x</p>"), {});
    }
  }
  EventStore store_;
};

TEST_F(EventsUntil, BeforeFirstEvent) { EXPECT_TRUE(store_.events_until("alice", at(5)).empty()); }

TEST_F(EventsUntil, Infinity) {
  EXPECT_EQ(store_.events_until("alice", Timestamp::max()).size(), 5u);
}

TEST_F(EventsUntil, BetweenEvents) {
  const auto prefix = store_.events_until("alice", at(25));
  ASSERT_EQ(prefix.size(), 2u);
  EXPECT_EQ(prefix[0].url, "https://example.org/1");
  EXPECT_EQ(prefix[1].url, "https://example.org/2");
  EXPECT_EQ(store_.events_until("alice", at(30)).size(), 3u);
}

TEST_F(EventsUntil, UnknownIdentity) {
  EXPECT_THROW(store_.events_until("mallory", Timestamp::max()), LookupError);
  EXPECT_FALSE(store_.contains("mallory"));
  EXPECT_TRUE(store_.contains("alice"));
}

TEST(EventStore, ReadersSeeConsistentPrefixes) {
  EventStore store;
  std::atomic<bool> done{false};
  std::atomic<int> violations{0};
  std::thread writer([&] {
    for (int i = 1; i <= 300; ++i) {
      store.new_event(kAlice, "https://example.org/", at(i), 0, page("<p>x</p>"), {});
    }
    done = true;
  });
  std::vector<std::thread> readers;
  for (int r = 0; r < 3; ++r) {
    readers.emplace_back([&] {
      while (!done) {
        if (!store.contains("alice")) continue;
        const auto events = store.events("alice");
        for (std::size_t i = 0; i < events.size(); ++i) {
          if (events[i].timestamp != at(static_cast<std::int64_t>(i) + 1)) ++violations;
        }
      }
    });
  }
  writer.join();
  for (auto& t : readers) t.join();
  EXPECT_EQ(violations, 0);
  EXPECT_EQ(store.size(), 300u);
}

BrowsingEvent random_event(testing::Gen& gen, std::int64_t t) {
  static const std::vector<std::string> terms{"cycling", "road cycling", "café ☕", "quote\"d",
                                              "back\\slash", "tab\tterm", "opera"};
  BrowsingEvent e;
  e.identity = {"id-" + std::to_string(gen.below(3)), ""};
  e.identity.label = "Label " + e.identity.id;
  e.url = "https://site" + std::to_string(gen.below(100)) + ".example/p?q=" + std::to_string(t);
  e.timestamp = Timestamp::from_millis(t);
  e.dwell = gen.chance(0.5) ? static_cast<double>(gen.below(100)) : gen.unit() * 100;
  for (std::size_t i = gen.below(5); i > 0; --i) {
    e.keywords.push_back({gen.pick(terms), gen.chance(0.5) ? KeywordSource::kMeta
                                                           : KeywordSource::kBody});
  }
  for (std::size_t i = gen.below(4); i > 0; --i) {
    e.requests.push_back({"https://ads.adnet.example/serve?topics=golf%7Ctennis&i=" +
                              std::to_string(i),
                          "site.example"});
  }
  if (gen.chance(0.3)) {
    e.selectors.push_back({SelectorKind::kAccountLink, "https://social.example/@alice"});
    e.selectors.push_back({SelectorKind::kSessionLink, "urn:session:42"});
  }
  return e;
}

TEST(EventLog, RoundTripRandomEvents) {
  testing::Gen gen(5);
  std::vector<BrowsingEvent> events;
  std::int64_t t = 1'700'000'000'000;
  for (int i = 0; i < 200; ++i) {
    t += static_cast<std::int64_t>(gen.between(1, 100000));
    events.push_back(random_event(gen, t));
  }
  std::stringstream buffer;
  write_event_log(buffer, events);
  const auto back = read_event_log(buffer);
  ASSERT_EQ(back.size(), events.size());
  for (std::size_t i = 0; i < events.size(); ++i) EXPECT_EQ(back[i], events[i]) << i;

  std::stringstream again;
  write_event_log(again, back);
  EXPECT_EQ(again.str(), buffer.str());
}

TEST(EventLog, LineFormat) {
  BrowsingEvent e;
  e.identity = kAlice;
  e.url = "https://example.org/a";
  e.timestamp = Timestamp::from_seconds(100);
  e.dwell = 15;
  e.keywords = {{"cycling", KeywordSource::kMeta}};
  e.requests = {{"https://cdn.example.net/x.js", "example.org"}};
  e.selectors = {{SelectorKind::kHyperlink, "https://example.org/b"}};
  EXPECT_EQ(to_json_line(e),
            R"({"identity":{"id":"alice","label":"Alice"},"url":"https://example.org/a",)"
            R"("timestamp":"1970-01-01T00:01:40Z","dwell":15.0,)"
            R"("keywords":[{"term":"cycling","source":"meta"}],)"
            R"("requests":[{"url":"https://cdn.example.net/x.js","initiator_host":"example.org"}],)"
            R"("selectors":[{"kind":"hyperlink","target":"https://example.org/b"}]})");
}

TEST(EventLog, MalformedLinesNameTheLine) {
  std::stringstream in("\n{\"identity\":{\"id\":\"a\",\"label\":\"a\"}}\n");
  try {
    read_event_log(in);
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  std::stringstream bad_json("{not json\n");
  EXPECT_THROW(read_event_log(bad_json), FormatError);
  EXPECT_THROW(load_event_log("/nonexistent/x.events.jsonl"), InputError);
}

TEST(EventLog, LoadIntoEnforcesOrdering) {
  EventStore store;
  testing::Gen gen(1);
  auto a = random_event(gen, 2000);
  auto b = random_event(gen, 1000);
  b.identity = a.identity;
  EXPECT_THROW(load_into(store, {a, b}), OrderingError);
}

}  // namespace
}  // namespace footprint
