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

#include "cli.h"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "footprint/footprint.h"

namespace footprint::cli {
namespace {

namespace fs = std::filesystem;

std::string read_text(const std::string& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(std::string("cannot open ") + what + " '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

std::string event_log_text(const std::vector<BrowsingEvent>& events) {
  std::ostringstream ss;
  write_event_log(ss, events);
  return ss.str();
}

// Options shared by several subcommands.
struct Common {
  std::string taxonomy;
  std::string stoplist;
  std::string psl;
  std::string ad_config;

  Taxonomy load_taxonomy() const {
    return taxonomy.empty() ? Taxonomy::demo() : Taxonomy::load(taxonomy);
  }
  RakeConfig rake() const {
    RakeConfig cfg = default_rake_config();
    if (!stoplist.empty()) cfg.stoplist = load_stoplist(stoplist);
    cfg.validate();
    return cfg;
  }
  PublicSuffixList suffixes() const {
    return psl.empty() ? PublicSuffixList::builtin() : PublicSuffixList::load(psl);
  }
  AdParamConfig ads() const {
    return ad_config.empty() ? AdParamConfig::example() : AdParamConfig::load(ad_config);
  }
};

void add_taxonomy(CLI::App* cmd, Common& c) {
  cmd->add_option("--taxonomy", c.taxonomy,
                  "Taxonomy TSV (category block, then term<TAB>category lines); "
                  "defaults to the built-in demo taxonomy");
}
void add_stoplist(CLI::App* cmd, Common& c) {
  cmd->add_option("--stoplist", c.stoplist, "Stoplist file, one lowercase word per line");
}
void add_psl(CLI::App* cmd, Common& c) {
  cmd->add_option("--psl", c.psl, "Public suffix list file (publicsuffix.org format)");
}
void add_ad_config(CLI::App* cmd, Common& c) {
  cmd->add_option("--ad-config", c.ad_config,
                  "Ad parameter config JSON {network_hosts, topical_params, token_delimiters}");
}

// Picks the identity to analyse from a loaded store.
std::string pick_identity(const EventStore& store, const std::string& requested) {
  if (!requested.empty()) {
    if (!store.contains(requested)) throw LookupError("unknown identity '" + requested + "'");
    return requested;
  }
  const auto ids = store.identities();
  if (ids.empty()) throw InputError("event log contains no events");
  return ids.front().id;
}

std::vector<Timestamp> event_timestamps(const EventStore& store, const std::string& id) {
  std::vector<Timestamp> ts;
  for (const BrowsingEvent& e : store.events(id)) ts.push_back(e.timestamp);
  return ts;
}

void note_unclassified(std::ostream& err, std::size_t dropped, const char* what) {
  if (dropped > 0) err << "note: " << dropped << " " << what << " matched no category\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"footprint: measure how quickly an ad network's profile of a user "
               "converges to the user's browsing interests"};
  app.name("footprint");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  Common common;
  std::function<int()> action;

  // ingest-har -------------------------------------------------------------
  auto* har_cmd = app.add_subcommand("ingest-har", "Turn a HAR 1.2 capture into an event log");
  std::string har_path, har_out, har_identity = "har-user", har_label;
  har_cmd->add_option("--har", har_path, "HAR 1.2 JSON file")->required();
  har_cmd->add_option("--out", har_out, "Output directory (writes events.jsonl)")->required();
  har_cmd->add_option("--identity", har_identity, "Identity id for the events");
  har_cmd->add_option("--label", har_label, "Identity label (defaults to the id)");
  add_stoplist(har_cmd, common);
  add_psl(har_cmd, common);
  har_cmd->callback([&] {
    action = [&] {
      const PublicSuffixList psl = common.suffixes();
      const HarCapture har = HarCapture::load(har_path);
      const auto skeletons = ingest_har(har, psl);
      EventStore store;
      const Identity identity{har_identity, har_label.empty() ? har_identity : har_label};
      const auto events = build_events(store, identity, skeletons, common.rake());
      write_text(fs::path(har_out) / "events.jsonl", event_log_text(events));
      std::size_t requests = 0;
      for (const auto& s : skeletons) requests += s.requests.size();
      err << "ingested " << events.size() << " pages, " << requests << " requests, "
          << har.orphan_count() << " orphan entries\n";
      return kExitOk;
    };
  });

  // ingest-urls ------------------------------------------------------------
  auto* urls_cmd = app.add_subcommand("ingest-urls", "Fetch a URL list and build an event log");
  std::string urls_path, urls_out, urls_identity = "url-user", urls_label;
  double timeout_s = 10.0, rate_limit = 1.0, urls_dwell = 0.0;
  std::size_t concurrency = 4;
  FetchOptions fetch_options;
  urls_cmd->add_option("--urls", urls_path, "File with one URL per line ('#' comments)")
      ->required();
  urls_cmd->add_option("--out", urls_out, "Output directory (writes events.jsonl)")->required();
  urls_cmd->add_option("--identity", urls_identity, "Identity id for the events");
  urls_cmd->add_option("--label", urls_label, "Identity label (defaults to the id)");
  urls_cmd->add_option("--timeout", timeout_s, "Per-request timeout in seconds")
      ->check(CLI::PositiveNumber);
  urls_cmd->add_option("--user-agent", fetch_options.user_agent, "User-Agent header");
  urls_cmd->add_option("--rate-limit", rate_limit, "Maximum requests per second (0 = off)")
      ->check(CLI::NonNegativeNumber);
  urls_cmd->add_option("--concurrency", concurrency, "Maximum requests in flight")
      ->check(CLI::PositiveNumber);
  urls_cmd->add_option("--max-redirects", fetch_options.max_redirects,
                       "Redirects followed per page")
      ->check(CLI::NonNegativeNumber);
  urls_cmd->add_option("--dwell", urls_dwell, "Dwell seconds recorded for each visit")
      ->check(CLI::NonNegativeNumber);
  add_stoplist(urls_cmd, common);
  urls_cmd->callback([&] {
    action = [&] {
      const auto urls = parse_url_list(read_text(urls_path, "URL list"));
      fetch_options.timeout =
          std::chrono::milliseconds(static_cast<std::int64_t>(timeout_s * 1000.0));
      const RakeConfig rake = common.rake();
      const auto items = fetch_all(urls, fetch_options, concurrency, rate_limit);
      EventStore store;
      const Identity identity{urls_identity, urls_label.empty() ? urls_identity : urls_label};
      std::vector<BrowsingEvent> events;
      std::optional<Timestamp> last;
      std::size_t failures = 0;
      for (const auto& item : items) {
        if (!item.result) {
          err << "warning: " << item.error << "\n";
          ++failures;
          continue;
        }
        Timestamp t = item.fetched_at;
        if (last && !(*last < t)) t = last->plus_millis(1);
        last = t;
        events.push_back(store.new_event(identity, item.result->final_url, t, urls_dwell,
                                         item.result->document, item.result->requests, rake));
      }
      write_text(fs::path(urls_out) / "events.jsonl", event_log_text(events));
      err << "fetched " << events.size() << " of " << urls.size() << " pages\n";
      return failures == urls.size() && !urls.empty() ? kExitRuntimeError : kExitOk;
    };
  });

  // replay -----------------------------------------------------------------
  auto* replay_cmd = app.add_subcommand("replay", "Replay a session script against the mock ad server");
  std::string script_path, replay_out, metric_name = "l1", mode_name = "sampled";
  MockAdServerOptions server_options;
  double threshold = 0.3, epsilon = kDefaultKlEpsilon;
  bool svg = false, real_time = false;
  replay_cmd->add_option("--script", script_path, "Session script JSON")->required();
  add_taxonomy(replay_cmd, common);
  add_stoplist(replay_cmd, common);
  replay_cmd->add_option("--metric", metric_name, "Distance metric")
      ->check(CLI::IsMember({"l1", "l2", "kl"}));
  replay_cmd->add_option("--seed", server_options.seed, "Seed for sampled ad serving");
  replay_cmd->add_option("--out", replay_out,
                         "Output directory (events.jsonl, series.csv, report.json)")
      ->required();
  replay_cmd->add_option("--lag", server_options.lag, "Visits before the ad server reacts");
  replay_cmd->add_option("--ads-per-visit", server_options.ads_per_visit,
                         "Ads served per visit in sampled mode")
      ->check(CLI::PositiveNumber);
  replay_cmd->add_option("--mode", mode_name, "Ad serving mode")
      ->check(CLI::IsMember({"sampled", "expected"}));
  replay_cmd->add_option("--threshold", threshold, "Convergence threshold")
      ->check(CLI::PositiveNumber);
  replay_cmd->add_option("--epsilon", epsilon, "KL smoothing epsilon")
      ->check(CLI::PositiveNumber);
  replay_cmd->add_flag("--svg", svg, "Also write series.svg");
  replay_cmd->add_flag("--real-time", real_time, "Sleep for each step's dwell time");
  replay_cmd->add_option("--timeout", timeout_s, "Timeout in seconds for fetched steps")
      ->check(CLI::PositiveNumber);
  replay_cmd->callback([&] {
    action = [&] {
      const Taxonomy tax = common.load_taxonomy();
      const SessionScript script = SessionScript::load(script_path);
      server_options.mode = serve_mode_from_string(mode_name);
      const MockAdServer server(tax, server_options);
      ReplayOptions options;
      options.series = {metric_from_string(metric_name), epsilon};
      options.threshold = threshold;
      options.real_time = real_time;
      options.fetch.timeout =
          std::chrono::milliseconds(static_cast<std::int64_t>(timeout_s * 1000.0));
      const ReplayResult result = replay(script, server, tax, common.rake(), options);
      const fs::path dir(replay_out);
      write_text(dir / "events.jsonl", event_log_text(result.events));
      write_text(dir / "series.csv", series_to_csv(result.series));
      write_text(dir / "report.json", report_to_json(result.report) + "\n");
      if (svg) write_text(dir / "series.svg", series_to_svg(result.series, threshold));
      for (const auto& w : result.warnings) err << "warning: " << w << "\n";
      return kExitOk;
    };
  });

  // profile ----------------------------------------------------------------
  auto* profile_cmd = app.add_subcommand("profile", "Print the user or ad profile at a time");
  std::string profile_events, at = "inf", kind = "user", identity_id, profile_out;
  profile_cmd->add_option("--events", profile_events, "Event log (.events.jsonl)")->required();
  add_taxonomy(profile_cmd, common);
  add_ad_config(profile_cmd, common);
  add_psl(profile_cmd, common);
  profile_cmd->add_option("--at", at, "ISO-8601 instant or epoch seconds (default: all events)");
  profile_cmd->add_option("--kind", kind, "Which profile")->check(CLI::IsMember({"user", "ad"}));
  profile_cmd->add_option("--identity", identity_id, "Identity id (default: first in the log)");
  profile_cmd->add_option("--out", profile_out, "Write the JSON here instead of stdout");
  profile_cmd->callback([&] {
    action = [&] {
      const Taxonomy tax = common.load_taxonomy();
      EventStore store;
      load_into(store, load_event_log(profile_events));
      const std::string id = pick_identity(store, identity_id);
      const Timestamp t = Timestamp::parse(at);
      Profile profile;
      if (kind == "user") {
        std::size_t dropped = 0;
        for (const auto& e : store.events_until(id, t)) {
          dropped += event_classification(e, tax).dropped;
        }
        note_unclassified(err, dropped, "keywords");
        profile = user_profile_at(store, id, t, tax);
      } else {
        const auto details =
            ad_profile_details_at(store, id, t, tax, common.ads(), common.suffixes());
        note_unclassified(err, details.dropped_tokens, "ad tokens");
        profile = details.profile;
      }
      if (profile.empty()) err << "note: the " << kind << " profile is empty\n";
      const std::string json = profile_to_json(profile, tax) + "\n";
      if (profile_out.empty()) {
        out << json;
      } else {
        write_text(profile_out, json);
      }
      return kExitOk;
    };
  });

  // distance ---------------------------------------------------------------
  auto* distance_cmd = app.add_subcommand("distance", "Per-visit distance series for an event log");
  std::string distance_events, distance_metric = "l1", format = "csv", distance_out;
  double distance_epsilon = kDefaultKlEpsilon;
  distance_cmd->add_option("--events", distance_events, "Event log (.events.jsonl)")->required();
  distance_cmd->add_option("--metric", distance_metric, "Distance metric")
      ->check(CLI::IsMember({"l1", "l2", "kl"}));
  distance_cmd->add_option("--epsilon", distance_epsilon, "KL smoothing epsilon")
      ->check(CLI::PositiveNumber);
  distance_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  distance_cmd->add_option("--identity", identity_id, "Identity id (default: first in the log)");
  distance_cmd->add_option("--out", distance_out, "Write the series here instead of stdout");
  add_taxonomy(distance_cmd, common);
  add_ad_config(distance_cmd, common);
  add_psl(distance_cmd, common);
  distance_cmd->callback([&] {
    action = [&] {
      const Taxonomy tax = common.load_taxonomy();
      EventStore store;
      load_into(store, load_event_log(distance_events));
      const std::string id = pick_identity(store, identity_id);
      const DistanceSeries series =
          distance_series(store, id, event_timestamps(store, id), tax, common.ads(),
                          {metric_from_string(distance_metric), distance_epsilon},
                          common.suffixes());
      for (const auto& s : series.skipped) {
        err << "skipped visit " << s.visit_index << ": " << s.reason << "\n";
      }
      const std::string text =
          format == "csv" ? series_to_csv(series) : series_to_json(series) + "\n";
      if (distance_out.empty()) {
        out << text;
      } else {
        write_text(distance_out, text);
      }
      return kExitOk;
    };
  });

  // report -----------------------------------------------------------------
  auto* report_cmd = app.add_subcommand("report", "Convergence report for a distance series");
  std::string series_path, report_metric = "l1", report_out, svg_out;
  double report_threshold = 0.3;
  report_cmd->add_option("--series", series_path, "Series CSV")->required();
  report_cmd->add_option("--metric", report_metric, "Metric the series was computed with")
      ->check(CLI::IsMember({"l1", "l2", "kl"}));
  report_cmd->add_option("--threshold", report_threshold, "Convergence threshold")
      ->check(CLI::PositiveNumber);
  report_cmd->add_option("--out", report_out, "Write report JSON here instead of stdout");
  report_cmd->add_option("--svg", svg_out, "Also write an SVG plot of the series");
  report_cmd->callback([&] {
    action = [&] {
      const DistanceSeries series =
          series_from_csv(read_text(series_path, "series CSV"), metric_from_string(report_metric));
      const std::string json = report_to_json(make_report(series, report_threshold)) + "\n";
      if (report_out.empty()) {
        out << json;
      } else {
        write_text(report_out, json);
      }
      if (!svg_out.empty()) write_text(svg_out, series_to_svg(series, report_threshold));
      return kExitOk;
    };
  });

  std::vector<const char*> argv{"footprint"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const CLI::App* sub : app.get_subcommands()) target = sub;
    out << target->help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const CLI::App* target = &app;
    for (const CLI::App* sub : app.get_subcommands()) target = sub;
    err << target->help();
    return kExitInputError;
  }

  try {
    return action ? action() : kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
}

}  // namespace footprint::cli
