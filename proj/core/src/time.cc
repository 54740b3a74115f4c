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

#include "footprint/time.h"

#include <charconv>
#include <cstdio>

#include "footprint/errors.h"
#include "footprint/text.h"

namespace footprint {
namespace {

// Howard Hinnant's days_from_civil / civil_from_days.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const auto yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m > 2 ? m - 3 : m + 9) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const auto doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = doy - (153 * mp + 2) / 5 + 1;
  m = mp < 10 ? mp + 3 : mp - 9;
  y += m <= 2;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

[[noreturn]] void bad_time(std::string_view text) {
  throw InputError("invalid timestamp '" + std::string(text) + "'");
}

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  int digits(std::size_t n) {
    if (pos_ + n > s_.size()) bad_time(s_);
    int value = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const char c = s_[pos_ + i];
      if (c < '0' || c > '9') bad_time(s_);
      value = value * 10 + (c - '0');
    }
    pos_ += n;
    return value;
  }
  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) bad_time(s_);
    ++pos_;
  }
  bool consume(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool at_end() const { return pos_ == s_.size(); }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Timestamp Timestamp::now() {
  using namespace std::chrono;
  return from_millis(
      duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count());
}

Timestamp Timestamp::parse_iso8601(std::string_view text) {
  Cursor c(text);
  const int year = c.digits(4);
  c.expect('-');
  const int month = c.digits(2);
  c.expect('-');
  const int day = c.digits(2);
  if (!c.consume('T') && !c.consume(' ')) bad_time(text);
  const int hour = c.digits(2);
  c.expect(':');
  const int minute = c.digits(2);
  c.expect(':');
  const int second = c.digits(2);
  int millis = 0;
  if (c.consume('.')) {
    int scale = 100;
    bool any = false;
    while (c.peek() >= '0' && c.peek() <= '9') {
      const int digit = c.digits(1);
      millis += digit * scale;
      scale /= 10;
      any = true;
    }
    if (!any) bad_time(text);
  }
  std::int64_t offset_minutes = 0;
  if (c.consume('Z')) {
  } else if (c.peek() == '+' || c.peek() == '-') {
    const int sign = c.consume('+') ? 1 : (c.consume('-'), -1);
    const int oh = c.digits(2);
    c.consume(':');
    const int om = c.digits(2);
    offset_minutes = sign * (oh * 60 + om);
  } else if (!c.at_end()) {
    bad_time(text);
  }
  if (!c.at_end()) bad_time(text);
  if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 ||
      minute > 59 || second > 60) {
    bad_time(text);
  }
  const std::int64_t days = days_from_civil(year, static_cast<unsigned>(month),
                                            static_cast<unsigned>(day));
  const std::int64_t secs = days * 86400 + hour * 3600 + minute * 60 + second -
                            offset_minutes * 60;
  return from_millis(secs * 1000 + millis);
}

Timestamp Timestamp::parse(std::string_view text) {
  const std::string_view t = text::trim(text);
  if (t == "inf" || t == "+inf" || t == "infinity") return max();
  if (!t.empty() && t.find_first_not_of("-0123456789") == std::string_view::npos) {
    std::int64_t secs = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), secs);
    if (ec != std::errc() || ptr != t.data() + t.size()) bad_time(text);
    return from_seconds(secs);
  }
  return parse_iso8601(t);
}

std::string Timestamp::iso8601() const {
  const std::int64_t secs = floor_div(ms_, 1000);
  const std::int64_t millis = ms_ - secs * 1000;
  const std::int64_t days = floor_div(secs, 86400);
  const std::int64_t sod = secs - days * 86400;
  std::int64_t y = 0;
  unsigned m = 0, d = 0;
  civil_from_days(days, y, m, d);
  char buf[64];
  if (millis == 0) {
    std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02uT%02lld:%02lld:%02lldZ",
                  static_cast<long long>(y), m, d,
                  static_cast<long long>(sod / 3600),
                  static_cast<long long>(sod / 60 % 60),
                  static_cast<long long>(sod % 60));
  } else {
    std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02uT%02lld:%02lld:%02lld.%03lldZ",
                  static_cast<long long>(y), m, d,
                  static_cast<long long>(sod / 3600),
                  static_cast<long long>(sod / 60 % 60),
                  static_cast<long long>(sod % 60),
                  static_cast<long long>(millis));
  }
  return buf;
}

}  // namespace footprint
