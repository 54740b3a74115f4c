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

#ifndef FOOTPRINT_TIME_H_
#define FOOTPRINT_TIME_H_

#include <chrono>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace footprint {

// Instant on the UTC epoch timeline with millisecond resolution.
class Timestamp {
 public:
  constexpr Timestamp() = default;

  static constexpr Timestamp from_seconds(std::int64_t s) {
    return Timestamp(s * 1000);
  }
  static constexpr Timestamp from_millis(std::int64_t ms) {
    return Timestamp(ms);
  }
  static constexpr Timestamp min() {
    return Timestamp(std::numeric_limits<std::int64_t>::min());
  }
  static constexpr Timestamp max() {
    return Timestamp(std::numeric_limits<std::int64_t>::max());
  }
  static Timestamp now();

  // Accepts "YYYY-MM-DDTHH:MM:SS[.fff][Z|+hh:mm|-hh:mm]". Throws InputError.
  static Timestamp parse_iso8601(std::string_view text);

  // Accepts either an ISO-8601 instant or an integer number of epoch
  // seconds; "inf" / "+inf" map to max().
  static Timestamp parse(std::string_view text);

  constexpr std::int64_t millis() const { return ms_; }
  constexpr double seconds() const { return static_cast<double>(ms_) / 1000.0; }

  // "YYYY-MM-DDTHH:MM:SSZ", with ".fff" only when the millisecond part is
  // non-zero.
  std::string iso8601() const;

  constexpr Timestamp plus_millis(std::int64_t ms) const {
    return Timestamp(ms_ + ms);
  }

  constexpr auto operator<=>(const Timestamp&) const = default;

 private:
  constexpr explicit Timestamp(std::int64_t ms) : ms_(ms) {}

  std::int64_t ms_ = 0;
};

}  // namespace footprint

#endif  // FOOTPRINT_TIME_H_
