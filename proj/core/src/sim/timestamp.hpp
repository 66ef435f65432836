// Copyright 2026 The AEE Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AEE_SIM_TIMESTAMP_HPP_
#define AEE_SIM_TIMESTAMP_HPP_

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include "aee/errors.hpp"

namespace aee::sim::detail {

// Seconds since the Unix epoch (UTC) for a YYYYMMDDhhmm stamp.
inline std::int64_t parse_minute_stamp(std::string_view s) {
  if (s.size() != 12 || s.find_first_not_of("0123456789") != std::string_view::npos) {
    throw ConfigError("start_time: expected YYYYMMDDhhmm, got '" + std::string(s) + "'");
  }
  auto num = [&](std::size_t at, std::size_t n) { return std::stoi(std::string(s.substr(at, n))); };
  using namespace std::chrono;
  const year_month_day ymd{year{num(0, 4)}, month{static_cast<unsigned>(num(4, 2))},
                           day{static_cast<unsigned>(num(6, 2))}};
  const int hh = num(8, 2), mm = num(10, 2);
  if (!ymd.ok() || hh > 23 || mm > 59) {
    throw ConfigError("start_time: not a calendar time: '" + std::string(s) + "'");
  }
  return sys_days{ymd}.time_since_epoch() / seconds{1} + hh * 3600 + mm * 60;
}

// YYYYMMDDhhmm, or YYYYMMDDhhmmss when `with_seconds`.
inline std::string format_stamp(std::int64_t epoch_seconds, bool with_seconds) {
  using namespace std::chrono;
  const sys_seconds t{seconds{epoch_seconds}};
  const sys_days d = floor<days>(t);
  const year_month_day ymd{d};
  const auto tod = (t - d) / seconds{1};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d%02u%02u%02d%02d", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<int>(tod / 3600), static_cast<int>(tod / 60 % 60));
  std::string out = buf;
  if (with_seconds) {
    std::snprintf(buf, sizeof buf, "%02d", static_cast<int>(tod % 60));
    out += buf;
  }
  return out;
}

}  // namespace aee::sim::detail

#endif  // AEE_SIM_TIMESTAMP_HPP_
