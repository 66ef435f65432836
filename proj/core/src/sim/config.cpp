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

#include "aee/sim/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "aee/errors.hpp"
#include "timestamp.hpp"

namespace aee::sim {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_uint(std::string_view key, std::string_view v) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    throw ConfigError(std::string(key) + ": expected a non-negative integer, got '" +
                      std::string(v) + "'");
  }
  return out;
}

double parse_double(std::string_view key, std::string_view v) {
  double out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(out)) {
    throw ConfigError(std::string(key) + ": expected a number, got '" + std::string(v) + "'");
  }
  return out;
}

std::int64_t seconds_to_ms(std::string_view key, std::string_view v) {
  const double s = parse_double(key, v);
  const double ms = s * 1000.0;
  if (std::abs(ms - std::round(ms)) > 1e-6) {
    throw ConfigError(std::string(key) + ": finer than the 1 ms clock");
  }
  return static_cast<std::int64_t>(std::llround(ms));
}

std::string format_seconds(std::int64_t ms) {
  std::ostringstream os;
  os << ms / 1000;
  if (ms % 1000) {
    std::string frac = std::to_string(1000 + ms % 1000).substr(1);
    while (frac.back() == '0') frac.pop_back();
    os << '.' << frac;
  }
  return os.str();
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::string_view scenario_name(Scenario s) {
  return s == Scenario::kIntersection ? "intersection" : "cam";
}

void SimConfig::validate() const {
  if (vehicle_count == 0 && attacker.credentials == 0) {
    throw ConfigError("vehicles: at least one vehicle is required");
  }
  if (duration_ms <= 0) throw ConfigError("duration: must be positive");
  if (cam_interval_ms < 100 || cam_interval_ms > 1000) {
    throw ConfigError("cam_interval: must lie in [0.1, 1.0] seconds");
  }
  if (event_slot_ms <= 0 || event_slot_ms % 1000 != 0) {
    throw ConfigError("event_slot: must be a positive whole number of seconds");
  }
  if (attacker.credentials > 0 && attacker.identities < 1) {
    throw ConfigError("attacker_identities: must be at least 1");
  }
  if (processing_budget_ms <= 0) throw ConfigError("budget_ms: must be positive");
  if (rebroadcast_every == 0) throw ConfigError("rebroadcast_every: must be at least 1");
  if (!(drop_probability >= 0.0 && drop_probability < 1.0)) {
    throw ConfigError("drop_probability: must lie in [0, 1)");
  }
  if (!(presence > 0.0 && presence <= 1.0)) throw ConfigError("presence: must lie in (0, 1]");
  if (location.empty() || location.find("||") != std::string::npos) {
    throw ConfigError("location: must be non-empty and must not contain '||'");
  }
  if (precompute_horizon_ms < 0) throw ConfigError("precompute_horizon: must be >= 0");
  detail::parse_minute_stamp(start_time);
  if (profile != "zenbook" && profile != "raspberrypi3") {
    throw ConfigError("profile: expected zenbook or raspberrypi3");
  }
}

SimConfig SimConfig::parse(std::string_view text) {
  SimConfig cfg;
  using Setter = std::function<void(std::string_view, std::string_view)>;
  const std::map<std::string, Setter, std::less<>> setters = {
      {"scenario",
       [&](auto k, auto v) {
         if (v == "intersection") {
           cfg.scenario = Scenario::kIntersection;
         } else if (v == "cam") {
           cfg.scenario = Scenario::kCam;
         } else {
           throw ConfigError(std::string(k) + ": expected intersection or cam");
         }
       }},
      {"vehicles", [&](auto k, auto v) { cfg.vehicle_count = parse_uint(k, v); }},
      {"duration", [&](auto k, auto v) { cfg.duration_ms = seconds_to_ms(k, v); }},
      {"cam_interval", [&](auto k, auto v) { cfg.cam_interval_ms = seconds_to_ms(k, v); }},
      {"event_slot", [&](auto k, auto v) { cfg.event_slot_ms = seconds_to_ms(k, v); }},
      {"seed", [&](auto k, auto v) { cfg.rng_seed = parse_uint(k, v); }},
      {"attacker_credentials",
       [&](auto k, auto v) { cfg.attacker.credentials = parse_uint(k, v); }},
      {"attacker_identities",
       [&](auto k, auto v) { cfg.attacker.identities = parse_uint(k, v); }},
      {"budget_ms",
       [&](auto k, auto v) {
         cfg.processing_budget_ms = static_cast<std::int64_t>(parse_uint(k, v));
       }},
      {"rebroadcast_every", [&](auto k, auto v) { cfg.rebroadcast_every = parse_uint(k, v); }},
      {"drop_probability", [&](auto k, auto v) { cfg.drop_probability = parse_double(k, v); }},
      {"presence", [&](auto k, auto v) { cfg.presence = parse_double(k, v); }},
      {"location", [&](auto, auto v) { cfg.location = std::string(v); }},
      {"start_time", [&](auto, auto v) { cfg.start_time = std::string(v); }},
      {"precompute_horizon",
       [&](auto k, auto v) { cfg.precompute_horizon_ms = seconds_to_ms(k, v); }},
      {"profile", [&](auto, auto v) { cfg.profile = std::string(v); }},
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end()) {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" +
                        std::string(key) + "'");
    }
    try {
      it->second(key, value);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  cfg.validate();
  return cfg;
}

SimConfig SimConfig::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw StorageError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string SimConfig::to_text() const {
  std::ostringstream os;
  os << "scenario = " << scenario_name(scenario) << '\n'
     << "vehicles = " << vehicle_count << '\n'
     << "duration = " << format_seconds(duration_ms) << '\n'
     << "cam_interval = " << format_seconds(cam_interval_ms) << '\n'
     << "event_slot = " << format_seconds(event_slot_ms) << '\n'
     << "seed = " << rng_seed << '\n'
     << "attacker_credentials = " << attacker.credentials << '\n'
     << "attacker_identities = " << attacker.identities << '\n'
     << "budget_ms = " << processing_budget_ms << '\n'
     << "rebroadcast_every = " << rebroadcast_every << '\n'
     << "drop_probability = " << format_double(drop_probability) << '\n'
     << "presence = " << format_double(presence) << '\n'
     << "location = " << location << '\n'
     << "start_time = " << start_time << '\n'
     << "precompute_horizon = " << format_seconds(precompute_horizon_ms) << '\n'
     << "profile = " << profile << '\n';
  return os.str();
}

}  // namespace aee::sim
