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

#ifndef AEE_SIM_CONFIG_HPP_
#define AEE_SIM_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace aee::sim {

enum class Scenario { kIntersection, kCam };

std::string_view scenario_name(Scenario s);

struct AttackerSpec {
  std::size_t credentials = 0;  // attackers, one credential each
  std::size_t identities = 1;   // identities each attacker claims per event
};

// Times are in milliseconds; the config file takes seconds.
struct SimConfig {
  Scenario scenario = Scenario::kIntersection;
  std::size_t vehicle_count = 10;  // honest vehicles
  std::int64_t duration_ms = 60'000;
  std::int64_t cam_interval_ms = 100;
  std::int64_t event_slot_ms = 600'000;
  std::uint64_t rng_seed = 1;
  AttackerSpec attacker;
  std::int64_t processing_budget_ms = 50;
  std::size_t rebroadcast_every = 10;  // attach the group signature to every n-th CAM
  double drop_probability = 0.0;
  double presence = 1.0;               // chance an honest vehicle uses the junction in a slot
  std::string location = "junction-1";
  std::string start_time = "201703011000";  // YYYYMMDDhhmm, first slot
  std::int64_t precompute_horizon_ms = 0;   // 0: cover the run only
  std::string profile = "zenbook";

  // Throws ConfigError on the first violated constraint.
  void validate() const;

  // key = value lines; '#' starts a comment. Unknown keys are errors.
  static SimConfig parse(std::string_view text);
  static SimConfig load_file(const std::filesystem::path& path);
  std::string to_text() const;
};

}  // namespace aee::sim

#endif  // AEE_SIM_CONFIG_HPP_
