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

#ifndef AEE_SIM_SIMULATOR_HPP_
#define AEE_SIM_SIMULATOR_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "aee/keys.hpp"
#include "aee/op_counter.hpp"
#include "aee/sim/config.hpp"

namespace aee::sim {

// Event identifiers for a run: "location||timestamp" announced by the RSU at
// each slot start, or timeslot labels every vehicle derives on its own.
class EventSchedule {
 public:
  enum class Mode { kRsuGenerated, kTimeslot };

  static EventSchedule for_config(const SimConfig& cfg);

  Mode mode() const { return mode_; }
  std::size_t slot_count() const { return slots_; }
  std::int64_t slot_start_ms(std::size_t slot) const;
  std::size_t slot_at(std::int64_t t_ms) const;
  // Label for slot `slot` (may lie beyond the run, for precomputation).
  EventId event(std::size_t slot) const;

 private:
  Mode mode_ = Mode::kTimeslot;
  std::string location_;
  std::int64_t start_epoch_s_ = 0;
  std::int64_t slot_ms_ = 0;
  std::size_t slots_ = 0;
  bool with_seconds_ = false;
};

struct SybilDetection {
  std::string event;
  std::string sender;               // who actually emitted the token
  bool sender_is_attacker = false;
  std::size_t claimed_identities = 0;
  std::size_t linked_signatures = 0;  // group signatures carrying the token
};

struct BudgetViolation {
  std::int64_t at_ms = 0;
  std::string receiver;
  std::string op;
  std::int64_t latency_ms = 0;
};

struct OpStats {
  std::size_t count = 0;   // verifications charged, one per receiver
  std::size_t rejected = 0;
  OpCounts ops;            // total group operations charged
};

// Deterministic for a given config: same seed, same bytes.
struct SimReport {
  SimConfig config;
  std::string cost_profile;

  // Sizes (bytes).
  std::size_t group_signature_bytes = 0;
  std::size_t group_signature_full_bytes = 0;
  std::size_t event_signature_bytes = 0;
  std::size_t rsu_signature_bytes = 0;
  std::size_t mean_message_bytes = 0;

  // Traffic.
  std::size_t slots = 0;
  std::size_t vehicles = 0;
  std::size_t attackers = 0;
  std::size_t precomputed_signatures = 0;
  std::size_t group_signatures_sent = 0;
  std::size_t group_signature_rebroadcasts = 0;
  std::size_t event_messages_sent = 0;
  std::size_t rsu_messages_sent = 0;
  std::size_t rsu_signature_failures = 0;
  std::size_t deliveries = 0;
  std::size_t dropped = 0;
  std::size_t unverifiable_without_epk = 0;
  std::size_t max_group_signatures_per_vehicle_event = 0;
  std::size_t one_token_violations = 0;

  // Verification work.
  std::map<std::string, OpStats> verification;
  OpCounts hot_path_ops;  // esign and ever only

  // Modeled latency (ms) of each step under the cost profile.
  std::map<std::string, double> modeled_latency_ms;
  std::size_t hot_path_operations = 0;
  std::size_t hot_path_within_budget = 0;
  std::vector<BudgetViolation> budget_violations;
  std::size_t budget_violation_count = 0;

  // Link table.
  std::size_t distinct_tokens = 0;
  std::size_t max_identities_per_token = 0;
  std::size_t cross_event_token_collisions = 0;

  // Sybil analysis.
  std::size_t attacker_events = 0;
  std::size_t attacker_events_detected = 0;
  std::size_t honest_flagged = 0;
  std::vector<SybilDetection> detections;

  std::string transcript_sha256;

  std::string to_text() const;
  struct Row {
    std::string section;
    std::string key;
    std::string value;
  };
  std::vector<Row> rows() const;
  std::string to_csv() const;
};

// Host wall-clock measurements; never part of the deterministic report.
struct SimTiming {
  std::map<std::string, double> median_ms;
  double wall_ms = 0;
  double precompute_ms = 0;
};

struct SimResult {
  SimReport report;
  SimTiming timing;
};

SimResult run_intersection(const SimConfig& cfg);
SimResult run_cam(const SimConfig& cfg);
SimResult run(const SimConfig& cfg);

struct PrecomputeReport {
  std::size_t slots = 0;
  std::size_t valid = 0;
  double total_ms = 0;
  double mean_ms = 0;
  double median_gsign_ms = 0;  // measured separately on the same host
  double ratio = 0;            // total / (slots * median_gsign_ms)
  // Figures published for the original implementation, kept for context.
  double reference_laptop_s = 1.83;
  double reference_rpi3_s = 22.8;
};

PrecomputeReport offline_precompute_report(std::size_t slots, std::uint64_t seed,
                                           std::size_t calibration_samples = 144);

}  // namespace aee::sim

#endif  // AEE_SIM_SIMULATOR_HPP_
