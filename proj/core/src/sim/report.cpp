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

#include <iomanip>
#include <sstream>

#include "aee/sim/simulator.hpp"

namespace aee::sim {

namespace {

std::string fixed(double v, int digits = 3) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string ops_text(const OpCounts& c) {
  std::ostringstream os;
  os << "mul_g1=" << c.mul_g1 << " exp_g1=" << c.exp_g1 << " mul_g2=" << c.mul_g2
     << " exp_g2=" << c.exp_g2 << " mul_gt=" << c.mul_gt << " exp_gt=" << c.exp_gt
     << " pairings=" << c.pairings;
  return os.str();
}

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string out = "\"";
  for (char ch : v) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

std::vector<SimReport::Row> SimReport::rows() const {
  std::vector<Row> r;
  auto add = [&](const char* section, const std::string& key, const std::string& value) {
    r.push_back({section, key, value});
  };
  auto num = [](std::size_t v) { return std::to_string(v); };

  add("run", "scenario", std::string(scenario_name(config.scenario)));
  add("run", "seed", std::to_string(config.rng_seed));
  add("run", "vehicles", num(vehicles));
  add("run", "attackers", num(attackers));
  add("run", "claimed_identities_per_attacker", num(config.attacker.identities));
  add("run", "slots", num(slots));
  add("run", "duration_ms", std::to_string(config.duration_ms));
  add("run", "cost_profile", cost_profile);

  add("sizes", "group_signature_bytes", num(group_signature_bytes));
  add("sizes", "group_signature_full_bytes", num(group_signature_full_bytes));
  add("sizes", "event_signature_bytes", num(event_signature_bytes));
  add("sizes", "rsu_signature_bytes", num(rsu_signature_bytes));
  add("sizes", "mean_message_bytes", num(mean_message_bytes));

  add("traffic", "precomputed_signatures", num(precomputed_signatures));
  add("traffic", "group_signatures_sent", num(group_signatures_sent));
  add("traffic", "group_signature_rebroadcasts", num(group_signature_rebroadcasts));
  add("traffic", "event_messages_sent", num(event_messages_sent));
  add("traffic", "rsu_messages_sent", num(rsu_messages_sent));
  add("traffic", "rsu_signature_failures", num(rsu_signature_failures));
  add("traffic", "deliveries", num(deliveries));
  add("traffic", "dropped", num(dropped));
  add("traffic", "unverifiable_without_epk", num(unverifiable_without_epk));
  add("traffic", "max_group_signatures_per_vehicle_event",
      num(max_group_signatures_per_vehicle_event));
  add("traffic", "one_token_violations", num(one_token_violations));

  for (const auto& [op, s] : verification) {
    add("verification", op + ".count", num(s.count));
    add("verification", op + ".rejected", num(s.rejected));
    add("verification", op + ".ops", ops_text(s.ops));
  }
  add("verification", "hot_path.ops", ops_text(hot_path_ops));
  add("verification", "hot_path.pairings", std::to_string(hot_path_ops.pairings));

  for (const auto& [op, ms] : modeled_latency_ms) add("latency_model", op + "_ms", fixed(ms));
  add("latency_model", "budget_ms", std::to_string(config.processing_budget_ms));
  add("latency_model", "hot_path_operations", num(hot_path_operations));
  add("latency_model", "hot_path_within_budget", num(hot_path_within_budget));
  add("latency_model", "hot_path_within_budget_fraction",
      fixed(hot_path_operations == 0
                ? 1.0
                : static_cast<double>(hot_path_within_budget) /
                      static_cast<double>(hot_path_operations),
            6));
  add("latency_model", "budget_violations", num(budget_violation_count));
  for (std::size_t i = 0; i < budget_violations.size(); ++i) {
    const BudgetViolation& v = budget_violations[i];
    add("budget_violation", std::to_string(i),
        "t=" + std::to_string(v.at_ms) + "ms receiver=" + v.receiver + " op=" + v.op +
            " latency=" + std::to_string(v.latency_ms) + "ms");
  }

  add("link_table", "distinct_tokens", num(distinct_tokens));
  add("link_table", "max_identities_per_token", num(max_identities_per_token));
  add("link_table", "cross_event_token_collisions", num(cross_event_token_collisions));

  add("sybil", "attacker_events", num(attacker_events));
  add("sybil", "attacker_events_detected", num(attacker_events_detected));
  add("sybil", "honest_flagged", num(honest_flagged));
  add("sybil", "detections", num(detections.size()));
  for (std::size_t i = 0; i < detections.size(); ++i) {
    const SybilDetection& d = detections[i];
    add("detection", std::to_string(i),
        "event=" + d.event + " sender=" + d.sender +
            " identities=" + std::to_string(d.claimed_identities) +
            " linked_signatures=" + std::to_string(d.linked_signatures));
  }

  add("transcript", "sha256", transcript_sha256);
  return r;
}

std::string SimReport::to_text() const {
  std::ostringstream os;
  os << "aee simulation report\n";
  std::string section;
  for (const Row& row : rows()) {
    if (row.section != section) {
      section = row.section;
      os << '\n' << '[' << section << "]\n";
    }
    os << row.key << " = " << row.value << '\n';
  }
  os << "\n[config]\n" << config.to_text();
  return os.str();
}

std::string SimReport::to_csv() const {
  std::ostringstream os;
  os << "section,key,value\n";
  for (const Row& row : rows()) {
    os << csv_field(row.section) << ',' << csv_field(row.key) << ',' << csv_field(row.value)
       << '\n';
  }
  return os.str();
}

}  // namespace aee::sim
