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

#ifndef AEE_SIM_PROFILE_HPP_
#define AEE_SIM_PROFILE_HPP_

// Per-operation cost profiles and the host timing harness shared by the
// simulator, `aee bench` and the acceptance checks.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "aee/op_counter.hpp"

namespace aee::sim {

// Milliseconds per group operation.
struct CostProfile {
  std::string name;
  double mul_g1 = 0;
  double mul_g2 = 0;
  double mul_gt = 0;
  double exp_g1 = 0;
  double exp_g2 = 0;
  double exp_gt = 0;
  double pairing = 0;

  // Hashing is not priced; the reference measurements do not list it.
  double cost_ms(const OpCounts& ops) const;
  // Rounded up to the 1 ms simulation clock, never below 1.
  std::int64_t cost_ticks(const OpCounts& ops) const;
};

// Measurements of the original d224 implementation on a laptop and on a
// Raspberry Pi 3.
CostProfile zenbook_profile();
CostProfile raspberry_pi3_profile();
CostProfile profile_by_name(std::string_view name);

// The operation counts each protocol step performs in this implementation.
struct ProtocolOpCounts {
  OpCounts gsign;
  OpCounts gver;
  OpCounts esign;
  OpCounts ever;
};
ProtocolOpCounts measure_protocol_op_counts();

// Operation counts listed for the construction in its evaluation.
ProtocolOpCounts reference_op_counts();

struct TimingRow {
  std::string op;
  double median_ms = 0;
  std::size_t samples = 0;
  OpCounts ops;
};

struct TimingOptions {
  std::size_t iterations = 1000;
  std::size_t members = 10'000;  // registry size for Open's lookup
  std::uint64_t seed = 1;
};

// Medians for GSign, GVer, ESign, EVer, Link and Open (credential recovery
// plus registry lookup).
std::vector<TimingRow> measure_timing(const TimingOptions& options);

// Median time of Link with a registry of `members` entries present.
double measure_link_ms(std::size_t members, std::size_t iterations, std::uint64_t seed);

double median(std::vector<double> samples);

}  // namespace aee::sim

#endif  // AEE_SIM_PROFILE_HPP_
