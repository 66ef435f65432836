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

#ifndef AEE_TESTKIT_NEGATIVE_SUITES_HPP_
#define AEE_TESTKIT_NEGATIVE_SUITES_HPP_

// Scripted adversaries. Every case is an attempt to reach an experiment's
// winning condition; a suite passes when every attempt is refused.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "aee/enroll.hpp"
#include "aee/eventsig.hpp"
#include "aee/groupsig.hpp"
#include "aee/linktrace.hpp"

namespace aee {
class Rng;
}

namespace aee::testkit {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t refused = 0;
  std::vector<std::string> failures;  // first few cases that got through

  bool ok() const { return cases > 0 && cases == refused; }
};

struct NegativeReport {
  std::vector<SuiteResult> suites;

  bool ok() const;
  const SuiteResult* find(const std::string& name) const;
};

struct NegativeOptions {
  std::size_t mutations = 1000;  // per mutated message type
  std::size_t sybil_signatures = 50;
  std::size_t frame_members = 8;
  std::size_t replay_events = 16;
};

// Single-field mutators. `field` selects the component in declaration order
// (modulo the field count) and `variant` the kind of damage. The returned
// value always differs from the input in exactly that field.
JoinRequest mutate(const JoinRequest& v, std::size_t field, std::size_t variant, Rng& rng);
GroupSignature mutate(const GroupSignature& v, std::size_t field, std::size_t variant,
                      Rng& rng);
EventSignature mutate(const EventSignature& v, std::size_t field, std::size_t variant,
                      Rng& rng);
TracingProof mutate(const TracingProof& v, std::size_t field, std::size_t variant, Rng& rng);

inline constexpr std::size_t kJoinRequestFields = 3;
inline constexpr std::size_t kGroupSignatureFields = 8;
inline constexpr std::size_t kEventSignatureFields = 2;
inline constexpr std::size_t kTracingProofFields = 4;

NegativeReport negative_suites(std::uint64_t seed, const NegativeOptions& options = {});

}  // namespace aee::testkit

#endif  // AEE_TESTKIT_NEGATIVE_SUITES_HPP_
