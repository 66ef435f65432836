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

#ifndef AEE_LINKTRACE_HPP_
#define AEE_LINKTRACE_HPP_

#include <chrono>
#include <optional>
#include <vector>

#include "aee/algebra.hpp"
#include "aee/enroll.hpp"
#include "aee/groupsig.hpp"
#include "aee/keys.hpp"

namespace aee {

class Rng;

// Opener's evidence that a signature came from a given member:
// K = D^xi, c = H2(sigma, K, u^r, D^r), s = r + xi*c, and the member's x.
struct TracingProof {
  G1 K;
  Scalar s;
  Scalar c;
  Scalar x;
  friend bool operator==(const TracingProof&, const TracingProof&) = default;
};

// Two signatures on the same event are linked iff their tokens are equal.
// Only the tokens are inspected; validity of the signatures is the caller's
// business.
bool link_tokens(const G1& t0, const G1& t1);

bool link(const EventId& et, ByteView m0, const GroupSignature& sigma0, ByteView m1,
          const GroupSignature& sigma1);

// A = B * D^-xi.
G1 recover_credential(const MasterOpeningKey& mok, const GroupSignature& sigma);

struct Opening {
  MemberId member;
  TracingProof proof;
};

// Append-only record of open() calls.
class OpenerAuditLog {
 public:
  enum class Outcome { kOpened, kUntraceable, kInvalidSignature };

  struct Entry {
    std::chrono::system_clock::time_point when;
    EventId et;
    Outcome outcome;
    std::optional<MemberId> member;
  };

  void append(Entry entry) { entries_.push_back(std::move(entry)); }
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

// Verifies sigma, recovers A and looks it up in O(1). Returns nullopt when
// A belongs to no registered member. Throws ProtocolError if sigma does not
// verify.
std::optional<Opening> open(const GroupPublicKey& gpk, const MasterOpeningKey& mok,
                            const RegistrationTable& reg, const EventId& et, ByteView m,
                            const GroupSignature& sigma, Rng& rng,
                            OpenerAuditLog* audit = nullptr);

// Public check of a tracing proof against the member's long-term key.
bool judge(const GroupPublicKey& gpk, const MemberId& member, const G1& upk,
           const GroupSignature& sigma, const TracingProof& proof);

}  // namespace aee

#endif  // AEE_LINKTRACE_HPP_
