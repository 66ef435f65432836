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

#ifndef AEE_TESTKIT_ORACLES_HPP_
#define AEE_TESTKIT_ORACLES_HPP_

// Oracle suite for the security and correctness games. Each oracle returns
// std::nullopt where the game definition returns bottom.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "aee/enroll.hpp"
#include "aee/eventsig.hpp"
#include "aee/groupsig.hpp"
#include "aee/keys.hpp"
#include "aee/linktrace.hpp"

namespace aee {
class Rng;
}

namespace aee::testkit {

struct SigRecord {
  MemberId member;
  EventId et;
  Bytes m;
  std::optional<GroupSignature> sigma;  // empty for the ChL placeholder entry
};

// Raised by the challenge oracle where the game aborts.
class GameAborted : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class JoinDecision { kCont, kAccept, kReject };

class GameState {
 public:
  GameState(Rng& rng, const BilinearSuite& suite = bls12_381());

  const GroupPublicKey& gpk() const { return setup_.gpk; }
  const MasterIssuingKey& mik() const { return setup_.mik; }
  const MasterOpeningKey& mok() const { return setup_.mok; }
  Rng& rng() { return *rng_; }

  // Registration table rebuilt from reg[]; WReg writes show up here.
  RegistrationTable registry() const;

  std::set<MemberId> HU;
  std::set<MemberId> BU;
  std::map<std::size_t, SigRecord> SigL;
  std::vector<SigRecord> ChL;
  std::map<MemberId, G1> upk;
  std::map<MemberId, Scalar> usk;
  std::map<MemberId, RegistrationTable::Row> reg;
  std::map<MemberId, GroupSigningKey> gsk;
  std::size_t sn = 1;

 private:
  friend std::pair<std::optional<JoinRequest>, JoinDecision> oracle_snd_to_u(
      GameState&, const MemberId&, const std::optional<IssueResponse>&);

  Rng* rng_;
  GroupSetup setup_;
  std::map<MemberId, bool> join_pending_;
};

std::optional<G1> oracle_add_u(GameState& state, const MemberId& i);

std::optional<GroupSignature> oracle_gsign(GameState& state, const MemberId& i,
                                           const EventId& et, ByteView m);

// k >= 1 signs under the epk of SigL[k]; k == 0 under the live challenge.
std::optional<EventSignature> oracle_esign(GameState& state, std::size_t k, ByteView m_e);

std::optional<std::pair<GroupSigningKey, Scalar>> oracle_usk(GameState& state,
                                                             const MemberId& i);

std::optional<RegistrationTable::Row> oracle_rreg(const GameState& state, const MemberId& i);

void oracle_wreg(GameState& state, const MemberId& i, RegistrationTable::Row val);

// Honest user side of Join driven by an (possibly corrupt) issuer. First call
// for a fresh i ignores m_in and returns the join request.
std::pair<std::optional<JoinRequest>, JoinDecision> oracle_snd_to_u(
    GameState& state, const MemberId& i, const std::optional<IssueResponse>& m_in);

// Ch_b. Throws GameAborted when either member already signed on et.
std::optional<GroupSignature> oracle_challenge(GameState& state, int b, const MemberId& i0,
                                               const MemberId& i1, const EventId& et,
                                               ByteView m);

}  // namespace aee::testkit

#endif  // AEE_TESTKIT_ORACLES_HPP_
