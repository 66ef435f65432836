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

#include "aee/testkit/oracles.hpp"

#include <algorithm>

#include "aee/errors.hpp"
#include "aee/rng.hpp"

namespace aee::testkit {

namespace {

bool in_chl(const GameState& s, const MemberId& i) {
  return std::any_of(s.ChL.begin(), s.ChL.end(),
                     [&](const SigRecord& r) { return r.member == i; });
}

bool in_chl(const GameState& s, const MemberId& i, const EventId& et) {
  return std::any_of(s.ChL.begin(), s.ChL.end(),
                     [&](const SigRecord& r) { return r.member == i && r.et == et; });
}

bool in_sigl(const GameState& s, const MemberId& i, const EventId& et) {
  return std::any_of(s.SigL.begin(), s.SigL.end(), [&](const auto& kv) {
    return kv.second.member == i && kv.second.et == et;
  });
}

bool honest_not_bad(const GameState& s, const MemberId& i) {
  return s.HU.contains(i) && !s.BU.contains(i);
}

EventSignature esign_for(const GameState& s, const SigRecord& rec, ByteView m_e, Rng& rng) {
  const EventPublicKey epk = epk_from_signature(s.gpk(), rec.et, *rec.sigma);
  return esign(s.usk.at(rec.member), rec.et, epk, m_e, rng);
}

}  // namespace

GameState::GameState(Rng& rng, const BilinearSuite& suite)
    : rng_(&rng), setup_(gset(rng, suite)) {}

RegistrationTable GameState::registry() const {
  RegistrationTable table;
  for (const auto& [i, row] : reg) {
    try {
      table.insert(row);
    } catch (const ConflictError&) {
      // WReg may plant a duplicate credential; first writer keeps the index.
    }
  }
  return table;
}

std::optional<G1> oracle_add_u(GameState& state, const MemberId& i) {
  if (state.HU.contains(i)) return std::nullopt;
  state.HU.insert(i);
  state.gsk.erase(i);
  const UserKeyPair keys = ukg(state.rng(), state.gpk());
  state.upk[i] = keys.upk;
  state.usk[i] = keys.usk;

  // Join and Issue run in-process; the issuer's state is a scratch table so
  // that reg[i] only changes on accept.
  const JoinRequest req = join_start(state.gpk(), keys, state.rng());
  RegistrationTable scratch;
  const IssueResponse resp = issue(state.gpk(), state.mik(), scratch, i, req, state.rng());
  state.reg[i] = scratch.rows().front();
  state.gsk[i] = join_finish(state.gpk(), keys, resp);
  return state.upk[i];
}

std::optional<GroupSignature> oracle_gsign(GameState& state, const MemberId& i,
                                           const EventId& et, ByteView m) {
  if (!state.HU.contains(i)) return std::nullopt;
  const auto key = state.gsk.find(i);
  if (key == state.gsk.end()) return std::nullopt;
  if (in_chl(state, i, et)) return std::nullopt;
  GroupSignature sigma = gsign(state.gpk(), key->second, et, m, state.rng());
  state.SigL.emplace(state.sn, SigRecord{i, et, Bytes(m.begin(), m.end()), sigma});
  ++state.sn;
  return sigma;
}

std::optional<EventSignature> oracle_esign(GameState& state, std::size_t k, ByteView m_e) {
  if (k >= 1) {
    const auto it = state.SigL.find(k);
    if (it == state.SigL.end()) return std::nullopt;
    return esign_for(state, it->second, m_e, state.rng());
  }
  if (state.ChL.empty()) return std::nullopt;
  for (const SigRecord& rec : state.ChL) {
    if (rec.sigma) return esign_for(state, rec, m_e, state.rng());
  }
  return std::nullopt;
}

std::optional<std::pair<GroupSigningKey, Scalar>> oracle_usk(GameState& state,
                                                             const MemberId& i) {
  if (!honest_not_bad(state, i) || in_chl(state, i)) return std::nullopt;
  state.BU.insert(i);
  const auto key = state.gsk.find(i);
  if (key == state.gsk.end()) return std::nullopt;
  return std::make_pair(key->second, state.usk.at(i));
}

std::optional<RegistrationTable::Row> oracle_rreg(const GameState& state, const MemberId& i) {
  const auto it = state.reg.find(i);
  if (it == state.reg.end()) return std::nullopt;
  return it->second;
}

void oracle_wreg(GameState& state, const MemberId& i, RegistrationTable::Row val) {
  state.reg[i] = std::move(val);
}

std::pair<std::optional<JoinRequest>, JoinDecision> oracle_snd_to_u(
    GameState& state, const MemberId& i, const std::optional<IssueResponse>& m_in) {
  std::optional<IssueResponse> msg = m_in;
  if (!state.HU.contains(i)) {
    state.HU.insert(i);
    const UserKeyPair keys = ukg(state.rng(), state.gpk());
    state.upk[i] = keys.upk;
    state.usk[i] = keys.usk;
    state.gsk.erase(i);
    state.join_pending_[i] = false;
    msg.reset();
  }

  const UserKeyPair keys{state.usk.at(i), state.upk.at(i)};
  bool& pending = state.join_pending_[i];
  if (!pending) {
    if (state.gsk.contains(i)) return {std::nullopt, JoinDecision::kReject};
    pending = true;
    return {join_start(state.gpk(), keys, state.rng()), JoinDecision::kCont};
  }
  pending = false;
  if (!msg) return {std::nullopt, JoinDecision::kReject};
  try {
    state.gsk[i] = join_finish(state.gpk(), keys, *msg);
  } catch (const ProtocolError&) {
    return {std::nullopt, JoinDecision::kReject};
  }
  return {std::nullopt, JoinDecision::kAccept};
}

std::optional<GroupSignature> oracle_challenge(GameState& state, int b, const MemberId& i0,
                                               const MemberId& i1, const EventId& et,
                                               ByteView m) {
  if (!honest_not_bad(state, i0) || !honest_not_bad(state, i1)) return std::nullopt;
  if (in_sigl(state, i0, et) || in_sigl(state, i1, et)) {
    throw GameAborted("challenge: a challenged member already signed on this event");
  }
  const MemberId& ib = b == 0 ? i0 : i1;
  const MemberId& other = b == 0 ? i1 : i0;
  const auto key = state.gsk.find(ib);
  if (key == state.gsk.end()) return std::nullopt;
  GroupSignature sigma = gsign(state.gpk(), key->second, et, m, state.rng());
  const Bytes msg(m.begin(), m.end());
  state.ChL = {SigRecord{ib, et, msg, sigma}, SigRecord{other, et, msg, std::nullopt}};
  return sigma;
}

}  // namespace aee::testkit
