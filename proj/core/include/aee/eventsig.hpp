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

#ifndef AEE_EVENTSIG_HPP_
#define AEE_EVENTSIG_HPP_

// Pairing-free Schnorr signatures under the event public key (H1(et), T)
// certified by a group signature on et.

#include "aee/algebra.hpp"
#include "aee/groupsig.hpp"
#include "aee/keys.hpp"

namespace aee {

class Rng;

struct EventPublicKey {
  EventId et;
  G1 base;   // H1(et)
  G1 token;  // T = H1(et)^y

  friend bool operator==(const EventPublicKey&, const EventPublicKey&) = default;
};

struct EventSignature {
  Scalar s_e;
  Scalar c_e;
  friend bool operator==(const EventSignature&, const EventSignature&) = default;
};

// Caller must have checked gver(gpk, et, *, sigma).
EventPublicKey epk_from_signature(const GroupPublicKey& gpk, const EventId& et,
                                  const GroupSignature& sigma);

// The H2 item standing for the pair (H1(et), T).
HashItem epk_hash_item(const EventPublicKey& epk);

// R = H1(et)^r, c_e = H2(et, m_e, epk, R), s_e = r + y*c_e.
EventSignature esign(const Scalar& usk, const EventId& et, const EventPublicKey& epk,
                     ByteView m_e, Rng& rng);

// R~ = H1(et)^s_e * T^-c_e; accepts iff c_e = H2(et, m_e, epk, R~). An epk
// issued for another event never verifies.
bool ever(const EventId& et, const EventPublicKey& epk, ByteView m_e,
          const EventSignature& sig);

}  // namespace aee

#endif  // AEE_EVENTSIG_HPP_
