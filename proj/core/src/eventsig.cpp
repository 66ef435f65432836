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

#include "aee/eventsig.hpp"

#include <algorithm>

#include "aee/hashing.hpp"
#include "aee/rng.hpp"

namespace aee {

namespace {

Scalar event_challenge(const EventId& et, ByteView m_e, const EventPublicKey& epk,
                       const G1& R) {
  return hash_to_scalar(GroupPublicKey::h2_tag,
                        {HashItem::event(et.bytes()), HashItem::bytes(m_e),
                         epk_hash_item(epk), HashItem::of(R)});
}

}  // namespace

EventPublicKey epk_from_signature(const GroupPublicKey& gpk, const EventId& et,
                                  const GroupSignature& sigma) {
  return {et, gpk.event_base(et), sigma.T};
}

HashItem epk_hash_item(const EventPublicKey& epk) {
  const auto base = epk.base.compressed();
  const auto token = epk.token.compressed();
  Bytes payload(base.size() + token.size());
  std::copy(token.begin(), token.end(), std::copy(base.begin(), base.end(), payload.begin()));
  return {ItemType::kEventPublicKey, std::move(payload)};
}

EventSignature esign(const Scalar& usk, const EventId& et, const EventPublicKey& epk,
                     ByteView m_e, Rng& rng) {
  const Scalar r = Scalar::random_nonzero(rng);
  EventSignature sig;
  sig.c_e = event_challenge(et, m_e, epk, epk.base.pow(r));
  sig.s_e = r + usk * sig.c_e;
  return sig;
}

bool ever(const EventId& et, const EventPublicKey& epk, ByteView m_e,
          const EventSignature& sig) {
  if (epk.et != et) return false;
  if (epk.token.is_identity() || !epk.token.in_subgroup()) return false;
  if (!(epk.base == GroupPublicKey::event_base(et))) return false;
  const G1 R = epk.base.pow(sig.s_e) * epk.token.pow(-sig.c_e);
  return event_challenge(et, m_e, epk, R) == sig.c_e;
}

}  // namespace aee
