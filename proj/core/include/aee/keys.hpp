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

#ifndef AEE_KEYS_HPP_
#define AEE_KEYS_HPP_

#include <string>
#include <string_view>

#include "aee/algebra.hpp"
#include "aee/hashing.hpp"

namespace aee {

class Rng;

// Label of the linkability scope a group signature is bound to, e.g. an
// intersection id plus timestamp, or a ten-minute timeslot "201703011000".
class EventId {
 public:
  explicit EventId(std::string_view text);
  explicit EventId(ByteView bytes);

  ByteView bytes() const { return bytes_; }
  std::string text() const { return std::string(bytes_.begin(), bytes_.end()); }

  friend bool operator==(const EventId&, const EventId&) = default;
  friend auto operator<=>(const EventId&, const EventId&) = default;

 private:
  Bytes bytes_;
};

// gpk = (g1, h, u, H1, H2, g2, w). The hash functions are fixed by their
// domain tags.
struct GroupPublicKey {
  G1 g1;
  G1 h;
  G1 u;
  G2 g2;
  G2 w;

  static constexpr std::string_view h1_tag = kH1Tag;
  static constexpr std::string_view h2_tag = kH2Tag;

  // H1(et).
  static G1 event_base(const EventId& et) { return hash_to_g1(h1_tag, et.bytes()); }

  friend bool operator==(const GroupPublicKey&, const GroupPublicKey&) = default;
};

// Issuer secret gamma, with w = g2^gamma.
struct MasterIssuingKey {
  Scalar gamma;
  friend bool operator==(const MasterIssuingKey&, const MasterIssuingKey&) = default;
};

// Opener secret xi, with h = u^xi.
struct MasterOpeningKey {
  Scalar xi;
  friend bool operator==(const MasterOpeningKey&, const MasterOpeningKey&) = default;
};

// Long-term OBU identity: usk = y, upk = h^y.
struct UserKeyPair {
  Scalar usk;
  G1 upk;
  friend bool operator==(const UserKeyPair&, const UserKeyPair&) = default;
};

struct GroupSetup {
  GroupPublicKey gpk;
  MasterIssuingKey mik;
  MasterOpeningKey mok;
};

// Generates issuer and opener key material in one call. The three parts
// are serialized separately so the two authorities can be split.
GroupSetup gset(Rng& rng, const BilinearSuite& suite = bls12_381());

UserKeyPair ukg(Rng& rng, const GroupPublicKey& gpk);

// Subgroup membership of every element and g1, u, g2 != 1.
bool is_well_formed(const GroupPublicKey& gpk);
bool matches(const GroupPublicKey& gpk, const MasterIssuingKey& mik);
bool matches(const GroupPublicKey& gpk, const MasterOpeningKey& mok);
bool matches(const GroupPublicKey& gpk, const UserKeyPair& keys);

}  // namespace aee

#endif  // AEE_KEYS_HPP_
