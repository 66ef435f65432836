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

#ifndef AEE_WIRE_HPP_
#define AEE_WIRE_HPP_

// Canonical byte formats.
//
// Scalars are 32-byte big-endian and must be reduced mod p. Points use the
// backend's standard encodings: 96/48 bytes (full/compressed) for G1, and
// the compressed 96-byte form for G2 inside key material.
//
// "Raw" signature encodings are the bare concatenation of their components
// and are what the size accounting measures. "Framed" artifacts prepend a
// single version tag byte whose high nibble is the format version and low
// nibble the artifact kind.

#include <cstdint>
#include <string>
#include <string_view>

#include "aee/algebra.hpp"
#include "aee/enroll.hpp"
#include "aee/eventsig.hpp"
#include "aee/groupsig.hpp"
#include "aee/keys.hpp"
#include "aee/linktrace.hpp"

namespace aee::wire {

inline constexpr std::uint8_t kFormatVersion = 1;

enum class Kind : std::uint8_t {
  kGroupPublicKey = 0x1,
  kMasterIssuingKey = 0x2,
  kMasterOpeningKey = 0x3,
  kUserKeyPair = 0x4,
  kGroupSigningKey = 0x5,
  kJoinRequest = 0x6,
  kIssueResponse = 0x7,
  kGroupSignature = 0x8,
  kEventSignature = 0x9,
  kTracingProof = 0xA,
  kEventPublicKey = 0xB,
  kSchedule = 0xC,
};

std::string_view kind_name(Kind kind);

constexpr std::uint8_t version_tag(Kind kind) {
  return static_cast<std::uint8_t>((kFormatVersion << 4) | static_cast<std::uint8_t>(kind));
}

// ------------------------------------------------------------ signatures

// 3*|G1| + 5*|Z_p| bytes: D, B, T, c, s_x, s_y, s_alpha, s_delta.
Bytes encode_group_signature(const GroupSignature& sigma, PointFormat format);
// Width is inferred from the length.
GroupSignature decode_group_signature(ByteView raw);

// 2*|Z_p| bytes: s_e, c_e.
Bytes encode_event_signature(const EventSignature& sig);
EventSignature decode_event_signature(ByteView raw);

struct SignatureSizes {
  std::size_t group_full;
  std::size_t group_compressed;
  std::size_t event_full;
  std::size_t event_compressed;
};

SignatureSizes signature_sizes(const ElementWidths& widths);

// ------------------------------------------------------------ hash items

// type byte || 4-byte big-endian length || canonical bytes.
Bytes canonical_hash_item(const Scalar& v);
Bytes canonical_hash_item(const G1& v);
Bytes canonical_hash_item(const G2& v);
Bytes canonical_hash_item(const GT& v);
Bytes canonical_hash_item(ByteView v);
Bytes canonical_hash_item(const EventId& v);

// Item used when a whole group signature is hashed (tracing proofs).
HashItem group_signature_item(const GroupSignature& sigma);

// --------------------------------------------------------- framed files

Bytes encode(const GroupPublicKey& v);
Bytes encode(const MasterIssuingKey& v);
Bytes encode(const MasterOpeningKey& v);
Bytes encode(const UserKeyPair& v);
Bytes encode(const GroupSigningKey& v);
Bytes encode(const JoinRequest& v);
Bytes encode(const IssueResponse& v);
Bytes encode(const GroupSignature& v, PointFormat format = PointFormat::kCompressed);
Bytes encode(const EventSignature& v);
Bytes encode(const TracingProof& v);
Bytes encode(const EventPublicKey& v);
Bytes encode(std::span<const ScheduledSignature> schedule);

// Peeks at the version tag; throws DecodeError on an unknown version.
Kind peek_kind(ByteView framed);

template <typename T>
T decode(ByteView framed);

template <> GroupPublicKey decode<GroupPublicKey>(ByteView);
template <> MasterIssuingKey decode<MasterIssuingKey>(ByteView);
template <> MasterOpeningKey decode<MasterOpeningKey>(ByteView);
template <> UserKeyPair decode<UserKeyPair>(ByteView);
template <> GroupSigningKey decode<GroupSigningKey>(ByteView);
template <> JoinRequest decode<JoinRequest>(ByteView);
template <> IssueResponse decode<IssueResponse>(ByteView);
template <> GroupSignature decode<GroupSignature>(ByteView);
template <> EventSignature decode<EventSignature>(ByteView);
template <> TracingProof decode<TracingProof>(ByteView);
template <> EventPublicKey decode<EventPublicKey>(ByteView);
template <> std::vector<ScheduledSignature> decode<std::vector<ScheduledSignature>>(ByteView);

// ------------------------------------------------------------------ hex

std::string to_hex(ByteView bytes);
// Ignores surrounding whitespace; throws DecodeError on bad digits.
Bytes from_hex(std::string_view hex);

}  // namespace aee::wire

#endif  // AEE_WIRE_HPP_
