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

#include "aee/wire.hpp"

#include <sodium.h>

#include <cctype>

#include "aee/errors.hpp"
#include "aee/hashing.hpp"
#include "byte_io.hpp"

namespace aee::wire {

namespace {

using detail::ByteReader;
using detail::ByteWriter;

ByteWriter framed(Kind kind) {
  ByteWriter w;
  w.u8(version_tag(kind));
  return w;
}

ByteReader unframe(ByteView framed, Kind expected) {
  const Kind kind = peek_kind(framed);
  if (kind != expected) {
    throw DecodeError("expected " + std::string(kind_name(expected)) + ", found " +
                      std::string(kind_name(kind)));
  }
  return ByteReader(framed.subspan(1), std::string(kind_name(expected)));
}

Bytes item(ItemType type, ByteView payload) {
  return encode_hash_item(HashItem{type, Bytes(payload.begin(), payload.end())});
}

}  // namespace

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::kGroupPublicKey: return "group public key";
    case Kind::kMasterIssuingKey: return "master issuing key";
    case Kind::kMasterOpeningKey: return "master opening key";
    case Kind::kUserKeyPair: return "user key pair";
    case Kind::kGroupSigningKey: return "group signing key";
    case Kind::kJoinRequest: return "join request";
    case Kind::kIssueResponse: return "issue response";
    case Kind::kGroupSignature: return "group signature";
    case Kind::kEventSignature: return "event signature";
    case Kind::kTracingProof: return "tracing proof";
    case Kind::kEventPublicKey: return "event public key";
    case Kind::kSchedule: return "signature schedule";
  }
  return "unknown";
}

Kind peek_kind(ByteView framed) {
  if (framed.empty()) throw DecodeError("empty input");
  const std::uint8_t tag = framed[0];
  if ((tag >> 4) != kFormatVersion) {
    throw DecodeError("unsupported format version tag 0x" + to_hex(framed.first(1)));
  }
  const std::uint8_t kind = tag & 0x0f;
  if (kind < static_cast<std::uint8_t>(Kind::kGroupPublicKey) ||
      kind > static_cast<std::uint8_t>(Kind::kSchedule)) {
    throw DecodeError("unknown artifact kind 0x" + to_hex(framed.first(1)));
  }
  return static_cast<Kind>(kind);
}

// ------------------------------------------------------------ signatures

Bytes encode_group_signature(const GroupSignature& sigma, PointFormat format) {
  ByteWriter w;
  w.g1(sigma.D, format);
  w.g1(sigma.B, format);
  w.g1(sigma.T, format);
  for (const Scalar* s : {&sigma.c, &sigma.s_x, &sigma.s_y, &sigma.s_alpha, &sigma.s_delta}) {
    w.scalar(*s);
  }
  return w.take();
}

GroupSignature decode_group_signature(ByteView raw) {
  const auto sizes = signature_sizes(bls12_381().widths);
  std::size_t width;
  if (raw.size() == sizes.group_full) {
    width = G1::kFullBytes;
  } else if (raw.size() == sizes.group_compressed) {
    width = G1::kCompressedBytes;
  } else {
    throw DecodeError("group signature: bad length " + std::to_string(raw.size()));
  }
  ByteReader r(raw, "group signature");
  GroupSignature sigma;
  sigma.D = r.g1(width);
  sigma.B = r.g1(width);
  sigma.T = r.g1(width);
  for (Scalar* s : {&sigma.c, &sigma.s_x, &sigma.s_y, &sigma.s_alpha, &sigma.s_delta}) {
    *s = r.scalar();
  }
  r.expect_end();
  return sigma;
}

Bytes encode_event_signature(const EventSignature& sig) {
  ByteWriter w;
  w.scalar(sig.s_e);
  w.scalar(sig.c_e);
  return w.take();
}

EventSignature decode_event_signature(ByteView raw) {
  if (raw.size() != 2 * Scalar::kBytes) {
    throw DecodeError("event signature: bad length " + std::to_string(raw.size()));
  }
  ByteReader r(raw, "event signature");
  EventSignature sig;
  sig.s_e = r.scalar();
  sig.c_e = r.scalar();
  return sig;
}

SignatureSizes signature_sizes(const ElementWidths& w) {
  return {
      3 * w.g1_full + 5 * w.scalar,
      3 * w.g1_compressed + 5 * w.scalar,
      2 * w.scalar,
      2 * w.scalar,
  };
}

// ------------------------------------------------------------ hash items

Bytes canonical_hash_item(const Scalar& v) { return encode_hash_item(HashItem::of(v)); }
Bytes canonical_hash_item(const G1& v) { return encode_hash_item(HashItem::of(v)); }
Bytes canonical_hash_item(const G2& v) { return encode_hash_item(HashItem::of(v)); }
Bytes canonical_hash_item(const GT& v) { return encode_hash_item(HashItem::of(v)); }
Bytes canonical_hash_item(ByteView v) { return item(ItemType::kBytes, v); }
Bytes canonical_hash_item(const EventId& v) { return item(ItemType::kEventId, v.bytes()); }

HashItem group_signature_item(const GroupSignature& sigma) {
  return {ItemType::kGroupSignature, encode_group_signature(sigma, PointFormat::kFull)};
}

// --------------------------------------------------------- framed files

Bytes encode(const GroupPublicKey& v) {
  ByteWriter w = framed(Kind::kGroupPublicKey);
  w.g1(v.g1);
  w.g1(v.h);
  w.g1(v.u);
  w.g2(v.g2);
  w.g2(v.w);
  return w.take();
}

template <>
GroupPublicKey decode<GroupPublicKey>(ByteView framed) {
  ByteReader r = unframe(framed, Kind::kGroupPublicKey);
  GroupPublicKey v;
  v.g1 = r.g1();
  v.h = r.g1();
  v.u = r.g1();
  v.g2 = r.g2();
  v.w = r.g2();
  r.expect_end();
  if (!is_well_formed(v)) throw DecodeError("group public key: identity element");
  return v;
}

Bytes encode(const MasterIssuingKey& v) {
  ByteWriter w = framed(Kind::kMasterIssuingKey);
  w.scalar(v.gamma);
  return w.take();
}

template <>
MasterIssuingKey decode<MasterIssuingKey>(ByteView framed) {
  ByteReader r = unframe(framed, Kind::kMasterIssuingKey);
  MasterIssuingKey v{r.scalar()};
  r.expect_end();
  if (v.gamma.is_zero()) throw DecodeError("master issuing key: zero");
  return v;
}

Bytes encode(const MasterOpeningKey& v) {
  ByteWriter w = framed(Kind::kMasterOpeningKey);
  w.scalar(v.xi);
  return w.take();
}

template <>
MasterOpeningKey decode<MasterOpeningKey>(ByteView framed) {
  ByteReader r = unframe(framed, Kind::kMasterOpeningKey);
  MasterOpeningKey v{r.scalar()};
  r.expect_end();
  if (v.xi.is_zero()) throw DecodeError("master opening key: zero");
  return v;
}

Bytes encode(const UserKeyPair& v) {
  ByteWriter w = framed(Kind::kUserKeyPair);
  w.scalar(v.usk);
  w.g1(v.upk);
  return w.take();
}

template <>
UserKeyPair decode<UserKeyPair>(ByteView framed) {
  ByteReader r = unframe(framed, Kind::kUserKeyPair);
  UserKeyPair v;
  v.usk = r.scalar();
  v.upk = r.g1();
  r.expect_end();
  if (v.usk.is_zero()) throw DecodeError("user key pair: zero secret");
  return v;
}

Bytes encode(const GroupSigningKey& v) {
  ByteWriter w = framed(Kind::kGroupSigningKey);
  w.scalar(v.x);
  w.scalar(v.y);
  w.g1(v.A);
  return w.take();
}

template <>
GroupSigningKey decode<GroupSigningKey>(ByteView framed) {
  ByteReader r = unframe(framed, Kind::kGroupSigningKey);
  GroupSigningKey v;
  v.x = r.scalar();
  v.y = r.scalar();
  v.A = r.g1();
  r.expect_end();
  return v;
}

Bytes encode(const JoinRequest& v) {
  ByteWriter w = framed(Kind::kJoinRequest);
  w.g1(v.z);
  w.scalar(v.c);
  w.scalar(v.s);
  return w.take();
}

template <>
JoinRequest decode<JoinRequest>(ByteView framed) {
  ByteReader r = unframe(framed, Kind::kJoinRequest);
  JoinRequest v;
  v.z = r.g1();
  v.c = r.scalar();
  v.s = r.scalar();
  r.expect_end();
  return v;
}

Bytes encode(const IssueResponse& v) {
  ByteWriter w = framed(Kind::kIssueResponse);
  w.scalar(v.x);
  w.g1(v.A);
  return w.take();
}

template <>
IssueResponse decode<IssueResponse>(ByteView framed) {
  ByteReader r = unframe(framed, Kind::kIssueResponse);
  IssueResponse v;
  v.x = r.scalar();
  v.A = r.g1();
  r.expect_end();
  return v;
}

Bytes encode(const GroupSignature& v, PointFormat format) {
  ByteWriter w = framed(Kind::kGroupSignature);
  w.raw(encode_group_signature(v, format));
  return w.take();
}

template <>
GroupSignature decode<GroupSignature>(ByteView framed) {
  unframe(framed, Kind::kGroupSignature);
  return decode_group_signature(framed.subspan(1));
}

Bytes encode(const EventSignature& v) {
  ByteWriter w = framed(Kind::kEventSignature);
  w.raw(encode_event_signature(v));
  return w.take();
}

template <>
EventSignature decode<EventSignature>(ByteView framed) {
  unframe(framed, Kind::kEventSignature);
  return decode_event_signature(framed.subspan(1));
}

Bytes encode(const TracingProof& v) {
  ByteWriter w = framed(Kind::kTracingProof);
  w.g1(v.K);
  w.scalar(v.s);
  w.scalar(v.c);
  w.scalar(v.x);
  return w.take();
}

template <>
TracingProof decode<TracingProof>(ByteView framed) {
  ByteReader r = unframe(framed, Kind::kTracingProof);
  TracingProof v;
  v.K = r.g1();
  v.s = r.scalar();
  v.c = r.scalar();
  v.x = r.scalar();
  r.expect_end();
  return v;
}

Bytes encode(const EventPublicKey& v) {
  ByteWriter w = framed(Kind::kEventPublicKey);
  w.sized(v.et.bytes());
  w.g1(v.base);
  w.g1(v.token);
  return w.take();
}

template <>
EventPublicKey decode<EventPublicKey>(ByteView framed) {
  ByteReader r = unframe(framed, Kind::kEventPublicKey);
  const ByteView et = r.sized();
  if (et.empty()) throw DecodeError("event public key: empty event id");
  EventPublicKey v{EventId(et), r.g1(), r.g1()};
  r.expect_end();
  return v;
}

Bytes encode(std::span<const ScheduledSignature> schedule) {
  ByteWriter w = framed(Kind::kSchedule);
  w.u32(static_cast<std::uint32_t>(schedule.size()));
  for (const ScheduledSignature& entry : schedule) {
    w.sized(entry.et.bytes());
    w.sized(encode_group_signature(entry.sigma, PointFormat::kCompressed));
  }
  return w.take();
}

template <>
std::vector<ScheduledSignature> decode<std::vector<ScheduledSignature>>(ByteView framed) {
  ByteReader r = unframe(framed, Kind::kSchedule);
  const std::uint32_t count = r.u32();
  std::vector<ScheduledSignature> out;
  for (std::uint32_t i = 0; i < count; ++i) {
    const ByteView et = r.sized();
    if (et.empty()) throw DecodeError("signature schedule: empty event id");
    out.push_back({EventId(et), decode_group_signature(r.sized())});
  }
  r.expect_end();
  return out;
}

// ------------------------------------------------------------------ hex

std::string to_hex(ByteView bytes) {
  std::string out(bytes.size() * 2 + 1, '\0');
  sodium_bin2hex(out.data(), out.size(), bytes.data(), bytes.size());
  out.pop_back();
  return out;
}

Bytes from_hex(std::string_view hex) {
  while (!hex.empty() && std::isspace(static_cast<unsigned char>(hex.front()))) hex.remove_prefix(1);
  while (!hex.empty() && std::isspace(static_cast<unsigned char>(hex.back()))) hex.remove_suffix(1);
  if (hex.size() % 2 != 0) throw DecodeError("hex: odd number of digits");
  Bytes out(hex.size() / 2);
  std::size_t written = 0;
  const char* end = nullptr;
  if (sodium_hex2bin(out.data(), out.size(), hex.data(), hex.size(), nullptr, &written,
                     &end) != 0 ||
      written != out.size() || end != hex.data() + hex.size()) {
    throw DecodeError("hex: invalid digit");
  }
  return out;
}

}  // namespace aee::wire
