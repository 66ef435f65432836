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

#ifndef AEE_HASHING_HPP_
#define AEE_HASHING_HPP_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>

#include "aee/algebra.hpp"

namespace aee {

inline constexpr std::string_view kH1Tag = "AEE-H1-v1";
inline constexpr std::string_view kH2Tag = "AEE-H2-v1";

// Type byte leading every framed hash input.
enum class ItemType : std::uint8_t {
  kBytes = 0x01,
  kEventId = 0x02,
  kScalar = 0x03,
  kG1 = 0x04,
  kG2 = 0x05,
  kGT = 0x06,
  kGroupSignature = 0x07,
  kEventPublicKey = 0x08,
};

// One typed input to hash_to_scalar.
struct HashItem {
  ItemType type;
  Bytes payload;

  static HashItem bytes(ByteView b) { return {ItemType::kBytes, Bytes(b.begin(), b.end())}; }
  static HashItem event(ByteView et) { return {ItemType::kEventId, Bytes(et.begin(), et.end())}; }
  static HashItem of(const Scalar& s);
  static HashItem of(const G1& p);  // compressed form
  static HashItem of(const G2& p);  // compressed form
  static HashItem of(const GT& t);
};

// type byte || 4-byte big-endian payload length || payload.
Bytes encode_hash_item(const HashItem& item);

// Hash onto G1 with the standard SSWU random-oracle construction
// (BLS12381G1_XMD:SHA-256_SSWU_RO_), domain_tag as the DST.
G1 hash_to_g1(std::string_view domain_tag, ByteView message);

// SHA-512 over (framed tag || 4-byte item count || framed items), read as a
// big-endian integer and reduced mod p.
Scalar hash_to_scalar(std::string_view domain_tag, std::span<const HashItem> items);

inline Scalar hash_to_scalar(std::string_view domain_tag,
                             std::initializer_list<HashItem> items) {
  return hash_to_scalar(domain_tag, std::span<const HashItem>(items.begin(), items.size()));
}

inline ByteView as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

}  // namespace aee

#endif  // AEE_HASHING_HPP_
