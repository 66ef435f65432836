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

#include "aee/hashing.hpp"

#include <sodium.h>

#include "aee/op_counter.hpp"

namespace aee {

namespace {

void put_u32(Bytes& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void absorb(crypto_hash_sha512_state& st, const Bytes& b) {
  crypto_hash_sha512_update(&st, b.data(), b.size());
}

}  // namespace

HashItem HashItem::of(const Scalar& s) {
  const auto b = s.to_bytes();
  return {ItemType::kScalar, Bytes(b.begin(), b.end())};
}

HashItem HashItem::of(const G1& p) {
  const auto b = p.compressed();
  return {ItemType::kG1, Bytes(b.begin(), b.end())};
}

HashItem HashItem::of(const G2& p) {
  const auto b = p.compressed();
  return {ItemType::kG2, Bytes(b.begin(), b.end())};
}

HashItem HashItem::of(const GT& t) {
  const auto b = t.to_bytes();
  return {ItemType::kGT, Bytes(b.begin(), b.end())};
}

Bytes encode_hash_item(const HashItem& item) {
  Bytes out;
  out.reserve(5 + item.payload.size());
  out.push_back(static_cast<std::uint8_t>(item.type));
  put_u32(out, static_cast<std::uint32_t>(item.payload.size()));
  out.insert(out.end(), item.payload.begin(), item.payload.end());
  return out;
}

G1 hash_to_g1(std::string_view domain_tag, ByteView message) {
  record_op(Op::kHashToG1);
  blst_p1 out;
  blst_hash_to_g1(&out, message.data(), message.size(),
                  reinterpret_cast<const std::uint8_t*>(domain_tag.data()),
                  domain_tag.size(), nullptr, 0);
  return G1::from_raw(out);
}

Scalar hash_to_scalar(std::string_view domain_tag, std::span<const HashItem> items) {
  record_op(Op::kHashToScalar);
  crypto_hash_sha512_state st;
  crypto_hash_sha512_init(&st);
  absorb(st, encode_hash_item(HashItem::bytes(as_bytes(domain_tag))));
  Bytes count;
  put_u32(count, static_cast<std::uint32_t>(items.size()));
  absorb(st, count);
  for (const HashItem& item : items) absorb(st, encode_hash_item(item));
  std::array<std::uint8_t, crypto_hash_sha512_BYTES> digest{};
  crypto_hash_sha512_final(&st, digest.data());
  return Scalar::reduce(digest);
}

}  // namespace aee
