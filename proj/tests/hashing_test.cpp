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

#include <gtest/gtest.h>
#include <openssl/evp.h>

#include <set>

#include "aee/hashing.hpp"
#include "aee/rng.hpp"
#include "test_support.hpp"

namespace aee {
namespace {

using testing::Mpz;
using testing::scalar_bytes;

void be32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<std::uint8_t>(v >> s));
}

// Independent rebuild of H2: OpenSSL SHA-512 over the framed items, reduced
// by GMP.
std::vector<std::uint8_t> h2_oracle(std::string_view tag,
                                    const std::vector<std::pair<std::uint8_t, Bytes>>& items) {
  std::vector<std::uint8_t> buf;
  buf.push_back(0x01);
  be32(buf, static_cast<std::uint32_t>(tag.size()));
  buf.insert(buf.end(), tag.begin(), tag.end());
  be32(buf, static_cast<std::uint32_t>(items.size()));
  for (const auto& [type, payload] : items) {
    buf.push_back(type);
    be32(buf, static_cast<std::uint32_t>(payload.size()));
    buf.insert(buf.end(), payload.begin(), payload.end());
  }
  std::array<std::uint8_t, 64> digest{};
  unsigned int len = 0;
  EVP_Digest(buf.data(), buf.size(), digest.data(), &len, EVP_sha512(), nullptr);
  Mpz x(digest), p(bls12_381().order_be), r;
  mpz_mod(r.get(), x.get(), p.get());
  return r.to_be(32);
}

TEST(HashToScalarTest, MatchesIndependentOracle) {
  SeededRng rng(1);
  for (int i = 0; i < 200; ++i) {
    Bytes a(static_cast<std::size_t>(i % 40));
    rng.fill(a);
    const G1 p = G1::random(rng);
    const Scalar s = Scalar::random(rng);
    const auto pc = p.compressed();
    const auto sb = s.to_bytes();
    const Scalar got = hash_to_scalar(kH2Tag, {HashItem::bytes(a), HashItem::event(a),
                                               HashItem::of(p), HashItem::of(s)});
    const auto want = h2_oracle(kH2Tag, {{0x01, a},
                                         {0x02, a},
                                         {0x04, Bytes(pc.begin(), pc.end())},
                                         {0x03, Bytes(sb.begin(), sb.end())}});
    EXPECT_EQ(scalar_bytes(got), want);
  }
}

TEST(HashToScalarTest, Deterministic) {
  const auto items = {HashItem::bytes(as_bytes("x")), HashItem::of(G1::generator())};
  EXPECT_EQ(hash_to_scalar(kH2Tag, items), hash_to_scalar(kH2Tag, items));
}

TEST(HashToScalarTest, FramingIsInjective) {
  const Scalar ab_c =
      hash_to_scalar(kH2Tag, {HashItem::bytes(as_bytes("ab")), HashItem::bytes(as_bytes("c"))});
  const Scalar a_bc =
      hash_to_scalar(kH2Tag, {HashItem::bytes(as_bytes("a")), HashItem::bytes(as_bytes("bc"))});
  const Scalar abc = hash_to_scalar(kH2Tag, {HashItem::bytes(as_bytes("abc"))});
  EXPECT_NE(ab_c, a_bc);
  EXPECT_NE(ab_c, abc);
  EXPECT_NE(a_bc, abc);
  // Same payload, different type tag.
  EXPECT_NE(hash_to_scalar(kH2Tag, {HashItem::bytes(as_bytes("e1"))}),
            hash_to_scalar(kH2Tag, {HashItem::event(as_bytes("e1"))}));
  EXPECT_NE(hash_to_scalar(kH2Tag, {HashItem::bytes(as_bytes("e1"))}),
            hash_to_scalar("other-tag", {HashItem::bytes(as_bytes("e1"))}));
}

TEST(HashToScalarTest, OutputBelowOrder) {
  Mpz p(bls12_381().order_be);
  for (std::uint32_t i = 0; i < 10000; ++i) {
    const Scalar s = hash_to_scalar(kH2Tag, {HashItem::bytes(Bytes{static_cast<std::uint8_t>(i),
                                                                   static_cast<std::uint8_t>(i >> 8)})});
    Mpz v(scalar_bytes(s));
    ASSERT_LT(mpz_cmp(v.get(), p.get()), 0);
  }
}

TEST(HashItemTest, EmptyPayloadEncoding) {
  EXPECT_EQ(encode_hash_item(HashItem::bytes({})), (Bytes{0x01, 0, 0, 0, 0}));
}

TEST(HashToG1Test, DeterministicAndInSubgroup) {
  SeededRng rng(2);
  for (int i = 0; i < 1000; ++i) {
    Bytes m(16);
    rng.fill(m);
    const G1 a = hash_to_g1(kH1Tag, m);
    ASSERT_TRUE(a.in_subgroup());
    ASSERT_FALSE(a.is_identity());
    if (i < 20) EXPECT_EQ(a, hash_to_g1(kH1Tag, m));
  }
}

TEST(HashToG1Test, NoCollisionsAtDeskScale) {
  std::set<std::array<std::uint8_t, G1::kCompressedBytes>> seen;
  for (int i = 0; i < 10000; ++i) {
    const std::string m = "event-" + std::to_string(i);
    ASSERT_TRUE(seen.insert(hash_to_g1(kH1Tag, as_bytes(m)).compressed()).second);
  }
}

TEST(HashToG1Test, TagSeparates) {
  EXPECT_NE(hash_to_g1(kH1Tag, as_bytes("e")), hash_to_g1("AEE-H1-other", as_bytes("e")));
}

}  // namespace
}  // namespace aee
