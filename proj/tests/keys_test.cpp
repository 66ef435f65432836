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

#include <set>

#include "aee/errors.hpp"
#include "aee/keys.hpp"
#include "aee/rng.hpp"
#include "aee/wire.hpp"

namespace aee {
namespace {

TEST(GsetTest, KeyRelations) {
  SeededRng rng(1);
  const GroupSetup s = gset(rng);
  EXPECT_EQ(pairing(s.gpk.g1, s.gpk.w), pairing(s.gpk.g1, s.gpk.g2).pow(s.mik.gamma));
  EXPECT_EQ(s.gpk.h, s.gpk.u.pow(s.mok.xi));
  EXPECT_TRUE(is_well_formed(s.gpk));
  EXPECT_TRUE(matches(s.gpk, s.mik));
  EXPECT_TRUE(matches(s.gpk, s.mok));
}

TEST(GsetTest, SetupsAreDistinct) {
  SeededRng rng(2);
  std::set<std::string> seen;
  for (int i = 0; i < 100; ++i) {
    seen.insert(wire::to_hex(wire::encode(gset(rng).gpk)));
  }
  EXPECT_EQ(seen.size(), 100u);
}

TEST(GsetTest, WellFormedRejectsIdentity) {
  SeededRng rng(3);
  const GroupPublicKey good = gset(rng).gpk;
  for (int field = 0; field < 5; ++field) {
    GroupPublicKey bad = good;
    switch (field) {
      case 0: bad.g1 = G1(); break;
      case 1: bad.h = G1(); break;
      case 2: bad.u = G1(); break;
      case 3: bad.g2 = G2(); break;
      case 4: bad.w = G2(); break;
    }
    EXPECT_FALSE(is_well_formed(bad)) << "field " << field;
  }
}

TEST(GsetTest, KeyMismatchDetected) {
  SeededRng rng(4);
  const GroupSetup a = gset(rng), b = gset(rng);
  EXPECT_FALSE(matches(a.gpk, b.mik));
  EXPECT_FALSE(matches(a.gpk, b.mok));
}

TEST(UkgTest, UpkIsHToUsk) {
  SeededRng rng(5);
  const GroupPublicKey gpk = gset(rng).gpk;
  std::set<std::array<std::uint8_t, 48>> seen;
  for (int i = 0; i < 1000; ++i) {
    const UserKeyPair k = ukg(rng, gpk);
    ASSERT_FALSE(k.usk.is_zero());
    ASSERT_EQ(k.upk, gpk.h.pow(k.usk));
    seen.insert(k.upk.compressed());
  }
  EXPECT_EQ(seen.size(), 1000u);
}

TEST(KeySerializationTest, RoundTripAllKeyTypes) {
  SeededRng rng(6);
  const GroupSetup s = gset(rng);
  const UserKeyPair k = ukg(rng, s.gpk);
  EXPECT_EQ(wire::decode<GroupPublicKey>(wire::encode(s.gpk)), s.gpk);
  EXPECT_EQ(wire::decode<MasterIssuingKey>(wire::encode(s.mik)), s.mik);
  EXPECT_EQ(wire::decode<MasterOpeningKey>(wire::encode(s.mok)), s.mok);
  EXPECT_EQ(wire::decode<UserKeyPair>(wire::encode(k)), k);
}

TEST(KeySerializationTest, KindMismatchRejected) {
  SeededRng rng(7);
  const GroupSetup s = gset(rng);
  EXPECT_THROW(wire::decode<MasterOpeningKey>(wire::encode(s.mik)), DecodeError);
}

TEST(EventIdTest, EmptyRejected) { EXPECT_THROW(EventId(""), ConfigError); }

}  // namespace
}  // namespace aee
