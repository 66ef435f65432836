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

#include "aee/eventsig.hpp"
#include "aee/op_counter.hpp"
#include "aee/testkit/negative_suites.hpp"
#include "test_support.hpp"

namespace aee {
namespace {

using testing::bytes_of;
using testing::Group;
using testing::Member;

class EventSigTest : public ::testing::Test {
 protected:
  EventSigTest() : alice(g.enroll("alice")), bob(g.enroll("bob")) {
    sigma = g.sign(alice, et, {});
    epk = epk_from_signature(g.gpk(), et, sigma);
  }
  Group g{31};
  Member alice;
  Member bob;
  EventId et{"201703011000"};
  GroupSignature sigma;
  EventPublicKey epk{et, G1(), G1()};
};

TEST_F(EventSigTest, EpkComesFromSignature) {
  EXPECT_EQ(epk.et, et);
  EXPECT_EQ(epk.base, GroupPublicKey::event_base(et));
  EXPECT_EQ(epk.token, sigma.T);
}

TEST_F(EventSigTest, RoundTrip) {
  const Bytes m = bytes_of("CAM position=1,2 speed=13");
  EXPECT_TRUE(ever(et, epk, m, esign(alice.keys.usk, et, epk, m, g.rng)));
}

TEST_F(EventSigTest, FreshNonces) {
  const Bytes m = bytes_of("same");
  const EventSignature a = esign(alice.keys.usk, et, epk, m, g.rng);
  const EventSignature b = esign(alice.keys.usk, et, epk, m, g.rng);
  EXPECT_NE(a, b);
  EXPECT_TRUE(ever(et, epk, m, a));
  EXPECT_TRUE(ever(et, epk, m, b));
}

TEST_F(EventSigTest, WrongKeyRejected) {
  const Bytes m = bytes_of("m");
  EXPECT_FALSE(ever(et, epk, m, esign(bob.keys.usk, et, epk, m, g.rng)));
  EventPublicKey swapped = epk;
  swapped.token = g.sign(bob, et, {}).T;
  EXPECT_FALSE(ever(et, swapped, m, esign(alice.keys.usk, et, epk, m, g.rng)));
}

TEST_F(EventSigTest, MessageBound) {
  const EventSignature s = esign(alice.keys.usk, et, epk, bytes_of("m"), g.rng);
  EXPECT_FALSE(ever(et, epk, bytes_of("n"), s));
  EXPECT_FALSE(ever(et, epk, {}, s));
}

TEST_F(EventSigTest, ExpiresWithEvent) {
  const EventId next("201703011010");
  const Bytes m = bytes_of("m");
  const EventSignature s = esign(alice.keys.usk, et, epk, m, g.rng);
  EXPECT_FALSE(ever(next, epk, m, s));
  EventPublicKey relabeled = epk;
  relabeled.et = next;
  relabeled.base = GroupPublicKey::event_base(next);
  EXPECT_FALSE(ever(next, relabeled, m, s));
  // Signing under the stale key for the new event does not help either.
  EXPECT_FALSE(ever(next, epk, m, esign(alice.keys.usk, next, epk, m, g.rng)));
}

TEST_F(EventSigTest, OpCounts) {
  const Bytes m = bytes_of("m");
  EventSignature s;
  {
    CountingSession c;
    s = esign(alice.keys.usk, et, epk, m, g.rng);
    OpCounts want;
    want.exp_g1 = 1;
    EXPECT_EQ(group_ops_only(c.counts()), want);
  }
  CountingSession c;
  ASSERT_TRUE(ever(et, epk, m, s));
  OpCounts want;
  want.mul_g1 = 1;
  want.exp_g1 = 2;
  EXPECT_EQ(group_ops_only(c.counts()), want);
}

TEST_F(EventSigTest, SingleFieldMutationsRejected) {
  const Bytes m = bytes_of("m");
  const EventSignature s = esign(alice.keys.usk, et, epk, m, g.rng);
  for (std::size_t i = 0; i < 200; ++i) {
    ASSERT_FALSE(ever(et, epk, m, testkit::mutate(s, i % 2, i / 2, g.rng))) << "case " << i;
  }
}

TEST(EventPipelineTest, RandomKeysEventsMessages) {
  Group g(33);
  std::vector<Member> members;
  for (int i = 0; i < 5; ++i) members.push_back(g.enroll("m" + std::to_string(i)));
  for (int i = 0; i < 1000; ++i) {
    const Member& who = members[static_cast<std::size_t>(i) % members.size()];
    const EventId et("slot-" + std::to_string(i % 37));
    Bytes m(static_cast<std::size_t>(i % 64));
    g.rng.fill(m);
    const EventPublicKey epk = epk_from_signature(g.gpk(), et, g.sign(who, et, {}));
    ASSERT_TRUE(ever(et, epk, m, esign(who.keys.usk, et, epk, m, g.rng))) << i;
  }
}

}  // namespace
}  // namespace aee
