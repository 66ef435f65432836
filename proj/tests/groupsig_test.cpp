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

#include "aee/groupsig.hpp"
#include "aee/op_counter.hpp"
#include "aee/testkit/negative_suites.hpp"
#include "test_support.hpp"

namespace aee {
namespace {

using groupsig_detail::R4Form;
using testing::bytes_of;
using testing::Group;
using testing::Member;

class GroupSigTest : public ::testing::Test {
 protected:
  GroupSigTest() : alice(g.enroll("alice")), bob(g.enroll("bob")) {}
  Group g{21};
  Member alice;
  Member bob;
  EventId et{"junction-1||20170301100000"};
  Bytes msg = bytes_of("request slot");
};

TEST_F(GroupSigTest, HonestSignatureVerifies) {
  for (int i = 0; i < 20; ++i) {
    const Bytes m = bytes_of("msg-" + std::to_string(i));
    EXPECT_TRUE(gver(g.gpk(), et, m, g.sign(i % 2 ? alice : bob, et, m)));
  }
}

TEST_F(GroupSigTest, ContextFreeSigningMatches) {
  SeededRng r1(5), r2(5);
  const GroupSignature a = gsign(g.gpk(), alice.gsk, alice.ctx, et, msg, r1);
  const GroupSignature b = gsign(g.gpk(), alice.gsk, et, msg, r2);
  EXPECT_EQ(a, b);
}

TEST_F(GroupSigTest, ContextHoldsPairings) {
  CountingSession s;
  const PairingContext ctx = precompute_context(g.gpk(), alice.gsk);
  EXPECT_EQ(s.counts().pairings, 3u);
  EXPECT_EQ(ctx.e_h_g2, pairing(g.gpk().u, g.gpk().g2).pow(g.setup.mok.xi));
  EXPECT_EQ(ctx.e_A_g2, pairing(alice.gsk.A, g.gpk().g2));
  EXPECT_EQ(ctx.e_h_w, pairing(g.gpk().h, g.gpk().w));
}

TEST_F(GroupSigTest, TokenDependsOnlyOnEventAndKey) {
  const GroupSignature a = g.sign(alice, et, bytes_of("x"));
  const GroupSignature b = g.sign(alice, et, bytes_of("y"));
  EXPECT_EQ(a.T, b.T);
  EXPECT_EQ(a.T, GroupPublicKey::event_base(et).pow(alice.gsk.y));
  EXPECT_NE(a.D, b.D);
  EXPECT_NE(g.sign(bob, et, msg).T, a.T);
  EXPECT_NE(g.sign(alice, EventId("other"), msg).T, a.T);
}

TEST_F(GroupSigTest, BindsMessageAndEvent) {
  const GroupSignature s = g.sign(alice, et, msg);
  Bytes flipped = msg;
  for (std::size_t bit = 0; bit < 8 * flipped.size(); bit += 5) {
    flipped = msg;
    flipped[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    EXPECT_FALSE(gver(g.gpk(), et, flipped, s));
  }
  EXPECT_FALSE(gver(g.gpk(), EventId("junction-1||20170301101000"), msg, s));
}

TEST_F(GroupSigTest, SigningOpCounts) {
  CountingSession s;
  (void)g.sign(alice, et, msg);
  OpCounts want;
  want.mul_g1 = 3;
  want.exp_g1 = 4;
  want.mul_gt = 2;
  want.exp_gt = 3;
  EXPECT_EQ(s.counts().pairings, 0u);
  EXPECT_EQ(group_ops_only(s.counts()), want) << "measured " << s.counts();
}

TEST_F(GroupSigTest, VerificationOpCounts) {
  const GroupSignature sig = g.sign(alice, et, msg);
  CountingSession s;
  ASSERT_TRUE(gver(g.gpk(), et, msg, sig));
  OpCounts want;
  want.mul_g1 = 6;
  want.exp_g1 = 11;
  want.mul_gt = 1;
  want.pairings = 2;
  EXPECT_EQ(group_ops_only(s.counts()), want) << "measured " << s.counts();
}

TEST_F(GroupSigTest, CommitmentsRecomputeExactly) {
  for (int i = 0; i < 100; ++i) {
    const auto nonces = groupsig_detail::SigningNonces::draw(g.rng);
    const auto [sig, com] =
        groupsig_detail::sign_with_nonces(g.gpk(), alice.gsk, alice.ctx, et, msg, nonces);
    const auto again = groupsig_detail::recompute_commitments(g.gpk(), et, sig);
    ASSERT_TRUE(again.has_value());
    EXPECT_EQ(*again, com);
  }
}

TEST_F(GroupSigTest, OptimisedAndReferenceFormsAgree) {
  for (int i = 0; i < 25; ++i) {
    const auto nonces = groupsig_detail::SigningNonces::draw(g.rng);
    const auto opt = groupsig_detail::sign_with_nonces(g.gpk(), bob.gsk, bob.ctx, et, msg,
                                                       nonces, R4Form::kOptimised);
    const auto ref = groupsig_detail::sign_with_nonces(g.gpk(), bob.gsk, bob.ctx, et, msg,
                                                       nonces, R4Form::kReference);
    EXPECT_EQ(opt.first, ref.first);
    EXPECT_EQ(opt.second, ref.second);
    const auto v_opt = groupsig_detail::recompute_commitments(g.gpk(), et, opt.first,
                                                              R4Form::kOptimised);
    const auto v_ref = groupsig_detail::recompute_commitments(g.gpk(), et, opt.first,
                                                              R4Form::kReference);
    ASSERT_TRUE(v_opt && v_ref);
    EXPECT_EQ(*v_opt, *v_ref);
  }
}

TEST_F(GroupSigTest, SingleFieldTamperRejected) {
  const GroupSignature sig = g.sign(alice, et, msg);
  for (std::size_t i = 0; i < 200; ++i) {
    const GroupSignature bad =
        testkit::mutate(sig, i % testkit::kGroupSignatureFields, i / 8, g.rng);
    ASSERT_FALSE(gver(g.gpk(), et, msg, bad)) << "case " << i;
    ASSERT_FALSE(groupsig_detail::verify(g.gpk(), et, msg, bad, R4Form::kReference));
  }
}

TEST_F(GroupSigTest, IdentityElementsRejectedBeforeHashing) {
  GroupSignature sig = g.sign(alice, et, msg);
  sig.T = G1();
  CountingSession s;
  EXPECT_FALSE(gver(g.gpk(), et, msg, sig));
  EXPECT_EQ(s.counts().pairings, 0u);
}

TEST_F(GroupSigTest, DistinctKeysGiveDistinctTokens) {
  const G1 base = GroupPublicKey::event_base(et);
  std::set<std::array<std::uint8_t, 48>> seen;
  for (int i = 0; i < 1000; ++i) seen.insert(base.pow(Scalar::random_nonzero(g.rng)).compressed());
  EXPECT_EQ(seen.size(), 1000u);
}

TEST_F(GroupSigTest, PrecomputedScheduleForADay) {
  std::vector<EventId> events;
  for (int slot = 0; slot < 144; ++slot) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "20170301%02d%02d", slot / 6, (slot % 6) * 10);
    events.emplace_back(buf);
  }
  const auto sched = precompute_event_schedule(g.gpk(), alice.gsk, alice.ctx, events, g.rng);
  ASSERT_EQ(sched.size(), 144u);
  std::set<std::array<std::uint8_t, 48>> tokens;
  for (std::size_t i = 0; i < sched.size(); ++i) {
    EXPECT_EQ(sched[i].et, events[i]);
    EXPECT_TRUE(gver(g.gpk(), sched[i].et, {}, sched[i].sigma));
    tokens.insert(sched[i].sigma.T.compressed());
  }
  EXPECT_EQ(tokens.size(), 144u);
  EXPECT_EQ(events.front().text(), "201703010000");
}

TEST_F(GroupSigTest, EmptyScheduleIsEmpty) {
  EXPECT_TRUE(precompute_event_schedule(g.gpk(), alice.gsk, alice.ctx, {}, g.rng).empty());
}

}  // namespace
}  // namespace aee
