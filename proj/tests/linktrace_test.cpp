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

#include "aee/errors.hpp"
#include "aee/linktrace.hpp"
#include "aee/testkit/negative_suites.hpp"
#include "test_support.hpp"

namespace aee {
namespace {

using testing::bytes_of;
using testing::Group;
using testing::Member;

class LinkTraceTest : public ::testing::Test {
 protected:
  LinkTraceTest() {
    for (int i = 0; i < 6; ++i) members.push_back(g.enroll("veh-" + std::to_string(i)));
  }
  Group g{41};
  std::vector<Member> members;
  EventId et{"junction-9||20170301120000"};
};

TEST_F(LinkTraceTest, Reflexive) {
  const Bytes m = bytes_of("m");
  const GroupSignature s = g.sign(members[0], et, m);
  EXPECT_TRUE(link(et, m, s, m, s));
}

TEST_F(LinkTraceTest, SameSignerSameEventLinks) {
  const GroupSignature a = g.sign(members[1], et, bytes_of("a"));
  const GroupSignature b = g.sign(members[1], et, bytes_of("b"));
  EXPECT_TRUE(link(et, bytes_of("a"), a, bytes_of("b"), b));
}

TEST_F(LinkTraceTest, AcrossEventsDoesNotLink) {
  const EventId other("junction-9||20170301121000");
  const GroupSignature a = g.sign(members[1], et, {});
  const GroupSignature b = g.sign(members[1], other, {});
  EXPECT_FALSE(link_tokens(a.T, b.T));
}

TEST_F(LinkTraceTest, DistinctSignersDoNotLink) {
  // Distinct keys on one event: token collision would need y0 == y1.
  const G1 base = GroupPublicKey::event_base(et);
  for (int i = 0; i < 1000; ++i) {
    ASSERT_FALSE(link_tokens(base.pow(Scalar::random_nonzero(g.rng)),
                             base.pow(Scalar::random_nonzero(g.rng))));
  }
  const GroupSignature a = g.sign(members[0], et, {});
  const GroupSignature b = g.sign(members[2], et, {});
  EXPECT_FALSE(link(et, {}, a, {}, b));
}

TEST_F(LinkTraceTest, LinkAgreesWithOpen) {
  SeededRng pick(7);
  for (int i = 0; i < 1000; ++i) {
    std::array<std::uint8_t, 2> r{};
    pick.fill(r);
    const Member& m0 = members[r[0] % members.size()];
    const Member& m1 = members[r[1] % members.size()];
    const GroupSignature s0 = g.sign(m0, et, {});
    const GroupSignature s1 = g.sign(m1, et, {});
    const auto o0 = open(g.gpk(), g.setup.mok, g.reg, et, {}, s0, g.rng);
    const auto o1 = open(g.gpk(), g.setup.mok, g.reg, et, {}, s1, g.rng);
    ASSERT_TRUE(o0 && o1);
    ASSERT_EQ(link(et, {}, s0, {}, s1), o0->member == o1->member) << i;
  }
}

TEST_F(LinkTraceTest, OpenFindsSignerAndJudgeAccepts) {
  for (int i = 0; i < 100; ++i) {
    const Member& m = members[static_cast<std::size_t>(i) % members.size()];
    const EventId e("ev-" + std::to_string(i));
    const Bytes msg = bytes_of("payload " + std::to_string(i));
    const GroupSignature s = g.sign(m, e, msg);
    OpenerAuditLog log;
    const auto o = open(g.gpk(), g.setup.mok, g.reg, e, msg, s, g.rng, &log);
    ASSERT_TRUE(o.has_value());
    EXPECT_EQ(o->member, m.id);
    EXPECT_TRUE(judge(g.gpk(), m.id, m.keys.upk, s, o->proof));
    ASSERT_EQ(log.entries().size(), 1u);
    EXPECT_EQ(log.entries()[0].outcome, OpenerAuditLog::Outcome::kOpened);
  }
}

TEST_F(LinkTraceTest, OpenRejectsInvalidSignature) {
  const Bytes m = bytes_of("m");
  GroupSignature s = g.sign(members[0], et, m);
  s.B = s.B * G1::random(g.rng);
  OpenerAuditLog log;
  EXPECT_THROW(open(g.gpk(), g.setup.mok, g.reg, et, m, s, g.rng, &log), ProtocolError);
  ASSERT_EQ(log.entries().size(), 1u);
  EXPECT_EQ(log.entries()[0].outcome, OpenerAuditLog::Outcome::kInvalidSignature);
}

TEST_F(LinkTraceTest, EmptyRegistryIsUntraceable) {
  const GroupSignature s = g.sign(members[0], et, {});
  OpenerAuditLog log;
  EXPECT_FALSE(open(g.gpk(), g.setup.mok, RegistrationTable{}, et, {}, s, g.rng, &log));
  EXPECT_EQ(log.entries().at(0).outcome, OpenerAuditLog::Outcome::kUntraceable);
}

TEST_F(LinkTraceTest, RecoverCredential) {
  const GroupSignature s = g.sign(members[3], et, {});
  EXPECT_EQ(recover_credential(g.setup.mok, s), members[3].gsk.A);
}

TEST_F(LinkTraceTest, JudgeRejectsMisattribution) {
  const GroupSignature s = g.sign(members[0], et, {});
  const auto o = open(g.gpk(), g.setup.mok, g.reg, et, {}, s, g.rng);
  ASSERT_TRUE(o);
  for (std::size_t j = 1; j < members.size(); ++j) {
    EXPECT_FALSE(judge(g.gpk(), members[j].id, members[j].keys.upk, s, o->proof));
  }
  // Proof moved onto another member's signature.
  const GroupSignature other = g.sign(members[1], et, {});
  EXPECT_FALSE(judge(g.gpk(), members[0].id, members[0].keys.upk, other, o->proof));
}

TEST_F(LinkTraceTest, JudgeRejectsWrongOpenerKey) {
  const GroupSignature s = g.sign(members[0], et, {});
  auto o = open(g.gpk(), g.setup.mok, g.reg, et, {}, s, g.rng);
  ASSERT_TRUE(o);
  TracingProof bad = o->proof;
  bad.K = s.D.pow(g.setup.mok.xi + Scalar::from_u64(1));
  EXPECT_FALSE(judge(g.gpk(), members[0].id, members[0].keys.upk, s, bad));
}

TEST_F(LinkTraceTest, ProofFieldMutationsRejected) {
  const GroupSignature s = g.sign(members[2], et, {});
  const auto o = open(g.gpk(), g.setup.mok, g.reg, et, {}, s, g.rng);
  ASSERT_TRUE(o);
  for (std::size_t i = 0; i < 400; ++i) {
    const TracingProof bad =
        testkit::mutate(o->proof, i % testkit::kTracingProofFields, i / 4, g.rng);
    ASSERT_FALSE(judge(g.gpk(), members[2].id, members[2].keys.upk, s, bad)) << i;
  }
}

}  // namespace
}  // namespace aee
