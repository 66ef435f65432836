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
#include "aee/testkit/experiments.hpp"
#include "aee/testkit/negative_suites.hpp"
#include "aee/testkit/oracles.hpp"
#include "aee/wire.hpp"
#include "test_support.hpp"

namespace aee::testkit {
namespace {

using aee::testing::bytes_of;

class OracleTest : public ::testing::Test {
 protected:
  SeededRng rng{51};
  GameState st{rng};
  EventId et{"e1"};
  Bytes m = bytes_of("m");
};

bool credential_equation(const GroupPublicKey& gpk, const GroupSigningKey& k) {
  return pairing(k.A, gpk.g2.pow(k.x) * gpk.w) ==
         pairing(gpk.g1 * gpk.h.pow(k.y).inverse(), gpk.g2);
}

TEST_F(OracleTest, AddUFreshThenRepeated) {
  const auto upk = oracle_add_u(st, "i");
  ASSERT_TRUE(upk);
  EXPECT_EQ(*upk, st.upk.at("i"));
  EXPECT_TRUE(st.HU.contains("i"));
  EXPECT_TRUE(credential_equation(st.gpk(), st.gsk.at("i")));
  EXPECT_EQ(st.reg.at("i").A, st.gsk.at("i").A);
  EXPECT_FALSE(oracle_add_u(st, "i"));
}

TEST_F(OracleTest, GSignGuards) {
  EXPECT_FALSE(oracle_gsign(st, "nobody", et, m));
  EXPECT_EQ(st.sn, 1u);
  // Honest but without a key yet (mid-join).
  ASSERT_EQ(oracle_snd_to_u(st, "j", std::nullopt).second, JoinDecision::kCont);
  EXPECT_FALSE(oracle_gsign(st, "j", et, m));
  EXPECT_EQ(st.sn, 1u);

  oracle_add_u(st, "i");
  const auto s = oracle_gsign(st, "i", et, m);
  ASSERT_TRUE(s);
  EXPECT_TRUE(gver(st.gpk(), et, m, *s));
  EXPECT_EQ(st.sn, 2u);
  ASSERT_TRUE(st.SigL.contains(1));
  EXPECT_EQ(st.SigL.at(1).member, "i");
  EXPECT_EQ(st.SigL.at(1).et, et);
}

TEST_F(OracleTest, GSignRefusesChallengedMemberOnChallengeEvent) {
  oracle_add_u(st, "a");
  oracle_add_u(st, "b");
  ASSERT_TRUE(oracle_challenge(st, 0, "a", "b", et, m));
  EXPECT_FALSE(oracle_gsign(st, "a", et, m));
  EXPECT_FALSE(oracle_gsign(st, "b", et, m));
  EXPECT_TRUE(oracle_gsign(st, "a", EventId("e2"), m));
}

TEST_F(OracleTest, ESignGuards) {
  EXPECT_FALSE(oracle_esign(st, 1, m));
  EXPECT_FALSE(oracle_esign(st, 0, m));
  oracle_add_u(st, "i");
  const auto sigma = oracle_gsign(st, "i", et, m);
  const auto es = oracle_esign(st, 1, m);
  ASSERT_TRUE(es);
  EXPECT_TRUE(ever(et, epk_from_signature(st.gpk(), et, *sigma), m, *es));
  EXPECT_FALSE(oracle_esign(st, 2, m));
}

TEST_F(OracleTest, ESignOnChallenge) {
  oracle_add_u(st, "a");
  oracle_add_u(st, "b");
  const auto sigma = oracle_challenge(st, 1, "a", "b", et, m);
  ASSERT_TRUE(sigma);
  const auto es = oracle_esign(st, 0, m);
  ASSERT_TRUE(es);
  EXPECT_TRUE(ever(et, epk_from_signature(st.gpk(), et, *sigma), m, *es));
}

TEST_F(OracleTest, UskGuards) {
  EXPECT_FALSE(oracle_usk(st, "nobody"));
  oracle_add_u(st, "i");
  const auto k = oracle_usk(st, "i");
  ASSERT_TRUE(k);
  EXPECT_EQ(k->first, st.gsk.at("i"));
  EXPECT_EQ(k->second, st.usk.at("i"));
  EXPECT_TRUE(st.BU.contains("i"));
  // Already corrupted.
  EXPECT_FALSE(oracle_usk(st, "i"));
}

TEST_F(OracleTest, UskRefusesChallengedMembers) {
  oracle_add_u(st, "a");
  oracle_add_u(st, "b");
  ASSERT_TRUE(oracle_challenge(st, 0, "a", "b", et, m));
  EXPECT_FALSE(oracle_usk(st, "a"));
  EXPECT_FALSE(oracle_usk(st, "b"));
  EXPECT_FALSE(st.BU.contains("a"));
}

TEST_F(OracleTest, RegReadWrite) {
  EXPECT_FALSE(oracle_rreg(st, "i"));
  oracle_add_u(st, "i");
  auto row = oracle_rreg(st, "i");
  ASSERT_TRUE(row);
  EXPECT_EQ(row->A, st.gsk.at("i").A);
  row->x = Scalar::from_u64(9);
  oracle_wreg(st, "i", *row);
  EXPECT_EQ(oracle_rreg(st, "i")->x, Scalar::from_u64(9));
}

TEST_F(OracleTest, SndToUHonestPath) {
  const auto [req, d1] = oracle_snd_to_u(st, "u", std::nullopt);
  ASSERT_EQ(d1, JoinDecision::kCont);
  ASSERT_TRUE(req);
  EXPECT_TRUE(st.HU.contains("u"));
  RegistrationTable issuer;
  const IssueResponse resp = issue(st.gpk(), st.mik(), issuer, "u", *req, st.rng());
  const auto [none, d2] = oracle_snd_to_u(st, "u", resp);
  EXPECT_EQ(d2, JoinDecision::kAccept);
  EXPECT_FALSE(none);
  EXPECT_TRUE(credential_equation(st.gpk(), st.gsk.at("u")));
}

TEST_F(OracleTest, SndToURejectsMalformedResponse) {
  const auto [req, d1] = oracle_snd_to_u(st, "u", std::nullopt);
  ASSERT_TRUE(req);
  RegistrationTable issuer;
  IssueResponse resp = issue(st.gpk(), st.mik(), issuer, "u", *req, st.rng());
  resp.A = resp.A * G1::generator();
  EXPECT_EQ(oracle_snd_to_u(st, "u", resp).second, JoinDecision::kReject);
  EXPECT_FALSE(st.gsk.contains("u"));
}

TEST_F(OracleTest, ChallengeGuards) {
  oracle_add_u(st, "a");
  oracle_add_u(st, "b");
  oracle_add_u(st, "bad");
  ASSERT_TRUE(oracle_usk(st, "bad"));
  EXPECT_FALSE(oracle_challenge(st, 0, "a", "bad", et, m));
  EXPECT_FALSE(oracle_challenge(st, 0, "a", "ghost", et, m));
  ASSERT_TRUE(oracle_gsign(st, "b", et, m));
  EXPECT_THROW(oracle_challenge(st, 0, "a", "b", et, m), GameAborted);
  const auto s = oracle_challenge(st, 1, "a", "b", EventId("e2"), m);
  ASSERT_TRUE(s);
  ASSERT_EQ(st.ChL.size(), 2u);
  EXPECT_EQ(st.ChL[0].member, "b");
  EXPECT_TRUE(st.ChL[0].sigma.has_value());
  EXPECT_EQ(st.ChL[1].member, "a");
}

TEST_F(OracleTest, RegistryToleratesPlantedDuplicates) {
  oracle_add_u(st, "a");
  oracle_add_u(st, "b");
  RegistrationTable::Row clone = *oracle_rreg(st, "a");
  clone.member = "b";
  oracle_wreg(st, "b", clone);
  EXPECT_EQ(st.registry().size(), 1u);
}

TEST(ExpCorrTest, HonestImplementationPasses) {
  const CorrResult r = exp_corr(100, 3);
  EXPECT_TRUE(r.ok()) << (r.failed_branch ? branch_name(*r.failed_branch) : "");
  EXPECT_EQ(r.passed, 100u);
  EXPECT_GT(r.same_signer_trials, 20u);
  EXPECT_LT(r.same_signer_trials, 80u);
}

TEST(ExpCorrTest, LinkOnWrongFieldFailsLinkBranch) {
  Implementation impl;
  impl.link = [](const EventId&, ByteView, const GroupSignature& a, ByteView,
                 const GroupSignature& b) { return link_tokens(a.D, b.D); };
  const CorrResult r = exp_corr(50, 4, impl);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(*r.failed_branch, CorrBranch::kLinkSameSigner);
}

TEST(ExpCorrTest, JudgeWithoutPairingCheckFailsMisattributionBranch) {
  Implementation impl;
  // The honest judge minus the final pairing check against upk.
  impl.judge = [](const GroupPublicKey& gpk, const MemberId&, const G1&,
                  const GroupSignature& sigma, const TracingProof& pi) {
    const G1 u_commit = gpk.u.pow(pi.s) * gpk.h.pow(-pi.c);
    const G1 d_commit = sigma.D.pow(pi.s) * pi.K.pow(-pi.c);
    return hash_to_scalar(gpk.h2_tag, {wire::group_signature_item(sigma), HashItem::of(pi.K),
                                       HashItem::of(u_commit), HashItem::of(d_commit)}) == pi.c;
  };
  const CorrResult r = exp_corr(50, 5, impl);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(*r.failed_branch, CorrBranch::kMisattributedJudge);
}

TEST(ExpCorrTest, Reproducible) {
  const CorrResult a = exp_corr(10, 6), b = exp_corr(10, 6);
  EXPECT_EQ(a.transcript, b.transcript);
  EXPECT_EQ(a.same_signer_trials, b.same_signer_trials);
}

TEST(NegativeSuitesTest, SmallRunAllRefused) {
  NegativeOptions opt;
  opt.mutations = 60;
  opt.sybil_signatures = 12;
  opt.frame_members = 4;
  opt.replay_events = 4;
  const NegativeReport rep = negative_suites(7, opt);
  for (const SuiteResult& s : rep.suites) {
    EXPECT_TRUE(s.ok()) << s.name << " " << s.refused << "/" << s.cases;
  }
  EXPECT_TRUE(rep.ok());
  for (const char* name : {"join-request-mutation", "group-signature-mutation",
                           "event-signature-mutation", "tracing-proof-mutation",
                           "sybil-linkage", "frame-misattribution", "cross-event-replay"}) {
    ASSERT_NE(rep.find(name), nullptr) << name;
  }
  EXPECT_EQ(rep.find("group-signature-mutation")->cases, 60u);
  EXPECT_EQ(rep.find("sybil-linkage")->cases, 12u * 11u / 2u);
}

TEST(MutateTest, AlwaysChangesTheValue) {
  SeededRng rng(8);
  const JoinRequest jr{G1::random(rng), Scalar::random(rng), Scalar::random(rng)};
  const EventSignature es{Scalar::random(rng), Scalar::random(rng)};
  const TracingProof tp{G1::random(rng), Scalar::random(rng), Scalar::random(rng),
                        Scalar::random(rng)};
  for (std::size_t v = 0; v < 20; ++v) {
    for (std::size_t f = 0; f < kJoinRequestFields; ++f) EXPECT_NE(mutate(jr, f, v, rng), jr);
    for (std::size_t f = 0; f < kEventSignatureFields; ++f) EXPECT_NE(mutate(es, f, v, rng), es);
    for (std::size_t f = 0; f < kTracingProofFields; ++f) EXPECT_NE(mutate(tp, f, v, rng), tp);
  }
}

}  // namespace
}  // namespace aee::testkit
