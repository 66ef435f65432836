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

#include <sstream>

#include "aee/enroll.hpp"
#include "aee/errors.hpp"
#include "aee/rng.hpp"
#include "aee/testkit/negative_suites.hpp"
#include "test_support.hpp"

namespace aee {
namespace {

using testing::Group;

bool credential_equation(const GroupPublicKey& gpk, const GroupSigningKey& k) {
  // e(A, g2^x w) == e(g1 h^-y, g2)
  return pairing(k.A, gpk.g2.pow(k.x) * gpk.w) ==
         pairing(gpk.g1 * gpk.h.pow(k.y).inverse(), gpk.g2);
}

class EnrollTest : public ::testing::Test {
 protected:
  Group g{11};
};

TEST_F(EnrollTest, HonestRoundTrip) {
  const UserKeyPair keys = ukg(g.rng, g.gpk());
  const JoinRequest req = join_start(g.gpk(), keys, g.rng);
  EXPECT_TRUE(verify_join_request(g.gpk(), req));
  const IssueResponse resp = issue(g.gpk(), g.setup.mik, g.reg, "car-1", req, g.rng);
  const GroupSigningKey gsk = join_finish(g.gpk(), keys, resp);
  EXPECT_TRUE(credential_equation(g.gpk(), gsk));
  EXPECT_TRUE(credential_valid(g.gpk(), keys.upk, resp.x, resp.A));
  ASSERT_EQ(g.reg.size(), 1u);
  EXPECT_EQ(g.reg.find("car-1")->upk, keys.upk);
}

TEST_F(EnrollTest, TamperedRequestRejected) {
  const UserKeyPair keys = ukg(g.rng, g.gpk());
  JoinRequest req = join_start(g.gpk(), keys, g.rng);
  JoinRequest s1 = req;
  s1.s = s1.s + Scalar::from_u64(1);
  EXPECT_THROW(issue(g.gpk(), g.setup.mik, g.reg, "a", s1, g.rng), ProtocolError);
  JoinRequest c1 = req;
  c1.c = c1.c + Scalar::from_u64(1);
  EXPECT_THROW(issue(g.gpk(), g.setup.mik, g.reg, "a", c1, g.rng), ProtocolError);
  // z for a different key than the one proved
  JoinRequest other = req;
  other.z = ukg(g.rng, g.gpk()).upk;
  EXPECT_THROW(issue(g.gpk(), g.setup.mik, g.reg, "a", other, g.rng), ProtocolError);
  EXPECT_TRUE(g.reg.empty());
}

TEST_F(EnrollTest, SingleFieldMutationsRejected) {
  const UserKeyPair keys = ukg(g.rng, g.gpk());
  const JoinRequest req = join_start(g.gpk(), keys, g.rng);
  for (std::size_t i = 0; i < 300; ++i) {
    const JoinRequest bad = testkit::mutate(req, i % testkit::kJoinRequestFields, i / 3, g.rng);
    ASSERT_NE(bad, req);
    ASSERT_FALSE(verify_join_request(g.gpk(), bad)) << "case " << i;
  }
}

TEST_F(EnrollTest, DuplicateMemberIsConflict) {
  g.enroll("dup");
  const UserKeyPair keys = ukg(g.rng, g.gpk());
  const JoinRequest req = join_start(g.gpk(), keys, g.rng);
  EXPECT_THROW(issue(g.gpk(), g.setup.mik, g.reg, "dup", req, g.rng), ConflictError);
  EXPECT_EQ(g.reg.size(), 1u);
}

TEST_F(EnrollTest, TamperedResponseRejected) {
  const UserKeyPair keys = ukg(g.rng, g.gpk());
  const JoinRequest req = join_start(g.gpk(), keys, g.rng);
  const IssueResponse resp = issue(g.gpk(), g.setup.mik, g.reg, "m", req, g.rng);
  IssueResponse a = resp;
  a.A = a.A * G1::random(g.rng);
  EXPECT_THROW(join_finish(g.gpk(), keys, a), ProtocolError);
  IssueResponse x = resp;
  x.x = x.x + Scalar::from_u64(1);
  EXPECT_THROW(join_finish(g.gpk(), keys, x), ProtocolError);
  // Someone else's key cannot finish this credential.
  EXPECT_THROW(join_finish(g.gpk(), ukg(g.rng, g.gpk()), resp), ProtocolError);
}

TEST_F(EnrollTest, LookupByCredential) {
  const auto m = g.enroll("m");
  EXPECT_EQ(reg_lookup_by_credential(g.reg, m.gsk.A), "m");
  EXPECT_FALSE(reg_lookup_by_credential(g.reg, G1::random(g.rng)).has_value());
}

TEST(RegistrationTableTest, TenThousandLookups) {
  SeededRng rng(3);
  RegistrationTable reg;
  std::vector<G1> creds;
  G1 a = G1::random(rng);
  for (int i = 0; i < 10000; ++i) {
    a = a * G1::generator();
    creds.push_back(a);
    reg.insert({"m" + std::to_string(i), Scalar::from_u64(i + 1), a, G1::generator()});
  }
  ASSERT_EQ(reg.size(), 10000u);
  for (int i = 0; i < 10000; ++i) {
    ASSERT_EQ(reg.lookup_by_credential(creds[i]), "m" + std::to_string(i));
  }
}

TEST_F(EnrollTest, SaveLoadRoundTrip) {
  for (int i = 0; i < 5; ++i) g.enroll("v" + std::to_string(i));
  std::stringstream buf;
  g.reg.save(buf);
  const RegistrationTable back = RegistrationTable::load(buf);
  EXPECT_EQ(back, g.reg);
  for (const auto& row : g.reg.rows()) EXPECT_EQ(back.lookup_by_credential(row.A), row.member);
}

TEST_F(EnrollTest, TruncatedFileRejected) {
  for (int i = 0; i < 3; ++i) g.enroll("v" + std::to_string(i));
  std::stringstream buf;
  g.reg.save(buf);
  const std::string full = buf.str();
  for (std::size_t cut = 0; cut < full.size(); cut += 7) {
    std::stringstream part(full.substr(0, cut));
    EXPECT_THROW(RegistrationTable::load(part), DecodeError) << "cut at " << cut;
  }
  std::stringstream extra(full + "x");
  EXPECT_THROW(RegistrationTable::load(extra), DecodeError);
}

TEST_F(EnrollTest, DuplicateCredentialRowsRejectedOnLoad) {
  const auto m = g.enroll("a");
  RegistrationTable other;
  RegistrationTable::Row clone = *g.reg.find("a");
  clone.member = "b";
  other.insert(clone);

  std::stringstream empty_buf, a_buf, b_buf;
  RegistrationTable{}.save(empty_buf);
  g.reg.save(a_buf);
  other.save(b_buf);
  const std::string header = empty_buf.str();
  const std::string row_a = a_buf.str().substr(header.size());
  const std::string row_b = b_buf.str().substr(header.size());
  std::string spliced = header;
  spliced[header.size() - 1] = 2;  // row count, big-endian u32
  spliced += row_a + row_b;
  std::stringstream in(spliced);
  EXPECT_THROW(RegistrationTable::load(in), DecodeError);
  (void)m;
}

TEST_F(EnrollTest, InterleavedIssueAndReloadKeepsIndex) {
  for (int round = 0; round < 4; ++round) {
    g.enroll("r" + std::to_string(round));
    std::stringstream buf;
    g.reg.save(buf);
    g.reg = RegistrationTable::load(buf);
  }
  EXPECT_EQ(g.reg.size(), 4u);
  for (const auto& row : g.reg.rows()) {
    EXPECT_EQ(g.reg.lookup_by_credential(row.A), row.member);
    EXPECT_EQ(g.reg.find(row.member)->A, row.A);
  }
}

}  // namespace
}  // namespace aee
