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
#include "aee/wire.hpp"
#include "test_support.hpp"

namespace aee {
namespace {

using testing::Group;

GroupSignature random_signature(Rng& rng) {
  return {G1::random(rng),     G1::random(rng),     G1::random(rng),
          Scalar::random(rng), Scalar::random(rng), Scalar::random(rng),
          Scalar::random(rng), Scalar::random(rng)};
}

TEST(SizeTest, FormulaAtReferenceWidths) {
  const auto s = wire::signature_sizes(kD224ReferenceWidths);
  EXPECT_EQ(s.group_full, 308u);
  EXPECT_EQ(s.group_compressed, 227u);
  EXPECT_EQ(s.event_full, 56u);
  EXPECT_EQ(s.event_compressed, 56u);
}

TEST(SizeTest, EncodedSizesFollowFormula) {
  SeededRng rng(1);
  const auto& w = bls12_381().widths;
  const auto s = wire::signature_sizes(w);
  EXPECT_EQ(s.group_full, 3 * w.g1_full + 5 * w.scalar);
  EXPECT_EQ(s.group_compressed, 3 * w.g1_compressed + 5 * w.scalar);
  EXPECT_EQ(s.event_full, 2 * w.scalar);
  for (int i = 0; i < 50; ++i) {
    const GroupSignature g = random_signature(rng);
    EXPECT_EQ(wire::encode_group_signature(g, PointFormat::kFull).size(), s.group_full);
    EXPECT_EQ(wire::encode_group_signature(g, PointFormat::kCompressed).size(),
              s.group_compressed);
    const EventSignature e{Scalar::random(rng), Scalar::random(rng)};
    EXPECT_EQ(wire::encode_event_signature(e).size(), s.event_full);
  }
}

TEST(GroupSignatureCodecTest, RoundTrip) {
  SeededRng rng(2);
  for (int i = 0; i < 1000; ++i) {
    const GroupSignature g = random_signature(rng);
    ASSERT_EQ(wire::decode_group_signature(wire::encode_group_signature(g, PointFormat::kFull)), g);
    ASSERT_EQ(
        wire::decode_group_signature(wire::encode_group_signature(g, PointFormat::kCompressed)),
        g);
    ASSERT_EQ(wire::decode<GroupSignature>(wire::encode(g)), g);
  }
}

TEST(GroupSignatureCodecTest, FieldOrder) {
  SeededRng rng(3);
  const GroupSignature g = random_signature(rng);
  const Bytes raw = wire::encode_group_signature(g, PointFormat::kCompressed);
  const auto d = g.D.compressed();
  EXPECT_TRUE(std::equal(d.begin(), d.end(), raw.begin()));
  const auto last = g.s_delta.to_bytes();
  EXPECT_TRUE(std::equal(last.begin(), last.end(), raw.end() - 32));
}

TEST(EventSignatureCodecTest, RoundTrip) {
  SeededRng rng(4);
  for (int i = 0; i < 1000; ++i) {
    const EventSignature e{Scalar::random(rng), Scalar::random(rng)};
    ASSERT_EQ(wire::decode_event_signature(wire::encode_event_signature(e)), e);
    ASSERT_EQ(wire::decode<EventSignature>(wire::encode(e)), e);
  }
}

TEST(DecodeTest, RandomInputsNeverCrash) {
  SeededRng rng(5);
  std::size_t accepted = 0;
  for (int i = 0; i < 100000; ++i) {
    Bytes buf(i % 3 == 0 ? 304 : (i % 3 == 1 ? 448 : 64));
    rng.fill(buf);
    try {
      if (buf.size() == 64) {
        (void)wire::decode_event_signature(buf);
      } else {
        (void)wire::decode_group_signature(buf);
      }
      ++accepted;
    } catch (const DecodeError&) {
    }
  }
  // Random 64-byte strings are rarely two reduced scalars; random points
  // essentially never decode.
  EXPECT_LT(accepted, 100000u);
}

TEST(DecodeTest, OffSubgroupPointRejected) {
  // A point on E(Fp) outside the order-p subgroup: x = 4 lies on
  // y^2 = x^3 + 4 with cofactor component (compressed, sign bit clear).
  Bytes enc(48, 0);
  enc[0] = 0x80;
  enc[47] = 4;
  EXPECT_THROW(G1::from_bytes(enc), DecodeError);
}

TEST(DecodeTest, DeterministicVerdicts) {
  SeededRng rng(6);
  for (int i = 0; i < 200; ++i) {
    Bytes buf(64);
    rng.fill(buf);
    bool first = true, second = true;
    try { (void)wire::decode_event_signature(buf); } catch (const DecodeError&) { first = false; }
    try { (void)wire::decode_event_signature(buf); } catch (const DecodeError&) { second = false; }
    ASSERT_EQ(first, second);
  }
}

TEST(DecodeTest, WrongLengthsRejected) {
  SeededRng rng(7);
  const Bytes raw = wire::encode_group_signature(random_signature(rng), PointFormat::kCompressed);
  EXPECT_THROW(wire::decode_group_signature(ByteView(raw).first(raw.size() - 1)), DecodeError);
  Bytes longer = raw;
  longer.push_back(0);
  EXPECT_THROW(wire::decode_group_signature(longer), DecodeError);
}

TEST(FramingTest, KindAndVersionChecked) {
  SeededRng rng(8);
  const Bytes framed = wire::encode(random_signature(rng));
  EXPECT_EQ(wire::peek_kind(framed), wire::Kind::kGroupSignature);
  EXPECT_THROW(wire::decode<EventSignature>(framed), DecodeError);
  Bytes bad_version = framed;
  bad_version[0] = static_cast<std::uint8_t>(0x20 | (bad_version[0] & 0x0f));
  EXPECT_THROW(wire::decode<GroupSignature>(bad_version), DecodeError);
  EXPECT_THROW(wire::decode<GroupSignature>(Bytes{}), DecodeError);
}

TEST(FramingTest, EveryArtifactRoundTrips) {
  Group g(9);
  const auto m = g.enroll("a");
  const EventId et("e");
  const GroupSignature s = g.sign(m, et, {});
  const auto o = open(g.gpk(), g.setup.mok, g.reg, et, {}, s, g.rng);
  ASSERT_TRUE(o);
  const JoinRequest req = join_start(g.gpk(), m.keys, g.rng);
  const IssueResponse resp{m.gsk.x, m.gsk.A};
  const EventPublicKey epk = epk_from_signature(g.gpk(), et, s);
  EXPECT_EQ(wire::decode<GroupSigningKey>(wire::encode(m.gsk)), m.gsk);
  EXPECT_EQ(wire::decode<JoinRequest>(wire::encode(req)), req);
  EXPECT_EQ(wire::decode<IssueResponse>(wire::encode(resp)), resp);
  EXPECT_EQ(wire::decode<TracingProof>(wire::encode(o->proof)), o->proof);
  EXPECT_EQ(wire::decode<EventPublicKey>(wire::encode(epk)), epk);
  const std::vector<ScheduledSignature> sched{{et, s}, {EventId("f"), s}};
  const auto back = wire::decode<std::vector<ScheduledSignature>>(
      wire::encode(std::span<const ScheduledSignature>(sched)));
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].et, EventId("f"));
  EXPECT_EQ(back[1].sigma, s);
}

TEST(CanonicalItemTest, EmptyAndTypeSeparation) {
  EXPECT_EQ(wire::canonical_hash_item(ByteView{}), (Bytes{0x01, 0, 0, 0, 0}));
  const Bytes payload(32, 0);
  const Scalar zero;
  EXPECT_NE(wire::canonical_hash_item(ByteView(payload)), wire::canonical_hash_item(zero));
  EXPECT_NE(wire::canonical_hash_item(EventId(std::string(32, '\0'))),
            wire::canonical_hash_item(ByteView(payload)));
  // Stable: a fixed input yields fixed bytes.
  EXPECT_EQ(wire::to_hex(wire::canonical_hash_item(Scalar::from_u64(1))),
            "0300000020" + std::string(62, '0') + "01");
}

TEST(HexTest, RoundTripAndErrors) {
  const Bytes b{0x00, 0xab, 0xff};
  EXPECT_EQ(wire::to_hex(b), "00abff");
  EXPECT_EQ(wire::from_hex("00ABff"), b);
  EXPECT_THROW(wire::from_hex("abc"), DecodeError);
  EXPECT_THROW(wire::from_hex("zz"), DecodeError);
}

}  // namespace
}  // namespace aee
