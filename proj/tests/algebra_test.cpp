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

#include "aee/algebra.hpp"
#include "aee/errors.hpp"
#include "aee/hashing.hpp"
#include "aee/op_counter.hpp"
#include "aee/rng.hpp"
#include "test_support.hpp"

namespace aee {
namespace {

using testing::Mpz;
using testing::scalar_bytes;

const Mpz& order() {
  static const Mpz p(bls12_381().order_be);
  return p;
}

// r = (a op b) mod p computed by GMP, as 32 big-endian bytes.
template <class F>
std::vector<std::uint8_t> gmp_mod(const Scalar& a, const Scalar& b, F op) {
  Mpz x(scalar_bytes(a)), y(scalar_bytes(b)), r;
  op(r.get(), x.get(), y.get());
  mpz_mod(r.get(), r.get(), order().get());
  return r.to_be(32);
}

TEST(ScalarTest, FieldOpsMatchGmp) {
  SeededRng rng(1);
  for (int i = 0; i < 500; ++i) {
    const Scalar a = Scalar::random(rng), b = Scalar::random(rng);
    EXPECT_EQ(scalar_bytes(a + b), gmp_mod(a, b, mpz_add));
    EXPECT_EQ(scalar_bytes(a - b), gmp_mod(a, b, mpz_sub));
    EXPECT_EQ(scalar_bytes(a * b), gmp_mod(a, b, mpz_mul));
  }
}

TEST(ScalarTest, InverseMatchesGmp) {
  SeededRng rng(2);
  for (int i = 0; i < 100; ++i) {
    const Scalar a = Scalar::random_nonzero(rng);
    Mpz x(scalar_bytes(a)), r;
    ASSERT_NE(mpz_invert(r.get(), x.get(), order().get()), 0);
    EXPECT_EQ(scalar_bytes(a.inverse()), r.to_be(32));
  }
}

TEST(ScalarTest, WideReductionMatchesGmp) {
  SeededRng rng(3);
  for (int i = 0; i < 500; ++i) {
    std::array<std::uint8_t, 64> wide{};
    rng.fill(wide);
    Mpz x(wide), r;
    mpz_mod(r.get(), x.get(), order().get());
    EXPECT_EQ(scalar_bytes(Scalar::reduce(wide)), r.to_be(32));
  }
}

TEST(ScalarTest, OrderIsTheBls12381GroupOrder) {
  Mpz p;
  mpz_set_str(p.get(), "73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001", 16);
  EXPECT_EQ(mpz_cmp(p.get(), order().get()), 0);
  EXPECT_NE(mpz_probab_prime_p(p.get(), 30), 0);
}

TEST(ScalarTest, FromBytesRejectsUnreduced) {
  const auto& p = bls12_381().order_be;
  EXPECT_THROW(Scalar::from_bytes(p), DecodeError);
  auto pm1 = p;
  pm1.back() -= 1;
  EXPECT_EQ(Scalar::from_bytes(pm1), -Scalar::from_u64(1));
  EXPECT_THROW(Scalar::from_bytes(Bytes(31, 0)), DecodeError);
}

TEST(ScalarTest, RandomNonzeroNeverZero) {
  SeededRng rng(4);
  for (int i = 0; i < 1000; ++i) EXPECT_FALSE(Scalar::random_nonzero(rng).is_zero());
}

TEST(G1Test, ExponentHomomorphism) {
  SeededRng rng(5);
  const G1 g = G1::generator();
  for (int i = 0; i < 50; ++i) {
    const Scalar a = Scalar::random(rng), b = Scalar::random(rng);
    EXPECT_EQ(g.pow(a) * g.pow(b), g.pow(a + b));
    EXPECT_EQ(g.pow(a).pow(b), g.pow(a * b));
  }
  EXPECT_TRUE(g.pow(Scalar()).is_identity());
  EXPECT_TRUE((g * g.inverse()).is_identity());
}

TEST(G1Test, EncodingRoundTripsBothForms) {
  SeededRng rng(6);
  for (int i = 0; i < 100; ++i) {
    const G1 p = G1::random(rng);
    EXPECT_EQ(G1::from_bytes(p.to_bytes(PointFormat::kFull)), p);
    EXPECT_EQ(G1::from_bytes(p.to_bytes(PointFormat::kCompressed)), p);
  }
  EXPECT_EQ(G1::from_bytes(G1().to_bytes(PointFormat::kCompressed)), G1());
}

TEST(G1Test, RandomBytesDecodeOrReject) {
  SeededRng rng(7);
  std::size_t accepted = 0;
  for (int i = 0; i < 20000; ++i) {
    Bytes buf(i % 2 ? G1::kCompressedBytes : G1::kFullBytes);
    rng.fill(buf);
    try {
      const G1 p = G1::from_bytes(buf);
      EXPECT_TRUE(p.in_subgroup());
      ++accepted;
    } catch (const DecodeError&) {
    }
  }
  EXPECT_LT(accepted, 20000u);
}

TEST(G2Test, EncodingRoundTrip) {
  SeededRng rng(8);
  for (int i = 0; i < 20; ++i) {
    const G2 q = G2::random(rng);
    EXPECT_EQ(G2::from_bytes(q.to_bytes(PointFormat::kFull)), q);
    EXPECT_EQ(G2::from_bytes(q.to_bytes(PointFormat::kCompressed)), q);
  }
}

TEST(PairingTest, IdentityInputs) {
  EXPECT_TRUE(pairing(G1(), G2::generator()).is_identity());
  EXPECT_TRUE(pairing(G1::generator(), G2()).is_identity());
  EXPECT_FALSE(pairing(G1::generator(), G2::generator()).is_identity());
}

TEST(PairingTest, Bilinear) {
  SeededRng rng(9);
  const GT base = pairing(G1::generator(), G2::generator());
  for (int i = 0; i < 100; ++i) {
    const Scalar a = Scalar::random(rng), b = Scalar::random(rng);
    const G1 P = G1::generator().pow(a);
    EXPECT_EQ(pairing(P, G2::generator()), base.pow(a));
    EXPECT_EQ(pairing(P, G2::generator().pow(b)), base.pow(a * b));
  }
}

TEST(GTTest, EncodingRoundTrip) {
  SeededRng rng(10);
  const GT t = pairing(G1::random(rng), G2::random(rng));
  EXPECT_EQ(GT::from_bytes(t.to_bytes()), t);
  EXPECT_EQ(t * t.inverse(), GT());
}

TEST(OpCounterTest, EachCallCountsOnce) {
  SeededRng rng(11);
  const G1 a = G1::random(rng), b = G1::random(rng);
  const Scalar k = Scalar::random(rng);
  const GT t = pairing(a, G2::generator());
  CountingSession s;
  (void)(a * b);
  (void)a.pow(k);
  (void)(t * t);
  (void)t.pow(k);
  (void)pairing(a, G2::generator());
  (void)G2::generator().pow(k);
  OpCounts want;
  want.mul_g1 = 1;
  want.exp_g1 = 1;
  want.mul_gt = 1;
  want.exp_gt = 1;
  want.pairings = 1;
  want.exp_g2 = 1;
  EXPECT_EQ(s.counts(), want);
}

TEST(OpCounterTest, NestedSessionsBothSeeInnerOps) {
  CountingSession outer;
  {
    CountingSession inner;
    (void)(G1::generator() * G1::generator());
    EXPECT_EQ(inner.counts().mul_g1, 1u);
  }
  (void)(G1::generator() * G1::generator());
  EXPECT_EQ(outer.counts().mul_g1, 2u);
}

TEST(SuiteTest, Widths) {
  const auto& w = bls12_381().widths;
  EXPECT_EQ(w.scalar, 32u);
  EXPECT_EQ(w.g1_full, 96u);
  EXPECT_EQ(w.g1_compressed, 48u);
  EXPECT_EQ(w.g2_compressed, 96u);
  EXPECT_EQ(w.gt, 576u);
}

}  // namespace
}  // namespace aee
