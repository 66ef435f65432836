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

#include "aee/algebra.hpp"

#include <algorithm>
#include <cstring>

#include "aee/errors.hpp"
#include "aee/op_counter.hpp"
#include "aee/rng.hpp"

namespace aee {

namespace {

constexpr std::size_t kScalarBits = 255;

// Big-endian encoding of the BLS12-381 subgroup order r.
constexpr std::array<std::uint8_t, 32> kOrderBe = {
    0x73, 0xed, 0xa7, 0x53, 0x29, 0x9d, 0x7d, 0x48, 0x33, 0x39, 0xd8,
    0x08, 0x09, 0xa1, 0xd8, 0x05, 0x53, 0xbd, 0xa4, 0x02, 0xff, 0xfe,
    0x5b, 0xfe, 0xff, 0xff, 0xff, 0xff, 0x00, 0x00, 0x00, 0x01};

blst_fr fr_from_scalar(const blst_scalar& s) {
  blst_fr out;
  blst_fr_from_scalar(&out, &s);
  return out;
}

// Visits the twelve base-field coefficients of an F_{p^12} element in a
// fixed order shared by encode and decode.
template <typename Fp12, typename Fn>
void for_each_coefficient(Fp12& f, Fn&& fn) {
  for (auto& c6 : f.fp6) {
    for (auto& c2 : c6.fp2) {
      for (auto& c : c2.fp) fn(c);
    }
  }
}

}  // namespace

// ---------------------------------------------------------------- Scalar

Scalar::Scalar() { std::memset(&v_, 0, sizeof(v_)); }

Scalar Scalar::from_u64(std::uint64_t v) {
  const std::uint64_t limbs[4] = {v, 0, 0, 0};
  Scalar s;
  blst_fr_from_uint64(&s.v_, limbs);
  return s;
}

Scalar Scalar::random(Rng& rng) {
  // 512 bits reduced mod p; the bias is below 2^-250.
  std::array<std::uint8_t, 64> wide{};
  rng.fill(wide);
  return reduce(wide);
}

Scalar Scalar::random_nonzero(Rng& rng) {
  for (;;) {
    Scalar s = random(rng);
    if (!s.is_zero()) return s;
  }
}

Scalar Scalar::from_bytes(ByteView be) {
  if (be.size() != kBytes) {
    throw DecodeError("scalar: expected 32 bytes, got " +
                      std::to_string(be.size()));
  }
  if (!std::lexicographical_compare(be.begin(), be.end(), kOrderBe.begin(),
                                    kOrderBe.end())) {
    throw DecodeError("scalar: value not reduced mod p");
  }
  blst_scalar raw;
  blst_scalar_from_bendian(&raw, be.data());
  Scalar s;
  s.v_ = fr_from_scalar(raw);
  return s;
}

Scalar Scalar::reduce(ByteView be) {
  blst_scalar raw;
  blst_scalar_from_be_bytes(&raw, be.data(), be.size());
  Scalar s;
  s.v_ = fr_from_scalar(raw);
  return s;
}

std::array<std::uint8_t, Scalar::kBytes> Scalar::to_bytes() const {
  const blst_scalar raw = this->raw();
  std::array<std::uint8_t, kBytes> out{};
  blst_bendian_from_scalar(out.data(), &raw);
  return out;
}

blst_scalar Scalar::raw() const {
  blst_scalar out;
  blst_scalar_from_fr(&out, &v_);
  return out;
}

bool Scalar::is_zero() const {
  static const Scalar kZero;
  return *this == kZero;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("scalar: inverse of zero");
  Scalar out;
  blst_fr_eucl_inverse(&out.v_, &v_);
  return out;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar out;
  blst_fr_add(&out.v_, &a.v_, &b.v_);
  return out;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar out;
  blst_fr_sub(&out.v_, &a.v_, &b.v_);
  return out;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  blst_fr_mul(&out.v_, &a.v_, &b.v_);
  return out;
}

Scalar operator-(const Scalar& a) {
  Scalar out;
  blst_fr_cneg(&out.v_, &a.v_, true);
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return std::memcmp(&a.v_, &b.v_, sizeof(a.v_)) == 0;
}

// -------------------------------------------------------------------- G1

G1::G1() { std::memset(&p_, 0, sizeof(p_)); }

G1 G1::generator() { return from_raw(*blst_p1_generator()); }

G1 G1::from_raw(const blst_p1& p) {
  G1 out;
  out.p_ = p;
  return out;
}

G1 G1::random(Rng& rng) {
  const blst_scalar k = Scalar::random_nonzero(rng).raw();
  G1 out;
  blst_p1_mult(&out.p_, blst_p1_generator(), k.b, kScalarBits);
  return out;
}

G1 G1::from_bytes(ByteView bytes) {
  blst_p1_affine aff;
  BLST_ERROR err;
  if (bytes.size() == kCompressedBytes) {
    err = blst_p1_uncompress(&aff, bytes.data());
  } else if (bytes.size() == kFullBytes) {
    err = blst_p1_deserialize(&aff, bytes.data());
  } else {
    throw DecodeError("G1: bad encoding length " + std::to_string(bytes.size()));
  }
  if (err != BLST_SUCCESS) throw DecodeError("G1: point not on curve or malformed");
  if (!blst_p1_affine_in_g1(&aff)) throw DecodeError("G1: point outside prime-order subgroup");
  G1 out;
  blst_p1_from_affine(&out.p_, &aff);
  // Reject non-canonical encodings so that encode(decode(b)) == b.
  if (!std::equal(bytes.begin(), bytes.end(),
                  out.to_bytes(bytes.size() == kFullBytes ? PointFormat::kFull
                                                          : PointFormat::kCompressed)
                      .begin())) {
    throw DecodeError("G1: non-canonical encoding");
  }
  return out;
}

Bytes G1::to_bytes(PointFormat format) const {
  if (format == PointFormat::kCompressed) {
    const auto c = compressed();
    return Bytes(c.begin(), c.end());
  }
  Bytes out(kFullBytes);
  blst_p1_serialize(out.data(), &p_);
  return out;
}

std::array<std::uint8_t, G1::kCompressedBytes> G1::compressed() const {
  std::array<std::uint8_t, kCompressedBytes> out{};
  blst_p1_compress(out.data(), &p_);
  return out;
}

G1 G1::pow(const Scalar& k) const {
  record_op(Op::kExpG1);
  const blst_scalar s = k.raw();
  G1 out;
  blst_p1_mult(&out.p_, &p_, s.b, kScalarBits);
  return out;
}

G1 G1::inverse() const {
  G1 out = *this;
  blst_p1_cneg(&out.p_, true);
  return out;
}

bool G1::is_identity() const { return blst_p1_is_inf(&p_); }

bool G1::in_subgroup() const { return blst_p1_in_g1(&p_); }

G1 operator*(const G1& a, const G1& b) {
  record_op(Op::kMulG1);
  G1 out;
  blst_p1_add_or_double(&out.p_, &a.p_, &b.p_);
  return out;
}

bool operator==(const G1& a, const G1& b) { return blst_p1_is_equal(&a.p_, &b.p_); }

// -------------------------------------------------------------------- G2

G2::G2() { std::memset(&p_, 0, sizeof(p_)); }

G2 G2::generator() {
  G2 out;
  out.p_ = *blst_p2_generator();
  return out;
}

G2 G2::random(Rng& rng) {
  const blst_scalar k = Scalar::random_nonzero(rng).raw();
  G2 out;
  blst_p2_mult(&out.p_, blst_p2_generator(), k.b, kScalarBits);
  return out;
}

G2 G2::from_bytes(ByteView bytes) {
  blst_p2_affine aff;
  BLST_ERROR err;
  if (bytes.size() == kCompressedBytes) {
    err = blst_p2_uncompress(&aff, bytes.data());
  } else if (bytes.size() == kFullBytes) {
    err = blst_p2_deserialize(&aff, bytes.data());
  } else {
    throw DecodeError("G2: bad encoding length " + std::to_string(bytes.size()));
  }
  if (err != BLST_SUCCESS) throw DecodeError("G2: point not on curve or malformed");
  if (!blst_p2_affine_in_g2(&aff)) throw DecodeError("G2: point outside prime-order subgroup");
  G2 out;
  blst_p2_from_affine(&out.p_, &aff);
  if (!std::equal(bytes.begin(), bytes.end(),
                  out.to_bytes(bytes.size() == kFullBytes ? PointFormat::kFull
                                                          : PointFormat::kCompressed)
                      .begin())) {
    throw DecodeError("G2: non-canonical encoding");
  }
  return out;
}

Bytes G2::to_bytes(PointFormat format) const {
  if (format == PointFormat::kCompressed) {
    const auto c = compressed();
    return Bytes(c.begin(), c.end());
  }
  Bytes out(kFullBytes);
  blst_p2_serialize(out.data(), &p_);
  return out;
}

std::array<std::uint8_t, G2::kCompressedBytes> G2::compressed() const {
  std::array<std::uint8_t, kCompressedBytes> out{};
  blst_p2_compress(out.data(), &p_);
  return out;
}

G2 G2::pow(const Scalar& k) const {
  record_op(Op::kExpG2);
  const blst_scalar s = k.raw();
  G2 out;
  blst_p2_mult(&out.p_, &p_, s.b, kScalarBits);
  return out;
}

G2 G2::inverse() const {
  G2 out = *this;
  blst_p2_cneg(&out.p_, true);
  return out;
}

bool G2::is_identity() const { return blst_p2_is_inf(&p_); }

bool G2::in_subgroup() const { return blst_p2_in_g2(&p_); }

G2 operator*(const G2& a, const G2& b) {
  record_op(Op::kMulG2);
  G2 out;
  blst_p2_add_or_double(&out.p_, &a.p_, &b.p_);
  return out;
}

bool operator==(const G2& a, const G2& b) { return blst_p2_is_equal(&a.p_, &b.p_); }

// -------------------------------------------------------------------- GT

GT::GT() : f_(*blst_fp12_one()) {}

GT GT::from_raw(const blst_fp12& f) {
  GT out;
  out.f_ = f;
  return out;
}

std::array<std::uint8_t, GT::kBytes> GT::to_bytes() const {
  std::array<std::uint8_t, kBytes> out{};
  std::uint8_t* cursor = out.data();
  for_each_coefficient(f_, [&cursor](const blst_fp& c) {
    blst_bendian_from_fp(cursor, &c);
    cursor += 48;
  });
  return out;
}

GT GT::from_bytes(ByteView bytes) {
  if (bytes.size() != kBytes) {
    throw DecodeError("GT: expected 576 bytes, got " + std::to_string(bytes.size()));
  }
  GT out;
  const std::uint8_t* cursor = bytes.data();
  for_each_coefficient(out.f_, [&cursor](blst_fp& c) {
    blst_fp_from_bendian(&c, cursor);
    cursor += 48;
  });
  const auto round_trip = out.to_bytes();
  if (!std::equal(bytes.begin(), bytes.end(), round_trip.begin())) {
    throw DecodeError("GT: coefficient not reduced");
  }
  if (!blst_fp12_in_group(&out.f_)) throw DecodeError("GT: element outside order-p subgroup");
  return out;
}

GT GT::pow(const Scalar& k) const {
  record_op(Op::kExpGT);
  // Fixed 4-bit windows, most significant first. Squarings use the
  // cyclotomic formula, valid because every GT value lies in the
  // cyclotomic subgroup.
  const blst_scalar s = k.raw();
  std::array<blst_fp12, 16> table;
  table[0] = *blst_fp12_one();
  table[1] = f_;
  for (std::size_t i = 2; i < table.size(); ++i) {
    blst_fp12_mul(&table[i], &table[i - 1], &f_);
  }
  blst_fp12 acc = *blst_fp12_one();
  bool started = false;
  for (int byte = 31; byte >= 0; --byte) {
    for (int half = 1; half >= 0; --half) {
      const unsigned nibble = (s.b[byte] >> (4 * half)) & 0xf;
      if (started) {
        for (int i = 0; i < 4; ++i) blst_fp12_cyclotomic_sqr(&acc, &acc);
      }
      if (nibble != 0) {
        if (started) {
          blst_fp12_mul(&acc, &acc, &table[nibble]);
        } else {
          acc = table[nibble];
          started = true;
        }
      }
    }
  }
  return from_raw(acc);
}

GT GT::inverse() const {
  // Unitary elements invert by conjugation.
  GT out = *this;
  blst_fp12_conjugate(&out.f_);
  return out;
}

bool GT::is_identity() const { return blst_fp12_is_one(&f_); }

GT operator*(const GT& a, const GT& b) {
  record_op(Op::kMulGT);
  GT out;
  blst_fp12_mul(&out.f_, &a.f_, &b.f_);
  return out;
}

bool operator==(const GT& a, const GT& b) { return blst_fp12_is_equal(&a.f_, &b.f_); }

// --------------------------------------------------------------- pairing

GT pairing(const G1& a, const G2& b) {
  record_op(Op::kPairing);
  if (a.is_identity() || b.is_identity()) return GT();
  blst_p1_affine pa;
  blst_p2_affine pb;
  blst_p1_to_affine(&pa, &a.raw());
  blst_p2_to_affine(&pb, &b.raw());
  blst_fp12 ml;
  blst_miller_loop(&ml, &pb, &pa);
  blst_fp12 out;
  blst_final_exp(&out, &ml);
  return GT::from_raw(out);
}

const BilinearSuite& bls12_381() {
  static const BilinearSuite suite{
      "BLS12-381",
      kOrderBe,
      G1::generator(),
      G2::generator(),
      ElementWidths{Scalar::kBytes, G1::kFullBytes, G1::kCompressedBytes,
                    G2::kFullBytes, G2::kCompressedBytes, GT::kBytes},
  };
  return suite;
}

}  // namespace aee
