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

#ifndef AEE_ALGEBRA_HPP_
#define AEE_ALGEBRA_HPP_

// Type-3 bilinear group suite over BLS12-381, backed by blst.
//
// Group notation is multiplicative throughout: operator* is the group
// operation and pow() is exponentiation by a Scalar. Every operator* and
// pow() call is reported to the active CountingSession; inverse() is not.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "blst.h"

namespace aee {

class Rng;

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

enum class PointFormat : std::uint8_t { kFull, kCompressed };

// Byte widths of the canonical encodings.
struct ElementWidths {
  std::size_t scalar;
  std::size_t g1_full;
  std::size_t g1_compressed;
  std::size_t g2_full;
  std::size_t g2_compressed;
  std::size_t gt;

  std::size_t g1(PointFormat f) const {
    return f == PointFormat::kFull ? g1_full : g1_compressed;
  }
};

// Element of Z_p, p the prime group order.
class Scalar {
 public:
  static constexpr std::size_t kBytes = 32;

  Scalar();  // zero

  static Scalar from_u64(std::uint64_t v);
  static Scalar random(Rng& rng);
  // Uniform in Z_p^*.
  static Scalar random_nonzero(Rng& rng);
  // Canonical 32-byte big-endian encoding; rejects values >= p.
  static Scalar from_bytes(ByteView be);
  // Interprets arbitrary-length big-endian bytes and reduces mod p.
  static Scalar reduce(ByteView be);

  std::array<std::uint8_t, kBytes> to_bytes() const;
  bool is_zero() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }

  // Little-endian 256-bit form consumed by the point multipliers.
  blst_scalar raw() const;

 private:
  blst_fr v_;
};

class G1 {
 public:
  static constexpr std::size_t kFullBytes = 96;
  static constexpr std::size_t kCompressedBytes = 48;

  G1();  // identity

  static G1 generator();
  // Uniform in G1 \ {1}.
  static G1 random(Rng& rng);
  // Accepts either width; rejects off-curve and wrong-subgroup points.
  static G1 from_bytes(ByteView bytes);

  Bytes to_bytes(PointFormat format) const;
  std::array<std::uint8_t, kCompressedBytes> compressed() const;

  G1 pow(const Scalar& k) const;
  G1 inverse() const;
  bool is_identity() const;
  bool in_subgroup() const;

  friend G1 operator*(const G1& a, const G1& b);
  friend bool operator==(const G1& a, const G1& b);

  const blst_p1& raw() const { return p_; }
  static G1 from_raw(const blst_p1& p);

 private:
  blst_p1 p_;
};

class G2 {
 public:
  static constexpr std::size_t kFullBytes = 192;
  static constexpr std::size_t kCompressedBytes = 96;

  G2();  // identity

  static G2 generator();
  static G2 random(Rng& rng);
  static G2 from_bytes(ByteView bytes);

  Bytes to_bytes(PointFormat format) const;
  std::array<std::uint8_t, kCompressedBytes> compressed() const;

  G2 pow(const Scalar& k) const;
  G2 inverse() const;
  bool is_identity() const;
  bool in_subgroup() const;

  friend G2 operator*(const G2& a, const G2& b);
  friend bool operator==(const G2& a, const G2& b);

  const blst_p2& raw() const { return p_; }

 private:
  blst_p2 p_;
};

// Order-p subgroup of F_{p^12}^*, the pairing target.
class GT {
 public:
  static constexpr std::size_t kBytes = 576;

  GT();  // identity

  static GT from_bytes(ByteView bytes);
  std::array<std::uint8_t, kBytes> to_bytes() const;

  GT pow(const Scalar& k) const;
  GT inverse() const;
  bool is_identity() const;

  friend GT operator*(const GT& a, const GT& b);
  friend bool operator==(const GT& a, const GT& b);

  static GT from_raw(const blst_fp12& f);

 private:
  blst_fp12 f_;
};

GT pairing(const G1& a, const G2& b);

struct BilinearSuite {
  std::string name;
  std::array<std::uint8_t, Scalar::kBytes> order_be;  // p
  G1 g1_generator;
  G2 g2_generator;
  ElementWidths widths;
};

const BilinearSuite& bls12_381();

// Widths of the 224-bit MNT curve the construction was first measured on.
// Used only to reproduce reference signature sizes by formula.
inline constexpr ElementWidths kD224ReferenceWidths{28, 56, 29, 0, 0, 0};

}  // namespace aee

#endif  // AEE_ALGEBRA_HPP_
