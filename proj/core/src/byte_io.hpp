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

#ifndef AEE_SRC_BYTE_IO_HPP_
#define AEE_SRC_BYTE_IO_HPP_

// Big-endian cursor helpers shared by the encoders.

#include <cstdint>
#include <string>

#include "aee/algebra.hpp"
#include "aee/errors.hpp"

namespace aee::detail {

class ByteWriter {
 public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u32(std::uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8) {
      out_.push_back(static_cast<std::uint8_t>(v >> shift));
    }
  }
  void raw(ByteView b) { out_.insert(out_.end(), b.begin(), b.end()); }
  void sized(ByteView b) {
    u32(static_cast<std::uint32_t>(b.size()));
    raw(b);
  }
  void scalar(const Scalar& s) { raw(s.to_bytes()); }
  void g1(const G1& p, PointFormat f = PointFormat::kCompressed) { raw(p.to_bytes(f)); }
  void g2(const G2& p) { raw(p.compressed()); }

  Bytes take() { return std::move(out_); }

 private:
  Bytes out_;
};

class ByteReader {
 public:
  explicit ByteReader(ByteView in, std::string what) : in_(in), what_(std::move(what)) {}

  ByteView raw(std::size_t n) {
    if (in_.size() - pos_ < n) {
      throw DecodeError(what_ + ": truncated at byte " + std::to_string(pos_));
    }
    ByteView out = in_.subspan(pos_, n);
    pos_ += n;
    return out;
  }
  std::uint8_t u8() { return raw(1)[0]; }
  std::uint32_t u32() {
    const ByteView b = raw(4);
    return (std::uint32_t{b[0]} << 24) | (std::uint32_t{b[1]} << 16) |
           (std::uint32_t{b[2]} << 8) | std::uint32_t{b[3]};
  }
  ByteView sized() { return raw(u32()); }
  Scalar scalar() { return Scalar::from_bytes(raw(Scalar::kBytes)); }
  G1 g1(std::size_t width = G1::kCompressedBytes) { return G1::from_bytes(raw(width)); }
  G2 g2() { return G2::from_bytes(raw(G2::kCompressedBytes)); }

  std::size_t remaining() const { return in_.size() - pos_; }
  void expect_end() const {
    if (remaining() != 0) {
      throw DecodeError(what_ + ": " + std::to_string(remaining()) + " trailing bytes");
    }
  }

 private:
  ByteView in_;
  std::size_t pos_ = 0;
  std::string what_;
};

}  // namespace aee::detail

#endif  // AEE_SRC_BYTE_IO_HPP_
