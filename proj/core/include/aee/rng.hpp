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

#ifndef AEE_RNG_HPP_
#define AEE_RNG_HPP_

#include <array>
#include <cstdint>
#include <span>

namespace aee {

// Source of random bytes for key generation and signing nonces.
class Rng {
 public:
  virtual ~Rng() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;
};

// Operating-system CSPRNG (libsodium randombytes).
class SystemRng final : public Rng {
 public:
  SystemRng();
  void fill(std::span<std::uint8_t> out) override;
};

// ChaCha20 keystream under a fixed 32-byte seed. Reproducible, so it must
// never drive production signing: reusing a nonce stream leaks keys.
class SeededRng final : public Rng {
 public:
  explicit SeededRng(const std::array<std::uint8_t, 32>& seed);
  explicit SeededRng(std::uint64_t seed);

  void fill(std::span<std::uint8_t> out) override;

  // Independent child stream; the parent stream is not advanced.
  SeededRng fork(std::uint64_t label) const;

 private:
  std::array<std::uint8_t, 32> key_;
  std::uint64_t block_ = 0;
};

}  // namespace aee

#endif  // AEE_RNG_HPP_
