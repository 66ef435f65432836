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

#include "aee/rng.hpp"

#include <sodium.h>

#include <algorithm>

#include "aee/errors.hpp"

namespace aee {

namespace {

void ensure_sodium() {
  static const int status = sodium_init();
  if (status < 0) {
    throw RandomnessError("libsodium initialisation failed");
  }
}

}  // namespace

SystemRng::SystemRng() { ensure_sodium(); }

void SystemRng::fill(std::span<std::uint8_t> out) {
  randombytes_buf(out.data(), out.size());
}

SeededRng::SeededRng(const std::array<std::uint8_t, 32>& seed) : key_(seed) {
  ensure_sodium();
}

SeededRng::SeededRng(std::uint64_t seed) : key_{} {
  ensure_sodium();
  std::array<std::uint8_t, 8> le{};
  for (int i = 0; i < 8; ++i) le[i] = static_cast<std::uint8_t>(seed >> (8 * i));
  static constexpr char kLabel[] = "aee-seeded-rng";
  crypto_generichash_state st;
  crypto_generichash_init(&st, nullptr, 0, key_.size());
  crypto_generichash_update(&st, reinterpret_cast<const unsigned char*>(kLabel),
                            sizeof(kLabel) - 1);
  crypto_generichash_update(&st, le.data(), le.size());
  crypto_generichash_final(&st, key_.data(), key_.size());
}

void SeededRng::fill(std::span<std::uint8_t> out) {
  static constexpr std::array<unsigned char, crypto_stream_chacha20_NONCEBYTES>
      kNonce{};
  std::fill(out.begin(), out.end(), std::uint8_t{0});
  crypto_stream_chacha20_xor_ic(out.data(), out.data(), out.size(),
                                kNonce.data(), block_, key_.data());
  block_ += (out.size() + 63) / 64;
}

SeededRng SeededRng::fork(std::uint64_t label) const {
  std::array<std::uint8_t, 40> input{};
  std::copy(key_.begin(), key_.end(), input.begin());
  for (int i = 0; i < 8; ++i) {
    input[32 + i] = static_cast<std::uint8_t>(label >> (8 * i));
  }
  std::array<std::uint8_t, 32> child{};
  crypto_generichash(child.data(), child.size(), input.data(), input.size(),
                     nullptr, 0);
  return SeededRng(child);
}

}  // namespace aee
