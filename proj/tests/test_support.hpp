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

#ifndef AEE_TESTS_TEST_SUPPORT_HPP_
#define AEE_TESTS_TEST_SUPPORT_HPP_

#include <gmp.h>

#include <string>
#include <vector>

#include "aee/algebra.hpp"
#include "aee/enroll.hpp"
#include "aee/eventsig.hpp"
#include "aee/groupsig.hpp"
#include "aee/keys.hpp"
#include "aee/rng.hpp"

namespace aee::testing {

// An issued member with everything a test might want to poke at.
struct Member {
  std::string id;
  UserKeyPair keys;
  GroupSigningKey gsk;
  PairingContext ctx;
};

struct Group {
  explicit Group(std::uint64_t seed) : rng(seed), setup(gset(rng)) {}

  Member enroll(const std::string& id) {
    Member m;
    m.id = id;
    m.keys = ukg(rng, setup.gpk);
    const JoinRequest req = join_start(setup.gpk, m.keys, rng);
    m.gsk = join_finish(setup.gpk, m.keys, issue(setup.gpk, setup.mik, reg, id, req, rng));
    m.ctx = precompute_context(setup.gpk, m.gsk);
    return m;
  }

  GroupSignature sign(const Member& m, const EventId& et, const Bytes& msg) {
    return gsign(setup.gpk, m.gsk, m.ctx, et, msg, rng);
  }

  const GroupPublicKey& gpk() const { return setup.gpk; }

  SeededRng rng;
  GroupSetup setup;
  RegistrationTable reg;
};

inline Bytes bytes_of(std::string_view s) { return Bytes(s.begin(), s.end()); }

// GMP view of a big-endian byte string.
class Mpz {
 public:
  Mpz() { mpz_init(v_); }
  explicit Mpz(ByteView be) : Mpz() {
    if (!be.empty()) mpz_import(v_, be.size(), 1, 1, 1, 0, be.data());
  }
  ~Mpz() { mpz_clear(v_); }
  Mpz(const Mpz&) = delete;
  Mpz& operator=(const Mpz&) = delete;

  mpz_t& get() { return v_; }
  const mpz_t& get() const { return v_; }

  // Fixed-width big-endian export; value must fit.
  std::vector<std::uint8_t> to_be(std::size_t width) const {
    std::vector<std::uint8_t> out(width, 0);
    std::size_t n = 0;
    std::vector<std::uint8_t> tmp((mpz_sizeinbase(v_, 2) + 7) / 8 + 1);
    mpz_export(tmp.data(), &n, 1, 1, 1, 0, v_);
    std::copy(tmp.begin(), tmp.begin() + static_cast<std::ptrdiff_t>(n),
              out.end() - static_cast<std::ptrdiff_t>(n));
    return out;
  }

 private:
  mpz_t v_;
};

inline std::vector<std::uint8_t> scalar_bytes(const Scalar& s) {
  const auto b = s.to_bytes();
  return {b.begin(), b.end()};
}

}  // namespace aee::testing

#endif  // AEE_TESTS_TEST_SUPPORT_HPP_
