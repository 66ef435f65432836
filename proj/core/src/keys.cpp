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

#include "aee/keys.hpp"

#include "aee/errors.hpp"
#include "aee/rng.hpp"

namespace aee {

EventId::EventId(std::string_view text) : EventId(as_bytes(text)) {}

EventId::EventId(ByteView bytes) : bytes_(bytes.begin(), bytes.end()) {
  if (bytes_.empty()) throw ConfigError("event id must be non-empty");
}

GroupSetup gset(Rng& rng, const BilinearSuite& suite) {
  GroupSetup out;
  // Issuer side.
  out.mik.gamma = Scalar::random_nonzero(rng);
  out.gpk.g1 = G1::random(rng);
  out.gpk.g2 = suite.g2_generator.pow(Scalar::random_nonzero(rng));
  out.gpk.w = out.gpk.g2.pow(out.mik.gamma);
  // Opener side.
  out.gpk.u = G1::random(rng);
  out.mok.xi = Scalar::random_nonzero(rng);
  out.gpk.h = out.gpk.u.pow(out.mok.xi);
  return out;
}

UserKeyPair ukg(Rng& rng, const GroupPublicKey& gpk) {
  UserKeyPair keys;
  keys.usk = Scalar::random_nonzero(rng);
  keys.upk = gpk.h.pow(keys.usk);
  return keys;
}

bool is_well_formed(const GroupPublicKey& gpk) {
  for (const G1* p : {&gpk.g1, &gpk.h, &gpk.u}) {
    if (p->is_identity() || !p->in_subgroup()) return false;
  }
  for (const G2* p : {&gpk.g2, &gpk.w}) {
    if (p->is_identity() || !p->in_subgroup()) return false;
  }
  return true;
}

bool matches(const GroupPublicKey& gpk, const MasterIssuingKey& mik) {
  return !mik.gamma.is_zero() && gpk.g2.pow(mik.gamma) == gpk.w;
}

bool matches(const GroupPublicKey& gpk, const MasterOpeningKey& mok) {
  return !mok.xi.is_zero() && gpk.u.pow(mok.xi) == gpk.h;
}

bool matches(const GroupPublicKey& gpk, const UserKeyPair& keys) {
  return !keys.usk.is_zero() && gpk.h.pow(keys.usk) == keys.upk;
}

}  // namespace aee
