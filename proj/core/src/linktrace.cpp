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

#include "aee/linktrace.hpp"

#include "aee/errors.hpp"
#include "aee/hashing.hpp"
#include "aee/rng.hpp"
#include "aee/wire.hpp"

namespace aee {

namespace {

Scalar tracing_challenge(const GroupPublicKey& gpk, const GroupSignature& sigma,
                         const G1& K, const G1& u_commit, const G1& d_commit) {
  return hash_to_scalar(gpk.h2_tag,
                        {wire::group_signature_item(sigma), HashItem::of(K),
                         HashItem::of(u_commit), HashItem::of(d_commit)});
}

}  // namespace

bool link_tokens(const G1& t0, const G1& t1) { return t0 == t1; }

bool link(const EventId& /*et*/, ByteView /*m0*/, const GroupSignature& sigma0,
          ByteView /*m1*/, const GroupSignature& sigma1) {
  return link_tokens(sigma0.T, sigma1.T);
}

G1 recover_credential(const MasterOpeningKey& mok, const GroupSignature& sigma) {
  return sigma.B * sigma.D.pow(mok.xi).inverse();
}

std::optional<Opening> open(const GroupPublicKey& gpk, const MasterOpeningKey& mok,
                            const RegistrationTable& reg, const EventId& et, ByteView m,
                            const GroupSignature& sigma, Rng& rng,
                            OpenerAuditLog* audit) {
  auto log = [&](OpenerAuditLog::Outcome outcome, std::optional<MemberId> member) {
    if (audit) audit->append({std::chrono::system_clock::now(), et, outcome, std::move(member)});
  };

  if (!gver(gpk, et, m, sigma)) {
    log(OpenerAuditLog::Outcome::kInvalidSignature, std::nullopt);
    throw ProtocolError("open: signature does not verify");
  }
  const G1 K = sigma.D.pow(mok.xi);
  const G1 A = sigma.B * K.inverse();
  const RegistrationTable::Row* row = nullptr;
  if (const auto member = reg.lookup_by_credential(A)) row = reg.find(*member);
  if (row == nullptr) {
    log(OpenerAuditLog::Outcome::kUntraceable, std::nullopt);
    return std::nullopt;
  }

  const Scalar r = Scalar::random_nonzero(rng);
  TracingProof proof;
  proof.K = K;
  proof.c = tracing_challenge(gpk, sigma, K, gpk.u.pow(r), sigma.D.pow(r));
  proof.s = r + mok.xi * proof.c;
  proof.x = row->x;
  log(OpenerAuditLog::Outcome::kOpened, row->member);
  return Opening{row->member, proof};
}

bool judge(const GroupPublicKey& gpk, const MemberId& /*member*/, const G1& upk,
           const GroupSignature& sigma, const TracingProof& proof) {
  if (!proof.K.in_subgroup() || !upk.in_subgroup()) return false;
  const G1 u_commit = gpk.u.pow(proof.s) * gpk.h.pow(-proof.c);
  const G1 d_commit = sigma.D.pow(proof.s) * proof.K.pow(-proof.c);
  if (tracing_challenge(gpk, sigma, proof.K, u_commit, d_commit) != proof.c) return false;
  const G1 A = sigma.B * proof.K.inverse();
  return credential_valid(gpk, upk, proof.x, A);
}

}  // namespace aee
