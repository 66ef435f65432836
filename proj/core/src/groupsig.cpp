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

#include "aee/groupsig.hpp"

#include <set>

#include "aee/errors.hpp"
#include "aee/hashing.hpp"
#include "aee/rng.hpp"

namespace aee {

namespace groupsig_detail {

namespace {

bool usable(const G1& p) { return !p.is_identity() && p.in_subgroup(); }

}  // namespace

SigningNonces SigningNonces::draw(Rng& rng) {
  SigningNonces n;
  n.alpha = Scalar::random_nonzero(rng);
  n.r_x = Scalar::random_nonzero(rng);
  n.r_y = Scalar::random_nonzero(rng);
  n.r_alpha = Scalar::random_nonzero(rng);
  n.r_delta = Scalar::random_nonzero(rng);
  return n;
}

Scalar challenge(const GroupPublicKey& gpk, const EventId& et, ByteView m,
                 const GroupSignature& sigma, const ProofCommitments& k) {
  return hash_to_scalar(gpk.h2_tag, {
                                        HashItem::event(et.bytes()),
                                        HashItem::bytes(m),
                                        HashItem::of(sigma.D),
                                        HashItem::of(sigma.B),
                                        HashItem::of(sigma.T),
                                        HashItem::of(k.R1),
                                        HashItem::of(k.R2),
                                        HashItem::of(k.R3),
                                        HashItem::of(k.R4),
                                    });
}

std::pair<GroupSignature, ProofCommitments> sign_with_nonces(
    const GroupPublicKey& gpk, const GroupSigningKey& gsk, const PairingContext& ctx,
    const EventId& et, ByteView m, const SigningNonces& n, R4Form form) {
  const G1 base = gpk.event_base(et);

  GroupSignature sigma;
  sigma.D = gpk.u.pow(n.alpha);
  sigma.B = gsk.A * gpk.h.pow(n.alpha);
  sigma.T = base.pow(gsk.y);

  ProofCommitments k;
  k.R1 = gpk.u.pow(n.r_alpha);
  k.R2 = base.pow(n.r_y);
  k.R3 = gpk.u.pow(n.r_delta) * sigma.D.pow(n.r_x);
  if (form == R4Form::kOptimised) {
    // e(B,g2) = e(A,g2) e(h,g2)^alpha folds B's blinding into the last base.
    k.R4 = ctx.e_A_g2.pow(n.r_x) * ctx.e_h_w.pow(n.r_alpha) *
           ctx.e_h_g2.pow(n.alpha * n.r_x + n.r_y + n.r_delta);
  } else {
    k.R4 = pairing(sigma.B, gpk.g2).pow(n.r_x) * pairing(gpk.h, gpk.w).pow(n.r_alpha) *
           pairing(gpk.h, gpk.g2).pow(n.r_y + n.r_delta);
  }

  const Scalar& c = sigma.c = challenge(gpk, et, m, sigma, k);
  sigma.s_x = c * gsk.x + n.r_x;
  sigma.s_y = c * gsk.y + n.r_y;
  sigma.s_alpha = -(c * n.alpha) + n.r_alpha;
  sigma.s_delta = -(c * n.alpha * gsk.x) + n.r_delta;
  return {sigma, k};
}

std::optional<ProofCommitments> recompute_commitments(const GroupPublicKey& gpk,
                                                      const EventId& et,
                                                      const GroupSignature& sigma,
                                                      R4Form form) {
  if (!usable(sigma.D) || !usable(sigma.B) || !usable(sigma.T)) return std::nullopt;
  const G1 base = gpk.event_base(et);
  const Scalar& c = sigma.c;

  ProofCommitments k;
  k.R1 = gpk.u.pow(sigma.s_alpha) * sigma.D.pow(c);
  k.R2 = base.pow(sigma.s_y) * sigma.T.pow(-c);
  k.R3 = gpk.u.pow(sigma.s_delta) * sigma.D.pow(sigma.s_x);
  if (form == R4Form::kOptimised) {
    const G1 left = sigma.B.pow(sigma.s_x) * gpk.h.pow(sigma.s_y + sigma.s_delta) *
                    gpk.g1.pow(c).inverse();
    const G1 right = gpk.h.pow(sigma.s_alpha) * sigma.B.pow(c);
    k.R4 = pairing(left, gpk.g2) * pairing(right, gpk.w);
  } else {
    const GT ratio = pairing(sigma.B, gpk.w) * pairing(gpk.g1, gpk.g2).inverse();
    k.R4 = pairing(sigma.B, gpk.g2).pow(sigma.s_x) *
           pairing(gpk.h, gpk.w).pow(sigma.s_alpha) *
           pairing(gpk.h, gpk.g2).pow(sigma.s_y + sigma.s_delta) * ratio.pow(c);
  }
  return k;
}

bool verify(const GroupPublicKey& gpk, const EventId& et, ByteView m,
            const GroupSignature& sigma, R4Form form) {
  const auto k = recompute_commitments(gpk, et, sigma, form);
  return k && challenge(gpk, et, m, sigma, *k) == sigma.c;
}

}  // namespace groupsig_detail

PairingContext precompute_context(const GroupPublicKey& gpk, const GroupSigningKey& gsk) {
  return {pairing(gsk.A, gpk.g2), pairing(gpk.h, gpk.w), pairing(gpk.h, gpk.g2)};
}

GroupSignature gsign(const GroupPublicKey& gpk, const GroupSigningKey& gsk,
                     const PairingContext& ctx, const EventId& et, ByteView m, Rng& rng) {
  const auto nonces = groupsig_detail::SigningNonces::draw(rng);
  return groupsig_detail::sign_with_nonces(gpk, gsk, ctx, et, m, nonces).first;
}

GroupSignature gsign(const GroupPublicKey& gpk, const GroupSigningKey& gsk,
                     const EventId& et, ByteView m, Rng& rng) {
  return gsign(gpk, gsk, precompute_context(gpk, gsk), et, m, rng);
}

bool gver(const GroupPublicKey& gpk, const EventId& et, ByteView m,
          const GroupSignature& sigma) {
  return groupsig_detail::verify(gpk, et, m, sigma, groupsig_detail::R4Form::kOptimised);
}

std::vector<ScheduledSignature> precompute_event_schedule(
    const GroupPublicKey& gpk, const GroupSigningKey& gsk, const PairingContext& ctx,
    std::span<const EventId> events, Rng& rng) {
  std::set<EventId> seen;
  for (const EventId& et : events) {
    if (!seen.insert(et).second) {
      throw ConfigError("event schedule lists '" + et.text() + "' twice");
    }
  }
  std::vector<ScheduledSignature> out;
  out.reserve(events.size());
  for (const EventId& et : events) {
    out.push_back({et, gsign(gpk, gsk, ctx, et, ByteView{}, rng)});
  }
  return out;
}

}  // namespace aee
