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

#ifndef AEE_GROUPSIG_HPP_
#define AEE_GROUPSIG_HPP_

// Event-linkable group signatures.
//
// sigma = (D, B, T, c, s_x, s_y, s_alpha, s_delta) with D = u^alpha,
// B = A h^alpha and the event-linking token T = H1(et)^y. The rest is a
// Fiat-Shamir proof of knowledge of (x, y, alpha, alpha*x) binding et and m.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "aee/algebra.hpp"
#include "aee/enroll.hpp"
#include "aee/keys.hpp"

namespace aee {

class Rng;

struct GroupSignature {
  G1 D;
  G1 B;
  G1 T;
  Scalar c;
  Scalar s_x;
  Scalar s_y;
  Scalar s_alpha;
  Scalar s_delta;

  friend bool operator==(const GroupSignature&, const GroupSignature&) = default;
};

// The three pairings in the signer's R4 that depend only on the key. With
// them cached, signing performs no pairing at all.
struct PairingContext {
  GT e_A_g2;
  GT e_h_w;
  GT e_h_g2;
};

PairingContext precompute_context(const GroupPublicKey& gpk, const GroupSigningKey& gsk);

GroupSignature gsign(const GroupPublicKey& gpk, const GroupSigningKey& gsk,
                     const PairingContext& ctx, const EventId& et, ByteView m, Rng& rng);

// Convenience overload that builds the context first (three pairings).
GroupSignature gsign(const GroupPublicKey& gpk, const GroupSigningKey& gsk,
                     const EventId& et, ByteView m, Rng& rng);

// Rejects on any invalid element before hashing. Uses two pairings.
bool gver(const GroupPublicKey& gpk, const EventId& et, ByteView m,
          const GroupSignature& sigma);

struct ScheduledSignature {
  EventId et;
  GroupSignature sigma;
};

// Offline signing of future events on the empty placeholder message.
// Throws ConfigError on duplicate events.
std::vector<ScheduledSignature> precompute_event_schedule(
    const GroupPublicKey& gpk, const GroupSigningKey& gsk, const PairingContext& ctx,
    std::span<const EventId> events, Rng& rng);

// Algebraic building blocks of gsign/gver, exposed for white-box checks of
// the optimised forms against the textbook ones.
namespace groupsig_detail {

struct SigningNonces {
  Scalar alpha;
  Scalar r_x;
  Scalar r_y;
  Scalar r_alpha;
  Scalar r_delta;

  static SigningNonces draw(Rng& rng);
};

struct ProofCommitments {
  G1 R1;
  G1 R2;
  G1 R3;
  GT R4;
  friend bool operator==(const ProofCommitments&, const ProofCommitments&) = default;
};

enum class R4Form {
  kOptimised,  // signer: cached pairings; verifier: two-pairing product
  kReference,  // signer: e(B,g2), e(h,w), e(h,g2); verifier: five pairings
};

std::pair<GroupSignature, ProofCommitments> sign_with_nonces(
    const GroupPublicKey& gpk, const GroupSigningKey& gsk, const PairingContext& ctx,
    const EventId& et, ByteView m, const SigningNonces& nonces,
    R4Form form = R4Form::kOptimised);

// The verifier's recomputed commitments; nullopt if D, B or T is invalid.
std::optional<ProofCommitments> recompute_commitments(const GroupPublicKey& gpk,
                                                      const EventId& et,
                                                      const GroupSignature& sigma,
                                                      R4Form form = R4Form::kOptimised);

Scalar challenge(const GroupPublicKey& gpk, const EventId& et, ByteView m,
                 const GroupSignature& sigma, const ProofCommitments& commitments);

bool verify(const GroupPublicKey& gpk, const EventId& et, ByteView m,
            const GroupSignature& sigma, R4Form form);

}  // namespace groupsig_detail

}  // namespace aee

#endif  // AEE_GROUPSIG_HPP_
