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

#include "aee/testkit/negative_suites.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "aee/rng.hpp"
#include "aee/testkit/oracles.hpp"

namespace aee::testkit {

namespace {

constexpr std::size_t kMaxRecordedFailures = 8;
constexpr std::size_t kVariants = 5;

Scalar damage(const Scalar& v, std::size_t variant, Rng& rng) {
  Scalar out;
  switch (variant % kVariants) {
    case 0: out = v + Scalar::random_nonzero(rng); break;
    case 1: out = Scalar::random(rng); break;
    case 2: out = Scalar::from_u64(0); break;
    case 3: out = -v; break;
    default: out = v + Scalar::from_u64(1); break;
  }
  while (out == v) out = out + Scalar::from_u64(1);
  return out;
}

G1 damage(const G1& v, std::size_t variant, Rng& rng) {
  G1 out;
  switch (variant % kVariants) {
    case 0: out = v * G1::random(rng); break;
    case 1: out = G1::random(rng); break;
    case 2: out = G1(); break;
    case 3: out = v.inverse(); break;
    default: out = v * G1::generator(); break;
  }
  while (out == v) out = out * G1::generator();
  return out;
}

class SuiteRunner {
 public:
  explicit SuiteRunner(std::string name) { result_.name = std::move(name); }

  // `refused` is true when the adversary's attempt was turned away.
  void record(bool refused, const std::string& what) {
    ++result_.cases;
    if (refused) {
      ++result_.refused;
    } else if (result_.failures.size() < kMaxRecordedFailures) {
      result_.failures.push_back(what);
    }
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string label(const char* type, std::size_t n, std::size_t field, std::size_t variant) {
  std::ostringstream os;
  os << type << " #" << n << " field " << field << " variant " << variant % kVariants;
  return os.str();
}

struct Member {
  MemberId id;
  G1 upk;
  Scalar usk;
  GroupSigningKey gsk;
};

struct Fixture {
  explicit Fixture(Rng& rng, std::size_t members) : state(rng) {
    for (std::size_t j = 0; j < members; ++j) {
      const MemberId id = "vehicle-" + std::to_string(j);
      oracle_add_u(state, id);
      roster.push_back({id, state.upk.at(id), state.usk.at(id), state.gsk.at(id)});
    }
    reg = state.registry();
  }

  GameState state;
  std::vector<Member> roster;
  RegistrationTable reg;
};

Bytes msg(const std::string& s) { return Bytes(s.begin(), s.end()); }

}  // namespace

JoinRequest mutate(const JoinRequest& v, std::size_t field, std::size_t variant, Rng& rng) {
  JoinRequest out = v;
  switch (field % kJoinRequestFields) {
    case 0: out.z = damage(v.z, variant, rng); break;
    case 1: out.c = damage(v.c, variant, rng); break;
    default: out.s = damage(v.s, variant, rng); break;
  }
  return out;
}

GroupSignature mutate(const GroupSignature& v, std::size_t field, std::size_t variant,
                      Rng& rng) {
  GroupSignature out = v;
  switch (field % kGroupSignatureFields) {
    case 0: out.D = damage(v.D, variant, rng); break;
    case 1: out.B = damage(v.B, variant, rng); break;
    case 2: out.T = damage(v.T, variant, rng); break;
    case 3: out.c = damage(v.c, variant, rng); break;
    case 4: out.s_x = damage(v.s_x, variant, rng); break;
    case 5: out.s_y = damage(v.s_y, variant, rng); break;
    case 6: out.s_alpha = damage(v.s_alpha, variant, rng); break;
    default: out.s_delta = damage(v.s_delta, variant, rng); break;
  }
  return out;
}

EventSignature mutate(const EventSignature& v, std::size_t field, std::size_t variant,
                      Rng& rng) {
  EventSignature out = v;
  if (field % kEventSignatureFields == 0) {
    out.s_e = damage(v.s_e, variant, rng);
  } else {
    out.c_e = damage(v.c_e, variant, rng);
  }
  return out;
}

TracingProof mutate(const TracingProof& v, std::size_t field, std::size_t variant, Rng& rng) {
  TracingProof out = v;
  switch (field % kTracingProofFields) {
    case 0: out.K = damage(v.K, variant, rng); break;
    case 1: out.s = damage(v.s, variant, rng); break;
    case 2: out.c = damage(v.c, variant, rng); break;
    default: out.x = damage(v.x, variant, rng); break;
  }
  return out;
}

bool NegativeReport::ok() const {
  return !suites.empty() &&
         std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.ok(); });
}

const SuiteResult* NegativeReport::find(const std::string& name) const {
  for (const SuiteResult& s : suites) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

NegativeReport negative_suites(std::uint64_t seed, const NegativeOptions& options) {
  SeededRng rng(seed);
  const std::size_t members = std::max<std::size_t>(options.frame_members, 2);
  Fixture fx(rng, members);
  const GroupPublicKey& gpk = fx.state.gpk();
  NegativeReport report;

  // A small pool of honest objects; mutations walk fields and variants.
  const std::size_t pool = std::min<std::size_t>(members, 4);
  std::vector<JoinRequest> requests;
  std::vector<EventId> pool_events;
  std::vector<Bytes> pool_msgs;
  std::vector<GroupSignature> sigs;
  std::vector<EventPublicKey> epks;
  std::vector<EventSignature> esigs;
  std::vector<TracingProof> proofs;
  for (std::size_t j = 0; j < pool; ++j) {
    const Member& mb = fx.roster[j];
    requests.push_back(join_start(gpk, {mb.usk, mb.upk}, rng));
    pool_events.emplace_back("neg-event-" + std::to_string(j));
    pool_msgs.push_back(msg("status " + std::to_string(j)));
    sigs.push_back(gsign(gpk, mb.gsk, pool_events[j], pool_msgs[j], rng));
    epks.push_back(epk_from_signature(gpk, pool_events[j], sigs[j]));
    esigs.push_back(esign(mb.usk, pool_events[j], epks[j], pool_msgs[j], rng));
    proofs.push_back(
        open(gpk, fx.state.mok(), fx.reg, pool_events[j], pool_msgs[j], sigs[j], rng)->proof);
  }

  {
    SuiteRunner run("join-request-mutation");
    for (std::size_t n = 0; n < options.mutations; ++n) {
      const std::size_t field = n, variant = n / kJoinRequestFields;
      const JoinRequest bad = mutate(requests[n % pool], field, variant, rng);
      run.record(!verify_join_request(gpk, bad), label("join", n, field % 3, variant));
    }
    report.suites.push_back(run.take());
  }
  {
    SuiteRunner run("group-signature-mutation");
    for (std::size_t n = 0; n < options.mutations; ++n) {
      const std::size_t j = n % pool, field = n, variant = n / kGroupSignatureFields;
      const GroupSignature bad = mutate(sigs[j], field, variant, rng);
      run.record(!gver(gpk, pool_events[j], pool_msgs[j], bad),
                 label("gsig", n, field % kGroupSignatureFields, variant));
    }
    report.suites.push_back(run.take());
  }
  {
    SuiteRunner run("event-signature-mutation");
    for (std::size_t n = 0; n < options.mutations; ++n) {
      const std::size_t j = n % pool, field = n, variant = n / kEventSignatureFields;
      const EventSignature bad = mutate(esigs[j], field, variant, rng);
      run.record(!ever(pool_events[j], epks[j], pool_msgs[j], bad),
                 label("esig", n, field % kEventSignatureFields, variant));
    }
    report.suites.push_back(run.take());
  }
  {
    SuiteRunner run("tracing-proof-mutation");
    for (std::size_t n = 0; n < options.mutations; ++n) {
      const std::size_t j = n % pool, field = n, variant = n / kTracingProofFields;
      const TracingProof bad = mutate(proofs[j], field, variant, rng);
      const Member& mb = fx.roster[j];
      run.record(!judge(gpk, mb.id, mb.upk, sigs[j], bad),
                 label("proof", n, field % kTracingProofFields, variant));
    }
    report.suites.push_back(run.take());
  }

  // One credential, one event, many signatures: every pair must link.
  {
    SuiteRunner run("sybil-linkage");
    const Member& attacker = fx.roster[0];
    const EventId et("sybil-junction||201703011000");
    std::vector<GroupSignature> claims;
    std::vector<Bytes> claim_msgs;
    for (std::size_t k = 0; k < options.sybil_signatures; ++k) {
      claim_msgs.push_back(msg("claimed-id " + std::to_string(k)));
      claims.push_back(gsign(gpk, attacker.gsk, et, claim_msgs.back(), rng));
    }
    for (std::size_t a = 0; a < claims.size(); ++a) {
      for (std::size_t b = a + 1; b < claims.size(); ++b) {
        run.record(link(et, claim_msgs[a], claims[a], claim_msgs[b], claims[b]),
                   "sybil pair " + std::to_string(a) + "," + std::to_string(b));
      }
    }
    report.suites.push_back(run.take());
  }

  // Signatures from distinct members on one event must never link.
  {
    SuiteRunner run("link-unforgeability");
    const EventId et("shared-event");
    std::vector<GroupSignature> per_member;
    for (const Member& mb : fx.roster) per_member.push_back(gsign(gpk, mb.gsk, et, {}, rng));
    for (std::size_t a = 0; a < per_member.size(); ++a) {
      for (std::size_t b = a + 1; b < per_member.size(); ++b) {
        run.record(!link(et, {}, per_member[a], {}, per_member[b]),
                   "members " + std::to_string(a) + "," + std::to_string(b));
      }
    }
    report.suites.push_back(run.take());
  }

  // A valid opening re-attributed to someone else, or carried to another
  // member's signature.
  {
    SuiteRunner run("frame-misattribution");
    const EventId et("frame-event");
    std::vector<GroupSignature> per_member;
    std::vector<TracingProof> per_proof;
    for (const Member& mb : fx.roster) {
      per_member.push_back(gsign(gpk, mb.gsk, et, msg("m"), rng));
      per_proof.push_back(
          open(gpk, fx.state.mok(), fx.reg, et, msg("m"), per_member.back(), rng)->proof);
    }
    for (std::size_t a = 0; a < fx.roster.size(); ++a) {
      for (std::size_t b = 0; b < fx.roster.size(); ++b) {
        if (a == b) continue;
        const Member& other = fx.roster[b];
        run.record(!judge(gpk, other.id, other.upk, per_member[a], per_proof[a]),
                   "sig of " + std::to_string(a) + " judged against " + std::to_string(b));
        run.record(!judge(gpk, fx.roster[a].id, fx.roster[a].upk, per_member[b], per_proof[a]),
                   "proof of " + std::to_string(a) + " moved to sig of " + std::to_string(b));
      }
    }
    report.suites.push_back(run.take());
  }

  // Event signatures replayed into another event.
  {
    SuiteRunner run("cross-event-replay");
    const Member& mb = fx.roster[0];
    for (std::size_t n = 0; n < options.replay_events; ++n) {
      const EventId et_a("slot-" + std::to_string(2 * n));
      const EventId et_b("slot-" + std::to_string(2 * n + 1));
      const GroupSignature sa = gsign(gpk, mb.gsk, et_a, {}, rng);
      const GroupSignature sb = gsign(gpk, mb.gsk, et_b, {}, rng);
      const EventPublicKey epk_a = epk_from_signature(gpk, et_a, sa);
      const EventPublicKey epk_b = epk_from_signature(gpk, et_b, sb);
      const Bytes cam = msg("cam " + std::to_string(n));
      const EventSignature es = esign(mb.usk, et_a, epk_a, cam, rng);
      run.record(!ever(et_b, epk_b, cam, es), "replay under new epk " + std::to_string(n));
      run.record(!ever(et_b, epk_a, cam, es), "replay with stale epk " + std::to_string(n));
      const EventPublicKey relabeled{et_b, epk_a.base, epk_a.token};
      run.record(!ever(et_b, relabeled, cam, es), "relabeled epk " + std::to_string(n));
    }
    report.suites.push_back(run.take());
  }

  // Signed content swapped or carried to another member's key.
  {
    SuiteRunner run("message-substitution");
    for (std::size_t j = 0; j < pool; ++j) {
      const std::size_t o = (j + 1) % pool;
      run.record(!gver(gpk, pool_events[j], msg("forged"), sigs[j]), "gsig message swap");
      run.record(!gver(gpk, pool_events[o], pool_msgs[j], sigs[j]), "gsig event swap");
      run.record(!ever(pool_events[j], epks[j], msg("forged"), esigs[j]), "esig message swap");
      const EventPublicKey other_on_same =
          epk_from_signature(gpk, pool_events[j], gsign(gpk, fx.roster[o].gsk, pool_events[j],
                                                        pool_msgs[j], rng));
      run.record(!ever(pool_events[j], other_on_same, pool_msgs[j], esigs[j]),
                 "esig moved to another member's epk");
    }
    report.suites.push_back(run.take());
  }

  return report;
}

}  // namespace aee::testkit
