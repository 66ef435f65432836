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

#include "aee/testkit/experiments.hpp"

#include <array>
#include <sstream>

#include "aee/eventsig.hpp"
#include "aee/rng.hpp"
#include "aee/testkit/oracles.hpp"

namespace aee::testkit {

namespace {

std::uint32_t draw_u32(Rng& rng) {
  std::array<std::uint8_t, 4> b{};
  rng.fill(b);
  return (std::uint32_t{b[0]} << 24) | (std::uint32_t{b[1]} << 16) |
         (std::uint32_t{b[2]} << 8) | b[3];
}

Bytes random_message(Rng& rng) {
  Bytes m(1 + draw_u32(rng) % 64);
  rng.fill(m);
  return m;
}

// One run of the experiment. Returns the first branch that outputs 1.
std::optional<CorrBranch> run_trial(Rng& rng, const Implementation& impl, bool& same,
                                    std::string& note) {
  GameState state(rng);

  // Adversary: enrolls a handful of members through AddU and picks two.
  const std::size_t members = 2 + draw_u32(rng) % 3;
  for (std::size_t j = 0; j < members; ++j) oracle_add_u(state, "m" + std::to_string(j));
  const MemberId i0 = "m" + std::to_string(draw_u32(rng) % members);
  same = draw_u32(rng) % 2 == 0;
  MemberId i1 = i0;
  if (!same) {
    i1 = "m" + std::to_string((std::stoul(i0.substr(1)) + 1 + draw_u32(rng) % (members - 1)) %
                              members);
  }
  (void)oracle_rreg(state, i0);
  const EventId et("corr-" + std::to_string(draw_u32(rng)));
  const Bytes m0 = random_message(rng);
  const Bytes m1 = random_message(rng);
  const Bytes m_e = random_message(rng);
  note = i0 + "/" + i1 + " et=" + et.text();

  if (!state.HU.contains(i0)) return std::nullopt;
  const GroupSignature sigma0 = gsign(state.gpk(), state.gsk.at(i0), et, m0, rng);
  if (!gver(state.gpk(), et, m0, sigma0)) return CorrBranch::kGver;
  const RegistrationTable reg = state.registry();
  const auto opening = open(state.gpk(), state.mok(), reg, et, m0, sigma0, rng);
  if (!opening || opening->member != i0) return CorrBranch::kOpen;
  if (!impl.judge(state.gpk(), i0, state.upk.at(i0), sigma0, opening->proof)) {
    return CorrBranch::kJudge;
  }
  if (!same &&
      impl.judge(state.gpk(), i1, state.upk.at(i1), sigma0, opening->proof)) {
    return CorrBranch::kMisattributedJudge;
  }

  const EventPublicKey epk0 = epk_from_signature(state.gpk(), et, sigma0);
  const EventSignature sigma_e = esign(state.usk.at(i0), et, epk0, m_e, rng);
  if (!ever(et, epk0, m_e, sigma_e)) return CorrBranch::kEver;

  if (!state.HU.contains(i1)) return std::nullopt;
  const GroupSignature sigma1 = gsign(state.gpk(), state.gsk.at(i1), et, m1, rng);
  const bool linked = impl.link(et, m0, sigma0, m1, sigma1);
  if (same && !linked) return CorrBranch::kLinkSameSigner;
  if (!same && linked) return CorrBranch::kLinkDistinctSigners;
  return std::nullopt;
}

}  // namespace

std::string_view branch_name(CorrBranch branch) {
  switch (branch) {
    case CorrBranch::kGver: return "gver";
    case CorrBranch::kOpen: return "open";
    case CorrBranch::kJudge: return "judge";
    case CorrBranch::kMisattributedJudge: return "misattributed-judge";
    case CorrBranch::kEver: return "ever";
    case CorrBranch::kLinkSameSigner: return "link-same-signer";
    case CorrBranch::kLinkDistinctSigners: return "link-distinct-signers";
  }
  return "unknown";
}

CorrResult exp_corr(std::size_t trials, std::uint64_t seed, const Implementation& impl) {
  CorrResult result;
  SeededRng root(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    SeededRng rng = root.fork(t);
    bool same = false;
    std::string note;
    const auto failed = run_trial(rng, impl, same, note);
    ++result.trials;
    if (same) ++result.same_signer_trials;
    std::ostringstream line;
    line << "trial " << t << ' ' << note << ' ' << (same ? "same" : "distinct") << ' '
         << (failed ? "FAIL " + std::string(branch_name(*failed)) : "ok");
    result.transcript.push_back(line.str());
    if (failed) {
      result.failed_branch = failed;
      result.failed_trial = t;
      return result;
    }
    ++result.passed;
  }
  return result;
}

}  // namespace aee::testkit
