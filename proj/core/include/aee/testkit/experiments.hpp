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

#ifndef AEE_TESTKIT_EXPERIMENTS_HPP_
#define AEE_TESTKIT_EXPERIMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aee/groupsig.hpp"
#include "aee/linktrace.hpp"

namespace aee::testkit {

// Branches of the correctness experiment, in execution order. Each one
// names the check whose failure makes the experiment output 1.
enum class CorrBranch {
  kGver,
  kOpen,
  kJudge,
  kMisattributedJudge,  // the opening proof must not verify for the other member
  kEver,
  kLinkSameSigner,
  kLinkDistinctSigners,
};

std::string_view branch_name(CorrBranch branch);

// Operations exp_corr routes through, so tests can plant faulty versions.
struct Implementation {
  std::function<bool(const EventId&, ByteView, const GroupSignature&, ByteView,
                     const GroupSignature&)>
      link = aee::link;
  std::function<bool(const GroupPublicKey&, const MemberId&, const G1&,
                     const GroupSignature&, const TracingProof&)>
      judge = aee::judge;
};

struct CorrResult {
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::size_t same_signer_trials = 0;
  std::optional<CorrBranch> failed_branch;
  std::size_t failed_trial = 0;
  std::vector<std::string> transcript;

  bool ok() const { return !failed_branch && passed == trials; }
};

// Runs `trials` independent executions, each with a fresh group. Stops at
// the first failing branch.
CorrResult exp_corr(std::size_t trials, std::uint64_t seed, const Implementation& impl = {});

}  // namespace aee::testkit

#endif  // AEE_TESTKIT_EXPERIMENTS_HPP_
