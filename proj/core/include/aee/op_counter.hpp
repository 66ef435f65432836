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

#ifndef AEE_OP_COUNTER_HPP_
#define AEE_OP_COUNTER_HPP_

#include <cstdint>
#include <ostream>

namespace aee {

enum class Op {
  kMulG1,
  kExpG1,
  kMulG2,
  kExpG2,
  kMulGT,
  kExpGT,
  kPairing,
  kHashToG1,
  kHashToScalar,
};

// Tally of algebra calls. Fixed-base and variable-base exponentiations are
// counted alike; a product of k powers costs k exps and k-1 muls.
struct OpCounts {
  std::uint64_t mul_g1 = 0;
  std::uint64_t exp_g1 = 0;
  std::uint64_t mul_g2 = 0;
  std::uint64_t exp_g2 = 0;
  std::uint64_t mul_gt = 0;
  std::uint64_t exp_gt = 0;
  std::uint64_t pairings = 0;
  std::uint64_t hash_to_g1 = 0;
  std::uint64_t hash_to_scalar = 0;

  friend bool operator==(const OpCounts&, const OpCounts&) = default;
  OpCounts& operator+=(const OpCounts& other);
};

std::ostream& operator<<(std::ostream& os, const OpCounts& c);

// The counts with hashing dropped; group-operation tallies are compared on
// this view.
inline OpCounts group_ops_only(OpCounts c) {
  c.hash_to_g1 = 0;
  c.hash_to_scalar = 0;
  return c;
}

// RAII counting window. Every algebra call made on this thread while the
// session is alive is tallied; nested sessions all see the inner calls.
// Sessions are confined to the constructing thread.
class CountingSession {
 public:
  CountingSession();
  ~CountingSession();

  CountingSession(const CountingSession&) = delete;
  CountingSession& operator=(const CountingSession&) = delete;

  const OpCounts& counts() const { return counts_; }

 private:
  friend void record_op(Op op);

  OpCounts counts_;
  CountingSession* outer_;
};

// Called by the algebra layer; a no-op when no session is active.
void record_op(Op op);

}  // namespace aee

#endif  // AEE_OP_COUNTER_HPP_
