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

#include "aee/op_counter.hpp"

namespace aee {

namespace {
thread_local CountingSession* g_active = nullptr;
}  // namespace

OpCounts& OpCounts::operator+=(const OpCounts& o) {
  mul_g1 += o.mul_g1;
  exp_g1 += o.exp_g1;
  mul_g2 += o.mul_g2;
  exp_g2 += o.exp_g2;
  mul_gt += o.mul_gt;
  exp_gt += o.exp_gt;
  pairings += o.pairings;
  hash_to_g1 += o.hash_to_g1;
  hash_to_scalar += o.hash_to_scalar;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const OpCounts& c) {
  return os << "{mul_g1=" << c.mul_g1 << " exp_g1=" << c.exp_g1
            << " mul_g2=" << c.mul_g2 << " exp_g2=" << c.exp_g2
            << " mul_gt=" << c.mul_gt << " exp_gt=" << c.exp_gt
            << " pairings=" << c.pairings << " hash_to_g1=" << c.hash_to_g1
            << " hash_to_scalar=" << c.hash_to_scalar << "}";
}

CountingSession::CountingSession() : outer_(g_active) { g_active = this; }

CountingSession::~CountingSession() { g_active = outer_; }

void record_op(Op op) {
  for (CountingSession* s = g_active; s != nullptr; s = s->outer_) {
    OpCounts& c = s->counts_;
    switch (op) {
      case Op::kMulG1: ++c.mul_g1; break;
      case Op::kExpG1: ++c.exp_g1; break;
      case Op::kMulG2: ++c.mul_g2; break;
      case Op::kExpG2: ++c.exp_g2; break;
      case Op::kMulGT: ++c.mul_gt; break;
      case Op::kExpGT: ++c.exp_gt; break;
      case Op::kPairing: ++c.pairings; break;
      case Op::kHashToG1: ++c.hash_to_g1; break;
      case Op::kHashToScalar: ++c.hash_to_scalar; break;
    }
  }
}

}  // namespace aee
