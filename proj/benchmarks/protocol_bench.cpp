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

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "aee/algebra.hpp"
#include "aee/enroll.hpp"
#include "aee/eventsig.hpp"
#include "aee/groupsig.hpp"
#include "aee/keys.hpp"
#include "aee/linktrace.hpp"
#include "aee/rng.hpp"
#include "aee/wire.hpp"

namespace {

using namespace aee;

struct Fixture {
  SeededRng rng{42};
  GroupSetup setup = gset(rng);
  UserKeyPair keys = ukg(rng, setup.gpk);
  RegistrationTable reg;
  GroupSigningKey gsk;
  PairingContext ctx;
  EventId et{"bench-event"};
  Bytes m{'h', 'e', 'l', 'l', 'o'};
  GroupSignature sigma;
  EventPublicKey epk{et, G1(), G1()};
  EventSignature es;

  Fixture() {
    const JoinRequest req = join_start(setup.gpk, keys, rng);
    gsk = join_finish(setup.gpk, keys, issue(setup.gpk, setup.mik, reg, "m0", req, rng));
    ctx = precompute_context(setup.gpk, gsk);
    sigma = gsign(setup.gpk, gsk, ctx, et, m, rng);
    epk = epk_from_signature(setup.gpk, et, sigma);
    es = esign(keys.usk, et, epk, m, rng);
  }
};

Fixture& fx() {
  static Fixture f;
  return f;
}

void BM_ExpG1(benchmark::State& state) {
  SeededRng rng(1);
  const G1 g = G1::random(rng);
  const Scalar k = Scalar::random(rng);
  for (auto _ : state) benchmark::DoNotOptimize(g.pow(k));
}
BENCHMARK(BM_ExpG1);

void BM_MulG1(benchmark::State& state) {
  SeededRng rng(1);
  const G1 a = G1::random(rng), b = G1::random(rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MulG1);

void BM_ExpG2(benchmark::State& state) {
  SeededRng rng(1);
  const G2 g = G2::random(rng);
  const Scalar k = Scalar::random(rng);
  for (auto _ : state) benchmark::DoNotOptimize(g.pow(k));
}
BENCHMARK(BM_ExpG2);

void BM_ExpGT(benchmark::State& state) {
  SeededRng rng(1);
  const GT t = pairing(G1::random(rng), G2::generator());
  const Scalar k = Scalar::random(rng);
  for (auto _ : state) benchmark::DoNotOptimize(t.pow(k));
}
BENCHMARK(BM_ExpGT);

void BM_Pairing(benchmark::State& state) {
  SeededRng rng(1);
  const G1 a = G1::random(rng);
  const G2 b = G2::random(rng);
  for (auto _ : state) benchmark::DoNotOptimize(pairing(a, b));
}
BENCHMARK(BM_Pairing);

void BM_HashToG1(benchmark::State& state) {
  std::uint64_t i = 0;
  for (auto _ : state) {
    const std::string et = "slot-" + std::to_string(i++);
    benchmark::DoNotOptimize(GroupPublicKey::event_base(EventId(et)));
  }
}
BENCHMARK(BM_HashToG1);

void BM_GSign(benchmark::State& state) {
  auto& f = fx();
  for (auto _ : state) benchmark::DoNotOptimize(gsign(f.setup.gpk, f.gsk, f.ctx, f.et, f.m, f.rng));
}
BENCHMARK(BM_GSign)->Unit(benchmark::kMillisecond);

void BM_GSignNoContext(benchmark::State& state) {
  auto& f = fx();
  for (auto _ : state) benchmark::DoNotOptimize(gsign(f.setup.gpk, f.gsk, f.et, f.m, f.rng));
}
BENCHMARK(BM_GSignNoContext)->Unit(benchmark::kMillisecond);

void BM_GVer(benchmark::State& state) {
  auto& f = fx();
  for (auto _ : state) benchmark::DoNotOptimize(gver(f.setup.gpk, f.et, f.m, f.sigma));
}
BENCHMARK(BM_GVer)->Unit(benchmark::kMillisecond);

void BM_GVerReference(benchmark::State& state) {
  auto& f = fx();
  for (auto _ : state) {
    benchmark::DoNotOptimize(groupsig_detail::verify(f.setup.gpk, f.et, f.m, f.sigma,
                                                     groupsig_detail::R4Form::kReference));
  }
}
BENCHMARK(BM_GVerReference)->Unit(benchmark::kMillisecond);

void BM_ESign(benchmark::State& state) {
  auto& f = fx();
  for (auto _ : state) benchmark::DoNotOptimize(esign(f.keys.usk, f.et, f.epk, f.m, f.rng));
}
BENCHMARK(BM_ESign);

void BM_EVer(benchmark::State& state) {
  auto& f = fx();
  for (auto _ : state) benchmark::DoNotOptimize(ever(f.et, f.epk, f.m, f.es));
}
BENCHMARK(BM_EVer);

void BM_Link(benchmark::State& state) {
  auto& f = fx();
  const GroupSignature other = gsign(f.setup.gpk, f.gsk, f.ctx, f.et, f.m, f.rng);
  for (auto _ : state) benchmark::DoNotOptimize(link_tokens(f.sigma.T, other.T));
}
BENCHMARK(BM_Link);

// Credential recovery plus lookup in a registry of range(0) members.
void BM_OpenRecover(benchmark::State& state) {
  auto& f = fx();
  RegistrationTable reg = f.reg;
  G1 filler = f.gsk.A;
  for (std::int64_t i = 1; i < state.range(0); ++i) {
    filler = filler * G1::generator();
    reg.insert({"filler-" + std::to_string(i), Scalar::from_u64(i), filler, filler});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(reg.lookup_by_credential(recover_credential(f.setup.mok, f.sigma)));
  }
}
BENCHMARK(BM_OpenRecover)->Arg(10)->Arg(10'000);

void BM_OpenWithProof(benchmark::State& state) {
  auto& f = fx();
  for (auto _ : state) {
    benchmark::DoNotOptimize(open(f.setup.gpk, f.setup.mok, f.reg, f.et, f.m, f.sigma, f.rng));
  }
}
BENCHMARK(BM_OpenWithProof)->Unit(benchmark::kMillisecond);

void BM_Judge(benchmark::State& state) {
  auto& f = fx();
  const auto opening = open(f.setup.gpk, f.setup.mok, f.reg, f.et, f.m, f.sigma, f.rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(judge(f.setup.gpk, "m0", f.keys.upk, f.sigma, opening->proof));
  }
}
BENCHMARK(BM_Judge)->Unit(benchmark::kMillisecond);

void BM_EncodeDecode(benchmark::State& state) {
  auto& f = fx();
  for (auto _ : state) {
    benchmark::DoNotOptimize(wire::decode<GroupSignature>(wire::encode(f.sigma)));
  }
}
BENCHMARK(BM_EncodeDecode);

}  // namespace

BENCHMARK_MAIN();
