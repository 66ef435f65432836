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

#include "aee/sim/profile.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "aee/enroll.hpp"
#include "aee/errors.hpp"
#include "aee/eventsig.hpp"
#include "aee/groupsig.hpp"
#include "aee/linktrace.hpp"
#include "aee/rng.hpp"

namespace aee::sim {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Bench {
  explicit Bench(std::uint64_t seed) : rng(seed), setup(gset(rng)) {
    const UserKeyPair keys = ukg(rng, setup.gpk);
    usk = keys.usk;
    const JoinRequest req = join_start(setup.gpk, keys, rng);
    const IssueResponse resp = issue(setup.gpk, setup.mik, reg, "bench-member", req, rng);
    gsk = join_finish(setup.gpk, keys, resp);
    ctx = precompute_context(setup.gpk, gsk);
  }

  // Pads the registry with distinct credentials; only A has to be unique.
  void pad_registry(std::size_t members) {
    G1 A = G1::random(rng);
    const G1 step = G1::generator();
    const G1 filler_upk = G1::random(rng);
    for (std::size_t k = reg.size(); k < members; ++k) {
      A = A * step;
      reg.insert({"filler-" + std::to_string(k), Scalar::from_u64(k + 1), A, filler_upk});
    }
  }

  SeededRng rng;
  GroupSetup setup;
  RegistrationTable reg;
  Scalar usk;
  GroupSigningKey gsk;
  PairingContext ctx;
};

const EventId& bench_event() {
  static const EventId et("junction-1||20170301100000");
  return et;
}

const Bytes& bench_message() {
  static const Bytes m{'s', 't', 'a', 't', 'u', 's'};
  return m;
}

}  // namespace

double CostProfile::cost_ms(const OpCounts& o) const {
  return static_cast<double>(o.mul_g1) * mul_g1 + static_cast<double>(o.mul_g2) * mul_g2 +
         static_cast<double>(o.mul_gt) * mul_gt + static_cast<double>(o.exp_g1) * exp_g1 +
         static_cast<double>(o.exp_g2) * exp_g2 + static_cast<double>(o.exp_gt) * exp_gt +
         static_cast<double>(o.pairings) * pairing;
}

std::int64_t CostProfile::cost_ticks(const OpCounts& ops) const {
  // Round to micro-ms first so the ceiling is stable across platforms.
  const double ms = std::round(cost_ms(ops) * 1e6) / 1e6;
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(ms)));
}

CostProfile zenbook_profile() {
  return {"zenbook", 0.003, 0.02, 0.005, 0.92, 6.48, 2.35, 6.19};
}

CostProfile raspberry_pi3_profile() {
  return {"raspberrypi3", 0.02, 0.23, 0.07, 5.65, 60.47, 26.52, 61.93};
}

CostProfile profile_by_name(std::string_view name) {
  if (name == "zenbook") return zenbook_profile();
  if (name == "raspberrypi3") return raspberry_pi3_profile();
  throw ConfigError("unknown cost profile '" + std::string(name) + "'");
}

ProtocolOpCounts measure_protocol_op_counts() {
  Bench b(0x0c0u);
  const EventId& et = bench_event();
  const Bytes& m = bench_message();
  ProtocolOpCounts out;
  GroupSignature sigma;
  {
    CountingSession s;
    sigma = gsign(b.setup.gpk, b.gsk, b.ctx, et, m, b.rng);
    out.gsign = s.counts();
  }
  {
    CountingSession s;
    if (!gver(b.setup.gpk, et, m, sigma)) throw Error("op-count probe: gver rejected");
    out.gver = s.counts();
  }
  const EventPublicKey epk = epk_from_signature(b.setup.gpk, et, sigma);
  EventSignature es;
  {
    CountingSession s;
    es = esign(b.usk, et, epk, m, b.rng);
    out.esign = s.counts();
  }
  {
    CountingSession s;
    if (!ever(et, epk, m, es)) throw Error("op-count probe: ever rejected");
    out.ever = s.counts();
  }
  return out;
}

ProtocolOpCounts reference_op_counts() {
  ProtocolOpCounts r;
  r.gsign.mul_g1 = 3;
  r.gsign.exp_g1 = 4;
  r.gsign.mul_gt = 2;
  r.gsign.exp_gt = 3;
  r.gver.mul_g1 = 6;
  r.gver.exp_g1 = 11;
  r.gver.mul_gt = 1;
  r.gver.pairings = 2;
  r.esign.exp_g1 = 1;
  r.ever.mul_g1 = 1;
  r.ever.exp_g1 = 2;
  return r;
}

double median(std::vector<double> samples) {
  if (samples.empty()) return 0.0;
  const auto mid = samples.begin() + static_cast<std::ptrdiff_t>(samples.size() / 2);
  std::nth_element(samples.begin(), mid, samples.end());
  if (samples.size() % 2 == 1) return *mid;
  const double upper = *mid;
  const double lower = *std::max_element(samples.begin(), mid);
  return (lower + upper) / 2.0;
}

std::vector<TimingRow> measure_timing(const TimingOptions& options) {
  if (options.iterations == 0) throw ConfigError("timing: iterations must be positive");
  Bench b(options.seed);
  b.pad_registry(options.members);
  const GroupPublicKey& gpk = b.setup.gpk;
  const EventId& et = bench_event();
  const Bytes& m = bench_message();
  const std::size_t n = options.iterations;
  const ProtocolOpCounts counts = measure_protocol_op_counts();

  std::vector<GroupSignature> sigs;
  sigs.reserve(n);
  std::vector<double> t_gsign, t_gver, t_esign, t_ever, t_link, t_open;
  for (std::size_t i = 0; i < n; ++i) {
    const auto t0 = Clock::now();
    sigs.push_back(gsign(gpk, b.gsk, b.ctx, et, m, b.rng));
    t_gsign.push_back(elapsed_ms(t0));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto t0 = Clock::now();
    const bool ok = gver(gpk, et, m, sigs[i]);
    t_gver.push_back(elapsed_ms(t0));
    if (!ok) throw Error("timing: gver rejected an honest signature");
  }
  const EventPublicKey epk = epk_from_signature(gpk, et, sigs.front());
  std::vector<EventSignature> esigs;
  esigs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto t0 = Clock::now();
    esigs.push_back(esign(b.usk, et, epk, m, b.rng));
    t_esign.push_back(elapsed_ms(t0));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto t0 = Clock::now();
    const bool ok = ever(et, epk, m, esigs[i]);
    t_ever.push_back(elapsed_ms(t0));
    if (!ok) throw Error("timing: ever rejected an honest signature");
  }
  // Link is far below clock resolution; time batches and divide.
  constexpr std::size_t kBatch = 256;
  std::size_t linked = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const GroupSignature& a = sigs[i];
    const GroupSignature& c = sigs[(i + 1) % n];
    const auto t0 = Clock::now();
    for (std::size_t k = 0; k < kBatch; ++k) linked += link(et, m, a, m, c) ? 1 : 0;
    t_link.push_back(elapsed_ms(t0) / kBatch);
  }
  if (linked != n * kBatch) throw Error("timing: link missed a same-signer pair");
  OpCounts open_ops;
  for (std::size_t i = 0; i < n; ++i) {
    CountingSession s;
    const auto t0 = Clock::now();
    const auto who = b.reg.lookup_by_credential(recover_credential(b.setup.mok, sigs[i]));
    t_open.push_back(elapsed_ms(t0));
    if (!who || *who != "bench-member") throw Error("timing: open lookup missed");
    open_ops = s.counts();
  }

  return {
      {"GSign", median(t_gsign), n, counts.gsign},
      {"GVer", median(t_gver), n, counts.gver},
      {"ESign", median(t_esign), n, counts.esign},
      {"EVer", median(t_ever), n, counts.ever},
      {"Link", median(t_link), n, OpCounts{}},
      {"Open", median(t_open), n, open_ops},
  };
}

double measure_link_ms(std::size_t members, std::size_t iterations, std::uint64_t seed) {
  Bench b(seed);
  b.pad_registry(members);
  const EventId& et = bench_event();
  const GroupSignature s0 = gsign(b.setup.gpk, b.gsk, b.ctx, et, {}, b.rng);
  const GroupSignature s1 = gsign(b.setup.gpk, b.gsk, b.ctx, et, {}, b.rng);
  constexpr std::size_t kBatch = 256;
  std::vector<double> t;
  std::size_t linked = 0;
  for (std::size_t i = 0; i < iterations; ++i) {
    const auto t0 = Clock::now();
    for (std::size_t k = 0; k < kBatch; ++k) linked += link(et, {}, s0, {}, s1) ? 1 : 0;
    t.push_back(elapsed_ms(t0) / kBatch);
  }
  if (linked != iterations * kBatch) throw Error("timing: link missed a same-signer pair");
  return median(std::move(t));
}

}  // namespace aee::sim
