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

// Acceptance checks. One PASS/FAIL line per criterion; exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "aee/algebra.hpp"
#include "aee/eventsig.hpp"
#include "aee/groupsig.hpp"
#include "aee/linktrace.hpp"
#include "aee/op_counter.hpp"
#include "aee/rng.hpp"
#include "aee/sim/profile.hpp"
#include "aee/sim/simulator.hpp"
#include "aee/testkit/experiments.hpp"
#include "aee/testkit/negative_suites.hpp"
#include "aee/wire.hpp"

namespace {

using namespace aee;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v, int digits = 3) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string ops(const OpCounts& c) {
  std::ostringstream os;
  os << c.mul_g1 << " mul_G1 + " << c.exp_g1 << " exp_G1 + " << c.mul_gt << " mul_GT + "
     << c.exp_gt << " exp_GT, " << c.pairings << " pairings";
  return os.str();
}

struct Signer {
  SeededRng rng{0xACCE};
  GroupSetup setup = gset(rng);
  UserKeyPair keys = ukg(rng, setup.gpk);
  RegistrationTable reg;
  GroupSigningKey gsk;
  PairingContext ctx;
  Signer() {
    gsk = join_finish(setup.gpk, keys,
                      issue(setup.gpk, setup.mik, reg, "acceptance",
                            join_start(setup.gpk, keys, rng), rng));
    ctx = precompute_context(setup.gpk, gsk);
  }
};

Signer& signer() {
  static Signer s;
  return s;
}

// 1
Verdict correctness() {
  const auto t0 = Clock::now();
  const testkit::CorrResult r = testkit::exp_corr(1000, 20260301);
  const double s = seconds_since(t0);
  Verdict v;
  v.pass = r.ok() && r.passed == 1000 && s < 300.0;
  v.detail = "exp_corr " + std::to_string(r.passed) + "/1000 trials (" +
             std::to_string(r.same_signer_trials) + " same-signer) in " + fmt(s, 1) +
             " s, limit 300 s";
  if (r.failed_branch) {
    v.detail += "; failed branch " + std::string(testkit::branch_name(*r.failed_branch)) +
                " at trial " + std::to_string(r.failed_trial);
  }
  return v;
}

// 2
Verdict composition() {
  Signer& s = signer();
  const auto& w = bls12_381().widths;
  std::size_t bad = 0;
  for (int i = 0; i < 100; ++i) {
    const EventId et("slot-" + std::to_string(i));
    const GroupSignature g = gsign(s.setup.gpk, s.gsk, s.ctx, et, {}, s.rng);
    const Bytes full = wire::encode_group_signature(g, PointFormat::kFull);
    const Bytes comp = wire::encode_group_signature(g, PointFormat::kCompressed);
    if (full.size() != 3 * w.g1_full + 5 * w.scalar) ++bad;
    if (comp.size() != 3 * w.g1_compressed + 5 * w.scalar) ++bad;
    // Re-split by the 3 G1 + 5 Zp layout and check every piece parses.
    try {
      std::size_t off = 0;
      for (int k = 0; k < 3; ++k, off += w.g1_compressed) {
        (void)G1::from_bytes(ByteView(comp).subspan(off, w.g1_compressed));
      }
      for (int k = 0; k < 5; ++k, off += w.scalar) {
        (void)Scalar::from_bytes(ByteView(comp).subspan(off, w.scalar));
      }
      if (off != comp.size()) ++bad;
    } catch (const std::exception&) {
      ++bad;
    }
    const EventPublicKey epk = epk_from_signature(s.setup.gpk, et, g);
    const EventSignature e = esign(s.keys.usk, et, epk, {}, s.rng);
    const Bytes eb = wire::encode_event_signature(e);
    if (eb.size() != 2 * w.scalar) ++bad;
  }
  return {bad == 0, "100 group signatures as 3 G1 + 5 Zp, 100 event signatures as 2 Zp; " +
                        std::to_string(bad) + " violations"};
}

// 3
Verdict sizes() {
  const auto d224 = wire::signature_sizes(kD224ReferenceWidths);
  const auto& w = bls12_381().widths;
  const auto here = wire::signature_sizes(w);
  const bool reference_ok =
      d224.group_full == 308 && d224.group_compressed == 227 && d224.event_full == 56;
  const bool widths_match = w.g1_full == 56 && w.scalar == 28;
  bool formula_ok = here.group_full == 3 * w.g1_full + 5 * w.scalar &&
                    here.group_compressed == 3 * w.g1_compressed + 5 * w.scalar &&
                    here.event_full == 2 * w.scalar && here.event_compressed == 2 * w.scalar;
  std::string detail = "d224 formula " + std::to_string(d224.group_full) + "/" +
                       std::to_string(d224.group_compressed) + "/" +
                       std::to_string(d224.event_full) + "; " + bls12_381().name + " " +
                       std::to_string(here.group_full) + "/" +
                       std::to_string(here.group_compressed) + "/" +
                       std::to_string(here.event_full);
  bool reported = true;
  if (!widths_match) {
#ifdef AEE_CLI_PATH
    const std::string cmd = std::string("'") + AEE_CLI_PATH + "' bench --iters 100 --members 100";
    std::string out;
    if (FILE* p = ::popen(cmd.c_str(), "r")) {
      char buf[4096];
      std::size_t n;
      while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
      reported = ::pclose(p) == 0;
    } else {
      reported = false;
    }
    const auto delta = [](std::size_t a, std::size_t b) { return "+" + std::to_string(a - b); };
    reported = reported && out.find("d224") != std::string::npos &&
               out.find(delta(here.group_full, d224.group_full)) != std::string::npos &&
               out.find(delta(here.group_compressed, d224.group_compressed)) != std::string::npos &&
               out.find(delta(here.event_full, d224.event_full)) != std::string::npos;
    detail += "; widths differ from d224, deviation reported by bench: ";
    detail += reported ? "yes" : "no";
#else
    reported = false;
    detail += "; CLI not built, cannot confirm bench reports the deviation";
#endif
  }
  return {reference_ok && formula_ok && reported, detail};
}

// 4
Verdict op_counts() {
  const sim::ProtocolOpCounts got = sim::measure_protocol_op_counts();
  const sim::ProtocolOpCounts want = sim::reference_op_counts();
  struct Row {
    const char* name;
    const OpCounts& got;
    const OpCounts& want;
  };
  const Row rows[] = {{"GSign", got.gsign, want.gsign},
                      {"GVer", got.gver, want.gver},
                      {"ESign", got.esign, want.esign},
                      {"EVer", got.ever, want.ever}};
  Verdict v{true, ""};
  for (const Row& r : rows) {
    const bool ok = group_ops_only(r.got) == r.want;
    v.pass = v.pass && ok;
    if (!v.detail.empty()) v.detail += "; ";
    v.detail += std::string(r.name) + (ok ? " ok" : " MISMATCH") + " (" + ops(r.got);
    if (!ok) v.detail += ", expected " + ops(r.want);
    v.detail += ")";
  }
  return v;
}

// 5
Verdict timing() {
  sim::TimingOptions opt;
  opt.iterations = 1000;
  opt.members = 10'000;
  const auto rows = sim::measure_timing(opt);
  auto med = [&](const std::string& op) {
    for (const auto& r : rows) {
      if (r.op == op) return r.median_ms;
    }
    return -1.0;
  };
  const double gsign = med("GSign"), gver = med("GVer"), esign = med("ESign"),
               ever = med("EVer"), link = med("Link"), open = med("Open");
  const bool a = esign <= 0.2 * gsign, b = ever <= 0.2 * gver, c = link < 0.01 * gver,
             d = open < 0.01 * gver;
  std::string detail = "medians ms: GSign " + fmt(gsign) + " GVer " + fmt(gver) + " ESign " +
                       fmt(esign) + " EVer " + fmt(ever) + " Link " + fmt(link, 5) +
                       " Open " + fmt(open) + " | ESign/GSign " + fmt(esign / gsign) +
                       (a ? " ok" : " FAIL") + ", EVer/GVer " + fmt(ever / gver) +
                       (b ? " ok" : " FAIL") + ", Link/GVer " + fmt(link / gver, 5) +
                       (c ? " ok" : " FAIL") + ", Open/GVer " + fmt(open / gver, 4) +
                       (d ? " ok" : " FAIL (limit 0.01)");
  return {a && b && c && d, detail};
}

// 6
Verdict precompute() {
  const sim::PrecomputeReport r = sim::offline_precompute_report(144, 6, 144);
  const bool ok = r.valid == 144 && r.slots == 144 && r.ratio >= 0.75 && r.ratio <= 1.25;
  return {ok, std::to_string(r.valid) + "/144 gver-valid; total " + fmt(r.total_ms, 1) +
                  " ms vs 144 x median gsign " + fmt(r.median_gsign_ms) + " ms = " +
                  fmt(144 * r.median_gsign_ms, 1) + " ms, ratio " + fmt(r.ratio) +
                  " (reference " + fmt(r.reference_laptop_s, 2) + " s laptop / " +
                  fmt(r.reference_rpi3_s, 1) + " s RPi3, not compared)"};
}

// 7
Verdict sybil() {
  std::size_t attacker_events = 0, detected = 0, honest_flagged = 0, runs = 0;
  std::vector<std::size_t> missed_by_k(11, 0);
  for (sim::Scenario sc : {sim::Scenario::kIntersection, sim::Scenario::kCam}) {
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
      sim::SimConfig c;
      c.scenario = sc;
      c.vehicle_count = 2;
      c.duration_ms = 2000;
      c.event_slot_ms = 1000;
      c.cam_interval_ms = 1000;
      c.rng_seed = seed;
      c.attacker.credentials = 1;
      c.attacker.identities = 2 + (seed % 9);
      const sim::SimReport r = sim::run(c).report;
      ++runs;
      attacker_events += r.attacker_events;
      detected += r.attacker_events_detected;
      honest_flagged += r.honest_flagged;
      missed_by_k[c.attacker.identities] += r.attacker_events - r.attacker_events_detected;
    }
  }
  std::string missed;
  for (std::size_t k = 2; k <= 10; ++k) {
    if (missed_by_k[k]) missed += " k=" + std::to_string(k) + ":" + std::to_string(missed_by_k[k]);
  }
  const bool ok = attacker_events > 0 && detected == attacker_events && honest_flagged == 0;
  return {ok, std::to_string(runs) + " seeded runs (both scenarios, k = 2..10): " +
                  std::to_string(detected) + "/" + std::to_string(attacker_events) +
                  " attacker events detected, " + std::to_string(honest_flagged) +
                  " honest vehicles flagged" + (missed.empty() ? "" : "; missed" + missed)};
}

// 8
Verdict negative() {
  const testkit::NegativeReport rep = testkit::negative_suites(88);
  std::string detail;
  for (const auto& s : rep.suites) {
    if (!detail.empty()) detail += ", ";
    detail += s.name + " " + std::to_string(s.refused) + "/" + std::to_string(s.cases);
  }
  bool sizes_ok = true;
  for (const char* name : {"join-request-mutation", "group-signature-mutation",
                           "event-signature-mutation", "tracing-proof-mutation"}) {
    const auto* s = rep.find(name);
    sizes_ok = sizes_ok && s != nullptr && s->cases >= 1000;
  }
  sizes_ok = sizes_ok && rep.find("cross-event-replay") && rep.find("frame-misattribution");
  return {rep.ok() && sizes_ok, detail};
}

// 9
Verdict optimisation_equivalence() {
  using groupsig_detail::R4Form;
  Signer& s = signer();
  const GroupPublicKey& gpk = s.setup.gpk;
  std::size_t mismatches = 0, accepted = 0, rejected = 0;
  for (int i = 0; i < 100; ++i) {
    const EventId et("eq-" + std::to_string(i));
    const Bytes m{static_cast<std::uint8_t>(i)};
    const auto nonces = groupsig_detail::SigningNonces::draw(s.rng);
    const auto opt =
        groupsig_detail::sign_with_nonces(gpk, s.gsk, s.ctx, et, m, nonces, R4Form::kOptimised);
    const auto ref =
        groupsig_detail::sign_with_nonces(gpk, s.gsk, s.ctx, et, m, nonces, R4Form::kReference);
    if (!(opt.first == ref.first) || !(opt.second == ref.second)) ++mismatches;
    if (groupsig_detail::challenge(gpk, et, m, opt.first, opt.second) !=
        groupsig_detail::challenge(gpk, et, m, ref.first, ref.second)) {
      ++mismatches;
    }
    // Verifier side, on the honest signature and on a tampered copy.
    GroupSignature tampered = opt.first;
    tampered.s_alpha = tampered.s_alpha + Scalar::from_u64(1);
    for (const GroupSignature* sig : {&opt.first, static_cast<const GroupSignature*>(&tampered)}) {
      const auto vo = groupsig_detail::recompute_commitments(gpk, et, *sig, R4Form::kOptimised);
      const auto vr = groupsig_detail::recompute_commitments(gpk, et, *sig, R4Form::kReference);
      if (vo.has_value() != vr.has_value() || (vo && !(*vo == *vr))) ++mismatches;
      const bool a = groupsig_detail::verify(gpk, et, m, *sig, R4Form::kOptimised);
      const bool b = groupsig_detail::verify(gpk, et, m, *sig, R4Form::kReference);
      if (a != b) ++mismatches;
      (a ? accepted : rejected)++;
    }
  }
  return {mismatches == 0 && accepted == 100 && rejected == 100,
          "100 honest + 100 tampered signatures: " + std::to_string(mismatches) +
              " disagreements in commitments, hash inputs or verdicts (" +
              std::to_string(accepted) + " accepted, " + std::to_string(rejected) +
              " rejected by both forms)"};
}

// 10
Verdict determinism() {
  std::size_t identical = 0, total = 0;
  for (sim::Scenario sc : {sim::Scenario::kIntersection, sim::Scenario::kCam}) {
    sim::SimConfig c;
    c.scenario = sc;
    c.vehicle_count = 5;
    c.duration_ms = 4000;
    c.event_slot_ms = 2000;
    c.cam_interval_ms = 200;
    c.drop_probability = 0.1;
    c.attacker = {1, 4};
    c.rng_seed = 1234;
    const std::string first = sim::run(c).report.to_text();
    for (int rep = 0; rep < 2; ++rep) {
      ++total;
      if (sim::run(c).report.to_text() == first) ++identical;
    }
  }
  return {identical == total,
          std::to_string(identical) + "/" + std::to_string(total) +
              " repeated runs byte-identical to the first (both scenarios)"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Verdict()> check;
  };
  const std::vector<Criterion> criteria = {
      {1, "correctness experiment", correctness},
      {2, "signature composition", composition},
      {3, "signature sizes", sizes},
      {4, "operation counts", op_counts},
      {5, "timing ratios", timing},
      {6, "offline precomputation", precompute},
      {7, "sybil detection", sybil},
      {8, "negative suites", negative},
      {9, "optimisation equivalence", optimisation_equivalence},
      {10, "simulator determinism", determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Verdict v;
    const auto t0 = Clock::now();
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::cout << (v.pass ? "PASS" : "FAIL") << "  [" << std::setw(2) << c.id << "] " << c.name
              << ": " << v.detail << "  (" << fmt(seconds_since(t0), 1) << " s)" << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed;
}
