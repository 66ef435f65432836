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

#include "aee/sim/simulator.hpp"

#include <sodium.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <optional>
#include <set>
#include <unordered_map>

#include "aee/enroll.hpp"
#include "aee/errors.hpp"
#include "aee/eventsig.hpp"
#include "aee/groupsig.hpp"
#include "aee/linktrace.hpp"
#include "aee/rng.hpp"
#include "aee/sim/profile.hpp"
#include "aee/wire.hpp"
#include "timestamp.hpp"

namespace aee::sim {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kMaxListedViolations = 20;

// -------------------------------------------------------------- helpers

std::uint64_t draw_u64(Rng& rng) {
  std::array<std::uint8_t, 8> b{};
  rng.fill(b);
  std::uint64_t v = 0;
  for (auto x : b) v = (v << 8) | x;
  return v;
}

std::uint64_t uniform(Rng& rng, std::uint64_t n) { return n == 0 ? 0 : draw_u64(rng) % n; }

bool bernoulli(Rng& rng, double p) {
  if (p <= 0.0) return false;
  return static_cast<double>(draw_u64(rng) >> 11) * 0x1.0p-53 < p;
}

Bytes text_bytes(const std::string& s) { return Bytes(s.begin(), s.end()); }

std::string token_key(const G1& t) {
  const auto c = t.compressed();
  return std::string(c.begin(), c.end());
}

template <class F>
auto timed(std::vector<double>& samples, F&& f) {
  const auto t0 = Clock::now();
  auto out = f();
  samples.push_back(std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
  return out;
}

// A signer in the run. Attackers hold one credential and claim several
// identities per event.
struct Party {
  std::string name;
  bool attacker = false;
  UserKeyPair keys;
  GroupSigningKey gsk;
  PairingContext ctx;
  SeededRng rng{0};
};

// Single FIFO processor with a 1 ms clock.
struct Processor {
  std::int64_t busy_until = 0;
  std::int64_t serve(std::int64_t arrival, std::int64_t service) {
    const std::int64_t start = std::max(arrival, busy_until);
    busy_until = start + service;
    return busy_until;
  }
};

// Per-event link table: token -> claimed identities and signature count.
struct TokenEntry {
  std::set<std::string> claims;
  std::set<std::string> signatures;
};
using LinkTable = std::map<std::string, std::map<std::string, TokenEntry>>;  // et -> token

class Run {
 public:
  explicit Run(const SimConfig& cfg)
      : cfg_(cfg),
        schedule_(EventSchedule::for_config(cfg)),
        profile_(profile_by_name(cfg.profile)),
        root_(cfg.rng_seed),
        channel_rng_(root_.fork(3)),
        schedule_rng_(root_.fork(4)) {
    cfg.validate();
    crypto_hash_sha256_init(&transcript_);
    const auto wall0 = Clock::now();
    setup();
    report_.config = cfg;
    report_.cost_profile = profile_.name;
    report_.slots = schedule_.slot_count();
    report_.vehicles = cfg.vehicle_count;
    report_.attackers = cfg.attacker.credentials;
    const auto sizes = wire::signature_sizes(bls12_381().widths);
    report_.group_signature_bytes = sizes.group_compressed;
    report_.group_signature_full_bytes = sizes.group_full;
    report_.event_signature_bytes = sizes.event_full;
    report_.rsu_signature_bytes = crypto_sign_BYTES;
    setup_ms_ = std::chrono::duration<double, std::milli>(Clock::now() - wall0).count();
  }

  SimResult intersection();
  SimResult cam();

 private:
  void setup();
  void emit(const Bytes& bytes) {
    crypto_hash_sha256_update(&transcript_, bytes.data(), bytes.size());
    ++messages_;
    message_bytes_ += bytes.size();
  }
  void charge(const std::string& op, const OpCounts& ops, bool accepted) {
    OpStats& s = report_.verification[op];
    ++s.count;
    if (!accepted) ++s.rejected;
    s.ops += ops;
  }
  void note_latency(const std::string& op, const OpCounts& ops) {
    if (!report_.modeled_latency_ms.contains(op)) {
      report_.modeled_latency_ms[op] = profile_.cost_ms(ops);
    }
  }
  void hot_path(std::int64_t at, const std::string& who, const std::string& op,
                std::int64_t latency) {
    ++report_.hot_path_operations;
    if (latency <= cfg_.processing_budget_ms) {
      ++report_.hot_path_within_budget;
    } else {
      violation(at, who, op, latency);
    }
  }
  void violation(std::int64_t at, const std::string& who, const std::string& op,
                 std::int64_t latency) {
    ++report_.budget_violation_count;
    if (report_.budget_violations.size() < kMaxListedViolations) {
      report_.budget_violations.push_back({at, who, op, latency});
    }
  }
  void record_token(const std::string& sender, const EventId& et, const G1& token,
                    const Bytes& sigma_bytes) {
    const std::string key = token_key(token);
    token_owner_[key] = sender;
    token_events_[key].insert(et.text());
    emitted_[{sender, et.text()}].tokens.insert(key);
    emitted_[{sender, et.text()}].signatures.insert(std::string(sigma_bytes.begin(),
                                                                sigma_bytes.end()));
  }
  void finish(const LinkTable& observed, SimResult& out);

  const SimConfig& cfg_;
  EventSchedule schedule_;
  CostProfile profile_;
  SeededRng root_;
  SeededRng channel_rng_;
  SeededRng schedule_rng_;
  GroupSetup group_{};
  RegistrationTable reg_;
  std::vector<Party> parties_;
  std::array<std::uint8_t, crypto_sign_PUBLICKEYBYTES> rsu_pk_{};
  std::array<std::uint8_t, crypto_sign_SECRETKEYBYTES> rsu_sk_{};

  SimReport report_;
  crypto_hash_sha256_state transcript_{};
  std::size_t messages_ = 0;
  std::size_t message_bytes_ = 0;
  double setup_ms_ = 0;
  std::map<std::string, std::vector<double>> samples_;

  std::map<std::string, std::string> token_owner_;
  std::map<std::string, std::set<std::string>> token_events_;
  struct Emitted {
    std::set<std::string> tokens;
    std::set<std::string> signatures;
  };
  std::map<std::pair<std::string, std::string>, Emitted> emitted_;
  std::set<std::pair<std::string, std::size_t>> attacker_slots_;  // (attacker, slot) active
};

void Run::setup() {
  SeededRng authority = root_.fork(1);
  group_ = gset(authority);

  SeededRng rsu_rng = root_.fork(2);
  std::array<std::uint8_t, crypto_sign_SEEDBYTES> seed{};
  rsu_rng.fill(seed);
  crypto_sign_seed_keypair(rsu_pk_.data(), rsu_sk_.data(), seed.data());

  const std::size_t total = cfg_.vehicle_count + cfg_.attacker.credentials;
  parties_.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    Party p;
    p.attacker = i >= cfg_.vehicle_count;
    p.name = p.attacker ? "attacker-" + std::to_string(i - cfg_.vehicle_count)
                        : "vehicle-" + std::to_string(i);
    p.rng = root_.fork(1000 + i);
    p.keys = ukg(p.rng, group_.gpk);
    const JoinRequest req = join_start(group_.gpk, p.keys, p.rng);
    const IssueResponse resp = issue(group_.gpk, group_.mik, reg_, p.name, req, authority);
    p.gsk = join_finish(group_.gpk, p.keys, resp);
    p.ctx = precompute_context(group_.gpk, p.gsk);
    parties_.push_back(std::move(p));
  }
}

void Run::finish(const LinkTable& observed, SimResult& out) {
  // Link table statistics and Sybil detection.
  std::set<std::string> tokens;
  for (const auto& [et, by_token] : observed) {
    for (const auto& [token, entry] : by_token) {
      tokens.insert(token);
      report_.max_identities_per_token =
          std::max(report_.max_identities_per_token, entry.claims.size());
      if (entry.claims.size() < 2) continue;
      SybilDetection d;
      d.event = et;
      d.sender = token_owner_.at(token);
      d.sender_is_attacker = d.sender.rfind("attacker-", 0) == 0;
      d.claimed_identities = entry.claims.size();
      d.linked_signatures = entry.signatures.size();
      if (!d.sender_is_attacker) ++report_.honest_flagged;
      report_.detections.push_back(std::move(d));
    }
  }
  report_.distinct_tokens = tokens.size();
  for (const auto& [token, events] : token_events_) {
    if (events.size() > 1) ++report_.cross_event_token_collisions;
  }
  std::sort(report_.detections.begin(), report_.detections.end(),
            [](const SybilDetection& a, const SybilDetection& b) {
              return std::tie(a.event, a.sender) < std::tie(b.event, b.sender);
            });

  if (cfg_.attacker.identities >= 2) {
    report_.attacker_events = attacker_slots_.size();
    for (const auto& [who, slot] : attacker_slots_) {
      const std::string et = schedule_.event(slot).text();
      const bool hit = std::any_of(
          report_.detections.begin(), report_.detections.end(),
          [&](const SybilDetection& d) { return d.event == et && d.sender == who; });
      if (hit) ++report_.attacker_events_detected;
    }
  }

  for (const auto& [key, e] : emitted_) {
    if (key.first.rfind("vehicle-", 0) != 0) continue;
    if (e.tokens.size() > 1) ++report_.one_token_violations;
    report_.max_group_signatures_per_vehicle_event =
        std::max(report_.max_group_signatures_per_vehicle_event, e.signatures.size());
  }

  report_.mean_message_bytes = messages_ == 0 ? 0 : message_bytes_ / messages_;
  std::array<std::uint8_t, crypto_hash_sha256_BYTES> digest{};
  crypto_hash_sha256_final(&transcript_, digest.data());
  report_.transcript_sha256 = wire::to_hex(digest);

  out.report = std::move(report_);
  for (auto& [op, s] : samples_) out.timing.median_ms[op] = median(std::move(s));
}

// ------------------------------------------------------- intersection

SimResult Run::intersection() {
  const auto wall0 = Clock::now();
  SimResult out;
  LinkTable observed;
  Processor controller;
  const GroupPublicKey& gpk = group_.gpk;

  struct Tx {
    std::int64_t t;
    std::size_t seq;
    std::size_t party;
    std::string claim;
    EventId et;
    Bytes m;
    bool is_group;
    GroupSignature sigma;
    EventSignature es;
    G1 token;
  };

  for (std::size_t slot = 0; slot < schedule_.slot_count(); ++slot) {
    const EventId et = schedule_.event(slot);
    const std::int64_t t0 = schedule_.slot_start_ms(slot);
    const std::int64_t t_end =
        std::min(cfg_.duration_ms, schedule_.slot_start_ms(slot + 1));

    // RSU announces the event; it needs no privacy so a plain signature does.
    const Bytes announce = text_bytes("announce|" + et.text());
    std::array<std::uint8_t, crypto_sign_BYTES> rsu_sig{};
    crypto_sign_detached(rsu_sig.data(), nullptr, announce.data(), announce.size(),
                         rsu_sk_.data());
    emit(announce);
    ++report_.rsu_messages_sent;

    std::vector<Tx> txs;
    std::size_t seq = 0;
    for (std::size_t pi = 0; pi < parties_.size(); ++pi) {
      Party& p = parties_[pi];
      if (!p.attacker && !bernoulli(schedule_rng_, cfg_.presence)) continue;
      const std::int64_t span = std::max<std::int64_t>(1, (t_end - t0) / 2);
      const std::int64_t enter = t0 + static_cast<std::int64_t>(uniform(schedule_rng_, span));
      if (crypto_sign_verify_detached(rsu_sig.data(), announce.data(), announce.size(),
                                      rsu_pk_.data()) != 0) {
        ++report_.rsu_signature_failures;
      }
      const std::size_t claims = p.attacker ? cfg_.attacker.identities : 1;
      if (p.attacker) attacker_slots_.insert({p.name, slot});
      for (std::size_t c = 0; c < claims; ++c) {
        const std::string claim = p.attacker
                                      ? p.name + "/claim-" + std::to_string(c)
                                      : p.name + "/slot-" + std::to_string(slot);
        Tx g{enter, seq++, pi, claim, et, text_bytes("enter|" + claim), true, {}, {}, {}};
        OpCounts ops;
        g.sigma = timed(samples_["GSign"], [&] {
          CountingSession s;
          auto sig = gsign(gpk, p.gsk, p.ctx, et, g.m, p.rng);
          ops = s.counts();
          return sig;
        });
        note_latency("GSign", ops);
        g.token = g.sigma.T;
        record_token(p.name, et, g.sigma.T, wire::encode_group_signature(g.sigma,
                                                                          PointFormat::kCompressed));
        const EventPublicKey epk = epk_from_signature(gpk, et, g.sigma);
        txs.push_back(g);
        std::size_t n = 0;
        for (std::int64_t t = enter + cfg_.cam_interval_ms; t < t_end;
             t += cfg_.cam_interval_ms) {
          Tx s{t, seq++, pi, claim, et, text_bytes("status|" + claim + "|" + std::to_string(n++)),
               false, {}, {}, g.token};
          OpCounts eops;
          s.es = timed(samples_["ESign"], [&] {
            CountingSession cs;
            auto sig = esign(p.keys.usk, et, epk, s.m, p.rng);
            eops = cs.counts();
            return sig;
          });
          note_latency("ESign", eops);
          report_.hot_path_ops += eops;
          hot_path(t, p.name, "ESign", profile_.cost_ticks(eops));
          txs.push_back(std::move(s));
        }
      }
    }
    std::sort(txs.begin(), txs.end(), [](const Tx& a, const Tx& b) {
      return std::tie(a.t, a.seq) < std::tie(b.t, b.seq);
    });

    // Controller side: one receiver, FIFO service.
    std::map<std::string, EventPublicKey> epks;
    std::size_t order = 0;
    for (const Tx& tx : txs) {
      Bytes wire_msg = tx.m;
      if (tx.is_group) {
        const Bytes sb = wire::encode_group_signature(tx.sigma, PointFormat::kCompressed);
        wire_msg.insert(wire_msg.end(), sb.begin(), sb.end());
        ++report_.group_signatures_sent;
      } else {
        const auto tk = tx.token.compressed();
        wire_msg.insert(wire_msg.end(), tk.begin(), tk.end());
        const Bytes eb = wire::encode_event_signature(tx.es);
        wire_msg.insert(wire_msg.end(), eb.begin(), eb.end());
        ++report_.event_messages_sent;
      }
      emit(wire_msg);
      if (bernoulli(channel_rng_, cfg_.drop_probability)) {
        ++report_.dropped;
        continue;
      }
      ++report_.deliveries;

      if (tx.is_group) {
        OpCounts ops;
        const bool ok = timed(samples_["GVer"], [&] {
          CountingSession s;
          const bool v = gver(gpk, tx.et, tx.m, tx.sigma);
          ops = s.counts();
          return v;
        });
        note_latency("GVer", ops);
        charge("GVer", ops, ok);
        const std::int64_t done = controller.serve(tx.t, profile_.cost_ticks(ops));
        if (done - tx.t > cfg_.processing_budget_ms) violation(tx.t, "rsu", "GVer", done - tx.t);
        if (!ok) continue;
        const std::string key = token_key(tx.sigma.T);
        epks.emplace(key, epk_from_signature(gpk, tx.et, tx.sigma));
        TokenEntry& entry = observed[tx.et.text()][key];
        entry.claims.insert(tx.claim);
        entry.signatures.insert(std::string(tx.m.begin(), tx.m.end()));
        // FIFO passage order, addressed to the token.
        const Bytes assign = text_bytes("assign|" + wire::to_hex(tx.sigma.T.compressed()).substr(0, 16) +
                                        "|" + std::to_string(++order));
        std::array<std::uint8_t, crypto_sign_BYTES> sig{};
        crypto_sign_detached(sig.data(), nullptr, assign.data(), assign.size(), rsu_sk_.data());
        emit(assign);
        ++report_.rsu_messages_sent;
        if (crypto_sign_verify_detached(sig.data(), assign.data(), assign.size(),
                                        rsu_pk_.data()) != 0) {
          ++report_.rsu_signature_failures;
        }
      } else {
        const auto it = epks.find(token_key(tx.token));
        if (it == epks.end()) {
          ++report_.unverifiable_without_epk;
          continue;
        }
        OpCounts ops;
        const bool ok = timed(samples_["EVer"], [&] {
          CountingSession s;
          const bool v = ever(tx.et, it->second, tx.m, tx.es);
          ops = s.counts();
          return v;
        });
        note_latency("EVer", ops);
        charge("EVer", ops, ok);
        report_.hot_path_ops += ops;
        const std::int64_t done = controller.serve(tx.t, profile_.cost_ticks(ops));
        hot_path(tx.t, "rsu", "EVer", done - tx.t);
      }
    }
  }

  finish(observed, out);
  out.timing.wall_ms =
      setup_ms_ + std::chrono::duration<double, std::milli>(Clock::now() - wall0).count();
  return out;
}

// ---------------------------------------------------------------- CAM

SimResult Run::cam() {
  const auto wall0 = Clock::now();
  SimResult out;
  const GroupPublicKey& gpk = group_.gpk;

  // Offline phase: every slot's group signature exists before t = 0.
  const std::int64_t horizon = std::max(cfg_.duration_ms, cfg_.precompute_horizon_ms);
  const std::size_t horizon_slots =
      static_cast<std::size_t>((horizon + cfg_.event_slot_ms - 1) / cfg_.event_slot_ms);
  std::vector<EventId> events;
  for (std::size_t s = 0; s < horizon_slots; ++s) events.push_back(schedule_.event(s));

  // signed[party][slot][claim]
  std::vector<std::vector<std::vector<GroupSignature>>> presigned(parties_.size());
  const auto pre0 = Clock::now();
  for (std::size_t pi = 0; pi < parties_.size(); ++pi) {
    Party& p = parties_[pi];
    presigned[pi].resize(horizon_slots);
    if (!p.attacker) {
      const auto sched = precompute_event_schedule(gpk, p.gsk, p.ctx, events, p.rng);
      for (std::size_t s = 0; s < horizon_slots; ++s) presigned[pi][s].push_back(sched[s].sigma);
      report_.precomputed_signatures += sched.size();
    } else {
      // One credential, many claimed station ids: one signature per claim.
      for (std::size_t s = 0; s < std::min(horizon_slots, schedule_.slot_count()); ++s) {
        for (std::size_t c = 0; c < cfg_.attacker.identities; ++c) {
          presigned[pi][s].push_back(gsign(gpk, p.gsk, p.ctx, events[s], {}, p.rng));
          ++report_.precomputed_signatures;
        }
      }
    }
  }
  out.timing.precompute_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - pre0).count();
  for (std::size_t pi = 0; pi < parties_.size(); ++pi) {
    for (std::size_t s = 0; s < presigned[pi].size(); ++s) {
      for (const GroupSignature& sg : presigned[pi][s]) {
        record_token(parties_[pi].name, events[s], sg.T,
                     wire::encode_group_signature(sg, PointFormat::kCompressed));
      }
    }
  }
  {
    // Modeled cost of the offline signatures, for the latency table.
    CountingSession s;
    (void)gsign(gpk, parties_.front().gsk, parties_.front().ctx, events.front(), {},
                parties_.front().rng);
    note_latency("GSign", s.counts());
  }

  struct Cam {
    std::int64_t t;
    std::size_t seq;
    std::size_t party;
    std::size_t slot;
    std::size_t claim;
    std::string station;
    Bytes m;
    EventSignature es;
    bool carries_sigma;
    Bytes wire_msg;
  };
  std::vector<Cam> cams;
  std::size_t seq = 0;
  for (std::size_t pi = 0; pi < parties_.size(); ++pi) {
    Party& p = parties_[pi];
    const std::size_t claims = p.attacker ? cfg_.attacker.identities : 1;
    const std::int64_t phase =
        static_cast<std::int64_t>(uniform(schedule_rng_, static_cast<std::uint64_t>(cfg_.cam_interval_ms)));
    for (std::size_t c = 0; c < claims; ++c) {
      std::map<std::size_t, std::size_t> per_slot;  // slot -> CAMs sent so far
      std::size_t n = 0;
      for (std::int64_t t = phase; t < cfg_.duration_ms; t += cfg_.cam_interval_ms, ++n) {
        const std::size_t slot = schedule_.slot_at(t);
        if (p.attacker && cfg_.attacker.identities >= 2) attacker_slots_.insert({p.name, slot});
        const GroupSignature& sg = presigned[pi][slot][c];
        const EventId& et = events[slot];
        const std::string station =
            p.attacker ? p.name + "/station-" + std::to_string(c)
                       : p.name + "/slot-" + std::to_string(slot);
        Cam cam{t, seq++, pi, slot, c, station,
                text_bytes("cam|" + station + "|" + std::to_string(n)), {}, false, {}};
        const std::size_t k = per_slot[slot]++;
        cam.carries_sigma = k == 0 || k % cfg_.rebroadcast_every == 0;
        const EventPublicKey epk = epk_from_signature(gpk, et, sg);
        OpCounts ops;
        cam.es = timed(samples_["ESign"], [&] {
          CountingSession s;
          auto sig = esign(p.keys.usk, et, epk, cam.m, p.rng);
          ops = s.counts();
          return sig;
        });
        note_latency("ESign", ops);
        report_.hot_path_ops += ops;
        hot_path(t, p.name, "ESign", profile_.cost_ticks(ops));

        cam.wire_msg = cam.m;
        const auto tk = sg.T.compressed();
        cam.wire_msg.insert(cam.wire_msg.end(), tk.begin(), tk.end());
        const Bytes eb = wire::encode_event_signature(cam.es);
        cam.wire_msg.insert(cam.wire_msg.end(), eb.begin(), eb.end());
        if (cam.carries_sigma) {
          cam.wire_msg.insert(cam.wire_msg.end(), et.bytes().begin(), et.bytes().end());
          const Bytes sb = wire::encode_group_signature(sg, PointFormat::kCompressed);
          cam.wire_msg.insert(cam.wire_msg.end(), sb.begin(), sb.end());
          ++report_.group_signatures_sent;
          if (k != 0) ++report_.group_signature_rebroadcasts;
        }
        cams.push_back(std::move(cam));
      }
    }
  }
  std::sort(cams.begin(), cams.end(), [](const Cam& a, const Cam& b) {
    return std::tie(a.t, a.seq) < std::tie(b.t, b.seq);
  });

  // Receivers are the honest vehicles. Verdicts are pure functions of the
  // message, so each is computed once and charged to every receiver.
  std::vector<std::size_t> receivers;
  for (std::size_t pi = 0; pi < parties_.size(); ++pi) {
    if (!parties_[pi].attacker) receivers.push_back(pi);
  }
  std::vector<Processor> cpu(parties_.size());
  std::vector<std::set<std::string>> known(parties_.size());  // et|token with verified epk
  std::vector<std::set<std::string>> verified_sigs(parties_.size());
  std::vector<LinkTable> views(parties_.size());
  std::unordered_map<std::string, std::pair<bool, OpCounts>> gver_cache;

  for (const Cam& cam : cams) {
    emit(cam.wire_msg);
    ++report_.event_messages_sent;
    const GroupSignature& sg = presigned[cam.party][cam.slot][cam.claim];
    const EventId& et = events[cam.slot];
    const std::string key = et.text() + "|" + token_key(sg.T);
    std::optional<std::pair<bool, OpCounts>> ever_verdict;

    for (std::size_t r : receivers) {
      if (r == cam.party) continue;
      if (bernoulli(channel_rng_, cfg_.drop_probability)) {
        ++report_.dropped;
        continue;
      }
      ++report_.deliveries;
      std::int64_t arrival = cam.t;
      const std::string sk = std::to_string(cam.party) + "/" + std::to_string(cam.slot) + "/" +
                             std::to_string(cam.claim);
      if (cam.carries_sigma && !verified_sigs[r].contains(sk)) {
        auto it = gver_cache.find(sk);
        if (it == gver_cache.end()) {
          OpCounts ops;
          const bool ok = timed(samples_["GVer"], [&] {
            CountingSession s;
            const bool v = gver(gpk, et, {}, sg);
            ops = s.counts();
            return v;
          });
          note_latency("GVer", ops);
          it = gver_cache.emplace(sk, std::make_pair(ok, ops)).first;
        }
        charge("GVer", it->second.second, it->second.first);
        const std::int64_t done = cpu[r].serve(arrival, profile_.cost_ticks(it->second.second));
        if (done - arrival > cfg_.processing_budget_ms) {
          violation(arrival, parties_[r].name, "GVer", done - arrival);
        }
        if (it->second.first) {
          known[r].insert(key);
          verified_sigs[r].insert(sk);
          views[r][et.text()][token_key(sg.T)].signatures.insert(sk);
        }
      }
      if (!known[r].contains(key)) {
        ++report_.unverifiable_without_epk;
        continue;
      }
      if (!ever_verdict) {
        const EventPublicKey epk = epk_from_signature(gpk, et, sg);
        OpCounts ops;
        const bool ok = timed(samples_["EVer"], [&] {
          CountingSession s;
          const bool v = ever(et, epk, cam.m, cam.es);
          ops = s.counts();
          return v;
        });
        note_latency("EVer", ops);
        ever_verdict = std::make_pair(ok, ops);
      }
      charge("EVer", ever_verdict->second, ever_verdict->first);
      report_.hot_path_ops += ever_verdict->second;
      const std::int64_t done = cpu[r].serve(arrival, profile_.cost_ticks(ever_verdict->second));
      hot_path(arrival, parties_[r].name, "EVer", done - arrival);
      if (ever_verdict->first) views[r][et.text()][token_key(sg.T)].claims.insert(cam.station);
    }
  }

  // Merge receiver views: a token is flagged if any receiver saw it claim two ids.
  LinkTable merged;
  for (std::size_t r : receivers) {
    for (const auto& [et, by_token] : views[r]) {
      for (const auto& [token, entry] : by_token) {
        TokenEntry& m = merged[et][token];
        m.claims.insert(entry.claims.begin(), entry.claims.end());
        m.signatures.insert(entry.signatures.begin(), entry.signatures.end());
      }
    }
  }
  finish(merged, out);
  out.timing.wall_ms =
      setup_ms_ + std::chrono::duration<double, std::milli>(Clock::now() - wall0).count();
  return out;
}

}  // namespace

// -------------------------------------------------------- EventSchedule

EventSchedule EventSchedule::for_config(const SimConfig& cfg) {
  cfg.validate();
  EventSchedule s;
  s.mode_ = cfg.scenario == Scenario::kIntersection ? Mode::kRsuGenerated : Mode::kTimeslot;
  s.location_ = cfg.location;
  s.start_epoch_s_ = detail::parse_minute_stamp(cfg.start_time);
  s.slot_ms_ = cfg.event_slot_ms;
  s.slots_ = static_cast<std::size_t>((cfg.duration_ms + cfg.event_slot_ms - 1) / cfg.event_slot_ms);
  // Minute labels collide for sub-minute slots, so those carry seconds too.
  s.with_seconds_ = s.mode_ == Mode::kRsuGenerated || cfg.event_slot_ms % 60'000 != 0;
  return s;
}

std::int64_t EventSchedule::slot_start_ms(std::size_t slot) const {
  return static_cast<std::int64_t>(slot) * slot_ms_;
}

std::size_t EventSchedule::slot_at(std::int64_t t_ms) const {
  return static_cast<std::size_t>(t_ms / slot_ms_);
}

EventId EventSchedule::event(std::size_t slot) const {
  const std::int64_t at = start_epoch_s_ + static_cast<std::int64_t>(slot) * (slot_ms_ / 1000);
  const std::string stamp = detail::format_stamp(at, with_seconds_);
  return EventId(mode_ == Mode::kRsuGenerated ? location_ + "||" + stamp : stamp);
}

// ------------------------------------------------------------ entry points

SimResult run_intersection(const SimConfig& cfg) {
  if (cfg.scenario != Scenario::kIntersection) {
    throw ConfigError("run_intersection: config scenario is " +
                      std::string(scenario_name(cfg.scenario)));
  }
  return Run(cfg).intersection();
}

SimResult run_cam(const SimConfig& cfg) {
  if (cfg.scenario != Scenario::kCam) {
    throw ConfigError("run_cam: config scenario is " + std::string(scenario_name(cfg.scenario)));
  }
  return Run(cfg).cam();
}

SimResult run(const SimConfig& cfg) {
  return cfg.scenario == Scenario::kIntersection ? run_intersection(cfg) : run_cam(cfg);
}

PrecomputeReport offline_precompute_report(std::size_t slots, std::uint64_t seed,
                                           std::size_t calibration_samples) {
  if (slots == 0) throw ConfigError("precompute: slots must be at least 1");
  SeededRng rng(seed);
  const GroupSetup setup = gset(rng);
  RegistrationTable reg;
  const UserKeyPair keys = ukg(rng, setup.gpk);
  const JoinRequest req = join_start(setup.gpk, keys, rng);
  const GroupSigningKey gsk =
      join_finish(setup.gpk, keys, issue(setup.gpk, setup.mik, reg, "precompute", req, rng));
  const PairingContext ctx = precompute_context(setup.gpk, gsk);

  SimConfig cfg;
  cfg.scenario = Scenario::kCam;
  cfg.event_slot_ms = 600'000;
  cfg.duration_ms = static_cast<std::int64_t>(slots) * cfg.event_slot_ms;
  const EventSchedule schedule = EventSchedule::for_config(cfg);
  std::vector<EventId> events;
  for (std::size_t s = 0; s < slots; ++s) events.push_back(schedule.event(s));

  // Per-signature median on the same host, sampled on both sides of the
  // timed run after a short warm-up.
  std::vector<double> samples;
  const EventId probe("calibration");
  const std::size_t half = std::max<std::size_t>(calibration_samples / 2, 1);
  auto calibrate = [&](std::vector<double>* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      timed(*out, [&] { return gsign(setup.gpk, gsk, ctx, probe, {}, rng); });
    }
  };
  std::vector<double> warmup;
  calibrate(&warmup, 8);
  calibrate(&samples, half);

  PrecomputeReport r;
  r.slots = slots;
  const auto t0 = Clock::now();
  const auto sched = precompute_event_schedule(setup.gpk, gsk, ctx, events, rng);
  r.total_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  calibrate(&samples, half);
  r.median_gsign_ms = median(samples);
  r.mean_ms = r.total_ms / static_cast<double>(slots);
  r.ratio = r.total_ms / (static_cast<double>(slots) * r.median_gsign_ms);
  for (const ScheduledSignature& s : sched) {
    if (gver(setup.gpk, s.et, {}, s.sigma)) ++r.valid;
  }
  return r;
}

}  // namespace aee::sim
