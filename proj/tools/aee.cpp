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

// aee: command-line front end for the AEE library.
//
// Exit status: 0 success or accept, 1 reject, 2 operational error.

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aee/algebra.hpp"
#include "aee/enroll.hpp"
#include "aee/errors.hpp"
#include "aee/eventsig.hpp"
#include "aee/groupsig.hpp"
#include "aee/keys.hpp"
#include "aee/linktrace.hpp"
#include "aee/rng.hpp"
#include "aee/sim/profile.hpp"
#include "aee/sim/simulator.hpp"
#include "aee/wire.hpp"

namespace fs = std::filesystem;
using namespace aee;

namespace {

constexpr int kAccept = 0;
constexpr int kReject = 1;
constexpr int kError = 2;

struct Options {
  std::string gpk, mik, mok, gsk, usk, reg, et, msg, sig, proof, out, mode = "hex";
  std::string in, id, epk, epk_out, esig, config, csv, start, scenario;
  std::vector<std::string> sigs, ets, msgs;
  std::size_t iters = 1000, members = 10'000, slots = 0, slot_seconds = 600;
  bool timing = false;
#ifdef AEE_CLI_TEST_SEED
  std::optional<std::uint64_t> seed;
#endif
};

// ------------------------------------------------------------------ I/O

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StorageError("cannot open " + path);
  return Bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

// Artifacts are accepted in either mode: text made only of hex digits and
// whitespace is hex, anything else raw.
Bytes read_artifact(const std::string& path, const char* flag) {
  if (path.empty()) throw ConfigError(std::string("missing --") + flag);
  const Bytes raw = read_file(path);
  const bool hex = !raw.empty() && std::all_of(raw.begin(), raw.end(), [](std::uint8_t c) {
    return std::isxdigit(c) || std::isspace(c);
  });
  if (!hex) return raw;
  return wire::from_hex(std::string_view(reinterpret_cast<const char*>(raw.data()), raw.size()));
}

template <class T>
T load(const std::string& path, const char* flag) {
  return wire::decode<T>(read_artifact(path, flag));
}

void write_bytes(const std::string& path, const Bytes& data) {
  const fs::path p(path);
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw StorageError("cannot open " + tmp.string() + " for writing");
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!out) throw StorageError("write to " + tmp.string() + " failed");
  }
  fs::rename(tmp, p);
}

void emit_artifact(const Options& o, const std::string& path, const Bytes& framed) {
  const bool hex = o.mode == "hex";
  if (path.empty() || path == "-") {
    if (hex) {
      std::cout << wire::to_hex(framed) << '\n';
    } else {
      std::cout.write(reinterpret_cast<const char*>(framed.data()),
                      static_cast<std::streamsize>(framed.size()));
    }
    return;
  }
  if (hex) {
    const std::string h = wire::to_hex(framed) + "\n";
    write_bytes(path, Bytes(h.begin(), h.end()));
  } else {
    write_bytes(path, framed);
  }
}

// --msg takes literal text, or @path for file contents.
Bytes message(const std::string& m) {
  if (!m.empty() && m.front() == '@') return read_file(m.substr(1));
  return Bytes(m.begin(), m.end());
}

EventId event(const Options& o) {
  if (o.et.empty()) throw ConfigError("missing --et");
  return EventId(o.et);
}

std::unique_ptr<Rng> make_rng([[maybe_unused]] const Options& o) {
#ifdef AEE_CLI_TEST_SEED
  if (o.seed) return std::make_unique<SeededRng>(*o.seed);
#endif
  return std::make_unique<SystemRng>();
}

// Advisory lock on <registry>.lock for the duration of a command.
class RegistryLock {
 public:
  RegistryLock(const std::string& reg, bool exclusive) {
    const std::string path = reg + ".lock";
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0) throw StorageError("cannot open lock file " + path);
    if (::flock(fd_, exclusive ? LOCK_EX : LOCK_SH) != 0) {
      ::close(fd_);
      throw StorageError("cannot lock " + path);
    }
  }
  ~RegistryLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  RegistryLock(const RegistryLock&) = delete;
  RegistryLock& operator=(const RegistryLock&) = delete;

 private:
  int fd_ = -1;
};

GroupSigningKey signing_key(const Options& o) { return load<GroupSigningKey>(o.gsk, "gsk"); }

Scalar user_secret(const Options& o) {
  if (!o.usk.empty()) return load<UserKeyPair>(o.usk, "usk").usk;
  if (!o.gsk.empty()) return signing_key(o).y;
  throw ConfigError("missing --usk (or --gsk)");
}

int verdict(bool accepted) {
  std::cout << (accepted ? "accept" : "reject") << '\n';
  return accepted ? kAccept : kReject;
}

// A signature or proof that does not even decode is a reject, not an
// operational error.
struct Malformed {
  std::string what;
};

template <class T>
T load_presented(const std::string& path, const char* flag) {
  const Bytes raw = read_artifact(path, flag);
  try {
    return wire::decode<T>(raw);
  } catch (const DecodeError& e) {
    throw Malformed{std::string("--") + flag + ": " + e.what()};
  }
}

// ------------------------------------------------------------- commands

int cmd_setup(const Options& o) {
  if (o.gpk.empty() || o.mik.empty() || o.mok.empty()) {
    throw ConfigError("setup needs --gpk, --mik and --mok output paths");
  }
  auto rng = make_rng(o);
  const GroupSetup s = gset(*rng);
  emit_artifact(o, o.gpk, wire::encode(s.gpk));
  emit_artifact(o, o.mik, wire::encode(s.mik));
  emit_artifact(o, o.mok, wire::encode(s.mok));
  if (!o.reg.empty()) {
    RegistryLock lock(o.reg, true);
    RegistrationTable{}.save_file(o.reg);
  }
  return kAccept;
}

int cmd_ukg(const Options& o) {
  auto rng = make_rng(o);
  const GroupPublicKey gpk = load<GroupPublicKey>(o.gpk, "gpk");
  emit_artifact(o, o.usk.empty() ? o.out : o.usk, wire::encode(ukg(*rng, gpk)));
  return kAccept;
}

int cmd_join_start(const Options& o) {
  auto rng = make_rng(o);
  const GroupPublicKey gpk = load<GroupPublicKey>(o.gpk, "gpk");
  const UserKeyPair keys = load<UserKeyPair>(o.usk, "usk");
  emit_artifact(o, o.out, wire::encode(join_start(gpk, keys, *rng)));
  return kAccept;
}

int cmd_issue(const Options& o) {
  if (o.reg.empty()) throw ConfigError("missing --reg");
  if (o.id.empty()) throw ConfigError("missing --id");
  auto rng = make_rng(o);
  const GroupPublicKey gpk = load<GroupPublicKey>(o.gpk, "gpk");
  const MasterIssuingKey mik = load<MasterIssuingKey>(o.mik, "mik");
  const JoinRequest req = load<JoinRequest>(o.in, "in");
  RegistryLock lock(o.reg, true);
  RegistrationTable reg = fs::exists(o.reg) ? RegistrationTable::load_file(o.reg)
                                            : RegistrationTable{};
  IssueResponse resp;
  try {
    resp = issue(gpk, mik, reg, o.id, req, *rng);
  } catch (const ProtocolError& e) {
    std::cerr << "aee: " << e.what() << '\n';
    return verdict(false);
  }
  reg.save_file(o.reg);
  emit_artifact(o, o.out, wire::encode(resp));
  return kAccept;
}

int cmd_join_finish(const Options& o) {
  const GroupPublicKey gpk = load<GroupPublicKey>(o.gpk, "gpk");
  const UserKeyPair keys = load<UserKeyPair>(o.usk, "usk");
  const IssueResponse resp = load<IssueResponse>(o.in, "in");
  GroupSigningKey gsk;
  try {
    gsk = join_finish(gpk, keys, resp);
  } catch (const ProtocolError& e) {
    std::cerr << "aee: " << e.what() << '\n';
    return verdict(false);
  }
  emit_artifact(o, o.gsk.empty() ? o.out : o.gsk, wire::encode(gsk));
  return kAccept;
}

int cmd_gsign(const Options& o) {
  auto rng = make_rng(o);
  const GroupPublicKey gpk = load<GroupPublicKey>(o.gpk, "gpk");
  const GroupSignature sigma = gsign(gpk, signing_key(o), event(o), message(o.msg), *rng);
  emit_artifact(o, o.out, wire::encode(sigma));
  return kAccept;
}

int cmd_gver(const Options& o) {
  const GroupPublicKey gpk = load<GroupPublicKey>(o.gpk, "gpk");
  const EventId et = event(o);
  const GroupSignature sigma = load_presented<GroupSignature>(o.sig, "sig");
  const bool ok = gver(gpk, et, message(o.msg), sigma);
  if (ok && !o.epk_out.empty()) {
    emit_artifact(o, o.epk_out, wire::encode(epk_from_signature(gpk, et, sigma)));
  }
  return verdict(ok);
}

EventPublicKey event_key(const Options& o, const EventId& et) {
  if (!o.epk.empty()) return load<EventPublicKey>(o.epk, "epk");
  const GroupPublicKey gpk = load<GroupPublicKey>(o.gpk, "gpk");
  return epk_from_signature(gpk, et, load<GroupSignature>(o.sig, "sig"));
}

int cmd_esign(const Options& o) {
  auto rng = make_rng(o);
  const EventId et = event(o);
  const EventSignature es = esign(user_secret(o), et, event_key(o, et), message(o.msg), *rng);
  emit_artifact(o, o.out, wire::encode(es));
  return kAccept;
}

int cmd_ever(const Options& o) {
  const EventId et = event(o);
  const EventSignature es = load_presented<EventSignature>(o.esig, "esig");
  return verdict(ever(et, event_key(o, et), message(o.msg), es));
}

int cmd_link(const Options& o) {
  if (o.sigs.size() != 2) throw ConfigError("link needs exactly two --sig files");
  const EventId et = event(o);
  const GroupSignature s0 = load<GroupSignature>(o.sigs[0], "sig");
  const GroupSignature s1 = load<GroupSignature>(o.sigs[1], "sig");
  const Bytes m0 = o.msgs.size() > 0 ? message(o.msgs[0]) : Bytes{};
  const Bytes m1 = o.msgs.size() > 1 ? message(o.msgs[1]) : Bytes{};
  const bool linked = link(et, m0, s0, m1, s1);
  std::cout << (linked ? "linked" : "not-linked") << '\n';
  return linked ? kAccept : kReject;
}

int cmd_open(const Options& o) {
  if (o.reg.empty()) throw ConfigError("missing --reg");
  auto rng = make_rng(o);
  const GroupPublicKey gpk = load<GroupPublicKey>(o.gpk, "gpk");
  const MasterOpeningKey mok = load<MasterOpeningKey>(o.mok, "mok");
  const EventId et = event(o);
  const GroupSignature sigma = load<GroupSignature>(o.sig, "sig");
  std::optional<Opening> opening;
  {
    RegistryLock lock(o.reg, false);
    const RegistrationTable reg = RegistrationTable::load_file(o.reg);
    try {
      opening = open(gpk, mok, reg, et, message(o.msg), sigma, *rng);
    } catch (const ProtocolError& e) {
      std::cerr << "aee: " << e.what() << '\n';
      return verdict(false);
    }
  }
  if (!opening) {
    std::cout << "untraceable\n";
    return kReject;
  }
  std::cout << opening->member << '\n';
  if (!o.proof.empty() || !o.out.empty()) {
    emit_artifact(o, o.proof.empty() ? o.out : o.proof, wire::encode(opening->proof));
  }
  return kAccept;
}

int cmd_judge(const Options& o) {
  if (o.reg.empty()) throw ConfigError("missing --reg");
  if (o.id.empty()) throw ConfigError("missing --id");
  const GroupPublicKey gpk = load<GroupPublicKey>(o.gpk, "gpk");
  const GroupSignature sigma = load_presented<GroupSignature>(o.sig, "sig");
  const TracingProof proof = load_presented<TracingProof>(o.proof, "proof");
  G1 upk;
  {
    RegistryLock lock(o.reg, false);
    const RegistrationTable reg = RegistrationTable::load_file(o.reg);
    const auto* row = reg.find(o.id);
    if (row == nullptr) throw ConfigError("member '" + o.id + "' is not in the registry");
    upk = row->upk;
  }
  return verdict(judge(gpk, o.id, upk, sigma, proof));
}

int cmd_precompute(const Options& o) {
  auto rng = make_rng(o);
  const GroupPublicKey gpk = load<GroupPublicKey>(o.gpk, "gpk");
  const GroupSigningKey gsk = signing_key(o);
  std::vector<EventId> events;
  for (const std::string& e : o.ets) events.emplace_back(e);
  if (o.slots > 0) {
    if (o.slot_seconds == 0) throw ConfigError("--slot-seconds must be positive");
    sim::SimConfig cfg;
    cfg.scenario = sim::Scenario::kCam;
    if (!o.start.empty()) cfg.start_time = o.start;
    cfg.event_slot_ms = static_cast<std::int64_t>(o.slot_seconds) * 1000;
    cfg.duration_ms = cfg.event_slot_ms * static_cast<std::int64_t>(o.slots);
    const auto schedule = sim::EventSchedule::for_config(cfg);
    for (std::size_t s = 0; s < o.slots; ++s) events.push_back(schedule.event(s));
  }
  if (events.empty()) throw ConfigError("precompute needs --et values or --slots");
  const auto sched =
      precompute_event_schedule(gpk, gsk, precompute_context(gpk, gsk), events, *rng);
  emit_artifact(o, o.out, wire::encode(std::span<const ScheduledSignature>(sched)));
  std::cerr << "precomputed " << sched.size() << " signatures\n";
  return kAccept;
}

std::string ops_cell(const OpCounts& c) {
  std::ostringstream os;
  os << c.mul_g1 << "/" << c.exp_g1 << "/" << c.mul_gt << "/" << c.exp_gt << "/" << c.pairings;
  return os.str();
}

int cmd_bench(const Options& o) {
  if (o.iters < 100) throw ConfigError("--iters must be at least 100");
  sim::TimingOptions t;
  t.iterations = o.iters;
  t.members = o.members;
  const auto rows = sim::measure_timing(t);
  const auto ref = sim::reference_op_counts();
  const OpCounts* expected[] = {&ref.gsign, &ref.gver, &ref.esign, &ref.ever};

  std::cout << "operation  median_ms   ops(mulG1/expG1/mulGT/expGT/pair)  reference        match\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    std::cout << std::left << std::setw(10) << r.op << ' ' << std::right << std::setw(10)
              << std::fixed << std::setprecision(4) << r.median_ms << "   " << std::left
              << std::setw(34) << ops_cell(r.ops);
    if (i < 4) {
      std::cout << std::setw(16) << ops_cell(*expected[i])
                << (group_ops_only(r.ops) == *expected[i] ? "yes" : "NO");
    }
    std::cout << std::right << '\n';
  }
  std::cout << "samples per row: " << o.iters << ", registry size for Open: " << o.members
            << '\n';

  auto med = [&](const char* name) {
    for (const auto& r : rows) {
      if (r.op == name) return r.median_ms;
    }
    return 0.0;
  };
  std::cout << std::setprecision(4) << "ESign/GSign = " << med("ESign") / med("GSign")
            << "  EVer/GVer = " << med("EVer") / med("GVer")
            << "  Link/GVer = " << med("Link") / med("GVer")
            << "  Open/GVer = " << med("Open") / med("GVer") << '\n';
  const std::size_t link_iters = std::min<std::size_t>(o.iters, 200);
  const double link_small = sim::measure_link_ms(10, link_iters, 7);
  const double link_large = sim::measure_link_ms(o.members, link_iters, 7);
  std::cout << std::setprecision(6) << "Link median with 10 members: " << link_small
            << " ms, with " << o.members << ": " << link_large << " ms\n";

  const auto here = wire::signature_sizes(bls12_381().widths);
  const auto d224 = wire::signature_sizes(kD224ReferenceWidths);
  auto dev = [](std::size_t a, std::size_t b) {
    return (a >= b ? "+" : "-") + std::to_string(a >= b ? a - b : b - a);
  };
  std::cout << "sizes (bytes)        this build   d224   deviation\n"
            << "group signature full " << std::setw(10) << here.group_full << std::setw(7)
            << d224.group_full << "   " << dev(here.group_full, d224.group_full) << '\n'
            << "group signature comp " << std::setw(10) << here.group_compressed << std::setw(7)
            << d224.group_compressed << "   " << dev(here.group_compressed, d224.group_compressed)
            << '\n'
            << "event signature      " << std::setw(10) << here.event_full << std::setw(7)
            << d224.event_full << "   " << dev(here.event_full, d224.event_full) << '\n';
  return kAccept;
}

int cmd_sim(const Options& o) {
  sim::SimConfig cfg = o.config.empty() ? sim::SimConfig{} : sim::SimConfig::load_file(o.config);
  if (!o.scenario.empty()) {
    if (o.scenario == "intersection") {
      cfg.scenario = sim::Scenario::kIntersection;
    } else if (o.scenario == "cam") {
      cfg.scenario = sim::Scenario::kCam;
    } else {
      throw ConfigError("--scenario: expected intersection or cam");
    }
  }
  cfg.validate();
  const sim::SimResult r = sim::run(cfg);
  if (o.out.empty()) {
    std::cout << r.report.to_text();
  } else {
    const std::string text = r.report.to_text();
    write_bytes(o.out, Bytes(text.begin(), text.end()));
  }
  if (!o.csv.empty()) {
    const std::string csv = r.report.to_csv();
    write_bytes(o.csv, Bytes(csv.begin(), csv.end()));
  }
  if (o.timing) {
    std::cerr << "host timing (not part of the report)\n";
    for (const auto& [op, ms] : r.timing.median_ms) {
      std::cerr << "  " << op << " median " << std::fixed << std::setprecision(3) << ms << " ms\n";
    }
    std::cerr << "  wall " << r.timing.wall_ms << " ms, precompute " << r.timing.precompute_ms
              << " ms\n";
  }
  return kAccept;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"AEE anonymous event-linkable authentication"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--mode", o.mode, "Output encoding")->check(CLI::IsMember({"hex", "bin"}));
    c->add_option("--out", o.out, "Output file (default stdout)");
#ifdef AEE_CLI_TEST_SEED
    c->add_option("--seed", o.seed, "Deterministic RNG seed (test builds only)");
#endif
  };

  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> commands;
  auto sub = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    CLI::App* c = app.add_subcommand(name, help);
    common(c);
    commands.emplace_back(c, fn);
    return c;
  };

  auto* setup = sub("setup", "Generate gpk, mik and mok", cmd_setup);
  setup->add_option("--gpk", o.gpk, "Group public key output")->required();
  setup->add_option("--mik", o.mik, "Issuing key output")->required();
  setup->add_option("--mok", o.mok, "Opening key output")->required();
  setup->add_option("--reg", o.reg, "Also create an empty registration table");

  auto* uk = sub("ukg", "Generate a user key pair", cmd_ukg);
  uk->add_option("--gpk", o.gpk)->required();
  uk->add_option("--usk", o.usk, "User key output");

  auto* js = sub("join-start", "Build a join request", cmd_join_start);
  js->add_option("--gpk", o.gpk)->required();
  js->add_option("--usk", o.usk)->required();

  auto* is = sub("issue", "Issue a credential and record it", cmd_issue);
  is->add_option("--gpk", o.gpk)->required();
  is->add_option("--mik", o.mik)->required();
  is->add_option("--reg", o.reg, "Registration table (created if absent)")->required();
  is->add_option("--id", o.id, "Member identity")->required();
  is->add_option("--in", o.in, "Join request")->required();

  auto* jf = sub("join-finish", "Check the issued credential, write gsk", cmd_join_finish);
  jf->add_option("--gpk", o.gpk)->required();
  jf->add_option("--usk", o.usk)->required();
  jf->add_option("--in", o.in, "Issue response")->required();
  jf->add_option("--gsk", o.gsk, "Group signing key output");

  auto* gs = sub("gsign", "Group-sign a message for an event", cmd_gsign);
  gs->add_option("--gpk", o.gpk)->required();
  gs->add_option("--gsk", o.gsk)->required();
  gs->add_option("--et", o.et)->required();
  gs->add_option("--msg", o.msg, "Message text, or @file");

  auto* gv = sub("gver", "Verify a group signature", cmd_gver);
  gv->add_option("--gpk", o.gpk)->required();
  gv->add_option("--et", o.et)->required();
  gv->add_option("--msg", o.msg, "Message text, or @file");
  gv->add_option("--sig", o.sig)->required();
  gv->add_option("--epk-out", o.epk_out, "Write the certified event public key");

  auto* es = sub("esign", "Event-sign a message", cmd_esign);
  es->add_option("--gpk", o.gpk);
  es->add_option("--usk", o.usk);
  es->add_option("--gsk", o.gsk);
  es->add_option("--et", o.et)->required();
  es->add_option("--msg", o.msg, "Message text, or @file");
  es->add_option("--epk", o.epk, "Event public key");
  es->add_option("--sig", o.sig, "Group signature carrying the event public key");

  auto* ev = sub("ever", "Verify an event signature", cmd_ever);
  ev->add_option("--gpk", o.gpk);
  ev->add_option("--et", o.et)->required();
  ev->add_option("--msg", o.msg, "Message text, or @file");
  ev->add_option("--epk", o.epk, "Event public key");
  ev->add_option("--sig", o.sig, "Group signature carrying the event public key");
  ev->add_option("--esig", o.esig, "Event signature")->required();

  auto* lk = sub("link", "Check whether two signatures share a signer", cmd_link);
  lk->add_option("--et", o.et)->required();
  lk->add_option("--sig", o.sigs, "Group signature (give twice)")->required();
  lk->add_option("--msg", o.msgs, "Messages of the two signatures");

  auto* op = sub("open", "Identify the signer and prove it", cmd_open);
  op->add_option("--gpk", o.gpk)->required();
  op->add_option("--mok", o.mok)->required();
  op->add_option("--reg", o.reg)->required();
  op->add_option("--et", o.et)->required();
  op->add_option("--msg", o.msg, "Message text, or @file");
  op->add_option("--sig", o.sig)->required();
  op->add_option("--proof", o.proof, "Tracing proof output");

  auto* jg = sub("judge", "Check a tracing proof", cmd_judge);
  jg->add_option("--gpk", o.gpk)->required();
  jg->add_option("--reg", o.reg, "Registration table holding the member's upk")->required();
  jg->add_option("--id", o.id, "Claimed member")->required();
  jg->add_option("--sig", o.sig)->required();
  jg->add_option("--proof", o.proof)->required();

  auto* pc = sub("precompute", "Group-sign a schedule of future events", cmd_precompute);
  pc->add_option("--gpk", o.gpk)->required();
  pc->add_option("--gsk", o.gsk)->required();
  pc->add_option("--et", o.ets, "Event (repeatable)");
  pc->add_option("--slots", o.slots, "Number of timeslot events");
  pc->add_option("--start", o.start, "First slot, YYYYMMDDhhmm");
  pc->add_option("--slot-seconds", o.slot_seconds, "Slot length (default 600)");

  auto* bn = sub("bench", "Median timings and operation counts", cmd_bench);
  bn->add_option("--iters", o.iters, "Samples per operation (default 1000, min 100)");
  bn->add_option("--members", o.members, "Registry size for Open (default 10000)");

  auto* sm = sub("sim", "Run the V2X simulator", cmd_sim);
  sm->add_option("--scenario", o.scenario)->check(CLI::IsMember({"intersection", "cam"}));
  sm->add_option("--config", o.config, "key = value config file");
  sm->add_option("--csv", o.csv, "Also write report rows as CSV");
  sm->add_flag("--timing", o.timing, "Print host timings to stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  for (const auto& [cmd, fn] : commands) {
    if (!cmd->parsed()) continue;
    try {
      return fn(o);
    } catch (const Malformed& m) {
      std::cerr << "aee " << cmd->get_name() << ": " << m.what << '\n';
      std::cout << "reject\n";
      return kReject;
    } catch (const std::exception& e) {
      std::cerr << "aee " << cmd->get_name() << ": error: " << e.what() << '\n';
      return kError;
    }
  }
  return kError;
}
