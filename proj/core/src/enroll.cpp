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

#include "aee/enroll.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include "aee/errors.hpp"
#include "aee/hashing.hpp"
#include "aee/rng.hpp"
#include "byte_io.hpp"

namespace aee {

namespace {

constexpr char kRegMagic[] = {'A', 'E', 'E', 'R', 'E', 'G'};
constexpr std::uint8_t kRegVersion = 1;
constexpr int kIssueAttempts = 8;

Scalar join_challenge(const GroupPublicKey& gpk, const G1& z, const G1& commitment) {
  return hash_to_scalar(gpk.h2_tag,
                        {HashItem::of(gpk.h), HashItem::of(z), HashItem::of(commitment)});
}

}  // namespace

// ------------------------------------------------------- RegistrationTable

std::string RegistrationTable::key_of(const G1& A) {
  const auto c = A.compressed();
  return std::string(c.begin(), c.end());
}

const RegistrationTable::Row* RegistrationTable::find(const MemberId& member) const {
  const auto it = by_member_.find(member);
  return it == by_member_.end() ? nullptr : &rows_[it->second];
}

std::optional<MemberId> RegistrationTable::lookup_by_credential(const G1& A) const {
  const auto it = by_credential_.find(key_of(A));
  if (it == by_credential_.end()) return std::nullopt;
  return rows_[it->second].member;
}

void RegistrationTable::insert(Row row) {
  if (by_member_.contains(row.member)) {
    throw ConflictError("member '" + row.member + "' is already registered");
  }
  std::string key = key_of(row.A);
  if (by_credential_.contains(key)) {
    throw ConflictError("credential element already registered");
  }
  const std::size_t index = rows_.size();
  by_member_.emplace(row.member, index);
  by_credential_.emplace(std::move(key), index);
  rows_.push_back(std::move(row));
}

void RegistrationTable::assign(Row row) {
  const auto it = by_member_.find(row.member);
  if (it == by_member_.end()) {
    insert(std::move(row));
    return;
  }
  std::string key = key_of(row.A);
  const auto owner = by_credential_.find(key);
  if (owner != by_credential_.end() && owner->second != it->second) {
    throw ConflictError("credential element already registered to another member");
  }
  by_credential_.erase(key_of(rows_[it->second].A));
  by_credential_.emplace(std::move(key), it->second);
  rows_[it->second] = std::move(row);
}

void RegistrationTable::save(std::ostream& out) const {
  detail::ByteWriter w;
  w.raw(ByteView(reinterpret_cast<const std::uint8_t*>(kRegMagic), sizeof(kRegMagic)));
  w.u8(kRegVersion);
  w.u32(static_cast<std::uint32_t>(rows_.size()));
  for (const Row& row : rows_) {
    w.sized(as_bytes(row.member));
    w.scalar(row.x);
    w.g1(row.A);
    w.g1(row.upk);
  }
  const Bytes bytes = w.take();
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw StorageError("registration table: write failed");
}

RegistrationTable RegistrationTable::load(std::istream& in) {
  const Bytes bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  detail::ByteReader header(bytes, "registration table header");
  const ByteView magic = header.raw(sizeof(kRegMagic));
  if (!std::equal(magic.begin(), magic.end(), kRegMagic)) {
    throw DecodeError("registration table: bad magic");
  }
  if (const auto version = header.u8(); version != kRegVersion) {
    throw DecodeError("registration table: unsupported version " + std::to_string(version));
  }
  const std::uint32_t count = header.u32();

  // Parse into a scratch table; nothing is returned unless every row loads.
  RegistrationTable table;
  const ByteView body = ByteView(bytes).subspan(bytes.size() - header.remaining());
  detail::ByteReader r(body, "registration table");
  for (std::uint32_t i = 0; i < count; ++i) {
    try {
      Row row;
      const ByteView member = r.sized();
      row.member.assign(member.begin(), member.end());
      row.x = r.scalar();
      row.A = r.g1();
      row.upk = r.g1();
      table.insert(std::move(row));
    } catch (const Error& e) {
      throw DecodeError("registration table row " + std::to_string(i) + ": " + e.what());
    }
  }
  r.expect_end();
  return table;
}

void RegistrationTable::save_file(const std::filesystem::path& path) const {
  // Write-then-rename so a crash never leaves a half-written table.
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw StorageError("cannot open " + tmp.string() + " for writing");
    save(out);
  }
  std::filesystem::rename(tmp, path);
}

RegistrationTable RegistrationTable::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StorageError("cannot open " + path.string());
  return load(in);
}

// ------------------------------------------------------------ Join/Issue

JoinRequest join_start(const GroupPublicKey& gpk, const UserKeyPair& keys, Rng& rng) {
  const Scalar r = Scalar::random_nonzero(rng);
  JoinRequest req;
  req.z = keys.upk;
  req.c = join_challenge(gpk, keys.upk, gpk.h.pow(r));
  req.s = r + req.c * keys.usk;
  return req;
}

bool verify_join_request(const GroupPublicKey& gpk, const JoinRequest& req) {
  if (req.z.is_identity() || !req.z.in_subgroup()) return false;
  const G1 commitment = gpk.h.pow(req.s) * req.z.pow(-req.c);
  return join_challenge(gpk, req.z, commitment) == req.c;
}

IssueResponse issue(const GroupPublicKey& gpk, const MasterIssuingKey& mik,
                    RegistrationTable& reg, const MemberId& member,
                    const JoinRequest& req, Rng& rng) {
  if (reg.contains(member)) {
    throw ConflictError("member '" + member + "' is already registered");
  }
  if (!verify_join_request(gpk, req)) {
    throw ProtocolError("join request: proof of knowledge does not verify");
  }
  const G1 base = gpk.g1 * req.z.inverse();
  for (int attempt = 0; attempt < kIssueAttempts; ++attempt) {
    const Scalar x = Scalar::random_nonzero(rng);
    const Scalar denom = mik.gamma + x;
    if (denom.is_zero()) continue;
    const G1 A = base.pow(denom.inverse());
    if (reg.lookup_by_credential(A)) continue;
    reg.insert({member, x, A, req.z});
    return {x, A};
  }
  throw Error("issue: could not draw a fresh credential");
}

bool credential_valid(const GroupPublicKey& gpk, const G1& upk, const Scalar& x,
                      const G1& A) {
  if (A.is_identity()) return false;
  return pairing(A, gpk.g2.pow(x) * gpk.w) == pairing(gpk.g1 * upk.inverse(), gpk.g2);
}

GroupSigningKey join_finish(const GroupPublicKey& gpk, const UserKeyPair& keys,
                            const IssueResponse& resp) {
  if (!credential_valid(gpk, keys.upk, resp.x, resp.A)) {
    throw ProtocolError("issue response: credential does not verify");
  }
  return {resp.x, keys.usk, resp.A};
}

}  // namespace aee
