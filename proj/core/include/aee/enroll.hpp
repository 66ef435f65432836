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

#ifndef AEE_ENROLL_HPP_
#define AEE_ENROLL_HPP_

// Join/Issue: an OBU proves knowledge of its long-term secret y and the
// issuer answers with a credential (x, A), A = (g1 * z^-1)^(1/(gamma+x)).

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "aee/algebra.hpp"
#include "aee/keys.hpp"

namespace aee {

class Rng;

// Opaque issuer-chosen identifier (e.g. a vehicle registration).
using MemberId = std::string;

// Schnorr proof of knowledge of y for z = h^y: c = H2(h, z, h^r), s = r + c*y.
struct JoinRequest {
  G1 z;
  Scalar c;
  Scalar s;
  friend bool operator==(const JoinRequest&, const JoinRequest&) = default;
};

struct IssueResponse {
  Scalar x;
  G1 A;
  friend bool operator==(const IssueResponse&, const IssueResponse&) = default;
};

// Member credential (x, y, A).
struct GroupSigningKey {
  Scalar x;
  Scalar y;
  G1 A;
  friend bool operator==(const GroupSigningKey&, const GroupSigningKey&) = default;
};

// Issuer's registration table. Rows keep insertion order; a second index
// keyed by the compressed encoding of A makes opening O(1).
//
// Mutation is single-writer. Concurrent readers are fine between writes.
class RegistrationTable {
 public:
  struct Row {
    MemberId member;
    Scalar x;
    G1 A;
    G1 upk;
    friend bool operator==(const Row&, const Row&) = default;
  };

  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  const std::vector<Row>& rows() const { return rows_; }

  bool contains(const MemberId& member) const { return by_member_.contains(member); }
  const Row* find(const MemberId& member) const;
  std::optional<MemberId> lookup_by_credential(const G1& A) const;

  // Throws ConflictError if the member or A is already present.
  void insert(Row row);
  // Replaces (or creates) the row for row.member. Throws ConflictError if A
  // belongs to a different member.
  void assign(Row row);

  void save(std::ostream& out) const;
  static RegistrationTable load(std::istream& in);
  void save_file(const std::filesystem::path& path) const;
  static RegistrationTable load_file(const std::filesystem::path& path);

  friend bool operator==(const RegistrationTable& a, const RegistrationTable& b) {
    return a.rows_ == b.rows_;
  }

 private:
  static std::string key_of(const G1& A);

  std::vector<Row> rows_;
  std::unordered_map<MemberId, std::size_t> by_member_;
  std::unordered_map<std::string, std::size_t> by_credential_;
};

JoinRequest join_start(const GroupPublicKey& gpk, const UserKeyPair& keys, Rng& rng);

bool verify_join_request(const GroupPublicKey& gpk, const JoinRequest& req);

// Verifies the request, draws x, computes A and records (member, x, A, z).
// Throws ProtocolError on a bad proof and ConflictError on a duplicate
// member id.
IssueResponse issue(const GroupPublicKey& gpk, const MasterIssuingKey& mik,
                    RegistrationTable& reg, const MemberId& member,
                    const JoinRequest& req, Rng& rng);

// e(A, g2^x * w) == e(g1 * z^-1, g2).
bool credential_valid(const GroupPublicKey& gpk, const G1& upk, const Scalar& x,
                      const G1& A);

// Throws ProtocolError if the returned credential does not verify.
GroupSigningKey join_finish(const GroupPublicKey& gpk, const UserKeyPair& keys,
                            const IssueResponse& resp);

inline std::optional<MemberId> reg_lookup_by_credential(const RegistrationTable& reg,
                                                        const G1& A) {
  return reg.lookup_by_credential(A);
}

}  // namespace aee

#endif  // AEE_ENROLL_HPP_
