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

#ifndef AEE_ERRORS_HPP_
#define AEE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace aee {

// Root of every error the library raises. Verification failures are not
// errors: verifiers return false.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed bytes: wrong length, non-canonical scalar, off-curve or
// wrong-subgroup point, unknown version tag.
class DecodeError : public Error {
 public:
  using Error::Error;
};

// A zero-knowledge proof or credential presented by a peer did not verify.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

// Duplicate registration or other state conflict in the issuer's table.
class ConflictError : public Error {
 public:
  using Error::Error;
};

class RandomnessError : public Error {
 public:
  using Error::Error;
};

// Invalid caller-supplied configuration or arguments.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Persistent storage could not be read or written.
class StorageError : public Error {
 public:
  using Error::Error;
};

}  // namespace aee

#endif  // AEE_ERRORS_HPP_
