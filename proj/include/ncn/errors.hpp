// Copyright 2026 The ncnsynth Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncn {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class NonUnitaryError : public Error {
 public:
  NonUnitaryError(const std::string &what, double deviation)
      : Error(what), deviation_(deviation) {}
  /// Max-entry deviation of M^dagger M from the identity.
  double deviation() const noexcept { return deviation_; }

 private:
  double deviation_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string &what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Wrong number of qubits, repeated qubits, or indices outside the register.
class ArityError : public Error {
 public:
  using Error::Error;
};

class DialectError : public Error {
 public:
  using Error::Error;
};

/// psi_reduce was handed a state whose ancilla is not a product factor.
class EntangledAncillaError : public Error {
 public:
  EntangledAncillaError(const std::string &what, double purity)
      : Error(what), purity_(purity) {}
  double purity() const noexcept { return purity_; }

 private:
  double purity_;
};

/// A rewrite rule failed its matrix self-check.
class RuleCheckError : public Error {
 public:
  using Error::Error;
};

}  // namespace ncn
