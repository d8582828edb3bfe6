//  Copyright 2026 The argagg Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef ARGAGG_ERRORS_HPP_
#define ARGAGG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace argagg {

/// Base of every error thrown by the library. `kind()` is the stable tag
/// used in the CLI error envelope.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Labeling/framework/partition domains do not line up, or an unknown
/// argument or agent was named.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& m) : Error("domain-error", m) {}
};

/// A size cap was exceeded.
class SizeError : public Error {
 public:
  explicit SizeError(const std::string& m) : Error("size-error", m) {}
};

/// An operator received an empty profile.
class ArityError : public Error {
 public:
  explicit ArityError(const std::string& m) : Error("arity-error", m) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& m)
      : Error("precondition-error", m) {}
};

/// A submitted ballot fails the configured semantics gate.
class BallotError : public Error {
 public:
  BallotError(std::string agent, const std::string& m)
      : Error("ballot-error", m), agent_(std::move(agent)) {}

  const std::string& agent() const noexcept { return agent_; }

 private:
  std::string agent_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& m) : Error("config-error", m) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& m, std::string location)
      : Error("parse-error", m), location_(std::move(location)) {}

  /// "line N" (or "<source>:N" when the caller knows the file), empty if
  /// the error is not tied to a position.
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

}  // namespace argagg

#endif  // ARGAGG_ERRORS_HPP_
