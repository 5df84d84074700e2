// Copyright 2026 The cff Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace cff {

// Failure categories. The numeric value doubles as the CLI exit status.
enum class ErrorKind : int {
  parse = 2,
  applicability = 3,
  domain = 4,
  internal = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }
  const char* tag() const noexcept {
    switch (kind_) {
      case ErrorKind::parse: return "parse_error";
      case ErrorKind::applicability: return "applicability_error";
      case ErrorKind::domain: return "domain_error";
      case ErrorKind::internal: return "internal_error";
    }
    return "error";
  }

 private:
  ErrorKind kind_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(ErrorKind::parse, w) {}
};
struct ApplicabilityError : Error {
  explicit ApplicabilityError(const std::string& w) : Error(ErrorKind::applicability, w) {}
};
struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(ErrorKind::domain, w) {}
};
struct InvariantError : Error {
  explicit InvariantError(const std::string& w) : Error(ErrorKind::internal, w) {}
};

inline void require(bool ok, const char* msg) {
  if (!ok) throw InvariantError(msg);
}

}  // namespace cff
