#pragma once

#include <stdexcept>
#include <string>

namespace okbody {

enum class ErrorKind {
  Parse,
  Validation,
  DimensionMismatch,
  UnknownId,
  NotPseudoeffective,
  NotBig,
  CatalogInsufficient,
  Domain,
  NotTorusInvariant,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base error of the library. The kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace okbody
