#pragma once

#include <stdexcept>
#include <string>

namespace apoly {

/// Base for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed inputs: mismatched variable sets, non-square matrices,
/// unparseable syntax, invalid Frobenius data.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input outside an operation's mathematical domain
/// (non-modified-balanced partition where one is required, exponent
/// overflow in a reindexing, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An enumeration guard tripped without the extended override.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A supposedly unreachable state; indicates a library bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace apoly
