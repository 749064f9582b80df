#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace propalloc {

/// Rejection of an instance document. Carries every violated invariant,
/// not just the first one found.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(std::vector<std::string> issues);

  const std::vector<std::string>& issues() const noexcept { return issues_; }

 private:
  std::vector<std::string> issues_;
};

/// Malformed JSON or a document with the wrong shape. `offset` is the byte
/// position reported by the parser when one is known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset = npos);

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An operation was called on an instance that does not satisfy its
/// precondition (no perfect matching, disconnected, oversized oracle input).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A postcondition that should be impossible to violate failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace propalloc
