#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nilmult {

/// A computation was refused because a configured resource ceiling would be
/// exceeded (basis size, collection length, partition count).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The group lies outside the classes for which a verdict is known.
class ClassNotCovered : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// graded_image was asked for a word that is not in the requested term of
/// the lower central series.
class NotInGammaError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Descriptor syntax or semantic error. `offset` is the byte offset into the
/// parsed text where the problem was detected.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace nilmult
