#pragma once

#include <stdexcept>
#include <string>

namespace oddfactor {

enum class ErrorKind {
  InvalidArgument,
  VertexOutOfRange,
  OverlappingSets,
  InvalidPartition,
  MalformedHeader,
  MalformedEdgeLine,
  EdgeCountMismatch,
  SelfLoop,
  DuplicateEdge,
  NonFinite,
  DegenerateConstruction,
  SizeLimit,
  RetryExhausted,
  NoConvergence,
  // A checked mathematical identity failed. Always a bug or a counterexample.
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace oddfactor
