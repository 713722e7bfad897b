#include "oddfactor/error.hpp"

namespace oddfactor {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::VertexOutOfRange: return "vertex-out-of-range";
    case ErrorKind::OverlappingSets: return "overlapping-sets";
    case ErrorKind::InvalidPartition: return "invalid-partition";
    case ErrorKind::MalformedHeader: return "malformed-header";
    case ErrorKind::MalformedEdgeLine: return "malformed-edge-line";
    case ErrorKind::EdgeCountMismatch: return "edge-count-mismatch";
    case ErrorKind::SelfLoop: return "self-loop";
    case ErrorKind::DuplicateEdge: return "duplicate-edge";
    case ErrorKind::NonFinite: return "non-finite";
    case ErrorKind::DegenerateConstruction: return "degenerate-construction";
    case ErrorKind::SizeLimit: return "size-limit";
    case ErrorKind::RetryExhausted: return "retry-exhausted";
    case ErrorKind::NoConvergence: return "no-convergence";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace oddfactor
