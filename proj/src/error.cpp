#include "error.hpp"

#include <cstdlib>

namespace corner {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Syntax: return "SyntaxError";
    case Errc::DanglingFace: return "DanglingFace";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::DimensionCap: return "DimensionCap";
    case Errc::ClosureBudgetExceeded: return "ClosureBudgetExceeded";
    case Errc::BadLevel: return "BadLevel";
    case Errc::NotDecomposable: return "NotDecomposable";
    case Errc::IncompatibleAssignment: return "IncompatibleAssignment";
    case Errc::NotLengthAtMostOne: return "NotLengthAtMostOne";
    case Errc::NotNonContracting: return "NotNonContracting";
    case Errc::UnknownState: return "UnknownState";
    case Errc::BadIndex: return "BadIndex";
    case Errc::NotComposable: return "NotComposable";
    case Errc::NotFillable: return "NotFillable";
    case Errc::SourceMismatch: return "SourceMismatch";
    case Errc::NotBranching: return "NotBranching";
    case Errc::IllFormedComplex: return "IllFormedComplex";
    case Errc::BadArgument: return "BadArgument";
    case Errc::Internal: return "InternalError";
  }
  return "Unknown";
}

int Limits::default_max_dim() {
  int d = 3;
  if (const char* env = std::getenv("CORNER_MAX_DIM")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) d = static_cast<int>(v);
  }
  if (d > hard_cap) fail(Errc::DimensionCap, "CORNER_MAX_DIM exceeds the hard cap of 4");
  return d;
}

}  // namespace corner
