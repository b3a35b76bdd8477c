#pragma once

#include <stdexcept>
#include <string>

namespace corner {

enum class Errc {
  Syntax,
  DanglingFace,
  DimensionMismatch,
  InvalidInput,
  DimensionCap,
  ClosureBudgetExceeded,
  BadLevel,
  NotDecomposable,
  IncompatibleAssignment,
  NotLengthAtMostOne,
  NotNonContracting,
  UnknownState,
  BadIndex,
  NotComposable,
  NotFillable,
  SourceMismatch,
  NotBranching,
  IllFormedComplex,
  BadArgument,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

// Dimension limits shared by every module.
struct Limits {
  static constexpr int hard_cap = 4;
  static int default_max_dim();  // honours CORNER_MAX_DIM
};

}  // namespace corner
