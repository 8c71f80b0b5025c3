#pragma once

#include <stdexcept>
#include <string>

namespace cyclepack {

enum class ErrorKind {
    NotConnected,
    MalformedRotation,
    NotACycle,
    NotLaminar,
    DegenerateFamily,
    CycleNotInFamily,
    UncrossingStalled,
    StructureInvariantViolated,
    EmptySupport,
    EmptyLevel,
    FeasibilityViolation,
    SearchExhausted,
    GuaranteeViolated,
    PreconditionViolated,
    CheckerFailed,
    RedundantCyclePresent,
    UnknownCycle,
    BudgetExceeded,
    BadInput,
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

// Invariant checks stay on in release builds; a violated invariant is a bug,
// not a recoverable condition, but we throw so tests can observe it.
#define CYCLEPACK_REQUIRE(cond, kind, msg)                                                         \
    do {                                                                                           \
        if (!(cond)) ::cyclepack::fail(::cyclepack::ErrorKind::kind, (msg));                       \
    } while (0)

const char* error_kind_name(ErrorKind k);

} // namespace cyclepack
