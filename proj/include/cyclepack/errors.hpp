#pragma once

#include <stdexcept>
#include <string>

namespace cyclepack {

// Raised when a caller-supplied graph, parameter, or certificate is malformed
// or violates a documented precondition.
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a self-check that is guaranteed by the underlying mathematics
// fails at runtime.  Seeing this exception means the implementation has a bug,
// not the caller.
struct InternalTheoremViolation : std::logic_error {
    explicit InternalTheoremViolation(const std::string& what) : std::logic_error(what) {}
};

// Raised by brute-force routines when the configured work budget is exhausted.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the planar pipeline when the input graph is demonstrably not
// planar (the suppressed bridgeless part has girth > 5, which cannot happen
// for planar inputs).  Carries the evidence in the message.
struct NotPlanarEvidence : std::runtime_error {
    explicit NotPlanarEvidence(const std::string& what) : std::runtime_error(what) {}
};

// Raised on inconsistent internal data structures (e.g. an expansion map that
// does not match the cycle being lifted).
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace cyclepack
