#pragma once

#include <stdexcept>
#include <string>

namespace csym {

/// Cover relations contain a directed cycle, so no partial order exists.
struct CycleError : std::runtime_error {
  explicit CycleError(const std::string& what) : std::runtime_error(what) {}
};

/// An element or index lies outside the declared range.
struct RangeError : std::runtime_error {
  explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

/// A subset that was required to be down-closed is not.
struct NotAnIdealError : std::runtime_error {
  explicit NotAnIdealError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured enumeration budget would be exceeded.
struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// A matrix has a zero column where a nonzero one is required.
struct ZeroColumnError : std::runtime_error {
  explicit ZeroColumnError(const std::string& what) : std::runtime_error(what) {}
};

/// A polytope operation requires a full-dimensional input.
struct NotFullDimError : std::runtime_error {
  explicit NotFullDimError(const std::string& what) : std::runtime_error(what) {}
};

/// A basis binomial is not marked consistently with the monomial order.
struct NotMarkedError : std::runtime_error {
  explicit NotMarkedError(const std::string& what) : std::runtime_error(what) {}
};

/// Degree-capped completion cannot certify the requested degree.
struct CompletionCapError : std::runtime_error {
  explicit CompletionCapError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal cross-check failed; indicates a bug, never user error.
struct InternalCheckError : std::logic_error {
  explicit InternalCheckError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace csym
