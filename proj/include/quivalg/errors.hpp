#pragma once

#include <stdexcept>
#include <string>

namespace quivalg {

/* Base class for everything this library throws on bad input. */
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/* Malformed quiver data (duplicate names, dangling endpoints, bad JSON). */
struct QuiverError : Error {
  explicit QuiverError(const std::string& what) : Error(what) {}
};

/* Operation applied outside its context (bars in P(E), inv of a barred
   element, mixing elements over different quivers, ...). */
struct ContextViolation : Error {
  explicit ContextViolation(const std::string& what) : Error(what) {}
};

/* Augmentation not invertible where an inverse was requested. */
struct NotInvertible : Error {
  explicit NotInvertible(const std::string& what) : Error(what) {}
};

struct NotIdempotent : Error {
  explicit NotIdempotent(const std::string& what) : Error(what) {}
};

struct NotHomogeneous : Error {
  explicit NotHomogeneous(const std::string& what) : Error(what) {}
};

/* The regularization loop met a coefficient vector outside the expected
   column space; the input module is not regular. */
struct RegularityViolated : Error {
  explicit RegularityViolated(const std::string& what) : Error(what) {}
};

/* A vertex with infinitely many incoming arrows was hit while growing a
   finite window of a direct-limit quiver. */
struct NonColumnFinite : Error {
  explicit NonColumnFinite(const std::string& what) : Error(what) {}
};

/* A precondition demanded two monoid elements already known equivalent. */
struct NotEquivalent : Error {
  explicit NotEquivalent(const std::string& what) : Error(what) {}
};

/* Expression or element syntax errors (CLI surface). */
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace quivalg
