#pragma once

#include <gmpxx.h>

#include <string>

namespace quivalg {

/* Ground field K. Exact rationals; swap this alias (plus scalar_to_string /
   scalar_from_string) to move to another field. */
using Scalar = mpq_class;

inline Scalar scalar_zero() { return Scalar(0); }
inline Scalar scalar_one() { return Scalar(1); }

inline bool scalar_is_zero(const Scalar& x) { return sgn(x) == 0; }

std::string scalar_to_string(const Scalar& x);

/* Parses "n" or "n/d"; throws std::invalid_argument on garbage or d = 0. */
Scalar scalar_from_string(const std::string& text);

} // namespace quivalg
