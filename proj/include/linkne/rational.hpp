#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace linkne {

/// Exact rational. GMP arithmetic keeps results in lowest terms with a positive
/// denominator; Rat(p, q) does not, so call canonicalize() after it.
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "p/q" or "p" (optionally signed). Throws Error(ParseError).
Rat parse_rat(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& value);

inline bool is_zero(const Rat& value) { return sgn(value) == 0; }

}  // namespace linkne
