#pragma once

/*
  Exact rational scalars, vectors and a few parsing/printing helpers.

  Everything downstream (root pairings, operator coefficients, signature
  certificates) is computed over Q; doubles appear only in advisory
  cross-checks.  GMP supplies the arithmetic, this header the conventions:
  canonical form everywhere, `p/q` with q > 0 and gcd(p,q) = 1 on the wire.
*/

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

using Rat = mpq_class;
using Int = mpz_class;

using RatVec = std::vector<Rat>;

// Error used for malformed user-facing input (CLI flag values, data files).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p" or "p/q".  Throws ParseError on anything else.
Rat rat_from_string(const std::string& text);

// Prints canonical "p" or "p/q" with q > 0.
std::string rat_to_string(const Rat& value);

// Parses a comma-separated rational vector, e.g. "1/2,-3,0".
RatVec vec_from_string(const std::string& text);

std::string vec_to_string(const RatVec& values);

// Basic vector algebra used throughout; sizes must agree.
Rat dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& c, const RatVec& a);
bool is_zero(const RatVec& a);

// Least common multiple of denominators; 1 for an empty vector.
Int common_denominator(const RatVec& a);

}  // namespace hecke
