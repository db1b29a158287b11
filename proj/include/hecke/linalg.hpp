#pragma once

/*
  Dense exact linear algebra on rational matrices, sized for the blocks this
  project actually meets (a few hundred rows at most).

  The signature routines come in three flavours:
    - LDL^T with diagonal pivoting: the default certificate.  Stalls only
      when every remaining diagonal entry vanishes while off-diagonal mass
      remains, which cannot happen for a positive semidefinite input.
    - characteristic polynomial + sign-variation counting: exact fallback,
      also the engine behind the power-sum signature of large operators.
      Valid because every matrix certified here is symmetric, so all roots
      are real and Descartes' bound is attained.
    - floating eigensolver: advisory cross-check only, never a verdict.
*/

#include <optional>

#include "hecke/rational.hpp"

namespace hecke {

struct RatMat {
  std::size_t n = 0;  // square matrices only
  std::vector<Rat> a;  // row-major, n*n entries

  RatMat() = default;
  explicit RatMat(std::size_t size) : n(size), a(size * size, Rat(0)) {}

  Rat& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

bool is_symmetric(const RatMat& m);

RatMat mat_mul(const RatMat& x, const RatMat& y);

struct SignCounts {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;
};

// Symmetric Gaussian elimination with diagonal pivoting.  Returns the inertia
// of `m`, or nullopt when elimination stalls on an all-zero diagonal with
// off-diagonal entries left (indefinite input; use the char-poly fallback).
std::optional<SignCounts> ldlt_signature(const RatMat& m);

// Monic characteristic polynomial of `m` by the Faddeev–LeVerrier recurrence.
// Returned as c[0..n] with c[0] = 1 and p(x) = sum c[k] x^(n-k).
std::vector<Rat> char_poly(const RatMat& m);

// Monic char poly of a d×d matrix recovered from its power sums
// p[k] = tr(M^k), k = 1..d, via Newton's identities.
std::vector<Rat> char_poly_from_power_sums(const std::vector<Rat>& power_sums);

// Root sign counts of a monic polynomial all of whose roots are real.
SignCounts real_rooted_sign_counts(const std::vector<Rat>& monic_coeffs);

// Advisory floating-point inertia with absolute tolerance `tol` on the
// eigenvalues (scaled by the largest magnitude present).
SignCounts float_signature(const std::vector<double>& sym, std::size_t n,
                           double tol = 1e-9);

}  // namespace hecke
