#pragma once

/*
  Unit-step string decomposition of spherical parameters for the classical
  types, and the fast complementary-series membership test built on it.

  For a parameter chi of type B_n/C_n/D_n the multiset chi ∪ (-chi) (type C
  adds one forced 0; type A uses chi alone) splits by the fractional class
  tau = min(frac, 1-frac) of its entries.  Each class is cut greedily into
  strings of consecutive rationals.  A mirrored pair of strings of length l
  contributes a pair (l,l) to a partition and one deformation coordinate nu
  (the distance of the string center from 0); unpaired strings must be
  symmetric around 0 and form the distinguished tail.  The partition labels
  a nilpotent orbit of the dual algebra (sp(2n) for B_n, so(2n+1) for C_n,
  so(2n) for D_n, gl(n+1) for A_n), each group of equal parts carries a
  reductive centralizer factor, and unitarity is one membership test per
  factor.

  Special classes: tau = 1/2 for type B and tau = 0 for types C and D use
  plain greedy extraction followed by mirror pairing; every other class uses
  lockstep extraction of a string together with its mirror.  Type A is the
  degenerate one-pass case of the greedy recipe.
*/

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hecke/rational.hpp"
#include "hecke/rootsys.hpp"

namespace hecke {

// Type D parameter whose attached partition has all parts even; the two
// orbits sharing that partition are not distinguished here.
struct VeryEvenOrbit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An unpaired string survived that is not symmetric around 0, or the
// unpaired lengths collide or have the wrong parity for the dual algebra.
struct InvalidDistinguished : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Partition is not a nilpotent orbit of the dual algebra (multiplicity
// parity violation, nonpositive part).
struct InvalidPartition : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FactorType { B, C, D, T };

// One reductive factor of the orbit centralizer, watching the group of
// equal parts `part`; rank counts its nu coordinates.
struct CentralizerFactor {
  FactorType factor_type = FactorType::T;
  int rank = 0;
  int part = 0;
  RatVec nu;  // rank entries, absolute values, ascending
};

std::string factor_name(const CentralizerFactor& factor);  // "C1", "D2", "T1"

// One mirrored pair: plus_string is the member whose center is <= 0.
struct StringPair {
  Rat tau;
  RatVec plus_string;
  Rat nu;
};

struct StringDecomposition {
  CartanType cartan_type = CartanType::B;
  int rank = 0;

  // Every extracted string keyed by fractional class; both members of a
  // mirrored pair appear, distinguished strings once.  Concatenating and
  // sorting recovers chi ∪ (-chi) (plus the forced 0 in type C, chi alone
  // in type A).
  std::map<Rat, std::vector<RatVec>> tau_blocks;

  std::vector<StringPair> pairs;      // extraction order
  std::vector<RatVec> distinguished;  // unpaired symmetric strings, by length

  // Assembled orbit data.  orbit_groups lists the pair-generated copies of
  // each part value ascending; distinguished_parts is the tail, ascending,
  // pairwise distinct.  nu_factors is parallel to orbit_groups.
  std::vector<std::vector<int>> orbit_groups;
  std::vector<int> distinguished_parts;
  RatVec h_half;  // ambient coordinates of the orbit midpoint, ascending
  std::vector<CentralizerFactor> nu_factors;
};

// Cuts chi into strings and assembles the orbit data.  Types A, B, C, D
// only; type D inputs attaching to an all-even partition throw
// VeryEvenOrbit.  The parameter need not be dominant or hermitian.
StringDecomposition decompose(CartanType type, const Parameter& chi);

// Flat partition, ascending, distinguished tail merged in.
std::vector<int> full_partition(const StringDecomposition& dec);

// "(1,1;2,2,2,2;3,3,3,3;6,6;7,7;;8)" and "(5/2;3/4,7/2;0,1/4;0;2;; )":
// groups joined by ';', the distinguished tail after ';;', nu in lockstep
// with an empty slot for the tail.
std::string render_orbit(const StringDecomposition& dec);
std::string render_nu(const StringDecomposition& dec);

// Centralizer factor shapes of a dual-algebra partition, nu slots zeroed.
// In sp(2n) (type B input) an odd part of multiplicity 2l gives C_l and an
// even part of multiplicity m gives D_{m/2} or B_{(m-1)/2} by parity; for
// so (types C and D) the part parities swap; type A groups are reported as
// C factors, whose membership region coincides with the gl one.  A group
// whose factor has rank 0 is dropped.
std::vector<CentralizerFactor> centralizer_factors(CartanType type,
                                                   const std::vector<int>& partition);

// Membership of factor.nu in the factor's zero-orbit complementary series:
//   C_l: every entry < 1/2;
//   B_l: the interlacing region below (rank 1: [0,1));
//   D_l: the interlacing region, and for odd l the smallest entry must be 0
//        (rank 1: {0});
//   T:   all entries 0.
// The interlacing region asks for an index i with
//   0 <= nu_1 <= ... <= nu_i < 1-nu_{i-1} < nu_{i+1} < ... < nu_n < 1
// and, between consecutive nu_j < nu_{j+1} with j >= i, an odd number of
// the values 1-nu_l, l < i.
bool zero_cs_predicate(const CentralizerFactor& factor);

struct StringVerdict {
  bool hermitian = false;
  bool unitary = false;
  StringDecomposition decomposition;
  std::vector<bool> factor_ok;  // parallel to decomposition.nu_factors
};

// Hermitian check, then decompose and test every factor.  Non-hermitian
// parameters return early with an empty decomposition.
StringVerdict unitary_via_strings(CartanType type, const Parameter& chi);

}  // namespace hecke
