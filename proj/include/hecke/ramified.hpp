#pragma once

/*
  Sign characters of the compact torus quotient and the extended operators
  attached to them.

  A character is a vector of +1/-1, one entry per ambient coordinate of the
  stored model (so rank entries for B/C/D/F4, rank+1 for A).  Its value on
  the order-two torus element of a root is the sign product over the odd
  coordinates of the coroot; this is what singles out the good roots.  The
  per-type lattice on which two sign vectors define the same character:
    A    sum-zero sublattice (vector and its global flip coincide),
    B/C  the full integer lattice (all 2^rank characters are distinct),
    D    the even-sum sublattice (global flip coincides again),
    F4   the even-sum sublattice; sign vectors reach only the integral
         half of the character group, which covers every tabulated case.
  G2 and the E types are not supported for nontrivial characters (the G2
  model has non-integral coroots, the E Weyl groups are too large to
  enumerate here).

  The stabilizer W_delta is found by enumeration: w stabilizes the character
  iff the character agrees on w applied to the lattice generators.  Its
  reflection part W_delta^0 is the Weyl group of the good roots; the
  complement R is the subgroup preserving the positive good roots, an
  abelian 2-group generated by reflections in bad roots.

  Extended operators: with w0 the long element of W(good roots) and u in R
  chosen so that u w0 nu = -nu, the operator is assembled per linear
  character chi of W_delta^0 as the product of (1 - <nu, alpha^>)/(1 +
  <nu, alpha^>) over the positive good roots whose reflection chi sends to
  -1.  The product equals the normalized heckeops scalar on the matching
  one-dimensional type factor by factor along any reduced word, so the
  reduction at the trivial character is bit-exact.  Fine blocks (chi
  trivial) carry only the sign lambda(u) of the R-character lambda; when u
  moves chi the two scalars are kept as one induced 2x2 block.  The sign
  convention extends each u-fixed chi by +1 on u; only relative signs
  between the two lambda-extensions are meaningful.
*/

#include <string>
#include <vector>

#include "hecke/linalg.hpp"
#include "hecke/rootsys.hpp"

namespace hecke {

struct NonIntegralCoroot : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Pole : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DeltaCharacter {
  std::vector<int> signs;  // entries are +1 or -1
};

DeltaCharacter delta_trivial(int dim);
// Sign on the last p coordinates, the block representative used throughout.
DeltaCharacter delta_block(int dim, int p);
DeltaCharacter delta_from_string(const std::string& text);  // '+' / '-'
std::string delta_to_string(const DeltaCharacter& delta);

// Value of the character on the order-two element of the root with this
// coroot.  Trivial characters evaluate to +1 without an integrality check;
// otherwise every coroot coordinate must be an integer.
int delta_on_m_alpha(const DeltaCharacter& delta, const RatVec& coroot);

// One irreducible Weyl factor of the good-root system.
struct SubsystemFactor {
  std::string label;  // A1, B3, C2, D4, F4; rank-one factors are all A1
  int rank = 0;
  std::vector<RatVec> positive_roots;
  std::vector<RatVec> positive_coroots;
  // Reflection classes, grouped by root norm; 1 for one length, 2 for B/C.
  std::vector<std::vector<std::size_t>> classes;  // indices into the roots
};

struct GoodRootData {
  CartanType ambient_type;
  int ambient_rank = 0;
  DeltaCharacter delta;
  std::vector<RatVec> good_roots;  // positive good roots
  std::vector<RatVec> good_coroots;
  // Support-connected component labels, ordered by first coordinate; this
  // is the printed shape (e.g. C2+D2), coarser than the Weyl factors below.
  std::vector<std::string> subsystem_type;
  std::vector<SubsystemFactor> factors;  // orthogonality components
  long w_delta0_order = 1;
  long w_delta_order = 1;
  long r_group_order = 1;  // w_delta_order / w_delta0_order, a power of 2
  std::vector<WeylElement> r_elements;  // identity first
};

// Enumerates the ambient Weyl group (cap must cover it) and classifies the
// stabilizer of the character.  Throws UnsupportedDatum for the E types and
// NonIntegralCoroot for nontrivial characters on G2.
GoodRootData good_root_data(CartanType type, int rank, const DeltaCharacter& delta,
                            std::size_t cap = 4000);

// Order of the stabilizer of nu inside R.
long r_group_at_nu(const GoodRootData& data, const RatVec& nu);

struct ExtendedBlock {
  std::string psi_label;  // [lambda-signs]factor characters, or [ind]...
  std::string rnu_label;  // character of the stabilizer of nu in R
  RatMat matrix;
};

struct ExtendedOperator {
  RatVec nu;
  bool u_is_identity = true;
  long r_nu_order = 1;
  std::vector<ExtendedBlock> blocks;
};

// Long intertwining operator data at nu.  Requires some u in R with
// u w0 nu = -nu (w0 the long element of the good-root Weyl group); the u
// matching the ambient long element is preferred, then the identity, so
// limits of generic parameters keep their sign pattern.  Throws
// NotHermitian (from heckeops.hpp) when no u works and Pole when a pairing
// hits -1.  For the trivial character on a group of order at most 400 a
// "regular" block holds the full normalized Gram matrix of heckeops.
ExtendedOperator extended_intertwiner(const GoodRootData& data, const RatVec& nu);

// Scalar operators of the three rank-one cases, normalized on the base
// type.  R_triv indexes even characters by k (weight 2k), R_sgn odd ones
// (weight 2k+1), C_triv the (k+1)-dimensional type of the complex case.
enum class RankOneKind { R_triv, R_sgn, C_triv };
Rat rank_one_scalar(RankOneKind kind, long k, const Rat& c);

// Eigenvalue constant of the rank-one factor on the (-l^2)-eigenspace of
// the squared raising operator; 1 for l = 0, 1.
Rat c_constant(long l, const Rat& lambda);

}  // namespace hecke
