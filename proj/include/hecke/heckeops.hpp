#pragma once

/*
  Long intertwining operators on the spherical principal series, and the
  exact signature machinery that turns them into unitarity verdicts.

  The operator is assembled inside the group algebra.  Along a reduced word
  s_{i_1} ... s_{i_l} of the longest element, the factor for letter j is

      -x_j t_{s_{i_j}} - 1,   x_j = <coroot_{i_j}, (s_{i_{j+1}} ... s_{i_l}) chi>,

  and the left-to-right product of the factors is independent of the word.
  Right multiplication by the product realises the operator on the principal
  series, so the matrix entry at (x, y) is the coefficient of y^{-1}x.

  Normalisation divides by the measured trivial-isotypic scalar (the plain
  sum of coefficients), pinning the trivial type to +1.  The closed form
  prod(<coroot, chi> + 1) over the positive coroots is kept as a cross
  check; the measured value equals it times (-1)^(number of positive roots).

  At a Hermitian parameter (w0 chi = -chi, chi dominant) the normalised
  element is inverse-symmetric, its Gram matrix is symmetric, and every
  isotypic block is a real symmetric matrix repeated dim-many times.  The
  block signatures are certified without representation matrices: traces of
  the first d powers of a block are class sums of powers of the element
  paired against the character; Newton's identities give the characteristic
  polynomial; a sign-variation count, exact for real-rooted polynomials,
  gives the inertia.
*/

#include <optional>

#include "hecke/linalg.hpp"
#include "hecke/rootsys.hpp"
#include "hecke/wrep.hpp"

namespace hecke {

// Trivial-isotypic scalar vanished, nothing to normalise by.
struct ZeroNormalization : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Signature requested at a parameter whose operator is not symmetric.
struct NotHermitian : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GroupAlgebraElement {
  std::shared_ptr<const WeylGroup> group;
  std::vector<Rat> coeff;  // indexed by element index
};

// Ordered factor product along the stored reduced word of the longest
// element.
GroupAlgebraElement long_intertwiner(const std::shared_ptr<const WeylGroup>& w,
                                     const Parameter& chi);

// Same product along a caller-supplied reduced word of the longest element;
// exists so tests can confirm word independence.
GroupAlgebraElement long_intertwiner_for_word(
    const std::shared_ptr<const WeylGroup>& w, const Parameter& chi,
    const std::vector<int>& word);

GroupAlgebraElement multiply(const GroupAlgebraElement& a,
                             const GroupAlgebraElement& b);

// Scalar by which the element acts on the trivial / sign isotypic pieces.
Rat trivial_scalar(const GroupAlgebraElement& a);
Rat sign_scalar(const GroupAlgebraElement& a);

// Closed-form normaliser prod(<coroot, chi> + 1).
Rat normalization_factor(const RootDatum& rd, const Parameter& chi);

// Divides by the measured trivial scalar; throws ZeroNormalization.
GroupAlgebraElement normalize(const GroupAlgebraElement& a);

// coeff[u] == coeff[u^{-1}] for all u; equivalent to the Gram matrix below
// being symmetric.
bool is_inverse_symmetric(const GroupAlgebraElement& a);

// Gram matrix of the induced form: entry (x, y) is coeff[y^{-1} x].
Rat matrix_entry(const GroupAlgebraElement& a, std::size_t x, std::size_t y);
RatMat full_matrix(const GroupAlgebraElement& a);

// Class sums of the k-th powers of `a` for k = 1..kmax; result[k-1][c] is
// the sum of the coefficients of a^k over class c.  Coefficients are scaled
// to integers internally; the returned values are exact rationals.
std::vector<std::vector<Rat>> power_class_sums(const GroupAlgebraElement& a,
                                               const ClassData& classes,
                                               std::size_t kmax);

struct TypeVerdict {
  std::string name;
  std::size_t dim = 0;
  bool combined = false;
  SignCounts inertia;
  bool positive = false;  // no negative eigenvalues
};

struct UnitarityCertificate {
  Parameter chi_dominant;
  bool hermitian = false;
  bool unitary = false;
  bool irreducible = false;
  Rat trivial_raw;  // measured scalar before normalisation
  std::vector<TypeVerdict> types;
  std::string method = "exact_charpoly";
};

// Full pipeline: dominant representative, Hermitian test, operator, one
// signature per requested type.  Non-Hermitian parameters come back with
// hermitian = unitary = false and no type entries.
UnitarityCertificate decide_unitarity(const RootDatum& rd, const Parameter& chi,
                                      const std::vector<std::string>& type_names,
                                      std::size_t cap = 2000);

// Same with the built-in relevant list for the datum.
UnitarityCertificate decide_unitarity_relevant(const RootDatum& rd,
                                               const Parameter& chi,
                                               std::size_t cap = 2000);

// Every type in the table (the verdict the relevant list must reproduce).
UnitarityCertificate decide_unitarity_all(const RootDatum& rd,
                                          const Parameter& chi,
                                          std::size_t cap = 2000);

// Cached class data + character table for a group produced by enumerate().
struct WrepData {
  ClassData classes;
  std::vector<WType> table;
};
const WrepData& wrep_data(const std::shared_ptr<const WeylGroup>& w);

enum class PsdMethod { ldlt, charpoly };

struct PsdCertificate {
  bool positive_semidefinite = false;
  SignCounts inertia;
  PsdMethod method = PsdMethod::ldlt;
  bool float_agrees = true;  // advisory cross-check, never the verdict
};

// Exact inertia of a symmetric rational matrix: pivoted LDL^T first, then
// the characteristic polynomial when elimination stalls.
PsdCertificate psd_certify(const RatMat& m);

}  // namespace hecke
