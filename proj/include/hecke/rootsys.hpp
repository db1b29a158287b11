#pragma once

/*
  Root data and Weyl groups.

  Coordinate models (chosen so that printed parameter vectors can be used
  verbatim):
    A_n   on n+1 coordinates, roots e_i - e_j;
    B_n   on n coordinates, short roots e_i with coroots 2 e_i;
    C_n   on n coordinates, long roots 2 e_i with coroots e_i;
    D_n   on n coordinates;
    G2    on 3 sum-zero coordinates, long simple (2,-1,-1), short (-1,1,0);
    F4    on 4 coordinates, simples (1,-1,-1,-1)/2, e4, e3-e4, e2-e3;
    E6/7/8 on 8 coordinates (data only; the Weyl groups are too large for
    the enumeration cap and no operator is ever built for them here).

  Coroots are stored alongside their roots and propagated through
  reflections; they are never recomputed from root lengths.

  A Weyl group element is identified with its permutation of the full root
  list, which is faithful and makes composition a byte-table lookup.  The
  ambient matrix and a reduced word are kept for callers.
*/

#include <cstdint>
#include <memory>
#include <stdexcept>

#include "hecke/linalg.hpp"
#include "hecke/rational.hpp"

namespace hecke {

enum class CartanType { A, B, C, D, G2, F4, E6, E7, E8 };

std::string cartan_name(CartanType type);
CartanType cartan_from_name(const std::string& name);

struct UnsupportedDatum : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RootDatum {
  CartanType cartan_type;
  int rank = 0;
  int ambient_dim = 0;
  std::vector<RatVec> simple_roots;
  std::vector<RatVec> simple_coroots;
  std::vector<RatVec> positive_roots;
  std::vector<RatVec> positive_coroots;  // positive_coroots[k] matches positive_roots[k]

  Rat pairing(const RatVec& coroot, const RatVec& v) const { return dot(coroot, v); }

  // v - <coroot_i, v> root_i
  RatVec reflect_simple(int i, const RatVec& v) const;

  bool weyl_enumerable() const {
    return cartan_type != CartanType::E6 && cartan_type != CartanType::E7 &&
           cartan_type != CartanType::E8;
  }

  // True when the parameter is weakly dominant: <coroot_i, chi> >= 0 for all i.
  bool is_dominant(const RatVec& chi) const;
};

// Standard integral Cartan matrix <coroot_i, root_j>.
RatMat cartan_matrix(const RootDatum& rd);

RootDatum build(CartanType type, int rank);

struct Parameter {
  RatVec chi;
};

struct WeylElement {
  RatMat matrix;          // ambient_dim x ambient_dim, orthogonal
  std::vector<int> word;  // reduced when produced by this module
};

// Matrix action of w on an ambient vector.  (Named to dodge std::apply,
// which ADL would otherwise drag into every call with a std::vector.)
RatVec act(const WeylElement& w, const RatVec& v);

class WeylGroup {
 public:
  // Breadth-first closure over the simple reflections; throws CapExceeded if
  // the group is larger than `cap` or the datum is data-only.
  static std::shared_ptr<const WeylGroup> enumerate(const RootDatum& rd,
                                                    std::size_t cap = 2000);

  const RootDatum& datum() const { return datum_; }
  std::size_t size() const { return elements_.size(); }
  const WeylElement& element(std::size_t i) const { return elements_[i]; }
  const std::vector<WeylElement>& elements() const { return elements_; }

  std::size_t identity() const { return 0; }
  std::size_t simple(int i) const { return simple_index_[i]; }
  std::size_t longest() const { return longest_; }

  std::size_t compose(std::size_t x, std::size_t y) const;  // x*y
  std::size_t inverse(std::size_t x) const;
  std::size_t length(std::size_t x) const { return elements_[x].word.size(); }

  // Right translation x -> x * s_i without consulting the full table.
  std::size_t right_simple(std::size_t x, int i) const {
    return right_by_simple_[i][x];
  }

  // Index of the element acting on roots by `perm`; npos when absent.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t index_of_root_perm(const std::vector<std::uint16_t>& perm) const;

  // Permutation of the full root list (positives then their negatives).
  const std::vector<std::uint16_t>& root_perm(std::size_t x) const {
    return root_perms_[x];
  }
  std::size_t root_count() const { return n_roots_; }  // positives only

  // Order of the cyclic group generated by element x.
  std::size_t element_order(std::size_t x) const;

 private:
  WeylGroup() = default;
  void build_tables() const;

  RootDatum datum_;
  std::size_t n_roots_ = 0;
  std::vector<WeylElement> elements_;
  std::vector<std::vector<std::uint16_t>> root_perms_;
  std::vector<std::size_t> simple_index_;
  std::vector<std::vector<std::uint32_t>> right_by_simple_;
  std::size_t longest_ = 0;

  mutable std::vector<std::uint16_t> mult_;  // built on first compose()
  mutable std::vector<std::uint16_t> inv_;
};

// --- operations ------------------------------------------------------------

std::shared_ptr<const WeylGroup> enumerate_weyl(const RootDatum& rd,
                                                std::size_t cap = 2000);

// Longest element, built greedily; works for every supported type including
// the data-only E series (no enumeration required).
WeylElement longest_element(const RootDatum& rd);

// Up to k distinct reduced words for w, found by descent backtracking.
std::vector<std::vector<int>> all_reduced_words_sample(const RootDatum& rd,
                                                       const WeylElement& w,
                                                       std::size_t k);

// Weakly dominant representative and an element carrying chi to it.
std::pair<Parameter, WeylElement> make_dominant(const RootDatum& rd,
                                                const Parameter& chi);

// w0 * chi == -chi?
bool is_hermitian_point(const RootDatum& rd, const Parameter& chi);

WeylElement element_from_word(const RootDatum& rd, const std::vector<int>& word);

}  // namespace hecke
