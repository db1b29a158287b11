#pragma once

/*
  Weyl group representation data: conjugacy classes and exact character
  tables, enough to run signature computations without ever materialising a
  representation matrix for the large groups.

  Tables:
    A_n      characters of S_{n+1} by the Murnaghan-Nakayama rule, rows
             indexed by partitions of n+1;
    B_n/C_n  hyperoctahedral characters by the wreath-product rule, rows
             indexed by ordered pairs of partitions (lambda, mu) with
             |lambda| + |mu| = n; (n)x(0) is trivial, (0)x(1^n) is sign;
    D_n      restrictions of the B_n rows.  An unordered pair {lambda, mu}
             with lambda != mu restricts irreducibly; lambda == mu restricts
             to a sum of two irreducibles which is kept as one block and
             flagged `combined` (positivity of the block is equivalent to
             positivity of both halves, traces just add);
    G2       hand-checked 6x6 table;
    F4       25x25 table frozen in src/f4data.cpp, validated by
             orthogonality in the test suite.

  Class labels follow the coordinate action: cycle types for A_n, signed
  cycle types for B/C/D (a cycle is negative when its sign product is -1).
*/

#include <string>
#include <vector>

#include "hecke/rootsys.hpp"

namespace hecke {

// Weakly decreasing positive parts, e.g. {4,1,1}; empty = partition of 0.
using Partition = std::vector<int>;

std::string partition_to_string(const Partition& p);    // "(4,1,1)", "(0)"
std::string bipartition_to_string(const Partition& lambda, const Partition& mu);

std::vector<Partition> partitions_of(int n);

// S_m character chi_lambda at cycle type mu (|lambda| = |mu| = m).
long sn_character(const Partition& lambda, const Partition& mu);

// Hyperoctahedral character chi_{(lambda,mu)} at the class with positive
// cycle type alpha and negative cycle type beta.
long bn_character(const Partition& lambda, const Partition& mu,
                  const Partition& alpha, const Partition& beta);

struct ClassData {
  std::vector<std::size_t> class_of;         // element index -> class index
  std::vector<std::size_t> class_size;
  std::vector<std::size_t> representative;   // a shortest element per class
};

// Orbits of the conjugation action; uses the group's multiplication table.
ClassData conjugacy_classes(const WeylGroup& w);

struct WType {
  std::string name;
  std::size_t dim = 0;
  std::vector<Rat> on_class;  // character value per conjugacy class index
  bool combined = false;      // D_n split pair kept as a single block
};

// Full character table of the Weyl group, rows aligned with `classes`.
// Throws UnsupportedDatum for the data-only E types.
std::vector<WType> character_table(const WeylGroup& w, const ClassData& classes);

// Names of the W-types whose positivity already decides unitarity.
std::vector<std::string> relevant_type_names(CartanType type, int rank);

// Returns the rows of `table` matching `names` in order; throws
// std::invalid_argument when a name is missing.
std::vector<WType> select_types(const std::vector<WType>& table,
                                const std::vector<std::string>& names);

}  // namespace hecke
