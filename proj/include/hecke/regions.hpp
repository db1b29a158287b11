#pragma once

// Complementary-series region data and membership predicates.
//
// Three layers:
//  - zero-orbit unitary regions for G2, F4, E6, E7, E8: unions of alcoves cut
//    out by coroot pairings, loaded from plain-text data files,
//  - per-orbit unitary regions for the rank-4 classical tables (A4, B4, C4,
//    D4) and the G2, F4 tables, where each row carries an affine template
//    chi(nu) and either explicit constraints or a centralizer annotation that
//    a small interpreter turns into a predicate,
//  - closed-form intertwiner scalars for the two-row maximal-parabolic family
//    in odd orthogonal groups (example_461_scalars).
//
// All data lives under data/ (override with HECKE_DATA_DIR). Region checks
// run in listed order; the first matching region label is reported.

#include <hecke/rational.hpp>
#include <hecke/rootsys.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownOrbit : std::runtime_error {
  explicit UnknownOrbit(const std::string& what) : std::runtime_error(what) {}
};

struct PoleAtNu : std::runtime_error {
  explicit PoleAtNu(const std::string& what) : std::runtime_error(what) {}
};

struct DataFormatError : std::runtime_error {
  explicit DataFormatError(const std::string& what) : std::runtime_error(what) {}
};

enum class Relation { lt, le, gt, ge, eq };

// dot(coeffs, x) REL bound
struct LinearConstraint {
  RatVec coeffs;
  Relation rel;
  Rat bound;
};

struct LinearRegion {
  std::string label;
  std::vector<LinearConstraint> constraints;
};

bool constraint_holds(const LinearConstraint& c, const RatVec& x);
bool region_contains(const LinearRegion& region, const RatVec& x);

// One table row. chi(nu) = chi_base + sum_k nu[k] * chi_dirs[k]. Classical
// rows carry explicit region branches (union); G2/F4 rows carry a centralizer
// annotation instead, except rows flagged `exception` whose printed region
// replaces the annotation rule.
struct TableRow {
  std::string orbit;
  RatVec chi_base;
  std::vector<RatVec> chi_dirs;
  std::vector<LinearRegion> region;
  std::string centralizer;
  bool exception = false;
};

struct RegionTable {
  std::string group;
  int ambient_dim = 0;
  std::vector<LinearRegion> zero_regions;
  std::vector<TableRow> rows;
};

// Directory containing the .dat files: HECKE_DATA_DIR if set, else the
// compiled-in default next to the sources.
std::string data_dir();

// Loads (and caches) the data for one group. Groups: A4 B4 C4 D4 G2 F4 carry
// table rows; G2 F4 E6 E7 E8 carry zero regions; E7 E8 additionally carry
// exception rows without templates.
const RegionTable& region_table(const std::string& group);

// Normalizes an orbit label for lookup: partition labels keep only digits and
// a +/- suffix ("(2,2,2,2)+" -> "2222+"); named labels keep letters, digits,
// parentheses, '+' and 't' ("A1+~A1" is written "A1+A1t").
std::string canonical_orbit_label(const std::string& label);

// Maps a slice parameter to the ambient chi used by the zero-region
// constraints: G2 (nu1,nu2) -> 3 coords, E6 (nu1..nu4) -> 8 coords,
// E7 (nu1..nu7) -> 8 coords; F4 and E8 are identity maps.
RatVec zero_cs_chi(const std::string& group, const RatVec& nu);

struct ZeroCsResult {
  bool unitary = false;
  std::string matched;  // label of the first matching region
};

// Zero-orbit membership. Accepts the ambient chi or the printed slice
// parameter (dimension decides). For G2 and F4 the input is replaced by its
// dominant representative first; for E-types the caller supplies a dominant
// parameter. Regions are tested in listed order.
ZeroCsResult zero_cs_membership(const std::string& group, const RatVec& chi_or_nu);

// All matching region labels (the lists should be pairwise disjoint; more
// than one entry reports an overlap instead of masking it).
std::vector<std::string> zero_cs_matches(const std::string& group, const RatVec& chi_or_nu);

// Row verdict: true iff nu lies in the row's unitary region. For G2/F4 rows
// this interprets the centralizer annotation (T* slots vanish, A1 -> [0,1/2),
// A1l -> [0,1), Ak -> trailing k-[k/2] slots vanish and the rest sit in
// [0,1/2), B/C/D factors use the zero-orbit predicate of the matching dual
// type, G2 uses its own zero regions), unless the row is an exception row
// with an explicit printed region.
bool table_verdict(const std::string& group, const std::string& orbit_label, const RatVec& nu);

RatVec row_chi(const TableRow& row, const RatVec& nu);

struct RowMatch {
  std::string orbit;
  RatVec nu;
};

// Finds the table row whose template hits the W-orbit of chi, trying rows in
// listed (decreasing closure) order and returning the first solution. Returns
// nullopt when only the zero orbit fits.
std::optional<RowMatch> match_row(const std::string& group, const RatVec& chi);

// Combined verdict for a parameter of one of the table groups: first match_row,
// then the row region; parameters matching no row fall through to the
// zero-orbit regions.
struct GroupVerdict {
  bool unitary = false;
  std::string orbit;  // empty for the zero orbit
  RatVec nu;
  std::string matched;  // zero-region label when orbit is empty
};
GroupVerdict group_verdict(const std::string& group, const RatVec& chi);

// Scalars of the two multiplicity-one operator families for the Levi
// sp(2n) x gl(k) inside sp(2n+2k): entry m of each family, 0 <= m <= k.
// First value: product over j < m of (n+k/2-j-nu)/(n+k/2-j+nu); second value:
// the same product times prod over j < m of (k/2-j-nu)/(k/2-j+nu).
std::pair<Rat, Rat> example_461_scalars(int n, int k, int m, const Rat& nu);

}  // namespace hecke
