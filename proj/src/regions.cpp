#include "hecke/regions.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "hecke/strings.hpp"

namespace hecke {

namespace {

int ambient_dim_of(const std::string& group) {
  if (group == "A4") return 5;
  if (group == "B4" || group == "C4" || group == "D4" || group == "F4") return 4;
  if (group == "G2") return 3;
  if (group == "E6" || group == "E7" || group == "E8") return 8;
  throw DataFormatError("unknown group " + group);
}

CartanType cartan_of(const std::string& group) {
  if (group == "A4") return CartanType::A;
  if (group == "B4") return CartanType::B;
  if (group == "C4") return CartanType::C;
  if (group == "D4") return CartanType::D;
  if (group == "G2") return CartanType::G2;
  if (group == "F4") return CartanType::F4;
  throw DataFormatError("no enumerable Weyl group for " + group);
}

int weyl_rank_of(const std::string& group) { return group == "G2" ? 2 : 4; }

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

RatVec parse_csv(const std::string& text, const std::string& where) {
  RatVec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw DataFormatError("empty coefficient in " + where);
    out.push_back(rat_from_string(item));
  }
  if (out.empty()) throw DataFormatError("no coefficients in " + where);
  return out;
}

// `c1,...,cn OP p/q` with OP one of < <= > >= =
LinearConstraint parse_constraint(const std::string& text, const std::string& where) {
  static const std::pair<const char*, Relation> kOps[] = {
      {"<=", Relation::le}, {">=", Relation::ge}, {"<", Relation::lt},
      {">", Relation::gt},  {"=", Relation::eq},
  };
  for (const auto& [op, rel] : kOps) {
    std::size_t pos = text.find(op);
    if (pos == std::string::npos) continue;
    LinearConstraint c;
    c.coeffs = parse_csv(trim(text.substr(0, pos)), where);
    c.rel = rel;
    c.bound = rat_from_string(trim(text.substr(pos + std::string(op).size())));
    return c;
  }
  throw DataFormatError("no relation in constraint '" + text + "' (" + where + ")");
}

std::vector<LinearConstraint> parse_constraints(const std::string& payload,
                                                const std::string& where) {
  std::vector<LinearConstraint> out;
  std::stringstream ss(payload);
  std::string part;
  while (std::getline(ss, part, ';')) {
    part = trim(part);
    if (part.empty()) throw DataFormatError("empty constraint in " + where);
    out.push_back(parse_constraint(part, where));
  }
  return out;
}

struct CentToken {
  int mult = 1;
  char kind = '1';  // '1', 'T', 'A', 'B', 'C', 'D', 'G'
  int rank = 0;
  bool long_marker = false;
};

std::vector<CentToken> parse_cent(const std::string& spec, const std::string& where) {
  std::vector<CentToken> out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, '+')) {
    tok = trim(tok);
    if (tok.empty()) throw DataFormatError("empty factor token in " + where);
    CentToken t;
    std::size_t i = 0;
    if (std::isdigit(static_cast<unsigned char>(tok[i]))) {
      std::size_t j = i;
      while (j < tok.size() && std::isdigit(static_cast<unsigned char>(tok[j]))) ++j;
      if (j == tok.size()) {
        if (tok != "1") throw DataFormatError("bad factor token " + tok + " in " + where);
        out.push_back(t);  // kind '1', no slots
        continue;
      }
      t.mult = std::stoi(tok.substr(i, j - i));
      i = j;
    }
    char k = tok[i];
    if (k != 'T' && k != 'A' && k != 'B' && k != 'C' && k != 'D' && k != 'G')
      throw DataFormatError("bad factor kind in token " + tok + " (" + where + ")");
    t.kind = k;
    ++i;
    std::size_t j = i;
    while (j < tok.size() && std::isdigit(static_cast<unsigned char>(tok[j]))) ++j;
    if (j == i) throw DataFormatError("missing rank in token " + tok + " (" + where + ")");
    t.rank = std::stoi(tok.substr(i, j - i));
    i = j;
    if (i < tok.size() && tok[i] == 'l') {
      t.long_marker = true;
      ++i;
    }
    if (i != tok.size()) throw DataFormatError("trailing junk in token " + tok + " (" + where + ")");
    out.push_back(t);
  }
  return out;
}

int cent_slot_count(const std::vector<CentToken>& tokens) {
  int n = 0;
  for (const auto& t : tokens) n += t.mult * t.rank;
  return n;
}

struct Tables {
  std::map<std::string, RegionTable> by_group;
};

TableRow& row_for(RegionTable& table, const std::string& label) {
  for (auto& r : table.rows)
    if (r.orbit == label) return r;
  table.rows.push_back(TableRow{});
  table.rows.back().orbit = label;
  return table.rows.back();
}

// Expected multiset of coordinates for the orbit of a partition: the union
// of the strings ((p-1)/2, (p-3)/2, ..., -(p-1)/2) over its parts.
std::vector<Rat> partition_point_multiset(const std::vector<int>& parts) {
  std::vector<Rat> out;
  for (int p : parts)
    for (int j = 0; j < p; ++j) out.push_back(make_rat(p - 1 - 2 * j, 2));
  std::sort(out.begin(), out.end());
  return out;
}

// Validates that the template at nu=0 carries the partition named by the row
// label: its coordinate multiset (doubled and sign-completed for B/C/D, plus
// the forced 0 in type C) must match the union of the partition strings.
void check_classical_row(const std::string& group, const TableRow& row) {
  std::vector<int> parts;
  for (char c : row.orbit) {
    if (std::isdigit(static_cast<unsigned char>(c))) parts.push_back(c - '0');
    else if (c != '+' && c != '-')
      throw DataFormatError(group + " " + row.orbit + ": bad partition label");
  }
  std::vector<Rat> have;
  for (const auto& v : row.chi_base) have.push_back(v);
  if (group != "A4") {
    for (const auto& v : row.chi_base) have.push_back(-v);
    if (group == "C4") have.push_back(Rat(0));
  }
  std::sort(have.begin(), have.end());
  if (have != partition_point_multiset(parts))
    throw DataFormatError(group + " " + row.orbit + ": template(0) is not the orbit point");
}

void validate_table(RegionTable& table) {
  const std::string& g = table.group;
  const bool classical = (g == "A4" || g == "B4" || g == "C4" || g == "D4");
  for (auto& row : table.rows) {
    const std::string where = g + " " + row.orbit;
    const bool has_template = !row.chi_base.empty();
    if (has_template) {
      if (static_cast<int>(row.chi_base.size()) != table.ambient_dim)
        throw DataFormatError(where + ": template dimension");
      for (const auto& d : row.chi_dirs)
        if (d.size() != row.chi_base.size())
          throw DataFormatError(where + ": direction dimension");
      for (const auto& br : row.region)
        for (const auto& c : br.constraints)
          if (c.coeffs.size() != row.chi_dirs.size())
            throw DataFormatError(where + ": region constraint arity");
    } else if (!row.exception) {
      throw DataFormatError(where + ": row with neither template nor regions");
    } else {
      for (const auto& br : row.region)
        for (const auto& c : br.constraints)
          if (c.coeffs.size() != br.constraints.front().coeffs.size())
            throw DataFormatError(where + ": ragged exception constraints");
    }
    if (classical) {
      if (row.region.empty()) throw DataFormatError(where + ": classical row without region");
      if (!row.centralizer.empty())
        throw DataFormatError(where + ": classical row with annotation");
      check_classical_row(g, row);
    } else if (has_template) {
      if (row.centralizer.empty())
        throw DataFormatError(where + ": table row without annotation");
      auto tokens = parse_cent(row.centralizer, where);
      if (cent_slot_count(tokens) != static_cast<int>(row.chi_dirs.size()))
        throw DataFormatError(where + ": annotation arity vs template directions");
    }
  }
  for (const auto& zr : table.zero_regions)
    for (const auto& c : zr.constraints)
      if (static_cast<int>(c.coeffs.size()) != table.ambient_dim)
        throw DataFormatError(g + " zero region " + zr.label + ": constraint dimension");
}

Tables load_tables() {
  Tables tables;
  const std::string dir = data_dir();
  const char* files[] = {"regions_zero.dat", "tables_classical.dat", "tables_exceptional.dat"};
  for (const char* name : files) {
    const std::string path = dir + "/" + name;
    std::ifstream in(path);
    if (!in) throw DataFormatError("cannot open data file " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty() || line[0] == '#') continue;
      std::stringstream ss(line);
      std::string group, kind, label, payload;
      if (!std::getline(ss, group, '\t') || !std::getline(ss, kind, '\t') ||
          !std::getline(ss, label, '\t') || !std::getline(ss, payload))
        throw DataFormatError(std::string(name) + ":" + std::to_string(lineno) +
                              ": expected 4 tab-separated fields");
      const std::string where = group + " " + label;
      payload = trim(payload);
      auto it = tables.by_group.find(group);
      if (it == tables.by_group.end()) {
        RegionTable t;
        t.group = group;
        t.ambient_dim = ambient_dim_of(group);
        it = tables.by_group.emplace(group, std::move(t)).first;
      }
      RegionTable& table = it->second;
      if (kind == "zero") {
        table.zero_regions.push_back(LinearRegion{label, parse_constraints(payload, where)});
      } else if (kind == "chi") {
        LinearConstraint c = parse_constraint(payload, where);
        if (c.rel != Relation::eq)
          throw DataFormatError(where + ": chi line needs '= k'");
        TableRow& row = row_for(table, label);
        if (c.bound == 0) {
          if (!row.chi_base.empty()) throw DataFormatError(where + ": duplicate template base");
          row.chi_base = c.coeffs;
        } else {
          if (c.bound != Rat(static_cast<int>(row.chi_dirs.size()) + 1))
            throw DataFormatError(where + ": direction index out of order");
          row.chi_dirs.push_back(c.coeffs);
        }
      } else if (kind == "region" || kind == "exc") {
        TableRow& row = row_for(table, label);
        LinearRegion branch;
        branch.label = "(" + std::to_string(row.region.size() + 1) + ")";
        if (payload != "true") branch.constraints = parse_constraints(payload, where);
        row.region.push_back(std::move(branch));
        if (kind == "exc") row.exception = true;
      } else if (kind == "cent") {
        if (payload.rfind("cent:", 0) != 0)
          throw DataFormatError(where + ": cent payload must start with cent:");
        TableRow& row = row_for(table, label);
        if (!row.centralizer.empty()) throw DataFormatError(where + ": duplicate annotation");
        row.centralizer = trim(payload.substr(5));
      } else {
        throw DataFormatError(where + ": unknown line kind " + kind);
      }
    }
  }
  for (auto& [g, table] : tables.by_group) validate_table(table);
  return tables;
}

const Tables& tables() {
  static const Tables t = load_tables();
  return t;
}

bool rat_nonneg(const Rat& v) { return v >= 0; }

// Centralizer-annotation predicate: consumes nu slot by slot.
bool cent_holds(const std::vector<CentToken>& tokens, const RatVec& nu) {
  std::size_t idx = 0;
  auto next = [&]() -> const Rat& { return nu[idx++]; };
  for (const auto& t : tokens) {
    if (t.kind == '1') continue;
    for (int copy = 0; copy < t.mult; ++copy) {
      if (t.kind == 'T') {
        for (int s = 0; s < t.rank; ++s)
          if (next() != 0) return false;
      } else if (t.kind == 'A' && t.rank == 1) {
        const Rat& v = next();
        if (!rat_nonneg(v) || v >= (t.long_marker ? Rat(1) : Rat(1, 2))) return false;
      } else if (t.kind == 'A') {
        const int free_slots = t.rank / 2;
        for (int s = 0; s < free_slots; ++s) {
          const Rat& v = next();
          if (!rat_nonneg(v) || v >= Rat(1, 2)) return false;
        }
        for (int s = free_slots; s < t.rank; ++s)
          if (next() != 0) return false;
      } else if (t.kind == 'G') {
        RatVec slice(t.rank);
        for (int s = 0; s < t.rank; ++s) slice[s] = next();
        if (!zero_cs_membership("G2", slice).unitary) return false;
      } else {  // B, C, D
        CentralizerFactor f;
        f.factor_type = t.kind == 'B' ? FactorType::B
                        : t.kind == 'C' ? FactorType::C
                                        : FactorType::D;
        f.rank = t.rank;
        f.nu.resize(t.rank);
        for (int s = 0; s < t.rank; ++s) {
          f.nu[s] = next();
          if (f.nu[s] < 0) f.nu[s] = -f.nu[s];
        }
        std::sort(f.nu.begin(), f.nu.end());
        if (!zero_cs_predicate(f)) return false;
      }
    }
  }
  return idx == nu.size();
}

// Row predicate on nu; sets *matched to the branch label that held.
bool row_region_holds(const TableRow& row, const RatVec& nu, std::string* matched) {
  if (row.exception || !row.region.empty()) {
    // Exception branches are stated on the canonical chamber nu >= 0 only;
    // other sign representatives never qualify there.  Zero-orbit branches
    // and annotation predicates carry their own domains.
    if (row.exception)
      for (const auto& v : nu)
        if (v < 0) return false;
    for (const auto& br : row.region)
      if (region_contains(br, nu)) {
        if (matched) *matched = br.label;
        return true;
      }
    return false;
  }
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  static std::map<std::string, std::vector<CentToken>> cache;
  auto it = cache.find(row.centralizer);
  if (it == cache.end())
    it = cache.emplace(row.centralizer, parse_cent(row.centralizer, row.orbit)).first;
  if (cent_holds(it->second, nu)) {
    if (matched) *matched = row.centralizer;
    return true;
  }
  return false;
}

int expected_nu_dim(const TableRow& row) {
  if (!row.chi_base.empty()) return static_cast<int>(row.chi_dirs.size());
  if (!row.region.empty() && !row.region.front().constraints.empty())
    return static_cast<int>(row.region.front().constraints.front().coeffs.size());
  return 0;
}

// Exact solve of base + dirs * nu == x; nullopt when inconsistent.
std::optional<RatVec> solve_affine(const RatVec& base, const std::vector<RatVec>& dirs,
                                   const RatVec& x) {
  const std::size_t m = base.size(), k = dirs.size();
  // augmented matrix rows: [dirs | x - base]
  std::vector<RatVec> a(m, RatVec(k + 1));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < k; ++c) a[r][c] = dirs[c][r];
    a[r][k] = x[r] - base[r];
  }
  std::vector<int> pivot_of_col(k, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < k && rank < m; ++col) {
    std::size_t p = rank;
    while (p < m && a[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[rank]);
    const Rat pv = a[rank][col];
    for (auto& v : a[rank]) v /= pv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const Rat f = a[r][col];
      for (std::size_t c = col; c <= k; ++c) a[r][c] -= f * a[rank][c];
    }
    pivot_of_col[col] = static_cast<int>(rank);
    ++rank;
  }
  for (std::size_t r = rank; r < m; ++r)
    if (a[r][k] != 0) return std::nullopt;
  RatVec nu(k, Rat(0));
  for (std::size_t col = 0; col < k; ++col) {
    if (pivot_of_col[col] < 0) return std::nullopt;  // directions are independent in all rows
    nu[col] = a[pivot_of_col[col]][k];
  }
  return nu;
}

// Weyl orbit of chi by closure over the simple reflections.
std::vector<RatVec> weyl_orbit(const RootDatum& rd, const RatVec& chi) {
  std::set<RatVec> seen{chi};
  std::vector<RatVec> queue{chi};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const RatVec cur = queue[q];
    for (int i = 0; i < rd.rank; ++i) {
      RatVec next = rd.reflect_simple(i, cur);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return queue;
}

}  // namespace

bool constraint_holds(const LinearConstraint& c, const RatVec& x) {
  if (c.coeffs.size() != x.size())
    throw DimensionMismatch("constraint arity " + std::to_string(c.coeffs.size()) +
                            " vs vector " + std::to_string(x.size()));
  const Rat v = dot(c.coeffs, x);
  switch (c.rel) {
    case Relation::lt: return v < c.bound;
    case Relation::le: return v <= c.bound;
    case Relation::gt: return v > c.bound;
    case Relation::ge: return v >= c.bound;
    case Relation::eq: return v == c.bound;
  }
  return false;
}

bool region_contains(const LinearRegion& region, const RatVec& x) {
  for (const auto& c : region.constraints)
    if (!constraint_holds(c, x)) return false;
  return true;
}

std::string data_dir() {
  if (const char* env = std::getenv("HECKE_DATA_DIR"); env && *env) return env;
#ifdef HECKE_DATA_DIR_DEFAULT
  return HECKE_DATA_DIR_DEFAULT;
#else
  return "data";
#endif
}

const RegionTable& region_table(const std::string& group) {
  const auto& t = tables();
  auto it = t.by_group.find(group);
  if (it == t.by_group.end()) throw DataFormatError("no data for group " + group);
  return it->second;
}

std::string canonical_orbit_label(const std::string& label) {
  bool has_letter = false;
  for (char c : label)
    if (std::isalpha(static_cast<unsigned char>(c))) has_letter = true;
  std::string out;
  if (!has_letter) {
    std::string sign;
    for (char c : label) {
      if (std::isdigit(static_cast<unsigned char>(c))) out += c;
      else if (c == '+' || c == '-') sign = c;
    }
    return out + sign;
  }
  for (std::size_t i = 0; i < label.size(); ++i) {
    char c = label[i];
    if (c == '~') {
      // tilde'd type: move the marker behind the name, "~A1" -> "A1t"
      std::size_t j = i + 1;
      while (j < label.size() &&
             (std::isalnum(static_cast<unsigned char>(label[j])))) {
        out += label[j];
        ++j;
      }
      out += 't';
      i = j - 1;
      continue;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '+')
      out += c;
  }
  return out;
}

RatVec zero_cs_chi(const std::string& group, const RatVec& nu) {
  if (group == "G2") {
    if (nu.size() != 2) throw DimensionMismatch("G2 slice wants 2 coordinates");
    return {nu[0], nu[0] + nu[1], -2 * nu[0] - nu[1]};
  }
  if (group == "E6") {
    if (nu.size() != 4) throw DimensionMismatch("E6 slice wants 4 coordinates");
    const Rat d = (nu[0] - nu[1]) / 2, s = (nu[0] + nu[1]) / 2;
    return {d - nu[2], d - nu[3], d + nu[3], d + nu[2], s, -s, -s, s};
  }
  if (group == "E7") {
    if (nu.size() != 7) throw DimensionMismatch("E7 slice wants 7 coordinates");
    return {nu[0], nu[1], nu[2], nu[3], nu[4], nu[5], -nu[6], nu[6]};
  }
  return nu;
}

namespace {

RatVec zero_cs_ambient(const std::string& group, const RatVec& chi_or_nu) {
  const int ambient = ambient_dim_of(group);
  RatVec chi = chi_or_nu;
  const bool slice_sized =
      (group == "G2" && chi.size() == 2) || (group == "E6" && chi.size() == 4) ||
      (group == "E7" && chi.size() == 7);
  if (slice_sized) chi = zero_cs_chi(group, chi);
  if (static_cast<int>(chi.size()) != ambient)
    throw DimensionMismatch(group + ": parameter has " + std::to_string(chi_or_nu.size()) +
                            " coordinates");
  if (group == "G2" || group == "F4") {
    const RootDatum rd = build(cartan_of(group), weyl_rank_of(group));
    chi = make_dominant(rd, Parameter{chi}).first.chi;
  }
  return chi;
}

}  // namespace

ZeroCsResult zero_cs_membership(const std::string& group, const RatVec& chi_or_nu) {
  const RegionTable& table = region_table(group);
  if (table.zero_regions.empty())
    throw DataFormatError(group + " carries no zero-orbit regions");
  const RatVec chi = zero_cs_ambient(group, chi_or_nu);
  for (const auto& r : table.zero_regions)
    if (region_contains(r, chi)) return {true, r.label};
  return {false, ""};
}

std::vector<std::string> zero_cs_matches(const std::string& group, const RatVec& chi_or_nu) {
  const RegionTable& table = region_table(group);
  const RatVec chi = zero_cs_ambient(group, chi_or_nu);
  std::vector<std::string> out;
  for (const auto& r : table.zero_regions)
    if (region_contains(r, chi)) out.push_back(r.label);
  return out;
}

bool table_verdict(const std::string& group, const std::string& orbit_label,
                   const RatVec& nu) {
  const RegionTable& table = region_table(group);
  const std::string label = canonical_orbit_label(orbit_label);
  for (const auto& row : table.rows) {
    if (row.orbit != label) continue;
    if (static_cast<int>(nu.size()) != expected_nu_dim(row))
      throw DimensionMismatch(group + " " + label + " wants " +
                              std::to_string(expected_nu_dim(row)) + " parameters");
    return row_region_holds(row, nu, nullptr);
  }
  throw UnknownOrbit(group + " has no row " + label);
}

RatVec row_chi(const TableRow& row, const RatVec& nu) {
  if (nu.size() != row.chi_dirs.size())
    throw DimensionMismatch(row.orbit + " template wants " +
                            std::to_string(row.chi_dirs.size()) + " parameters");
  RatVec chi = row.chi_base;
  for (std::size_t k = 0; k < nu.size(); ++k)
    chi = add(chi, scale(nu[k], row.chi_dirs[k]));
  return chi;
}

std::optional<RowMatch> match_row(const std::string& group, const RatVec& chi) {
  const RegionTable& table = region_table(group);
  if (static_cast<int>(chi.size()) != table.ambient_dim)
    throw DimensionMismatch(group + ": parameter has " + std::to_string(chi.size()) +
                            " coordinates");
  const RootDatum rd = build(cartan_of(group), weyl_rank_of(group));
  const std::vector<RatVec> orbit = weyl_orbit(rd, chi);
  for (const auto& row : table.rows) {
    if (row.chi_base.empty()) continue;
    std::optional<RatVec> fallback;
    for (const auto& x : orbit) {
      auto nu = solve_affine(row.chi_base, row.chi_dirs, x);
      if (!nu) continue;
      if (row_region_holds(row, *nu, nullptr)) return RowMatch{row.orbit, *nu};
      // Prefer a nonnegative representative when reporting a miss.
      const bool nonneg =
          std::none_of(nu->begin(), nu->end(), [](const Rat& v) { return v < 0; });
      if (!fallback || (nonneg && std::any_of(fallback->begin(), fallback->end(),
                                              [](const Rat& v) { return v < 0; })))
        fallback = *nu;
    }
    if (fallback) return RowMatch{row.orbit, *fallback};
  }
  return std::nullopt;
}

GroupVerdict group_verdict(const std::string& group, const RatVec& chi) {
  GroupVerdict out;
  if (auto m = match_row(group, chi)) {
    out.orbit = m->orbit;
    out.nu = m->nu;
    const RegionTable& table = region_table(group);
    for (const auto& row : table.rows)
      if (row.orbit == m->orbit) {
        out.unitary = row_region_holds(row, m->nu, &out.matched);
        break;
      }
    return out;
  }
  const ZeroCsResult z = zero_cs_membership(group, chi);
  out.unitary = z.unitary;
  out.matched = z.matched;
  out.nu = chi;
  return out;
}

std::pair<Rat, Rat> example_461_scalars(int n, int k, int m, const Rat& nu) {
  if (m < 0 || m > k || n < 0)
    throw std::invalid_argument("example_461_scalars wants 0 <= m <= k");
  Rat first(1), extra(1);
  for (int j = 0; j < m; ++j) {
    const Rat a = make_rat(2 * n + k - 2 * j, 2);  // n + k/2 - j
    const Rat b = make_rat(k - 2 * j, 2);          // k/2 - j
    if (a + nu == 0 || b + nu == 0)
      throw PoleAtNu("denominator vanishes at j=" + std::to_string(j));
    first *= (a - nu) / (a + nu);
    extra *= (b - nu) / (b + nu);
  }
  return {first, first * extra};
}

}  // namespace hecke
