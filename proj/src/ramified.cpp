#include "hecke/ramified.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hecke/heckeops.hpp"

namespace hecke {

namespace {

RatVec negated(const RatVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

bool rat_is_odd(const Rat& r) {
  return mpz_odd_p(r.get_num().get_mpz_t()) != 0;
}

// Character value on an integral lattice vector; integrality is the
// caller's responsibility.
int chi_value(const DeltaCharacter& delta, const RatVec& v) {
  int out = 1;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (delta.signs[j] < 0 && rat_is_odd(v[j])) out = -out;
  }
  return out;
}

bool is_trivial(const DeltaCharacter& delta) {
  for (int s : delta.signs) {
    if (s < 0) return false;
  }
  return true;
}

RatVec unit_vec(int dim, int i) {
  RatVec v(dim, Rat(0));
  v[i] = 1;
  return v;
}

// Basis of the lattice on which sign vectors are separated; two vectors
// agreeing on these generators define the same character.
std::vector<RatVec> m_lattice_generators(const RootDatum& rd) {
  const int dim = rd.ambient_dim;
  std::vector<RatVec> gens;
  auto diff = [&](int i, int j) {
    RatVec v(dim, Rat(0));
    v[i] = 1;
    v[j] = -1;
    return v;
  };
  switch (rd.cartan_type) {
    case CartanType::A:
      for (int i = 0; i + 1 < dim; ++i) gens.push_back(diff(i, i + 1));
      break;
    case CartanType::B:
    case CartanType::C:
      for (int i = 0; i < dim; ++i) gens.push_back(unit_vec(dim, i));
      break;
    case CartanType::D:
    case CartanType::F4: {
      for (int i = 0; i + 1 < dim; ++i) gens.push_back(diff(i, i + 1));
      RatVec v(dim, Rat(0));
      v[dim - 2] = 1;
      v[dim - 1] = 1;
      gens.push_back(v);
      break;
    }
    default:
      throw UnsupportedDatum("no separating lattice for this ambient type");
  }
  return gens;
}

long factorial(int n) {
  long out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

long weyl_order(char letter, int r) {
  switch (letter) {
    case 'A':
      return factorial(r + 1);
    case 'B':
    case 'C':
      return (1L << r) * factorial(r);
    case 'D':
      return (1L << (r - 1)) * factorial(r);
    case 'F':
      return 1152;
    case 'G':
      return 12;
    default:
      throw std::logic_error("weyl_order: unknown letter");
  }
}

int span_rank(const std::vector<RatVec>& vecs) {
  if (vecs.empty()) return 0;
  std::vector<RatVec> rows;
  for (const RatVec& v : vecs) {
    RatVec r = v;
    for (const RatVec& piv : rows) {
      std::size_t lead = 0;
      while (lead < piv.size() && piv[lead] == 0) ++lead;
      if (lead < piv.size() && r[lead] != 0) {
        Rat f = r[lead] / piv[lead];
        for (std::size_t j = 0; j < r.size(); ++j) r[j] -= f * piv[j];
      }
    }
    if (!is_zero(r)) {
      // Keep rows in echelon shape: sort point is the leading index.
      rows.push_back(r);
      std::sort(rows.begin(), rows.end(), [](const RatVec& a, const RatVec& b) {
        std::size_t la = 0, lb = 0;
        while (la < a.size() && a[la] == 0) ++la;
        while (lb < b.size() && b[lb] == 0) ++lb;
        return la < lb;
      });
    }
  }
  return static_cast<int>(rows.size());
}

// Label for one connected set of roots.  Connectivity is the caller's
// choice (shared coordinates for the printed shape, non-orthogonality for
// the Weyl factors); the counts below do not depend on it.
std::string classify_component(CartanType ambient, const std::vector<RatVec>& roots) {
  const std::size_t npos = roots.size();
  if (npos == 1) return "A1";

  std::set<int> support;
  for (const RatVec& r : roots) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[j] != 0) support.insert(static_cast<int>(j));
    }
  }
  const int s = static_cast<int>(support.size());
  const int r = span_rank(roots);

  std::set<Rat> norms;
  for (const RatVec& v : roots) norms.insert(dot(v, v));
  if (norms.size() == 1) {
    if (s == r + 1 && npos == static_cast<std::size_t>(r * (r + 1) / 2))
      return "A" + std::to_string(r);
    if (s == r && r >= 2 && npos == static_cast<std::size_t>(r * (r - 1)))
      return "D" + std::to_string(r);
    throw std::logic_error("classify_component: unrecognized single-norm set");
  }
  if (norms.size() != 2)
    throw std::logic_error("classify_component: more than two root norms");

  if (npos == 24 && r == 4) return "F4";
  if (npos == 6 && r == 2) return "G2";
  if (npos == static_cast<std::size_t>(r) * static_cast<std::size_t>(r)) {
    const Rat big = *norms.rbegin();
    std::size_t nlong = 0;
    for (const RatVec& v : roots) {
      if (dot(v, v) == big) ++nlong;
    }
    const std::size_t nshort = npos - nlong;
    if (nlong == static_cast<std::size_t>(r) && nshort != nlong)
      return "C" + std::to_string(r);
    if (nshort == static_cast<std::size_t>(r) && nshort != nlong)
      return "B" + std::to_string(r);
    // B2 and C2 have the same counts; inherit the ambient letter.
    return (ambient == CartanType::B ? "B" : "C") + std::to_string(r);
  }
  throw std::logic_error("classify_component: unrecognized two-norm set");
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

RatMat identity_matrix(std::size_t n) {
  RatMat m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool mat_eq(const RatMat& a, const RatMat& b) {
  if (a.n != b.n) return false;
  for (std::size_t i = 0; i < a.a.size(); ++i) {
    if (a.a[i] != b.a[i]) return false;
  }
  return true;
}

RatVec mat_vec(const RatMat& m, const RatVec& v) {
  RatVec out(m.n, Rat(0));
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = 0; j < m.n; ++j) out[i] += m.at(i, j) * v[j];
  }
  return out;
}

// x - <coroot, x> root
RatMat reflection_matrix(std::size_t dim, const RatVec& root, const RatVec& coroot) {
  RatMat s = identity_matrix(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) s.at(i, j) -= root[i] * coroot[j];
  }
  return s;
}

std::string mat_key(const RatMat& m) {
  std::ostringstream os;
  for (const Rat& x : m.a) os << x.get_str() << ';';
  return os.str();
}

}  // namespace

DeltaCharacter delta_trivial(int dim) {
  if (dim <= 0) throw std::invalid_argument("delta_trivial: dim must be positive");
  return DeltaCharacter{std::vector<int>(static_cast<std::size_t>(dim), 1)};
}

DeltaCharacter delta_block(int dim, int p) {
  if (dim <= 0 || p < 0 || p > dim)
    throw std::invalid_argument("delta_block: need 0 <= p <= dim");
  DeltaCharacter d = delta_trivial(dim);
  for (int i = dim - p; i < dim; ++i) d.signs[static_cast<std::size_t>(i)] = -1;
  return d;
}

DeltaCharacter delta_from_string(const std::string& text) {
  if (text.empty()) throw ParseError("empty sign character");
  DeltaCharacter d;
  for (char c : text) {
    if (c == '+') {
      d.signs.push_back(1);
    } else if (c == '-') {
      d.signs.push_back(-1);
    } else {
      throw ParseError(std::string("bad sign character letter '") + c + "'");
    }
  }
  return d;
}

std::string delta_to_string(const DeltaCharacter& delta) {
  std::string out;
  for (int s : delta.signs) out.push_back(s > 0 ? '+' : '-');
  return out;
}

int delta_on_m_alpha(const DeltaCharacter& delta, const RatVec& coroot) {
  if (coroot.size() != delta.signs.size())
    throw std::invalid_argument("delta_on_m_alpha: dimension mismatch");
  if (is_trivial(delta)) return 1;
  for (const Rat& c : coroot) {
    if (!rat_is_integer(c))
      throw NonIntegralCoroot("coroot leaves the integral lattice");
  }
  return chi_value(delta, coroot);
}

GoodRootData good_root_data(CartanType type, int rank, const DeltaCharacter& delta,
                            std::size_t cap) {
  RootDatum rd = build(type, rank);
  if (!rd.weyl_enumerable())
    throw UnsupportedDatum("good-root data needs an enumerable Weyl group");
  if (static_cast<int>(delta.signs.size()) != rd.ambient_dim)
    throw std::invalid_argument("good_root_data: sign character has wrong length");
  for (int s : delta.signs) {
    if (s != 1 && s != -1)
      throw std::invalid_argument("good_root_data: sign entries must be +1 or -1");
  }

  GoodRootData out;
  out.ambient_type = type;
  out.ambient_rank = rank;
  out.delta = delta;
  const bool trivial = is_trivial(delta);

  for (std::size_t k = 0; k < rd.positive_roots.size(); ++k) {
    const int val = trivial ? 1 : delta_on_m_alpha(delta, rd.positive_coroots[k]);
    if (val == 1) {
      out.good_roots.push_back(rd.positive_roots[k]);
      out.good_coroots.push_back(rd.positive_coroots[k]);
    }
  }
  const std::size_t ngood = out.good_roots.size();

  // Printed shape: components of the coordinate-support graph.
  {
    UnionFind uf(rd.ambient_dim);
    std::vector<int> anchor(ngood, -1);
    for (std::size_t k = 0; k < ngood; ++k) {
      int first = -1;
      for (int j = 0; j < rd.ambient_dim; ++j) {
        if (out.good_roots[k][static_cast<std::size_t>(j)] != 0) {
          if (first < 0) {
            first = j;
          } else {
            uf.unite(first, j);
          }
        }
      }
      anchor[k] = first;
    }
    std::map<int, std::vector<std::size_t>> comps;  // keyed by min coordinate
    for (std::size_t k = 0; k < ngood; ++k) comps[uf.find(anchor[k])].push_back(k);
    std::vector<std::pair<int, std::vector<std::size_t>>> ordered;
    for (auto& [root_coord, idx] : comps) {
      int min_coord = rd.ambient_dim;
      for (std::size_t k : idx) min_coord = std::min(min_coord, anchor[k]);
      ordered.emplace_back(min_coord, idx);
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [coord, idx] : ordered) {
      std::vector<RatVec> roots;
      for (std::size_t k : idx) roots.push_back(out.good_roots[k]);
      out.subsystem_type.push_back(classify_component(type, roots));
    }
  }

  // Weyl factors: components under non-orthogonality.
  {
    UnionFind uf(static_cast<int>(ngood == 0 ? 1 : ngood));
    for (std::size_t k = 0; k < ngood; ++k) {
      for (std::size_t l = k + 1; l < ngood; ++l) {
        if (dot(out.good_roots[k], out.good_coroots[l]) != 0)
          uf.unite(static_cast<int>(k), static_cast<int>(l));
      }
    }
    std::map<int, std::vector<std::size_t>> comps;
    for (std::size_t k = 0; k < ngood; ++k) comps[uf.find(static_cast<int>(k))].push_back(k);
    out.w_delta0_order = 1;
    for (const auto& [rep, idx] : comps) {
      SubsystemFactor f;
      for (std::size_t k : idx) {
        f.positive_roots.push_back(out.good_roots[k]);
        f.positive_coroots.push_back(out.good_coroots[k]);
      }
      f.label = classify_component(type, f.positive_roots);
      f.rank = std::stoi(f.label.substr(1));
      // Reflection classes by root norm, largest norm first.
      std::map<Rat, std::vector<std::size_t>, std::greater<Rat>> by_norm;
      for (std::size_t i = 0; i < f.positive_roots.size(); ++i)
        by_norm[dot(f.positive_roots[i], f.positive_roots[i])].push_back(i);
      for (auto& [norm, members] : by_norm) f.classes.push_back(members);
      if (f.classes.size() > 2)
        throw std::logic_error("good_root_data: factor with more than two norms");
      out.w_delta0_order *= weyl_order(f.label[0], f.rank);
      out.factors.push_back(std::move(f));
    }
  }

  // Stabilizer scan.
  auto wg = enumerate_weyl(rd, cap);
  if (trivial) {
    out.w_delta_order = static_cast<long>(wg->size());
    out.r_elements.push_back(wg->element(wg->identity()));
  } else {
    const std::vector<RatVec> gens = m_lattice_generators(rd);
    std::vector<int> gen_vals;
    for (const RatVec& g : gens) gen_vals.push_back(chi_value(delta, g));
    std::set<RatVec> goodset(out.good_roots.begin(), out.good_roots.end());
    out.w_delta_order = 0;
    for (const WeylElement& w : wg->elements()) {
      bool stab = true;
      for (std::size_t i = 0; i < gens.size() && stab; ++i) {
        const RatVec image = act(w, gens[i]);
        for (const Rat& c : image) {
          if (!rat_is_integer(c))
            throw std::logic_error("good_root_data: lattice not stable under W");
        }
        stab = chi_value(delta, image) == gen_vals[i];
      }
      if (!stab) continue;
      ++out.w_delta_order;
      bool preserves = true;
      for (std::size_t k = 0; k < ngood && preserves; ++k)
        preserves = goodset.count(act(w, out.good_roots[k])) > 0;
      if (preserves) out.r_elements.push_back(w);
    }
  }

  if (out.w_delta_order % out.w_delta0_order != 0)
    throw std::logic_error("good_root_data: reflection part does not divide stabilizer");
  out.r_group_order = out.w_delta_order / out.w_delta0_order;
  if (static_cast<long>(out.r_elements.size()) != out.r_group_order)
    throw std::logic_error("good_root_data: complement count mismatch");
  if ((out.r_group_order & (out.r_group_order - 1)) != 0)
    throw std::logic_error("good_root_data: complement is not a 2-group");
  return out;
}

long r_group_at_nu(const GoodRootData& data, const RatVec& nu) {
  if (data.r_elements.empty() || nu.size() != data.r_elements[0].matrix.n)
    throw std::invalid_argument("r_group_at_nu: parameter has wrong length");
  long count = 0;
  for (const WeylElement& r : data.r_elements) {
    if (act(r, nu) == nu) ++count;
  }
  return count;
}

namespace {

struct Slot {
  std::size_t factor = 0;
  std::size_t cls = 0;
};

std::string chi_label(const GoodRootData& gd, const std::vector<Slot>& slots,
                      const std::vector<int>& assign) {
  if (gd.factors.empty()) return "triv";
  std::vector<std::vector<int>> per_factor(gd.factors.size());
  for (std::size_t s = 0; s < slots.size(); ++s)
    per_factor[slots[s].factor].push_back(assign[s]);
  std::string out;
  for (std::size_t f = 0; f < gd.factors.size(); ++f) {
    if (f) out += "*";
    out += gd.factors[f].label + ".";
    const auto& signs = per_factor[f];
    const bool all_plus = std::all_of(signs.begin(), signs.end(), [](int s) { return s > 0; });
    const bool all_minus = std::all_of(signs.begin(), signs.end(), [](int s) { return s < 0; });
    if (all_plus) {
      out += "triv";
    } else if (all_minus) {
      out += "sgn";
    } else {
      out += signs[0] < 0 ? "sgn_long" : "sgn_short";
    }
  }
  return out;
}

}  // namespace

ExtendedOperator extended_intertwiner(const GoodRootData& gd, const RatVec& nu) {
  const RootDatum rd = build(gd.ambient_type, gd.ambient_rank);
  if (static_cast<int>(nu.size()) != rd.ambient_dim)
    throw std::invalid_argument("extended_intertwiner: parameter has wrong length");
  const std::size_t dim = static_cast<std::size_t>(rd.ambient_dim);
  const std::size_t ngood = gd.good_roots.size();

  std::set<RatVec> goodset(gd.good_roots.begin(), gd.good_roots.end());

  // Simple roots of the good subsystem: positives not a sum of two positives.
  std::vector<std::size_t> simples;
  for (std::size_t k = 0; k < ngood; ++k) {
    bool is_sum = false;
    for (std::size_t a = 0; a < ngood && !is_sum; ++a)
      for (std::size_t b = a; b < ngood && !is_sum; ++b)
        is_sum = add(gd.good_roots[a], gd.good_roots[b]) == gd.good_roots[k];
    if (!is_sum) simples.push_back(k);
  }

  // Long element of the good-root Weyl group by greedy descent.
  RatMat w0 = identity_matrix(dim);
  {
    RatVec y(dim, Rat(0));
    for (std::size_t k = 0; k < ngood; ++k) y = add(y, gd.good_roots[k]);
    const RatVec target = negated(y);
    std::size_t steps = 0;
    bool moved = true;
    while (moved) {
      moved = false;
      for (std::size_t k : simples) {
        const Rat p = dot(gd.good_coroots[k], y);
        if (p > 0) {
          y = sub(y, scale(p, gd.good_roots[k]));
          w0 = mat_mul(reflection_matrix(dim, gd.good_roots[k], gd.good_coroots[k]), w0);
          ++steps;
          moved = true;
          break;
        }
      }
    }
    if (y != target || steps != ngood)
      throw std::logic_error("extended_intertwiner: descent did not reach -rho");
  }

  const RatVec w0nu = mat_vec(w0, nu);
  const RatVec minus_nu = negated(nu);

  // Pick u in R with u w0 nu = -nu.  The factorization of the ambient long
  // element wins, then the identity, so specialized parameters keep the sign
  // pattern of nearby generic ones.
  const RatMat ambient_w0 = longest_element(rd).matrix;
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < gd.r_elements.size(); ++i) {
    if (act(gd.r_elements[i], w0nu) == minus_nu) candidates.push_back(i);
  }
  if (candidates.empty())
    throw NotHermitian("no extension of the long element negates the parameter");
  const RatMat id_mat = identity_matrix(dim);
  std::size_t chosen = candidates[0];
  bool found = false;
  for (std::size_t i : candidates) {
    if (mat_eq(mat_mul(gd.r_elements[i].matrix, w0), ambient_w0)) {
      chosen = i;
      found = true;
      break;
    }
  }
  if (!found) {
    for (std::size_t i : candidates) {
      if (mat_eq(gd.r_elements[i].matrix, id_mat)) {
        chosen = i;
        break;
      }
    }
  }
  const WeylElement& u = gd.r_elements[chosen];

  ExtendedOperator op;
  op.nu = nu;
  op.u_is_identity = mat_eq(u.matrix, id_mat);

  std::vector<std::size_t> rnu_members;
  for (std::size_t i = 0; i < gd.r_elements.size(); ++i) {
    if (act(gd.r_elements[i], nu) == nu) rnu_members.push_back(i);
  }
  op.r_nu_order = static_cast<long>(rnu_members.size());

  // Decompose R over a minimal generating set; elements become bit masks.
  std::vector<std::size_t> r_gens;
  std::map<std::string, unsigned> bits_of;
  {
    std::vector<std::pair<unsigned, RatMat>> span;
    span.emplace_back(0u, id_mat);
    bits_of[mat_key(id_mat)] = 0u;
    for (std::size_t i = 0; i < gd.r_elements.size(); ++i) {
      const std::string key = mat_key(gd.r_elements[i].matrix);
      if (bits_of.count(key)) continue;
      const unsigned g = 1u << r_gens.size();
      r_gens.push_back(i);
      const std::size_t old = span.size();
      for (std::size_t s = 0; s < old; ++s) {
        RatMat m = mat_mul(span[s].second, gd.r_elements[i].matrix);
        const unsigned b = span[s].first | g;
        bits_of[mat_key(m)] = b;
        span.emplace_back(b, std::move(m));
      }
    }
    if (span.size() != gd.r_elements.size())
      throw std::logic_error("extended_intertwiner: R is not an abelian 2-group");
  }
  const unsigned u_bits = bits_of.at(mat_key(u.matrix));
  std::vector<unsigned> rnu_bits;
  for (std::size_t i : rnu_members) {
    const unsigned b = bits_of.at(mat_key(gd.r_elements[i].matrix));
    if (b != 0) rnu_bits.push_back(b);
  }

  const std::size_t ngen = r_gens.size();
  auto lambda_value = [](unsigned mask, unsigned bits) {
    return __builtin_parity(mask & bits) ? -1 : 1;
  };
  auto lambda_label = [&](unsigned mask) {
    if (ngen == 0) return std::string("+");
    std::string s;
    for (std::size_t g = 0; g < ngen; ++g) s.push_back((mask >> g) & 1u ? '-' : '+');
    return s;
  };
  auto rnu_label = [&](unsigned mask) {
    if (rnu_bits.empty()) return std::string("triv");
    bool all_plus = true;
    std::string pattern;
    for (unsigned b : rnu_bits) {
      const int v = lambda_value(mask, b);
      pattern.push_back(v > 0 ? '+' : '-');
      all_plus = all_plus && v > 0;
    }
    if (all_plus) return std::string("triv");
    if (rnu_bits.size() == 1) return std::string("sgn");
    return pattern;
  };

  // Character slots of the good-root Weyl group: one sign per reflection
  // class per factor.
  std::vector<Slot> slots;
  for (std::size_t f = 0; f < gd.factors.size(); ++f)
    for (std::size_t c = 0; c < gd.factors[f].classes.size(); ++c)
      slots.push_back(Slot{f, c});

  // Pairings of nu against the class members, and the pole guard.
  std::vector<std::vector<Rat>> slot_pairings(slots.size());
  for (std::size_t s = 0; s < slots.size(); ++s) {
    const SubsystemFactor& f = gd.factors[slots[s].factor];
    for (std::size_t i : f.classes[slots[s].cls]) {
      const Rat p = dot(nu, f.positive_coroots[i]);
      if (p == -1)
        throw Pole("pairing hits -1, operator undefined here");
      slot_pairings[s].push_back(p);
    }
  }
  auto chi_scalar = [&](const std::vector<int>& assign) {
    Rat value(1);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (assign[s] > 0) continue;
      for (const Rat& p : slot_pairings[s]) value *= (1 - p) / (1 + p);
    }
    return value;
  };

  // Slot permutation induced by an element normalizing the good positives.
  std::map<RatVec, std::size_t> slot_of_root;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    const SubsystemFactor& f = gd.factors[slots[s].factor];
    for (std::size_t i : f.classes[slots[s].cls]) slot_of_root[f.positive_roots[i]] = s;
  }
  auto slot_permutation = [&](const WeylElement& w) {
    std::vector<std::size_t> sigma(slots.size());
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const SubsystemFactor& f = gd.factors[slots[s].factor];
      std::size_t image_slot = slots.size();
      for (std::size_t i : f.classes[slots[s].cls]) {
        RatVec image = act(w, f.positive_roots[i]);
        if (!goodset.count(image)) image = negated(image);
        auto it = slot_of_root.find(image);
        if (it == slot_of_root.end())
          throw std::logic_error("extended_intertwiner: R does not permute good roots");
        if (image_slot == slots.size()) {
          image_slot = it->second;
        } else if (image_slot != it->second) {
          throw std::logic_error("extended_intertwiner: R splits a reflection class");
        }
      }
      sigma[s] = image_slot;
    }
    return sigma;
  };
  auto apply_perm = [](const std::vector<std::size_t>& sigma, const std::vector<int>& a) {
    std::vector<int> out(a.size());
    for (std::size_t s = 0; s < a.size(); ++s) out[sigma[s]] = a[s];
    return out;
  };
  std::vector<std::vector<std::size_t>> sigma_gens;
  for (std::size_t g : r_gens) sigma_gens.push_back(slot_permutation(gd.r_elements[g]));
  const std::vector<std::size_t> sigma_u = slot_permutation(u);

  // Enumerate characters of the good-root Weyl group by their orbit under
  // R: a fixed character carries one scalar block per R-character, an orbit
  // becomes a single induced block (diagonal when u is the identity,
  // anti-diagonal when u swaps the pair).
  const std::size_t nchi = std::size_t{1} << slots.size();
  std::set<std::vector<int>> done;
  for (std::size_t code = 0; code < nchi; ++code) {
    std::vector<int> assign(slots.size());
    for (std::size_t s = 0; s < slots.size(); ++s)
      assign[s] = (code >> s) & 1u ? -1 : 1;
    if (done.count(assign)) continue;
    std::set<std::vector<int>> orbit{assign};
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& member : orbit) {
        for (const auto& sigma : sigma_gens) {
          std::vector<int> image = apply_perm(sigma, member);
          if (orbit.insert(std::move(image)).second) {
            grew = true;
            break;
          }
        }
        if (grew) break;
      }
    }
    for (const auto& member : orbit) done.insert(member);

    if (orbit.size() == 1) {
      const Rat s_chi = chi_scalar(assign);
      for (unsigned mask = 0; mask < (1u << ngen); ++mask) {
        ExtendedBlock block;
        block.psi_label = "[" + lambda_label(mask) + "]" + chi_label(gd, slots, assign);
        block.rnu_label = rnu_label(mask);
        block.matrix = RatMat(1);
        block.matrix.at(0, 0) = Rat(lambda_value(mask, u_bits)) * s_chi;
        op.blocks.push_back(std::move(block));
      }
      continue;
    }
    if (gd.r_group_order != 2)
      throw UnsupportedDatum(
          "extended_intertwiner: induced blocks only built for a complement of order 2");
    // Orbit of size 2 under R = Z/2; basis ordered lexicographically.
    std::vector<std::vector<int>> basis(orbit.begin(), orbit.end());
    ExtendedBlock block;
    block.psi_label = "[ind]" + chi_label(gd, slots, basis[0]);
    block.rnu_label = "ind";
    block.matrix = RatMat(2);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::vector<int> image = apply_perm(sigma_u, basis[b]);
      const std::size_t target =
          static_cast<std::size_t>(std::find(basis.begin(), basis.end(), image) - basis.begin());
      block.matrix.at(target, b) = chi_scalar(basis[b]);
    }
    op.blocks.push_back(std::move(block));
  }

  // Trivial character: the whole normalized operator is available; keep its
  // Gram matrix so the reduction can be checked entry by entry.
  if (is_trivial(gd.delta) && gd.w_delta_order <= 400) {
    auto wg = enumerate_weyl(rd, static_cast<std::size_t>(gd.w_delta_order));
    GroupAlgebraElement raw = long_intertwiner(wg, Parameter{nu});
    ExtendedBlock block;
    block.psi_label = "regular";
    block.rnu_label = "triv";
    block.matrix = full_matrix(normalize(raw));
    op.blocks.push_back(std::move(block));
  }
  return op;
}

Rat rank_one_scalar(RankOneKind kind, long k, const Rat& c) {
  auto guarded = [](const Rat& num, const Rat& den) {
    if (den == 0) throw Pole("rank-one scalar has a pole here");
    return num / den;
  };
  Rat out(1);
  switch (kind) {
    case RankOneKind::R_triv: {
      const long n = k < 0 ? -k : k;
      for (long j = 1; j <= n; ++j)
        out *= guarded(Rat(2 * j - 1) - c, Rat(2 * j - 1) + c);
      return out;
    }
    case RankOneKind::R_sgn: {
      const long m = k >= 0 ? k : -k - 1;
      if (k < 0) out = -1;
      for (long j = 1; j <= m; ++j) out *= guarded(Rat(2 * j) - c, Rat(2 * j) + c);
      return out;
    }
    case RankOneKind::C_triv: {
      if (k < 0) throw std::invalid_argument("rank_one_scalar: C_triv needs k >= 0");
      for (long j = 1; j <= k; ++j) out *= guarded(Rat(j) - c, Rat(j) + c);
      return out;
    }
  }
  throw std::logic_error("rank_one_scalar: unknown kind");
}

Rat c_constant(long l, const Rat& lambda) {
  if (l < 0) throw std::invalid_argument("c_constant: l must be nonnegative");
  Rat out(1);
  const long m = l / 2;
  if (l % 2 == 0) {
    for (long i = 1; i <= m; ++i) {
      const Rat den = Rat(2 * i - 1) + lambda;
      if (den == 0) throw Pole("c_constant has a pole here");
      out *= (Rat(2 * i - 1) - lambda) / den;
    }
  } else {
    for (long i = 1; i <= m; ++i) {
      const Rat den = Rat(2 * i) + lambda;
      if (den == 0) throw Pole("c_constant has a pole here");
      out *= (Rat(2 * i) - lambda) / den;
    }
  }
  if (m % 2 == 1) out = -out;
  return out;
}

}  // namespace hecke
