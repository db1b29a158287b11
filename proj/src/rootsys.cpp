#include "hecke/rootsys.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <queue>
#include <unordered_map>

namespace hecke {
namespace {

std::string vec_key(const RatVec& v) {
  std::string key;
  for (const Rat& x : v) {
    key += x.get_num().get_str();
    key += '/';
    key += x.get_den().get_str();
    key += ';';
  }
  return key;
}

RatVec unit(int dim, int i, long num = 1, long den = 1) {
  RatVec v(dim, Rat(0));
  v[i] = make_rat(num, den);
  return v;
}

struct SimpleSystem {
  std::vector<RatVec> roots;
  std::vector<RatVec> coroots;
};

SimpleSystem simple_system(CartanType type, int rank, int dim) {
  SimpleSystem s;
  auto chain = [&](int count) {
    for (int i = 0; i < count; ++i) {
      RatVec r(dim, Rat(0));
      r[i] = 1;
      r[i + 1] = -1;
      s.roots.push_back(r);
      s.coroots.push_back(r);
    }
  };
  switch (type) {
    case CartanType::A:
      chain(rank);
      break;
    case CartanType::B:
      chain(rank - 1);
      s.roots.push_back(unit(dim, rank - 1));
      s.coroots.push_back(unit(dim, rank - 1, 2));
      break;
    case CartanType::C:
      chain(rank - 1);
      s.roots.push_back(unit(dim, rank - 1, 2));
      s.coroots.push_back(unit(dim, rank - 1));
      break;
    case CartanType::D: {
      chain(rank - 1);
      RatVec r(dim, Rat(0));
      r[rank - 2] = 1;
      r[rank - 1] = 1;
      s.roots.push_back(r);
      s.coroots.push_back(r);
      break;
    }
    case CartanType::G2:
      s.roots.push_back({Rat(2), Rat(-1), Rat(-1)});
      s.coroots.push_back({make_rat(2, 3), make_rat(-1, 3), make_rat(-1, 3)});
      s.roots.push_back({Rat(-1), Rat(1), Rat(0)});
      s.coroots.push_back({Rat(-1), Rat(1), Rat(0)});
      break;
    case CartanType::F4:
      s.roots.push_back({make_rat(1, 2), make_rat(-1, 2), make_rat(-1, 2), make_rat(-1, 2)});
      s.coroots.push_back({Rat(1), Rat(-1), Rat(-1), Rat(-1)});
      s.roots.push_back(unit(4, 3));
      s.coroots.push_back(unit(4, 3, 2));
      s.roots.push_back({Rat(0), Rat(0), Rat(1), Rat(-1)});
      s.coroots.push_back({Rat(0), Rat(0), Rat(1), Rat(-1)});
      s.roots.push_back({Rat(0), Rat(1), Rat(-1), Rat(0)});
      s.coroots.push_back({Rat(0), Rat(1), Rat(-1), Rat(0)});
      break;
    case CartanType::E6:
    case CartanType::E7:
    case CartanType::E8: {
      RatVec a1(8, make_rat(-1, 2));
      a1[0] = make_rat(1, 2);
      a1[7] = make_rat(1, 2);
      s.roots.push_back(a1);
      RatVec a2(8, Rat(0));
      a2[0] = 1;
      a2[1] = 1;
      s.roots.push_back(a2);
      for (int i = 0; i < rank - 2; ++i) {
        RatVec r(8, Rat(0));
        r[i] = -1;
        r[i + 1] = 1;
        s.roots.push_back(r);
      }
      s.coroots = s.roots;  // simply laced
      break;
    }
  }
  return s;
}

}  // namespace

std::string cartan_name(CartanType type) {
  switch (type) {
    case CartanType::A: return "A";
    case CartanType::B: return "B";
    case CartanType::C: return "C";
    case CartanType::D: return "D";
    case CartanType::G2: return "G2";
    case CartanType::F4: return "F4";
    case CartanType::E6: return "E6";
    case CartanType::E7: return "E7";
    case CartanType::E8: return "E8";
  }
  throw std::logic_error("cartan_name");
}

CartanType cartan_from_name(const std::string& name) {
  if (name == "A") return CartanType::A;
  if (name == "B") return CartanType::B;
  if (name == "C") return CartanType::C;
  if (name == "D") return CartanType::D;
  if (name == "G2") return CartanType::G2;
  if (name == "F4") return CartanType::F4;
  if (name == "E6") return CartanType::E6;
  if (name == "E7") return CartanType::E7;
  if (name == "E8") return CartanType::E8;
  throw ParseError("unknown type: " + name);
}

RatVec RootDatum::reflect_simple(int i, const RatVec& v) const {
  Rat c = dot(simple_coroots[i], v);
  RatVec out = v;
  for (int j = 0; j < ambient_dim; ++j) out[j] -= c * simple_roots[i][j];
  return out;
}

bool RootDatum::is_dominant(const RatVec& chi) const {
  for (int i = 0; i < rank; ++i)
    if (dot(simple_coroots[i], chi) < 0) return false;
  return true;
}

RatMat cartan_matrix(const RootDatum& rd) {
  RatMat c(rd.rank);
  for (int i = 0; i < rd.rank; ++i)
    for (int j = 0; j < rd.rank; ++j)
      c.at(i, j) = dot(rd.simple_coroots[i], rd.simple_roots[j]);
  return c;
}

RootDatum build(CartanType type, int rank) {
  auto fail = [&] {
    throw UnsupportedDatum("unsupported (type, rank) combination: " +
                           cartan_name(type) + std::to_string(rank));
  };
  int dim = 0;
  switch (type) {
    case CartanType::A:
      if (rank < 1) fail();
      dim = rank + 1;
      break;
    case CartanType::B:
    case CartanType::C:
      if (rank < 1) fail();
      dim = rank;
      break;
    case CartanType::D:
      if (rank < 2) fail();
      dim = rank;
      break;
    case CartanType::G2:
      if (rank != 2) fail();
      dim = 3;
      break;
    case CartanType::F4:
      if (rank != 4) fail();
      dim = 4;
      break;
    case CartanType::E6:
      if (rank != 6) fail();
      dim = 8;
      break;
    case CartanType::E7:
      if (rank != 7) fail();
      dim = 8;
      break;
    case CartanType::E8:
      if (rank != 8) fail();
      dim = 8;
      break;
  }
  // Degenerate B1/C1 coincide with one short/long root; keep the generic code
  // path by special-casing the chain length above (chain(0) adds nothing).
  RootDatum rd;
  rd.cartan_type = type;
  rd.rank = rank;
  rd.ambient_dim = dim;
  auto simples = simple_system(type, rank, dim);
  rd.simple_roots = simples.roots;
  rd.simple_coroots = simples.coroots;

  // Close the simple system under reflections, tracking each root's
  // expansion in the simples so positivity is a coefficient check and the
  // coroot propagates from the stored simple coroots.
  struct Entry {
    RatVec root, coroot;
    std::vector<long> coeffs;
  };
  std::map<std::vector<long>, std::size_t> seen;
  std::vector<Entry> found;
  for (int i = 0; i < rank; ++i) {
    Entry e{rd.simple_roots[i], rd.simple_coroots[i], std::vector<long>(rank, 0)};
    e.coeffs[i] = 1;
    seen.emplace(e.coeffs, found.size());
    found.push_back(std::move(e));
  }
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (int i = 0; i < rank; ++i) {
      Entry cur = found[head];
      Rat c = dot(rd.simple_coroots[i], cur.root);
      if (c.get_den() != 1) throw std::logic_error("non-integral Cartan pairing");
      long ci = c.get_num().get_si();
      Entry next;
      next.root = sub(cur.root, scale(c, rd.simple_roots[i]));
      Rat cv = dot(cur.coroot, rd.simple_roots[i]);
      next.coroot = sub(cur.coroot, scale(cv, rd.simple_coroots[i]));
      next.coeffs = cur.coeffs;
      next.coeffs[i] -= ci;
      bool positive = true;
      for (long x : next.coeffs)
        if (x < 0) positive = false;
      if (!positive) continue;
      if (seen.emplace(next.coeffs, found.size()).second) found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end(), [](const Entry& x, const Entry& y) {
    long hx = 0, hy = 0;
    for (long v : x.coeffs) hx += v;
    for (long v : y.coeffs) hy += v;
    if (hx != hy) return hx < hy;
    return x.coeffs < y.coeffs;
  });
  for (auto& e : found) {
    rd.positive_roots.push_back(e.root);
    rd.positive_coroots.push_back(e.coroot);
  }
  return rd;
}

RatVec act(const WeylElement& w, const RatVec& v) {
  const std::size_t n = w.matrix.n;
  RatVec out(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (w.matrix.at(i, j) != 0) out[i] += w.matrix.at(i, j) * v[j];
  return out;
}

namespace {

RatMat identity_matrix(int n) {
  RatMat m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat reflection_matrix(const RootDatum& rd, int i) {
  RatMat m = identity_matrix(rd.ambient_dim);
  for (int r = 0; r < rd.ambient_dim; ++r)
    for (int c = 0; c < rd.ambient_dim; ++c)
      m.at(r, c) -= rd.simple_roots[i][r] * rd.simple_coroots[i][c];
  return m;
}

// Index lookup over the full root list: positives first, then negatives.
struct RootIndex {
  std::unordered_map<std::string, std::size_t> by_key;
  std::size_t n_pos = 0;

  explicit RootIndex(const RootDatum& rd) {
    n_pos = rd.positive_roots.size();
    for (std::size_t k = 0; k < n_pos; ++k) {
      by_key.emplace(vec_key(rd.positive_roots[k]), k);
      by_key.emplace(vec_key(scale(Rat(-1), rd.positive_roots[k])), n_pos + k);
    }
  }
  std::size_t find(const RatVec& v) const {
    auto it = by_key.find(vec_key(v));
    if (it == by_key.end()) throw std::logic_error("vector is not a root");
    return it->second;
  }
  bool is_positive_root(const RatVec& v) const {
    auto it = by_key.find(vec_key(v));
    return it != by_key.end() && it->second < n_pos;
  }
};

// Reduced word read off the matrix by stripping right descents.
std::vector<int> reduce_word(const RootDatum& rd, RatMat m) {
  RootIndex index(rd);
  std::vector<int> word;
  WeylElement cur{std::move(m), {}};
  for (;;) {
    int descent = -1;
    for (int i = 0; i < rd.rank && descent < 0; ++i) {
      RatVec image = act(cur, rd.simple_roots[i]);
      if (!index.is_positive_root(image)) descent = i;
    }
    if (descent < 0) break;
    cur.matrix = mat_mul(cur.matrix, reflection_matrix(rd, descent));
    word.push_back(descent);
  }
  for (int i = 0; i < rd.ambient_dim; ++i)
    for (int j = 0; j < rd.ambient_dim; ++j)
      if (cur.matrix.at(i, j) != ((i == j) ? 1 : 0))
        throw std::logic_error("matrix is not a Weyl group element");
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace

std::shared_ptr<const WeylGroup> WeylGroup::enumerate(const RootDatum& rd,
                                                      std::size_t cap) {
  if (!rd.weyl_enumerable())
    throw CapExceeded("Weyl group of " + cartan_name(rd.cartan_type) +
                      " exceeds the enumeration cap (data-only type)");

  static std::mutex cache_mutex;
  static std::map<std::pair<CartanType, int>, std::shared_ptr<const WeylGroup>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({rd.cartan_type, rd.rank});
    if (it != cache.end()) {
      if (it->second->size() > cap)
        throw CapExceeded("Weyl group order " + std::to_string(it->second->size()) +
                          " exceeds cap " + std::to_string(cap));
      return it->second;
    }
  }

  auto group = std::shared_ptr<WeylGroup>(new WeylGroup());
  WeylGroup& g = *group;
  g.datum_ = rd;
  g.n_roots_ = rd.positive_roots.size();
  RootIndex index(rd);
  const std::size_t all = 2 * g.n_roots_;

  // Simple-reflection permutations of the root list.
  std::vector<std::vector<std::uint16_t>> gen_perm(rd.rank);
  for (int i = 0; i < rd.rank; ++i) {
    gen_perm[i].resize(all);
    for (std::size_t r = 0; r < all; ++r) {
      RatVec v = (r < g.n_roots_) ? rd.positive_roots[r]
                                  : scale(Rat(-1), rd.positive_roots[r - g.n_roots_]);
      gen_perm[i][r] = static_cast<std::uint16_t>(index.find(rd.reflect_simple(i, v)));
    }
  }

  std::unordered_map<std::string, std::size_t> perm_index;
  auto perm_key = [](const std::vector<std::uint16_t>& p) {
    return std::string(reinterpret_cast<const char*>(p.data()),
                       p.size() * sizeof(std::uint16_t));
  };

  std::vector<std::uint16_t> id_perm(all);
  for (std::size_t r = 0; r < all; ++r) id_perm[r] = static_cast<std::uint16_t>(r);
  g.root_perms_.push_back(id_perm);
  g.elements_.push_back(WeylElement{identity_matrix(rd.ambient_dim), {}});
  perm_index.emplace(perm_key(id_perm), 0);
  g.right_by_simple_.assign(rd.rank, {});

  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (int i = 0; i < rd.rank; ++i) {
      // (x s_i)(r) = x(s_i(r))
      std::vector<std::uint16_t> next(all);
      for (std::size_t r = 0; r < all; ++r) next[r] = g.root_perms_[head][gen_perm[i][r]];
      auto [it, inserted] = perm_index.emplace(perm_key(next), g.elements_.size());
      if (inserted) {
        if (g.elements_.size() >= cap)
          throw CapExceeded("Weyl group order exceeds cap " + std::to_string(cap));
        WeylElement elem;
        elem.word = g.elements_[head].word;
        elem.word.push_back(i);
        elem.matrix = mat_mul(g.elements_[head].matrix, reflection_matrix(rd, i));
        g.root_perms_.push_back(std::move(next));
        g.elements_.push_back(std::move(elem));
      }
      for (int j = 0; j < rd.rank; ++j)
        g.right_by_simple_[j].resize(g.elements_.size() + 64);
      g.right_by_simple_[i][head] = static_cast<std::uint32_t>(it->second);
    }
  }
  for (int j = 0; j < rd.rank; ++j) g.right_by_simple_[j].resize(g.elements_.size());

  g.simple_index_.resize(rd.rank);
  for (int i = 0; i < rd.rank; ++i) g.simple_index_[i] = g.right_by_simple_[i][0];
  g.longest_ = 0;
  for (std::size_t x = 0; x < g.size(); ++x)
    if (g.elements_[x].word.size() == g.n_roots_) g.longest_ = x;
  if (g.elements_[g.longest_].word.size() != g.n_roots_)
    throw std::logic_error("longest element not found");

  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache[{rd.cartan_type, rd.rank}] = group;
  }
  return group;
}

void WeylGroup::build_tables() const {
  if (!mult_.empty()) return;
  const std::size_t n = size();
  if (n > 65535) throw std::logic_error("multiplication table index overflow");
  mult_.assign(n * n, 0);
  inv_.assign(n, 0);
  std::unordered_map<std::string, std::size_t> perm_index;
  auto perm_key = [](const std::vector<std::uint16_t>& p) {
    return std::string(reinterpret_cast<const char*>(p.data()),
                       p.size() * sizeof(std::uint16_t));
  };
  for (std::size_t x = 0; x < n; ++x) perm_index.emplace(perm_key(root_perms_[x]), x);
  const std::size_t all = 2 * n_roots_;
  std::vector<std::uint16_t> scratch(all);
  for (std::size_t x = 0; x < n; ++x) {
    const auto& px = root_perms_[x];
    for (std::size_t y = 0; y < n; ++y) {
      const auto& py = root_perms_[y];
      for (std::size_t r = 0; r < all; ++r) scratch[r] = px[py[r]];
      mult_[x * n + y] = static_cast<std::uint16_t>(perm_index.at(perm_key(scratch)));
    }
    // x^{-1}: invert the permutation.
    for (std::size_t r = 0; r < all; ++r) scratch[px[r]] = static_cast<std::uint16_t>(r);
    inv_[x] = static_cast<std::uint16_t>(perm_index.at(perm_key(scratch)));
  }
}

std::size_t WeylGroup::compose(std::size_t x, std::size_t y) const {
  build_tables();
  return mult_[x * size() + y];
}

std::size_t WeylGroup::inverse(std::size_t x) const {
  build_tables();
  return inv_[x];
}

std::size_t WeylGroup::index_of_root_perm(const std::vector<std::uint16_t>& perm) const {
  for (std::size_t x = 0; x < size(); ++x)
    if (root_perms_[x] == perm) return x;
  return npos;
}

std::size_t WeylGroup::element_order(std::size_t x) const {
  const std::size_t all = 2 * n_roots_;
  std::vector<std::uint16_t> cur = root_perms_[x];
  std::size_t order = 1;
  auto is_id = [&](const std::vector<std::uint16_t>& p) {
    for (std::size_t r = 0; r < all; ++r)
      if (p[r] != r) return false;
    return true;
  };
  while (!is_id(cur)) {
    std::vector<std::uint16_t> next(all);
    for (std::size_t r = 0; r < all; ++r) next[r] = root_perms_[x][cur[r]];
    cur = std::move(next);
    ++order;
    if (order > 1000) throw std::logic_error("element order runaway");
  }
  return order;
}

std::shared_ptr<const WeylGroup> enumerate_weyl(const RootDatum& rd, std::size_t cap) {
  return WeylGroup::enumerate(rd, cap);
}

WeylElement longest_element(const RootDatum& rd) {
  RootIndex index(rd);
  WeylElement w{identity_matrix(rd.ambient_dim), {}};
  for (;;) {
    int ascent = -1;
    for (int i = 0; i < rd.rank && ascent < 0; ++i)
      if (index.is_positive_root(act(w, rd.simple_roots[i]))) ascent = i;
    if (ascent < 0) break;
    w.matrix = mat_mul(w.matrix, reflection_matrix(rd, ascent));
    w.word.push_back(ascent);
  }
  if (w.word.size() != rd.positive_roots.size())
    throw std::logic_error("longest element has wrong length");
  return w;
}

std::vector<std::vector<int>> all_reduced_words_sample(const RootDatum& rd,
                                                       const WeylElement& w,
                                                       std::size_t k) {
  if (k < 2) throw std::invalid_argument("reduced word sample: k must be >= 2");
  RootIndex index(rd);
  std::vector<RatMat> gens;
  for (int i = 0; i < rd.rank; ++i) gens.push_back(reflection_matrix(rd, i));
  std::vector<std::vector<int>> out;
  std::vector<int> partial;
  // Strip right descents recursively; each full strip is one reduced word.
  auto rec = [&](auto&& self, const RatMat& m) -> void {
    if (out.size() >= k) return;
    bool any = false;
    for (int i = 0; i < rd.rank; ++i) {
      WeylElement cur{m, {}};
      if (index.is_positive_root(act(cur, rd.simple_roots[i]))) continue;
      any = true;
      partial.push_back(i);
      self(self, mat_mul(m, gens[i]));
      partial.pop_back();
      if (out.size() >= k) return;
    }
    if (!any) {
      std::vector<int> word(partial.rbegin(), partial.rend());
      out.push_back(std::move(word));
    }
  };
  rec(rec, w.matrix);
  return out;
}

std::pair<Parameter, WeylElement> make_dominant(const RootDatum& rd,
                                                const Parameter& p) {
  RatVec v = p.chi;
  RatMat m = identity_matrix(rd.ambient_dim);
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rd.rank && neg < 0; ++i)
      if (dot(rd.simple_coroots[i], v) < 0) neg = i;
    if (neg < 0) break;
    v = rd.reflect_simple(neg, v);
    m = mat_mul(reflection_matrix(rd, neg), m);
  }
  WeylElement w{std::move(m), {}};
  w.word = reduce_word(rd, w.matrix);
  return {Parameter{std::move(v)}, std::move(w)};
}

bool is_hermitian_point(const RootDatum& rd, const Parameter& p) {
  WeylElement w0 = longest_element(rd);
  RatVec image = act(w0, p.chi);
  for (int i = 0; i < rd.ambient_dim; ++i)
    if (image[i] != -p.chi[i]) return false;
  return true;
}

WeylElement element_from_word(const RootDatum& rd, const std::vector<int>& word) {
  RatMat m = identity_matrix(rd.ambient_dim);
  for (int i : word) {
    if (i < 0 || i >= rd.rank) throw std::invalid_argument("bad simple index");
    m = mat_mul(m, reflection_matrix(rd, i));
  }
  WeylElement w{std::move(m), word};
  return w;
}

}  // namespace hecke
