#include "hecke/wrep.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hecke/f4data.hpp"

namespace hecke {
namespace {

// --- partitions and border strips -------------------------------------------

// Beta numbers: strictly increasing non-negative integers encoding a
// partition with a fixed number of rows (first-column hook lengths).
using Beta = std::vector<int>;

Beta beta_of(const Partition& p, int rows) {
  Beta b(rows);
  for (int i = 0; i < rows; ++i) {
    int part = (rows - 1 - i < static_cast<int>(p.size())) ? p[rows - 1 - i] : 0;
    b[i] = part + i;
  }
  return b;
}

Partition partition_of_beta(const Beta& b) {
  Partition p;
  for (int i = static_cast<int>(b.size()) - 1; i >= 0; --i) {
    int part = b[i] - i;
    if (part > 0) p.push_back(part);
  }
  return p;
}

// All ways to remove a border strip of length k: move one beta number down
// by k into a free slot.  The sign is (-1)^(beads passed over).
struct StripRemoval {
  Beta beta;
  int sign;
};

std::vector<StripRemoval> strip_removals(const Beta& beta, int k) {
  std::vector<StripRemoval> out;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - k;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int passed = 0;
    for (int x : beta)
      if (target < x && x < beta[i]) ++passed;
    Beta next = beta;
    next[i] = target;
    std::sort(next.begin(), next.end());
    out.push_back({std::move(next), (passed % 2) ? -1 : 1});
  }
  return out;
}

long mn_value(const Beta& beta, const Partition& mu, std::size_t idx,
              std::map<std::pair<Beta, std::size_t>, long>& memo) {
  if (idx == mu.size()) return 1;
  auto key = std::make_pair(beta, idx);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  long total = 0;
  for (const auto& rem : strip_removals(beta, mu[idx]))
    total += rem.sign * mn_value(rem.beta, mu, idx + 1, memo);
  memo.emplace(std::move(key), total);
  return total;
}

int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

// --- class labels from coordinate matrices ----------------------------------

// Permutation action of a Weyl element of type A on the rank+1 coordinates.
std::vector<int> permutation_of(const RatMat& m) {
  const int n = static_cast<int>(m.n);
  std::vector<int> sigma(n, -1);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (m.at(i, j) == 1) {
        sigma[j] = i;
        break;
      }
      if (m.at(i, j) != 0) throw std::logic_error("not a permutation matrix");
    }
    if (sigma[j] < 0) throw std::logic_error("not a permutation matrix");
  }
  return sigma;
}

Partition cycle_type(const std::vector<int>& sigma) {
  Partition type;
  std::vector<bool> seen(sigma.size(), false);
  for (std::size_t s = 0; s < sigma.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t t = s; !seen[t]; t = sigma[t]) {
      seen[t] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

// Signed cycle type (positive parts, negative parts) of a B/C/D element.
std::pair<Partition, Partition> signed_cycle_type(const RatMat& m) {
  const int n = static_cast<int>(m.n);
  std::vector<int> sigma(n, -1);
  std::vector<int> sign(n, 0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (m.at(i, j) != 0) {
        sigma[j] = i;
        sign[j] = (m.at(i, j) == 1) ? 1 : -1;
        break;
      }
    }
    if (sigma[j] < 0) throw std::logic_error("not a signed permutation matrix");
  }
  Partition pos, neg;
  std::vector<bool> seen(n, false);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    int len = 0, prod = 1;
    for (int t = s; !seen[t]; t = sigma[t]) {
      seen[t] = true;
      prod *= sign[t];
      ++len;
    }
    (prod == 1 ? pos : neg).push_back(len);
  }
  std::sort(pos.rbegin(), pos.rend());
  std::sort(neg.rbegin(), neg.rend());
  return {pos, neg};
}

std::vector<std::pair<Partition, Partition>> bipartitions_of(int n) {
  std::vector<std::pair<Partition, Partition>> out;
  for (int k = n; k >= 0; --k)
    for (const auto& lambda : partitions_of(k))
      for (const auto& mu : partitions_of(n - k)) out.emplace_back(lambda, mu);
  return out;
}

// --- per-type tables ----------------------------------------------------------

std::vector<WType> table_type_a(const WeylGroup& w, const ClassData& classes) {
  const int n = w.datum().rank + 1;
  std::vector<Partition> labels(classes.class_size.size());
  for (std::size_t c = 0; c < labels.size(); ++c) {
    const auto& rep = w.element(classes.representative[c]);
    labels[c] = cycle_type(permutation_of(rep.matrix));
  }
  std::vector<WType> table;
  for (const auto& lambda : partitions_of(n)) {
    WType t;
    t.name = partition_to_string(lambda);
    t.on_class.resize(labels.size());
    for (std::size_t c = 0; c < labels.size(); ++c)
      t.on_class[c] = Rat(sn_character(lambda, labels[c]));
    t.dim = static_cast<std::size_t>(sn_character(lambda, Partition(n, 1)));
    table.push_back(std::move(t));
  }
  return table;
}

std::vector<WType> table_type_bc(const WeylGroup& w, const ClassData& classes) {
  const int n = w.datum().rank;
  std::vector<std::pair<Partition, Partition>> labels(classes.class_size.size());
  for (std::size_t c = 0; c < labels.size(); ++c) {
    const auto& rep = w.element(classes.representative[c]);
    labels[c] = signed_cycle_type(rep.matrix);
  }
  std::vector<WType> table;
  for (const auto& [lambda, mu] : bipartitions_of(n)) {
    WType t;
    t.name = bipartition_to_string(lambda, mu);
    t.on_class.resize(labels.size());
    for (std::size_t c = 0; c < labels.size(); ++c)
      t.on_class[c] = Rat(bn_character(lambda, mu, labels[c].first, labels[c].second));
    t.dim = static_cast<std::size_t>(
        bn_character(lambda, mu, Partition(n, 1), Partition{}));
    table.push_back(std::move(t));
  }
  return table;
}

// Canonical order on the unordered pair {lambda, mu}: heavier side first,
// then lexicographically larger.
bool pair_canonical(const Partition& lambda, const Partition& mu) {
  if (weight(lambda) != weight(mu)) return weight(lambda) > weight(mu);
  return lambda >= mu;
}

std::vector<WType> table_type_d(const WeylGroup& w, const ClassData& classes) {
  const int n = w.datum().rank;
  std::vector<std::pair<Partition, Partition>> labels(classes.class_size.size());
  for (std::size_t c = 0; c < labels.size(); ++c) {
    const auto& rep = w.element(classes.representative[c]);
    labels[c] = signed_cycle_type(rep.matrix);
    if (labels[c].second.size() % 2 != 0)
      throw std::logic_error("odd sign count inside a type D group");
  }
  std::vector<WType> table;
  for (const auto& [lambda, mu] : bipartitions_of(n)) {
    if (!pair_canonical(lambda, mu)) continue;  // one row per unordered pair
    WType t;
    t.name = bipartition_to_string(lambda, mu);
    t.combined = (lambda == mu);
    t.on_class.resize(labels.size());
    for (std::size_t c = 0; c < labels.size(); ++c)
      t.on_class[c] = Rat(bn_character(lambda, mu, labels[c].first, labels[c].second));
    t.dim = static_cast<std::size_t>(
        bn_character(lambda, mu, Partition(n, 1), Partition{}));
    table.push_back(std::move(t));
  }
  return table;
}

std::vector<WType> table_type_g2(const WeylGroup& w, const ClassData& classes) {
  // Class kinds: 0 identity, 1 Coxeter rotation (order 6), 2 its square
  // (order 3), 3 the central -1 (order 2, even length), 4 long reflections,
  // 5 short reflections.
  const auto& rd = w.datum();
  Rat long_norm = dot(rd.simple_roots[0], rd.simple_roots[0]);
  std::vector<int> kind(classes.class_size.size(), -1);
  for (std::size_t c = 0; c < kind.size(); ++c) {
    std::size_t x = classes.representative[c];
    std::size_t order = w.element_order(x);
    std::size_t len = w.length(x);
    if (order == 1) kind[c] = 0;
    else if (order == 6) kind[c] = 1;
    else if (order == 3) kind[c] = 2;
    else if (order == 2 && len % 2 == 0) kind[c] = 3;
    else {
      // A reflection negates exactly one positive root; long or short?
      const auto& perm = w.root_perm(x);
      int flavor = -1;
      for (std::size_t r = 0; r < w.root_count(); ++r) {
        if (perm[r] == r + w.root_count()) {
          Rat norm = dot(rd.positive_roots[r], rd.positive_roots[r]);
          flavor = (norm == long_norm) ? 4 : 5;
          break;
        }
      }
      if (flavor < 0) throw std::logic_error("reflection without a negated root");
      kind[c] = flavor;
    }
  }
  // Rows by kind: identity, rotation, rotation^2, -1, long refl, short refl.
  const long rows[6][6] = {
      {1, 1, 1, 1, 1, 1},    // 1_1 trivial
      {1, -1, 1, -1, 1, -1},  // 1_2 long reflections act by +1
      {1, -1, 1, -1, -1, 1},  // 1_3 short reflections act by +1
      {1, 1, 1, 1, -1, -1},   // 1_4 sign
      {2, 1, -1, -2, 0, 0},   // 2_1 reflection representation
      {2, -1, -1, 2, 0, 0},   // 2_2
  };
  const char* names[6] = {"1_1", "1_2", "1_3", "1_4", "2_1", "2_2"};
  std::vector<WType> table;
  for (int r = 0; r < 6; ++r) {
    WType t;
    t.name = names[r];
    t.dim = static_cast<std::size_t>(rows[r][0]);
    t.on_class.resize(kind.size());
    for (std::size_t c = 0; c < kind.size(); ++c) t.on_class[c] = Rat(rows[r][kind[c]]);
    table.push_back(std::move(t));
  }
  return table;
}

std::vector<WType> table_type_f4(const WeylGroup& w, const ClassData& classes) {
  if (classes.class_size.size() != static_cast<std::size_t>(f4::class_count))
    throw std::logic_error("unexpected F4 class count");
  // Map the frozen table's classes onto the enumerated ones via the stored
  // representative words.
  std::vector<std::size_t> data_to_enum(f4::class_count);
  std::vector<bool> hit(f4::class_count, false);
  for (int c = 0; c < f4::class_count; ++c) {
    std::size_t x = w.identity();
    for (const char* p = f4::class_words[c]; *p; ++p)
      x = w.right_simple(x, *p - '0');
    std::size_t e = classes.class_of[x];
    data_to_enum[c] = e;
    if (hit[e]) throw std::logic_error("F4 class words collide");
    hit[e] = true;
    if (classes.class_size[e] != static_cast<std::size_t>(f4::class_sizes[c]))
      throw std::logic_error("F4 class size mismatch");
  }
  std::vector<WType> table;
  for (int r = 0; r < f4::type_count; ++r) {
    WType t;
    t.name = f4::type_names[r];
    t.dim = static_cast<std::size_t>(f4::type_dims[r]);
    t.on_class.resize(f4::class_count);
    for (int c = 0; c < f4::class_count; ++c)
      t.on_class[data_to_enum[c]] = Rat(f4::values[r][c]);
    table.push_back(std::move(t));
  }
  return table;
}

}  // namespace

std::string partition_to_string(const Partition& p) {
  if (p.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + ")";
}

std::string bipartition_to_string(const Partition& lambda, const Partition& mu) {
  return partition_to_string(lambda) + "x" + partition_to_string(mu);
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, maxpart); part >= 1; --part) {
      cur.push_back(part);
      self(self, rest - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

long sn_character(const Partition& lambda, const Partition& mu) {
  if (weight(lambda) != weight(mu))
    throw std::invalid_argument("character: sizes differ");
  if (lambda.empty()) return 1;
  int rows = static_cast<int>(lambda.size());
  std::map<std::pair<Beta, std::size_t>, long> memo;
  return mn_value(beta_of(lambda, rows), mu, 0, memo);
}

long bn_character(const Partition& lambda, const Partition& mu,
                  const Partition& alpha, const Partition& beta) {
  if (weight(lambda) + weight(mu) != weight(alpha) + weight(beta))
    throw std::invalid_argument("character: sizes differ");
  // Cycles with signs; beta parts carry the sign twist on the mu component.
  std::vector<std::pair<int, int>> cycles;
  for (int k : alpha) cycles.emplace_back(k, 1);
  for (int k : beta) cycles.emplace_back(k, -1);
  int lrows = std::max<int>(1, static_cast<int>(lambda.size()));
  int mrows = std::max<int>(1, static_cast<int>(mu.size()));
  auto rec = [&](auto&& self, const Beta& bl, const Beta& bm, std::size_t idx) -> long {
    if (idx == cycles.size()) return 1;
    auto [k, sign] = cycles[idx];
    long total = 0;
    for (const auto& rem : strip_removals(bl, k))
      total += rem.sign * self(self, rem.beta, bm, idx + 1);
    for (const auto& rem : strip_removals(bm, k))
      total += sign * rem.sign * self(self, bl, rem.beta, idx + 1);
    return total;
  };
  return rec(rec, beta_of(lambda, lrows), beta_of(mu, mrows), 0);
}

ClassData conjugacy_classes(const WeylGroup& w) {
  ClassData data;
  const std::size_t n = w.size();
  data.class_of.assign(n, static_cast<std::size_t>(-1));
  for (std::size_t x = 0; x < n; ++x) {
    if (data.class_of[x] != static_cast<std::size_t>(-1)) continue;
    std::size_t c = data.class_size.size();
    std::vector<std::size_t> queue{x};
    data.class_of[x] = c;
    std::size_t size = 0, best = x;
    while (!queue.empty()) {
      std::size_t y = queue.back();
      queue.pop_back();
      ++size;
      if (w.length(y) < w.length(best)) best = y;
      for (int i = 0; i < w.datum().rank; ++i) {
        std::size_t s = w.simple(i);
        std::size_t z = w.compose(w.compose(s, y), s);
        if (data.class_of[z] == static_cast<std::size_t>(-1)) {
          data.class_of[z] = c;
          queue.push_back(z);
        }
      }
    }
    data.class_size.push_back(size);
    data.representative.push_back(best);
  }
  return data;
}

std::vector<WType> character_table(const WeylGroup& w, const ClassData& classes) {
  switch (w.datum().cartan_type) {
    case CartanType::A: return table_type_a(w, classes);
    case CartanType::B:
    case CartanType::C: return table_type_bc(w, classes);
    case CartanType::D: return table_type_d(w, classes);
    case CartanType::G2: return table_type_g2(w, classes);
    case CartanType::F4: return table_type_f4(w, classes);
    default:
      throw UnsupportedDatum("no character table for data-only types");
  }
}

std::vector<std::string> relevant_type_names(CartanType type, int rank) {
  std::vector<std::string> names;
  switch (type) {
    case CartanType::A: {
      int n = rank + 1;
      for (int m = 0; m <= n / 2; ++m) {
        Partition p{n - m};
        if (m > 0) p.push_back(m);
        names.push_back(partition_to_string(p));
      }
      break;
    }
    case CartanType::B:
    case CartanType::C: {
      int n = rank;
      for (int m = 0; m <= n / 2; ++m) {
        Partition p{n - m};
        if (m > 0) p.push_back(m);
        names.push_back(bipartition_to_string(p, {}));
      }
      for (int m = 1; m <= n; ++m) {
        Partition l, r{m};
        if (n - m > 0) l.push_back(n - m);
        names.push_back(bipartition_to_string(l, r));
      }
      break;
    }
    case CartanType::D: {
      int n = rank;
      for (int m = 0; m <= n / 2; ++m) {
        Partition p{n - m};
        if (m > 0) p.push_back(m);
        names.push_back(bipartition_to_string(p, {}));
      }
      for (int m = 1; m <= n / 2; ++m) {
        Partition l{n - m}, r{m};
        names.push_back(bipartition_to_string(l, r));
      }
      break;
    }
    case CartanType::G2:
      names = {"1_1", "2_1", "2_2"};
      break;
    case CartanType::F4:
      names = {"1_1", "4_2", "2_3", "8_1", "9_1"};
      break;
    default:
      throw UnsupportedDatum("no relevant-type list for data-only types");
  }
  return names;
}

std::vector<WType> select_types(const std::vector<WType>& table,
                                const std::vector<std::string>& names) {
  std::vector<WType> out;
  for (const auto& name : names) {
    auto it = std::find_if(table.begin(), table.end(),
                           [&](const WType& t) { return t.name == name; });
    if (it == table.end()) throw std::invalid_argument("unknown W-type: " + name);
    out.push_back(*it);
  }
  return out;
}

}  // namespace hecke
