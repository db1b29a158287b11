#include "hecke/heckeops.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace hecke {
namespace {

GroupAlgebraElement identity_element(const std::shared_ptr<const WeylGroup>& w) {
  GroupAlgebraElement e{w, std::vector<Rat>(w->size(), Rat(0))};
  e.coeff[w->identity()] = 1;
  return e;
}

}  // namespace

GroupAlgebraElement long_intertwiner_for_word(
    const std::shared_ptr<const WeylGroup>& w, const Parameter& chi,
    const std::vector<int>& word) {
  const RootDatum& rd = w->datum();
  if (word.size() != rd.positive_roots.size())
    throw std::invalid_argument("word does not have longest-element length");
  if (chi.chi.size() != static_cast<std::size_t>(rd.ambient_dim))
    throw std::invalid_argument("parameter dimension mismatch");

  // x_j = <coroot_{i_j}, (s_{i_{j+1}} ... s_{i_l}) chi>, built right to left.
  const std::size_t l = word.size();
  std::vector<Rat> x(l);
  RatVec v = chi.chi;
  for (std::size_t j = l; j-- > 0;) {
    x[j] = dot(rd.simple_coroots[word[j]], v);
    v = rd.reflect_simple(word[j], v);
  }

  GroupAlgebraElement p = identity_element(w);
  std::vector<Rat> next(w->size());
  for (std::size_t j = 0; j < l; ++j) {
    std::fill(next.begin(), next.end(), Rat(0));
    for (std::size_t u = 0; u < w->size(); ++u) {
      if (p.coeff[u] == 0) continue;
      // p * (-x_j t_s - 1)
      next[w->right_simple(u, word[j])] -= x[j] * p.coeff[u];
      next[u] -= p.coeff[u];
    }
    p.coeff.swap(next);
  }
  return p;
}

GroupAlgebraElement long_intertwiner(const std::shared_ptr<const WeylGroup>& w,
                                     const Parameter& chi) {
  return long_intertwiner_for_word(w, chi, w->element(w->longest()).word);
}

GroupAlgebraElement multiply(const GroupAlgebraElement& a,
                             const GroupAlgebraElement& b) {
  if (a.group != b.group) throw std::invalid_argument("mixed groups");
  const WeylGroup& w = *a.group;
  GroupAlgebraElement c{a.group, std::vector<Rat>(w.size(), Rat(0))};
  for (std::size_t u = 0; u < w.size(); ++u) {
    if (a.coeff[u] == 0) continue;
    for (std::size_t v = 0; v < w.size(); ++v) {
      if (b.coeff[v] == 0) continue;
      c.coeff[w.compose(u, v)] += a.coeff[u] * b.coeff[v];
    }
  }
  return c;
}

Rat trivial_scalar(const GroupAlgebraElement& a) {
  Rat s = 0;
  for (const Rat& c : a.coeff) s += c;
  return s;
}

Rat sign_scalar(const GroupAlgebraElement& a) {
  Rat s = 0;
  for (std::size_t u = 0; u < a.coeff.size(); ++u) {
    if (a.group->length(u) % 2)
      s -= a.coeff[u];
    else
      s += a.coeff[u];
  }
  return s;
}

Rat normalization_factor(const RootDatum& rd, const Parameter& chi) {
  Rat n = 1;
  for (const RatVec& coroot : rd.positive_coroots) n *= dot(coroot, chi.chi) + 1;
  return n;
}

GroupAlgebraElement normalize(const GroupAlgebraElement& a) {
  Rat t = trivial_scalar(a);
  if (t == 0)
    throw ZeroNormalization("trivial-isotypic scalar is zero at this parameter");
  GroupAlgebraElement out = a;
  for (Rat& c : out.coeff) c /= t;
  return out;
}

bool is_inverse_symmetric(const GroupAlgebraElement& a) {
  for (std::size_t u = 0; u < a.coeff.size(); ++u)
    if (a.coeff[u] != a.coeff[a.group->inverse(u)]) return false;
  return true;
}

Rat matrix_entry(const GroupAlgebraElement& a, std::size_t x, std::size_t y) {
  return a.coeff[a.group->compose(a.group->inverse(y), x)];
}

RatMat full_matrix(const GroupAlgebraElement& a) {
  const std::size_t n = a.group->size();
  RatMat m(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) m.at(x, y) = matrix_entry(a, x, y);
  return m;
}

std::vector<std::vector<Rat>> power_class_sums(const GroupAlgebraElement& a,
                                               const ClassData& classes,
                                               std::size_t kmax) {
  const WeylGroup& w = *a.group;
  const std::size_t n = w.size();
  // Scale to integer coefficients once; a^k then stays integral and the
  // exact class sums come back after dividing by scale^k.
  Int scale = common_denominator(a.coeff);
  std::vector<Int> base(n);
  for (std::size_t u = 0; u < n; ++u) {
    Rat scaled = a.coeff[u] * Rat(scale);
    base[u] = scaled.get_num();
  }
  std::vector<std::vector<Rat>> out;
  std::vector<Int> cur = base, next(n);
  Rat power_scale(scale);
  for (std::size_t k = 1; k <= kmax; ++k) {
    if (k > 1) {
      for (auto& x : next) x = 0;
      for (std::size_t u = 0; u < n; ++u) {
        if (cur[u] == 0) continue;
        for (std::size_t v = 0; v < n; ++v) {
          if (base[v] == 0) continue;
          next[w.compose(u, v)] += cur[u] * base[v];
        }
      }
      cur.swap(next);
      power_scale *= Rat(scale);
    }
    std::vector<Int> sums(classes.class_size.size(), Int(0));
    for (std::size_t u = 0; u < n; ++u) sums[classes.class_of[u]] += cur[u];
    std::vector<Rat> row(sums.size());
    for (std::size_t c = 0; c < sums.size(); ++c) {
      row[c] = Rat(sums[c]) / power_scale;
      row[c].canonicalize();
    }
    out.push_back(std::move(row));
  }
  return out;
}

const WrepData& wrep_data(const std::shared_ptr<const WeylGroup>& w) {
  static std::mutex mutex;
  static std::map<const WeylGroup*, std::unique_ptr<WrepData>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[w.get()];
  if (!slot) {
    auto data = std::make_unique<WrepData>();
    data->classes = conjugacy_classes(*w);
    data->table = character_table(*w, data->classes);
    slot = std::move(data);
  }
  return *slot;
}

UnitarityCertificate decide_unitarity(const RootDatum& rd, const Parameter& chi,
                                      const std::vector<std::string>& type_names,
                                      std::size_t cap) {
  auto [dom, to_dom] = make_dominant(rd, chi);
  UnitarityCertificate cert;
  cert.chi_dominant = dom;
  cert.hermitian = is_hermitian_point(rd, dom);
  cert.irreducible = true;
  for (const RatVec& coroot : rd.positive_coroots)
    if (dot(coroot, dom.chi) == 1) cert.irreducible = false;
  if (!cert.hermitian) {
    cert.unitary = false;
    return cert;
  }

  auto w = enumerate_weyl(rd, cap);
  GroupAlgebraElement raw = long_intertwiner(w, dom);
  cert.trivial_raw = trivial_scalar(raw);
  GroupAlgebraElement op = normalize(raw);
  if (!is_inverse_symmetric(op))
    throw NotHermitian("operator is not symmetric at a Hermitian parameter");

  const WrepData& data = wrep_data(w);
  std::vector<WType> selected = select_types(data.table, type_names);
  std::size_t kmax = 0;
  for (const auto& t : selected) kmax = std::max(kmax, t.dim);
  auto sums = power_class_sums(op, data.classes, kmax);

  cert.unitary = true;
  for (const auto& t : selected) {
    TypeVerdict v;
    v.name = t.name;
    v.dim = t.dim;
    v.combined = t.combined;
    std::vector<Rat> power_sums(t.dim);
    for (std::size_t k = 1; k <= t.dim; ++k) {
      Rat p = 0;
      for (std::size_t c = 0; c < data.classes.class_size.size(); ++c)
        p += sums[k - 1][c] * t.on_class[c];
      power_sums[k - 1] = p;
    }
    auto monic = char_poly_from_power_sums(power_sums);
    v.inertia = real_rooted_sign_counts(monic);
    v.positive = (v.inertia.negative == 0);
    cert.unitary = cert.unitary && v.positive;
    cert.types.push_back(std::move(v));
  }
  return cert;
}

UnitarityCertificate decide_unitarity_relevant(const RootDatum& rd,
                                               const Parameter& chi,
                                               std::size_t cap) {
  return decide_unitarity(rd, chi,
                          relevant_type_names(rd.cartan_type, rd.rank), cap);
}

UnitarityCertificate decide_unitarity_all(const RootDatum& rd,
                                          const Parameter& chi,
                                          std::size_t cap) {
  auto w = enumerate_weyl(rd, cap);
  std::vector<std::string> names;
  for (const auto& t : wrep_data(w).table) names.push_back(t.name);
  return decide_unitarity(rd, chi, names, cap);
}

PsdCertificate psd_certify(const RatMat& m) {
  if (!is_symmetric(m)) throw std::invalid_argument("matrix is not symmetric");
  PsdCertificate cert;
  auto ldlt = ldlt_signature(m);
  if (ldlt) {
    cert.inertia = *ldlt;
    cert.method = PsdMethod::ldlt;
  } else {
    cert.inertia = real_rooted_sign_counts(char_poly(m));
    cert.method = PsdMethod::charpoly;
  }
  cert.positive_semidefinite = (cert.inertia.negative == 0);

  std::vector<double> approx(m.n * m.n);
  for (std::size_t i = 0; i < m.n * m.n; ++i) approx[i] = m.a[i].get_d();
  SignCounts fl = float_signature(approx, m.n);
  // The advisory check only counts strict signs; zero eigenvalues are
  // ambiguous in floating point, so compare the negatives.
  cert.float_agrees = (fl.negative == cert.inertia.negative);
  return cert;
}

}  // namespace hecke
