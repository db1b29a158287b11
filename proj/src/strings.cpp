#include "hecke/strings.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace hecke {

namespace {

Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

// Fractional part in [0,1).
Rat fractional(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - Rat(q);
}

// Distance to the nearest integer, the class key in [0, 1/2].
Rat tau_class(const Rat& x) {
  Rat f = fractional(x);
  Rat g = 1 - f;
  return f < g ? f : g;
}

using Counts = std::map<Rat, int>;

void take(Counts& c, const Rat& v) {
  auto it = c.find(v);
  assert(it != c.end() && it->second > 0);
  if (--it->second == 0) c.erase(it);
}

int have(const Counts& c, const Rat& v) {
  auto it = c.find(v);
  return it == c.end() ? 0 : it->second;
}

Rat center(const RatVec& s) { return (s.front() + s.back()) / 2; }

RatVec mirrored(const RatVec& s) {
  RatVec m(s.rbegin(), s.rend());
  for (Rat& x : m) x = -x;
  return m;
}

// Lockstep extraction for a non-special class: the smallest entry seeds the
// plus string, the largest its mirror, and both grow by unit steps while
// copies remain on both sides.  Passing level 0 costs two zeros at once.
void extract_lockstep(Counts counts, const Rat& tau,
                      std::vector<StringPair>& pairs,
                      std::vector<RatVec>& block) {
  while (!counts.empty()) {
    Rat lo = counts.begin()->first;
    Rat hi = std::prev(counts.end())->first;
    assert(lo == -hi);
    take(counts, lo);
    take(counts, hi);
    RatVec plus{lo};
    Rat v = lo;
    while (true) {
      Rat w = v + 1;
      if (w == 0) {
        if (have(counts, w) < 2) break;
        take(counts, w);
        take(counts, w);
      } else {
        if (have(counts, w) < 1 || have(counts, -w) < 1) break;
        take(counts, w);
        take(counts, -w);
      }
      plus.push_back(w);
      v = w;
    }
    assert(center(plus) <= 0);
    StringPair p;
    p.tau = tau;
    p.nu = rat_abs(center(plus));
    p.plus_string = plus;
    pairs.push_back(std::move(p));
    block.push_back(plus);
    block.push_back(mirrored(plus));
  }
}

// Greedy maximal increasing strings, longest first from the smallest seed.
std::vector<RatVec> extract_greedy(Counts counts) {
  std::vector<RatVec> out;
  while (!counts.empty()) {
    Rat v = counts.begin()->first;
    take(counts, v);
    RatVec s{v};
    while (have(counts, v + 1) > 0) {
      v += 1;
      take(counts, v);
      s.push_back(v);
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Increasing unit-step strings mirror each other exactly when the head of
// one is the negated tail of the other and the lengths agree.
bool is_mirror_of(const RatVec& s, const RatVec& t) {
  return s.size() == t.size() && t.front() == -s.back();
}

// Pairs greedily extracted strings with their mirrors (identical symmetric
// strings pair among themselves); survivors go to the distinguished list.
void pair_greedy(const std::vector<RatVec>& strings, CartanType type,
                 std::vector<StringPair>& pairs, std::vector<RatVec>& dist,
                 std::vector<RatVec>& block) {
  std::vector<char> used(strings.size(), 0);
  for (std::size_t i = 0; i < strings.size(); ++i) {
    if (used[i]) continue;
    for (std::size_t j = i + 1; j < strings.size(); ++j) {
      if (used[j] || !is_mirror_of(strings[i], strings[j])) continue;
      used[i] = used[j] = 1;
      StringPair p;
      p.tau = tau_class(strings[i].front());
      p.nu = rat_abs(center(strings[i]));
      p.plus_string = center(strings[i]) <= 0 ? strings[i] : strings[j];
      pairs.push_back(std::move(p));
      break;
    }
  }
  for (std::size_t i = 0; i < strings.size(); ++i) {
    if (used[i]) continue;
    const RatVec& s = strings[i];
    if (s.front() != -s.back())
      throw InvalidDistinguished("unpaired string (" + vec_to_string(s) +
                                 ") is not symmetric around 0");
    if (type == CartanType::B && s.size() % 2 != 0)
      throw InvalidDistinguished("type B distinguished string length must be even");
    if ((type == CartanType::C || type == CartanType::D) && s.size() % 2 != 1)
      throw InvalidDistinguished("type " + cartan_name(type) +
                                 " distinguished string length must be odd");
    dist.push_back(s);
  }
  for (const RatVec& s : strings) block.push_back(s);
}

FactorType factor_kind(CartanType type, int part, int mult) {
  if (type == CartanType::A) return FactorType::C;
  const bool symplectic_dual = type == CartanType::B;
  const bool symplectic_factor =
      symplectic_dual ? part % 2 == 1 : part % 2 == 0;
  if (symplectic_factor) {
    if (mult % 2 != 0)
      throw InvalidPartition("part " + std::to_string(part) +
                             " needs even multiplicity in the dual algebra of type " +
                             cartan_name(type));
    return FactorType::C;
  }
  return mult % 2 != 0 ? FactorType::B : FactorType::D;
}

// Index-i instance of the interlacing region over sorted nonnegative nu.
bool interlaced_at(const RatVec& nu, int i) {
  const int n = static_cast<int>(nu.size());
  const Rat prev = i >= 2 ? nu[i - 2] : Rat(0);
  if (!(nu[i - 1] < 1 - prev)) return false;
  Rat last = 1 - prev;
  for (int j = i; j < n; ++j) {
    if (!(nu[j] > last && nu[j] < 1)) return false;
    last = nu[j];
  }
  for (int j = i; j < n; ++j) {
    const Rat a = j == i ? nu[i - 1] : nu[j - 1];
    const Rat b = nu[j];
    int separators = 0;
    for (int l = 1; l < i; ++l) {
      const Rat s = 1 - nu[l - 1];
      if (a < s && s < b) ++separators;
    }
    if (separators % 2 == 0) return false;
  }
  return true;
}

bool interlaced(const RatVec& nu) {
  if (nu.empty()) return true;
  for (int i = 1; i <= static_cast<int>(nu.size()); ++i)
    if (interlaced_at(nu, i)) return true;
  return false;
}

std::string join_parts(const std::vector<int>& parts) {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ',';
    out << parts[i];
  }
  return out.str();
}

}  // namespace

std::string factor_name(const CentralizerFactor& factor) {
  const char* letter = "?";
  switch (factor.factor_type) {
    case FactorType::B: letter = "B"; break;
    case FactorType::C: letter = "C"; break;
    case FactorType::D: letter = "D"; break;
    case FactorType::T: letter = "T"; break;
  }
  return letter + std::to_string(factor.rank);
}

StringDecomposition decompose(CartanType type, const Parameter& chi) {
  if (type != CartanType::A && type != CartanType::B &&
      type != CartanType::C && type != CartanType::D)
    throw UnsupportedDatum("string decomposition requires a classical type");
  const RatVec& x = chi.chi;
  const int min_size = type == CartanType::A ? 2 : 1;
  if (static_cast<int>(x.size()) < min_size)
    throw UnsupportedDatum("parameter too short for string decomposition");

  StringDecomposition dec;
  dec.cartan_type = type;
  dec.rank = type == CartanType::A ? static_cast<int>(x.size()) - 1
                                   : static_cast<int>(x.size());

  if (type == CartanType::A) {
    // Degenerate one-pass case: strings never cross fractional classes, so
    // the whole parameter can be processed as one greedy batch.
    Counts all;
    for (const Rat& v : x) ++all[v];
    std::vector<RatVec> block;
    pair_greedy(extract_greedy(std::move(all)), type, dec.pairs,
                dec.distinguished, block);
    for (const RatVec& s : block) dec.tau_blocks[tau_class(s.front())].push_back(s);
  } else {
    std::map<Rat, Counts> classes;
    for (const Rat& v : x) {
      const Rat t = tau_class(v);
      ++classes[t][v];
      ++classes[t][-v];
    }
    const Rat special = type == CartanType::B ? Rat(1, 2) : Rat(0);
    if (type == CartanType::C) ++classes[special][Rat(0)];  // forced extra zero
    for (auto& [tau, counts] : classes) {
      std::vector<RatVec>& block = dec.tau_blocks[tau];
      if (tau == special)
        pair_greedy(extract_greedy(std::move(counts)), type, dec.pairs,
                    dec.distinguished, block);
      else
        extract_lockstep(std::move(counts), tau, dec.pairs, block);
    }
  }

  std::sort(dec.distinguished.begin(), dec.distinguished.end(),
            [](const RatVec& a, const RatVec& b) { return a.size() < b.size(); });
  for (const RatVec& s : dec.distinguished)
    dec.distinguished_parts.push_back(static_cast<int>(s.size()));
  for (std::size_t i = 1; i < dec.distinguished_parts.size(); ++i)
    if (dec.distinguished_parts[i] == dec.distinguished_parts[i - 1])
      throw InvalidDistinguished("distinguished lengths must be pairwise distinct");

  // Group pair lengths by value and attach the nu coordinates.
  std::map<int, RatVec> groups;
  for (const StringPair& p : dec.pairs)
    groups[static_cast<int>(p.plus_string.size())].push_back(p.nu);
  for (auto& [part, nus] : groups) {
    std::sort(nus.begin(), nus.end());
    const bool tail = std::find(dec.distinguished_parts.begin(),
                                dec.distinguished_parts.end(),
                                part) != dec.distinguished_parts.end();
    const int mult = 2 * static_cast<int>(nus.size()) + (tail ? 1 : 0);
    CentralizerFactor f;
    f.factor_type = factor_kind(type, part, mult);
    f.rank = static_cast<int>(nus.size());
    f.part = part;
    f.nu = nus;
    dec.nu_factors.push_back(std::move(f));
    dec.orbit_groups.push_back(std::vector<int>(2 * nus.size(), part));
  }

  // Output sanity: the partition must be a dual-algebra orbit of the right
  // size, and type D rejects the all-even (very even) case.
  long total = 0;
  bool all_even = true;
  for (const int part : full_partition(dec)) {
    total += part;
    all_even = all_even && part % 2 == 0;
  }
  const long expect = type == CartanType::A   ? static_cast<long>(x.size())
                      : type == CartanType::C ? 2L * dec.rank + 1
                                              : 2L * dec.rank;
  if (total != expect)
    throw std::logic_error("string decomposition lost entries");
  if (type == CartanType::D && all_even)
    throw VeryEvenOrbit("partition (" + join_parts(full_partition(dec)) +
                        ") is very even; its two orbits are not separated");

  // Orbit midpoint: centered strings folded to the ambient coordinates.
  RatVec h;
  for (const StringPair& p : dec.pairs) {
    const int l = static_cast<int>(p.plus_string.size());
    for (int k = 0; k < l; ++k) {
      const Rat e = make_rat(2 * k - (l - 1), 2);
      if (type == CartanType::A) {
        h.push_back(e);
        h.push_back(e);
      } else {
        h.push_back(rat_abs(e));
      }
    }
  }
  for (const RatVec& s : dec.distinguished) {
    const int l = static_cast<int>(s.size());
    for (int k = 0; k < l; ++k) {
      const Rat e = make_rat(2 * k - (l - 1), 2);
      if (type == CartanType::A ? true : e > 0) h.push_back(e);
    }
  }
  while (h.size() < x.size()) h.push_back(Rat(0));
  if (h.size() != x.size())
    throw std::logic_error("orbit midpoint has the wrong length");
  std::sort(h.begin(), h.end());
  dec.h_half = std::move(h);

  // Reconstruction invariant: the stored strings collapse back to the
  // recipe's input multiset.
  Counts want;
  for (const Rat& v : x) {
    ++want[v];
    if (type != CartanType::A) ++want[-v];
  }
  if (type == CartanType::C) ++want[Rat(0)];
  Counts got;
  for (const auto& [tau, block] : dec.tau_blocks)
    for (const RatVec& s : block)
      for (const Rat& v : s) ++got[v];
  if (want != got) throw std::logic_error("string reconstruction mismatch");

  return dec;
}

std::vector<int> full_partition(const StringDecomposition& dec) {
  std::vector<int> parts;
  for (const auto& group : dec.orbit_groups)
    parts.insert(parts.end(), group.begin(), group.end());
  parts.insert(parts.end(), dec.distinguished_parts.begin(),
               dec.distinguished_parts.end());
  std::sort(parts.begin(), parts.end());
  return parts;
}

std::string render_orbit(const StringDecomposition& dec) {
  std::ostringstream out;
  out << '(';
  for (std::size_t g = 0; g < dec.orbit_groups.size(); ++g) {
    if (g) out << ';';
    out << join_parts(dec.orbit_groups[g]);
  }
  if (!dec.distinguished_parts.empty())
    out << ";;" << join_parts(dec.distinguished_parts);
  out << ')';
  return out.str();
}

std::string render_nu(const StringDecomposition& dec) {
  std::ostringstream out;
  out << '(';
  for (std::size_t g = 0; g < dec.nu_factors.size(); ++g) {
    if (g) out << ';';
    const RatVec& nu = dec.nu_factors[g].nu;
    for (std::size_t i = 0; i < nu.size(); ++i) {
      if (i) out << ',';
      out << rat_to_string(nu[i]);
    }
  }
  if (!dec.distinguished_parts.empty()) out << ";; ";
  out << ')';
  return out.str();
}

std::vector<CentralizerFactor> centralizer_factors(CartanType type,
                                                   const std::vector<int>& partition) {
  std::map<int, int> mult;
  for (const int part : partition) {
    if (part <= 0) throw InvalidPartition("parts must be positive");
    ++mult[part];
  }
  std::vector<CentralizerFactor> factors;
  for (const auto& [part, m] : mult) {
    CentralizerFactor f;
    f.factor_type = factor_kind(type, part, m);
    f.rank = m / 2;
    f.part = part;
    if (f.rank == 0) continue;
    f.nu.assign(f.rank, Rat(0));
    factors.push_back(std::move(f));
  }
  return factors;
}

bool zero_cs_predicate(const CentralizerFactor& factor) {
  RatVec nu;
  nu.reserve(factor.nu.size());
  for (const Rat& v : factor.nu) nu.push_back(rat_abs(v));
  std::sort(nu.begin(), nu.end());
  switch (factor.factor_type) {
    case FactorType::T:
      return nu.empty() || nu.back() == 0;
    case FactorType::C:
      for (const Rat& v : nu)
        if (!(v < Rat(1, 2))) return false;
      return true;
    case FactorType::B:
      return interlaced(nu);
    case FactorType::D:
      if (factor.rank % 2 == 1 && !nu.empty() && nu.front() != 0) return false;
      return interlaced(nu);
  }
  throw std::logic_error("unknown factor type");
}

StringVerdict unitary_via_strings(CartanType type, const Parameter& chi) {
  const int rank = type == CartanType::A ? static_cast<int>(chi.chi.size()) - 1
                                         : static_cast<int>(chi.chi.size());
  RootDatum rd = build(type, rank);
  StringVerdict verdict;
  verdict.hermitian = is_hermitian_point(rd, chi);
  if (!verdict.hermitian) {
    verdict.decomposition.cartan_type = type;
    verdict.decomposition.rank = rank;
    return verdict;
  }
  verdict.decomposition = decompose(type, chi);
  bool all_ok = true;
  for (const CentralizerFactor& f : verdict.decomposition.nu_factors) {
    const bool ok = zero_cs_predicate(f);
    verdict.factor_ok.push_back(ok);
    all_ok = all_ok && ok;
  }
  verdict.unitary = all_ok;
  return verdict;
}

}  // namespace hecke
