#include "hecke/linalg.hpp"

#include <algorithm>
#include <cmath>

#ifdef HECKE_HAVE_EIGEN
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#endif

namespace hecke {

bool is_symmetric(const RatMat& m) {
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = i + 1; j < m.n; ++j)
      if (m.at(i, j) != m.at(j, i)) return false;
  return true;
}

RatMat mat_mul(const RatMat& x, const RatMat& y) {
  if (x.n != y.n) throw std::invalid_argument("mat_mul: size mismatch");
  RatMat out(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t k = 0; k < x.n; ++k) {
      const Rat& v = x.at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < x.n; ++j) out.at(i, j) += v * y.at(k, j);
    }
  return out;
}

std::optional<SignCounts> ldlt_signature(const RatMat& m) {
  RatMat w = m;
  std::size_t n = w.n;
  std::vector<bool> done(n, false);
  SignCounts counts;
  for (std::size_t step = 0; step < n; ++step) {
    // Pick the remaining index with nonzero diagonal entry; any one works,
    // the largest keeps entries moderate in practice.
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || w.at(i, i) == 0) continue;
      if (pivot == n || cmp(abs(w.at(i, i)), abs(w.at(pivot, pivot))) > 0)
        pivot = i;
    }
    if (pivot == n) {
      // All remaining diagonal entries vanish.  If the whole remaining block
      // is zero we are finished; otherwise elimination stalls.
      bool clean = true;
      std::size_t remaining = 0;
      for (std::size_t i = 0; i < n && clean; ++i) {
        if (done[i]) continue;
        ++remaining;
        for (std::size_t j = 0; j < n && clean; ++j)
          if (!done[j] && w.at(i, j) != 0) clean = false;
      }
      if (!clean) return std::nullopt;
      counts.zero += remaining;
      return counts;
    }
    const Rat d = w.at(pivot, pivot);
    if (d > 0)
      ++counts.positive;
    else
      ++counts.negative;
    done[pivot] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || w.at(i, pivot) == 0) continue;
      const Rat f = w.at(i, pivot) / d;
      for (std::size_t j = 0; j < n; ++j) {
        if (done[j]) continue;
        w.at(i, j) -= f * w.at(pivot, j);
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      w.at(pivot, j) = 0;
      w.at(j, pivot) = 0;
    }
  }
  return counts;
}

std::vector<Rat> char_poly(const RatMat& m) {
  const std::size_t n = m.n;
  std::vector<Rat> c(n + 1, Rat(0));
  c[0] = 1;
  RatMat work(n);  // starts as the identity scaled into the recurrence
  for (std::size_t i = 0; i < n; ++i) work.at(i, i) = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    RatMat prod = mat_mul(m, work);
    Rat tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += prod.at(i, i);
    c[k] = -tr / Rat(static_cast<long>(k));
    work = prod;
    for (std::size_t i = 0; i < n; ++i) work.at(i, i) += c[k];
  }
  return c;
}

std::vector<Rat> char_poly_from_power_sums(const std::vector<Rat>& p) {
  const std::size_t d = p.size();
  // e[k] are the signed coefficients: p(x) = sum_k (-1)^k e[k] x^(d-k).
  std::vector<Rat> e(d + 1, Rat(0));
  e[0] = 1;
  for (std::size_t k = 1; k <= d; ++k) {
    Rat acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      Rat term = e[k - i] * p[i - 1];
      if (i % 2 == 0)
        acc -= term;
      else
        acc += term;
    }
    e[k] = acc / Rat(static_cast<long>(k));
  }
  std::vector<Rat> c(d + 1);
  for (std::size_t k = 0; k <= d; ++k) c[k] = (k % 2 ? -e[k] : e[k]);
  return c;
}

SignCounts real_rooted_sign_counts(const std::vector<Rat>& monic) {
  if (monic.empty() || monic[0] != 1)
    throw std::invalid_argument("sign counts: polynomial must be monic");
  const std::size_t n = monic.size() - 1;
  std::size_t zeros = 0;
  std::size_t last = n;
  while (last > 0 && monic[last] == 0) {
    ++zeros;
    --last;
  }
  auto variations = [&](bool flip_odd) {
    int prev = 0;
    std::size_t count = 0;
    for (std::size_t k = 0; k <= last; ++k) {
      Rat v = monic[k];
      // Power of the term is (n - k); flipping x -> -x negates odd powers.
      if (flip_odd && ((n - k) % 2 == 1)) v = -v;
      if (v == 0) continue;
      int s = sgn(v);
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  };
  SignCounts out;
  out.zero = zeros;
  out.positive = variations(false);
  out.negative = variations(true);
  if (out.positive + out.negative + out.zero != n)
    throw std::logic_error("sign counts: polynomial has non-real roots");
  return out;
}

#ifdef HECKE_HAVE_EIGEN
SignCounts float_signature(const std::vector<double>& sym, std::size_t n,
                           double tol) {
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = sym[i * n + j];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  SignCounts out;
  double scale = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    scale = std::max(scale, std::abs(solver.eigenvalues()[i]));
  const double cut = tol * scale;
  for (std::size_t i = 0; i < n; ++i) {
    double v = solver.eigenvalues()[i];
    if (v > cut)
      ++out.positive;
    else if (v < -cut)
      ++out.negative;
    else
      ++out.zero;
  }
  return out;
}
#else
// Cyclic Jacobi; adequate for an advisory check when Eigen is absent.
SignCounts float_signature(const std::vector<double>& sym, std::size_t n,
                           double tol) {
  std::vector<double> a = sym;
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  for (int sweep = 0; sweep < 30; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
    if (off < 1e-24) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(at(p, q)) < 1e-18) continue;
        double theta = (at(q, q) - at(p, p)) / (2 * at(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
  }
  SignCounts out;
  double scale = 1.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(at(i, i)));
  const double cut = tol * scale;
  for (std::size_t i = 0; i < n; ++i) {
    double v = at(i, i);
    if (v > cut)
      ++out.positive;
    else if (v < -cut)
      ++out.negative;
    else
      ++out.zero;
  }
  return out;
}
#endif

}  // namespace hecke
