#pragma once

// Brute-force oracles that avoid the library's elimination code: ranks and
// kernels come from determinants of minors.

#include <algorithm>
#include <vector>

#include "zfarkas/exactnum.hpp"
#include "zfarkas/relations.hpp"

namespace zfarkas::testing {

inline Rat det(const RatMatrix& m) {
  const Index n = m.rows();
  if (n == 0) return Rat(1);
  Rat total(0);
  for (Index j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    RatMatrix minor(n - 1, n - 1);
    for (Index r = 1; r < n; ++r) {
      Index c2 = 0;
      for (Index c = 0; c < n; ++c) {
        if (c != j) minor(r - 1, c2++) = m(r, c);
      }
    }
    const Rat term = m(0, j) * det(minor);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

/// All k-element subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<Index>> subsets(Index n, Index k) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> s(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i;
  if (k > n) return out;
  for (;;) {
    out.push_back(s);
    Index i = k - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++s[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

inline RatMatrix pick(const RatMatrix& m, const std::vector<Index>& rows, const std::vector<Index>& cols) {
  RatMatrix out(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(static_cast<Index>(i), static_cast<Index>(j)) = m(rows[i], cols[j]);
  return out;
}

/// Largest k with a nonzero k x k minor.
inline Index minor_rank(const RatMatrix& m) {
  for (Index k = std::min(m.rows(), m.cols()); k > 0; --k) {
    for (const auto& r : subsets(m.rows(), k)) {
      for (const auto& c : subsets(m.cols(), k)) {
        if (!det(pick(m, r, c)).is_zero()) return k;
      }
    }
  }
  return 0;
}

/// Tests every subset of the family for a one-dimensional, fully supported
/// kernel; the kernel vector is the signed vector of maximal minors of a
/// full-rank row selection.
inline std::vector<Circuit> brute_circuits(const VectorFamily& family) {
  const Index n = family.rows(), m = family.cols();
  std::vector<Circuit> out;
  for (Index k = 1; k <= m; ++k) {
    for (const auto& s : subsets(m, k)) {
      std::vector<Index> all_rows(static_cast<std::size_t>(n));
      for (Index i = 0; i < n; ++i) all_rows[static_cast<std::size_t>(i)] = i;
      const RatMatrix sub = pick(family, all_rows, s);
      if (minor_rank(sub) != k - 1) continue;
      std::vector<Rat> kernel;
      for (const auto& rows : subsets(n, k - 1)) {
        const RatMatrix r = pick(sub, rows, [&] {
          std::vector<Index> c(static_cast<std::size_t>(k));
          for (Index j = 0; j < k; ++j) c[static_cast<std::size_t>(j)] = j;
          return c;
        }());
        kernel.clear();
        bool nonzero = false;
        for (Index j = 0; j < k; ++j) {
          std::vector<Index> cols;
          for (Index c = 0; c < k; ++c) {
            if (c != j) cols.push_back(c);
          }
          std::vector<Index> rr(static_cast<std::size_t>(k - 1));
          for (Index i = 0; i < k - 1; ++i) rr[static_cast<std::size_t>(i)] = i;
          Rat d = det(pick(r, rr, cols));
          if (j % 2 == 1) d = -d;
          nonzero = nonzero || !d.is_zero();
          kernel.push_back(d);
        }
        if (nonzero) break;
      }
      if (k == 1) kernel = {Rat(1)};
      if (std::any_of(kernel.begin(), kernel.end(), [](const Rat& x) { return x.is_zero(); })) continue;
      Int den(1), g(0);
      for (const auto& x : kernel) den = lcm(den, x.den());
      std::vector<Int> coeffs;
      for (const auto& x : kernel) {
        const Rat scaled = x * Rat(den);
        coeffs.push_back(scaled.num());
        g = gcd(g, scaled.num());
      }
      const Int sign = coeffs.front().sign() < 0 ? Int(-1) : Int(1);
      for (auto& c : coeffs) c = exact_div(c, g) * sign;
      out.push_back(Circuit{s, coeffs});
    }
  }
  std::sort(out.begin(), out.end(), [](const Circuit& a, const Circuit& b) { return a.support < b.support; });
  return out;
}

inline PrimeSet brute_prime_set(const std::vector<Circuit>& cs) {
  std::vector<Int> primes;
  for (const auto& c : cs) {
    for (const auto& x : c.coeffs) {
      Int r = abs(x);
      for (Int p(2); p * p <= r; p = p + Int(1)) {
        while (divides(p, r) && !r.is_zero()) {
          primes.push_back(p);
          r = exact_div(r, p);
        }
      }
      if (r > Int(1)) primes.push_back(r);
    }
  }
  return PrimeSet(primes);
}

}  // namespace zfarkas::testing
