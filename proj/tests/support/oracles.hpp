// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the algorithms it is checking.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "fqk/fusion_ring.hpp"
#include "fqk/int_matrix.hpp"
#include "fqk/integer.hpp"
#include "fqk/irrep.hpp"

namespace fqk::oracle {

using MpzMatrix = std::vector<std::vector<mpz_class>>;

inline MpzMatrix to_mpz(const DenseMatrix& a) {
  MpzMatrix m;
  for (const auto& row : a) {
    std::vector<mpz_class> r;
    for (const auto& x : row) r.push_back(x.to_mpz());
    m.push_back(std::move(r));
  }
  return m;
}

/// Fraction-free Gaussian elimination; returns the rank and, for square
/// input, the determinant.
struct Bareiss {
  std::size_t rank = 0;
  mpz_class det = 0;
};

inline Bareiss bareiss(MpzMatrix a) {
  Bareiss out;
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  mpz_class prev = 1;
  int sign = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && a[p][col] == 0) ++p;
    if (p == m) continue;
    if (p != row) {
      std::swap(a[p], a[row]);
      sign = -sign;
    }
    for (std::size_t i = row + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[row][col] - a[i][col] * a[row][j]) / prev;
      }
      a[i][col] = 0;
    }
    prev = a[row][col];
    ++row;
  }
  out.rank = row;
  if (m == n) out.det = row == n ? mpz_class(sign * prev) : mpz_class(0);
  if (m == 0 && n == 0) out.det = 1;
  return out;
}

/// dim u_k of FO(3) is the Fibonacci number F(2k + 2).
inline Integer fo3_dim_fibonacci(int k) {
  mpz_class a = 0, b = 1;
  for (int i = 0; i < 2 * k + 2; ++i) {
    mpz_class c = a + b;
    a = b;
    b = c;
  }
  return Integer(a);
}

/// W-words built straight from the sign recursion: choose a composition
/// n_1 + ... + n_p = degree and a starting sign.
inline std::vector<Irrep> w_words_from_recursion(int degree) {
  std::vector<Irrep> out;
  if (degree < 1) return out;
  // Compositions of `degree` via bitmasks of cut points.
  for (std::uint32_t cuts = 0; cuts < (1U << (degree - 1)); ++cuts) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 0; i < degree - 1; ++i) {
      if (cuts & (1U << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    for (int eps0 : {1, -1}) {
      std::vector<Letter> ls;
      if (eps0 == -1) ls.push_back(make_letter(1, -1));  // [eps_0]_-
      int eps = eps0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        ls.push_back(make_letter(0, parts[i]));
        eps = (parts[i] % 2 == 0) ? -eps : eps;  // -(-1)^n eps
        if (i + 1 < parts.size()) {
          ls.push_back(make_letter(1, eps));
        } else if (eps == 1) {
          ls.push_back(make_letter(1, 1));  // [eps_p]_+
        }
      }
      out.emplace_back(std::move(ls));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Reduced word in the free group on generators 0, 1 as syllables
/// (generator, nonzero exponent).
using FreeWord = std::vector<std::pair<int, std::int64_t>>;

inline FreeWord free_multiply(FreeWord a, const FreeWord& b) {
  for (const auto& s : b) {
    if (!a.empty() && a.back().first == s.first) {
      a.back().second += s.second;
      if (a.back().second == 0) a.pop_back();
    } else {
      a.push_back(s);
    }
  }
  return a;
}

inline FreeWord to_free_word(const Irrep& r) {
  FreeWord w;
  for (const auto& l : r.letters) w.emplace_back(static_cast<int>(l.factor), l.index);
  return w;
}

inline Irrep from_free_word(const FreeWord& w) {
  std::vector<Letter> ls;
  for (const auto& [g, e] : w) ls.push_back(make_letter(static_cast<std::uint32_t>(g), e));
  return Irrep(std::move(ls));
}

/// Tiny union-find.
struct Partition {
  std::vector<std::size_t> up;
  explicit Partition(std::size_t n) : up(n) {
    for (std::size_t i = 0; i < n; ++i) up[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { up[find(a)] = find(b); }
};

/// Uniform sample of `count` elements, deterministic for a given seed.
template <class T>
std::vector<T> sample(const std::vector<T>& pool, std::size_t count,
                      std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(pool[pick(rng)]);
  return out;
}

/// Random dense integer matrix with entries in [lo, hi].
inline DenseMatrix random_matrix(std::mt19937& rng, std::size_t m, std::size_t n,
                                 int lo, int hi) {
  std::uniform_int_distribution<int> entry(lo, hi);
  DenseMatrix a(m, std::vector<Integer>(n));
  for (auto& row : a) {
    for (auto& x : row) x = entry(rng);
  }
  return a;
}

}  // namespace fqk::oracle
