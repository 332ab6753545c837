#pragma once

// Independent reference computations used as test oracles. None of these
// call into the library's elimination or polynomial code.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "linkne/algebra.hpp"

namespace oracle {

using linkne::Rat;
using linkne::Vec;

inline std::vector<Rat> strip(std::vector<Rat> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

// Schoolbook long division remainder.
inline std::vector<Rat> rem(std::vector<Rat> a, const std::vector<Rat>& b) {
  a = strip(a);
  while (a.size() >= b.size()) {
    const Rat q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a = strip(a);
  }
  return a;
}

// Monic gcd by the plain Euclidean algorithm over Q.
inline std::vector<Rat> euclid_gcd(std::vector<Rat> a, std::vector<Rat> b) {
  a = strip(a);
  b = strip(b);
  while (!b.empty()) {
    auto r = rem(a, b);
    a = b;
    b = r;
  }
  if (a.empty()) return a;
  const Rat lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

// Gauss-Jordan rank.
inline std::size_t rank(std::vector<Vec> rows) {
  std::size_t r = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rat f = rows[i][c] / rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

// Product straight from the dense structure constants.
inline Vec mul(const linkne::Algebra& a, const Vec& x, const Vec& y) {
  const std::size_t n = a.dim();
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (x[i] == 0 || y[j] == 0) continue;
      for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * a.structure_constants()[i][j][k];
    }
  }
  return out;
}

// Left multiplication by x is bijective.
inline bool invertible(const linkne::Algebra& a, const Vec& x) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(mul(a, x, a.basis_vec(i)));
  return rank(rows) == a.dim();
}

// Set partitions of {0..n-1} by inserting each element into an existing block
// or a new one.
inline std::vector<std::vector<std::vector<std::size_t>>> partitions(std::size_t n) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::vector<std::size_t>> cur;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t b = 0; b < cur.size(); ++b) {
      cur[b].push_back(k);
      go(k + 1);
      cur[b].pop_back();
    }
    cur.push_back({k});
    go(k + 1);
    cur.pop_back();
  };
  if (n > 0) go(0);
  return out;
}

inline std::set<int> sumset_mod(const std::set<int>& a, const std::set<int>& b, int m) {
  std::set<int> out;
  for (int x : a) {
    for (int y : b) out.insert((x + y) % m);
  }
  return out;
}

}  // namespace oracle
