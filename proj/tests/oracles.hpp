#pragma once

// Brute-force reference routines for the unit tests. Nothing here calls
// into the library's enumeration or counting paths.

#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

/// Every nondecreasing sequence of length n with entries in [1, max_value].
inline std::vector<std::vector<int>> all_nondecreasing(std::size_t n, int max_value) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int)> extend = [&](int low) {
    if (current.size() == n) {
      out.push_back(current);
      return;
    }
    for (int v = low; v <= max_value; ++v) {
      current.push_back(v);
      extend(v);
      current.pop_back();
    }
  };
  extend(1);
  return out;
}

/// Filters all_nondecreasing by entry i (1-based) <= bound(i).
inline std::vector<std::vector<int>> bounded(std::size_t n, const std::function<int(std::size_t)>& bound) {
  std::vector<std::vector<int>> out;
  const int top = n == 0 ? 1 : bound(n);
  for (auto& s : all_nondecreasing(n, top)) {
    bool ok = true;
    for (std::size_t i = 0; i < s.size(); ++i) ok = ok && s[i] <= bound(i + 1);
    if (ok) out.push_back(s);
  }
  return out;
}

/// Canonical bounds 1, m+1, 2m+1, ...
inline std::vector<std::vector<int>> canonical(std::size_t n, int m) {
  return bounded(n, [m](std::size_t i) { return m * static_cast<int>(i - 1) + 1; });
}

/// Pascal-triangle binomial, 64-bit; fine for the small sizes used here.
inline std::uint64_t binomial(unsigned n, unsigned k) {
  std::vector<std::uint64_t> row(n + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = i; j > 0; --j) row[j] += row[j - 1];
  }
  return k > n ? 0 : row[k];
}

/// Positions i with p_i = m(i-1)+1.
inline unsigned luck(const std::vector<int>& p, int m) {
  unsigned c = 0;
  for (std::size_t i = 0; i < p.size(); ++i) c += p[i] == m * static_cast<int>(i) + 1;
  return c;
}

inline unsigned count_value(const std::vector<int>& p, int v) {
  unsigned c = 0;
  for (int x : p) c += x == v;
  return c;
}

}  // namespace oracle
