#pragma once

// Reference computations that share no code with the library: plain int64
// arithmetic mod a prime and direct enumeration.

#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Grid = std::vector<std::vector<std::int64_t>>;

inline std::int64_t mod(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, b = mod(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

/// Rank of the rows of `m` over GF(p), p < 2^31.
inline int rank_mod_p(Grid m, std::int64_t p) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (mod(m[r][c], p) != 0) piv = r;
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    const std::int64_t inv = inv_mod(m[rank][c], p);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const std::int64_t f = mod(m[r][c], p) * inv % p;
      for (int j = 0; j < cols; ++j) m[r][j] = mod(m[r][j] - f * mod(m[rank][j], p), p);
    }
    ++rank;
  }
  return rank;
}

/// Eq-style dimension of a block type: q + sum floor(n_i^2/4) + sum_{i<j} n_i n_j.
inline std::int64_t type_dim(const std::vector<int>& parts) {
  std::int64_t d = static_cast<std::int64_t>(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    d += parts[i] * parts[i] / 4;
    for (std::size_t j = i + 1; j < parts.size(); ++j) d += parts[i] * parts[j];
  }
  return d;
}

/// Calls fn on every composition of n into q positive parts.
inline void for_each_composition(int n, int q, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> parts;
  std::function<void(int)> rec = [&](int remaining) {
    if (static_cast<int>(parts.size()) == q - 1) {
      if (remaining >= 1) {
        parts.push_back(remaining);
        fn(parts);
        parts.pop_back();
      }
      return;
    }
    for (int p = 1; p <= remaining; ++p) {
      parts.push_back(p);
      rec(remaining - p);
      parts.pop_back();
    }
  };
  rec(n);
}

inline std::int64_t max_type_dim_bruteforce(int n, int q) {
  std::int64_t best = 0;
  for_each_composition(n, q, [&](const std::vector<int>& c) { best = std::max(best, type_dim(c)); });
  return best;
}

/// Matrix-unit cells (r, c) whose block index difference is at least i.
inline std::set<std::pair<int, int>> staircase_cells(const std::vector<int>& parts, int i) {
  std::vector<int> block_of;
  for (std::size_t b = 0; b < parts.size(); ++b) block_of.insert(block_of.end(), parts[b], static_cast<int>(b));
  std::set<std::pair<int, int>> cells;
  const int n = static_cast<int>(block_of.size());
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (block_of[c] - block_of[r] >= i) cells.insert({r, c});
  return cells;
}

using Mat = std::vector<std::vector<std::int64_t>>;

inline Mat mul(const Mat& a, const Mat& b, std::int64_t p) {
  const std::size_t n = a.size();
  Mat c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % p;
    }
  return c;
}

inline Mat sub(const Mat& a, const Mat& b, std::int64_t p) {
  Mat c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] = mod(a[i][j] - b[i][j], p);
  return c;
}

inline bool is_zero(const Mat& a) {
  for (const auto& row : a)
    for (auto v : row)
      if (v != 0) return false;
  return true;
}

/// Greedy basis of the span of the given matrices over GF(p); keeps an
/// echelon copy of the accepted rows so each test is one reduction.
inline std::vector<Mat> basis_mod_p(const std::vector<Mat>& mats, std::int64_t p) {
  std::vector<Mat> basis;
  std::vector<std::vector<std::int64_t>> echelon;
  std::vector<std::size_t> pivots;
  for (const auto& m : mats) {
    std::vector<std::int64_t> flat;
    for (const auto& row : m) flat.insert(flat.end(), row.begin(), row.end());
    for (std::size_t r = 0; r < echelon.size(); ++r) {
      const std::int64_t c = flat[pivots[r]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < flat.size(); ++j) flat[j] = mod(flat[j] - c * echelon[r][j], p);
    }
    std::size_t lead = 0;
    while (lead < flat.size() && flat[lead] == 0) ++lead;
    if (lead == flat.size()) continue;
    const std::int64_t inv = inv_mod(flat[lead], p);
    for (auto& v : flat) v = v * inv % p;
    for (auto& row : echelon) {
      const std::int64_t c = row[lead];
      if (c == 0) continue;
      for (std::size_t j = 0; j < row.size(); ++j) row[j] = mod(row[j] - c * flat[j], p);
    }
    echelon.push_back(std::move(flat));
    pivots.push_back(lead);
    basis.push_back(m);
  }
  return basis;
}

/// Smallest q such that every product of q commutator-ideal basis elements
/// vanishes, or -1 if none up to `limit`. The ideal is spanned by
/// x [y, z] w over basis elements x, y, z, w of the (unital) algebra.
inline int commutator_nilpotency_bruteforce(const std::vector<Mat>& algebra_basis, std::int64_t p, int limit) {
  std::vector<Mat> spanning;
  for (const auto& y : algebra_basis)
    for (const auto& z : algebra_basis) {
      const Mat c = sub(mul(y, z, p), mul(z, y, p), p);
      if (is_zero(c)) continue;
      for (const auto& x : algebra_basis)
        for (const auto& w : algebra_basis) spanning.push_back(mul(mul(x, c, p), w, p));
    }
  const std::vector<Mat> ideal = basis_mod_p(spanning, p);
  if (ideal.empty()) return 1;
  std::function<bool(const Mat&, int)> all_vanish = [&](const Mat& prefix, int remaining) {
    if (is_zero(prefix)) return true;
    if (remaining == 0) return false;
    for (const auto& c : ideal)
      if (!all_vanish(mul(prefix, c, p), remaining - 1)) return false;
    return true;
  };
  for (int q = 1; q <= limit; ++q) {
    bool ok = true;
    for (const auto& c : ideal)
      if (!all_vanish(c, q - 1)) {
        ok = false;
        break;
      }
    if (ok) return q;
  }
  return -1;
}

}  // namespace oracle
