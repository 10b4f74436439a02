#include "dqalg/classification.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace dq {

std::int64_t type_dimension(const BlockType& type) {
  std::int64_t dim = type.q();
  std::int64_t before = 0;
  for (int p : type.parts()) {
    dim += std::int64_t{p} * p / 4 + before * p;
    before += p;
  }
  return dim;
}

std::int64_t max_dim_formula(int n, int q) {
  if (q < 1 || q > n) {
    throw Error(ErrorCode::InvalidQ, "need 1 <= q <= n, got n = " + std::to_string(n) + ", q = " + std::to_string(q));
  }
  const std::int64_t m = n / q;
  const std::int64_t r = n - q * m;
  const std::int64_t nn = n;
  const std::int64_t off_diagonal = (nn * nn - (q - r) * m * m - r * (m + 1) * (m + 1)) / 2;
  return off_diagonal + q + (q - r) * (m * m / 4) + r * ((m + 1) * (m + 1) / 4);
}

ModuleBound faithful_module_bound(std::int64_t dim_a, int q) {
  if (q < 1 || dim_a < q) {
    throw Error(ErrorCode::InvalidInput, "need q >= 1 and dim >= q, got dim = " + std::to_string(dim_a) +
                                             ", q = " + std::to_string(q));
  }
  // (dim - q) / (1/2 - 1/(4q)) = 4q (dim - q) / (2q - 1)
  ModuleBound out;
  out.radicand = Rational(Integer(4 * std::int64_t{q} * (dim_a - q)), Integer(2 * std::int64_t{q} - 1));
  while (Rational(out.bound * out.bound) < out.radicand) ++out.bound;
  return out;
}

bool sizes_compatible(int a, int b) {
  const int d = std::abs(a - b);
  if (a % 2 == 0 && b % 2 == 0) return d == 0 || d == 2;
  return d <= 1;
}

namespace {

std::vector<int> repeated(std::initializer_list<std::pair<int, int>> runs) {
  std::vector<int> out;
  for (auto [count, value] : runs) out.insert(out.end(), count, value);
  std::sort(out.begin(), out.end());
  return out;
}

void check_q(int n, int q) {
  if (q < 2 || q > n) {
    throw Error(ErrorCode::InvalidQ, "need 2 <= q <= n, got n = " + std::to_string(n) + ", q = " + std::to_string(q));
  }
}

}  // namespace

std::uint64_t ordered_count(const BlockType& sorted) {
  std::map<int, int> mult;
  for (int p : sorted.parts()) ++mult[p];
  // Product of binomials C(placed + c, c) keeps intermediates exact.
  std::uint64_t out = 1;
  int placed = 0;
  for (auto [value, c] : mult) {
    for (int i = 1; i <= c; ++i) out = out * static_cast<std::uint64_t>(placed + i) / static_cast<std::uint64_t>(i);
    placed += c;
  }
  return out;
}

std::vector<TypeEntry> max_types_by_parametrization(int n, int q) {
  check_q(n, q);
  const int m = n / q;
  const int r = n - q * m;
  std::vector<TypeEntry> out;
  if (m % 2 == 0) {
    for (int s = 0; s <= r / 2; ++s) {
      BlockType t(repeated({{q - r + s, m}, {r - 2 * s, m + 1}, {s, m + 2}}));
      out.push_back({t, ordered_count(t), 's', s});
    }
  } else {
    // With m = 1 a positive t would create blocks of size 0.
    const int t_max = m == 1 ? 0 : (q - r) / 2;
    for (int t = 0; t <= t_max; ++t) {
      BlockType bt(repeated({{t, m - 1}, {q - r - 2 * t, m}, {r + t, m + 1}}));
      out.push_back({bt, ordered_count(bt), 't', t});
    }
  }
  return out;
}

std::vector<BlockType> max_types_by_filter(int n, int q) {
  check_q(n, q);
  const std::int64_t target = max_dim_formula(n, q);
  std::vector<BlockType> out;
  std::vector<int> parts;
  std::function<void(int, int)> walk = [&](int remaining, int smallest) {
    if (static_cast<int>(parts.size()) == q) {
      if (remaining != 0) return;
      for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
          if (!sizes_compatible(parts[i], parts[j])) return;
      BlockType t(parts);
      if (type_dimension(t) == target) out.push_back(t);
      return;
    }
    const int slots = q - static_cast<int>(parts.size());
    for (int p = smallest; p * slots <= remaining; ++p) {
      parts.push_back(p);
      walk(remaining - p, p);
      parts.pop_back();
    }
  };
  walk(n, 1);
  return out;
}

TypeEnumeration enumerate_max_types(int n, int q, bool expand_ordered) {
  TypeEnumeration out;
  out.n = n;
  out.q = q;
  out.entries = max_types_by_parametrization(n, q);
  out.m = n / q;
  out.r = n - q * out.m;
  out.dimension = max_dim_formula(n, q);

  std::vector<BlockType> generated;
  for (const auto& e : out.entries) generated.push_back(e.sorted);
  std::sort(generated.begin(), generated.end());
  std::vector<BlockType> filtered = max_types_by_filter(n, q);
  std::sort(filtered.begin(), filtered.end());
  if (generated != filtered) {
    throw std::logic_error("parametrized and filtered maximum-dimension types differ for n = " +
                           std::to_string(n) + ", q = " + std::to_string(q));
  }
  for (const auto& e : out.entries) {
    if (type_dimension(e.sorted) != out.dimension) {
      throw std::logic_error("type " + e.sorted.describe() + " misses the maximum dimension");
    }
  }
  if (expand_ordered) {
    for (const auto& e : out.entries) {
      std::vector<int> p = e.sorted.parts();
      do {
        out.ordered.emplace_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
    }
  }
  return out;
}

std::uint64_t count_iso_classes(int n, int q) {
  std::uint64_t total = 0;
  for (const auto& e : max_types_by_parametrization(n, q)) {
    std::uint64_t choices = 1;
    for (int p : e.sorted.parts()) choices *= admissible_k(p).size();
    total += e.ordered_count * choices;
  }
  return total;
}

}  // namespace dq
