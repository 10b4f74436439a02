#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dqalg/errors.hpp"

namespace dq {

/// Shape (n_1, ..., n_q) of a block upper-triangular algebra.
class BlockType {
 public:
  BlockType() = default;
  /// Throws InvalidInput on an empty tuple or a non-positive part.
  explicit BlockType(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const { return parts_[i]; }
  int q() const { return static_cast<int>(parts_.size()); }
  int n() const { return n_; }
  /// N_1, ..., N_q with N_q = n.
  std::vector<int> partial_sums() const;
  /// First row/column index of block i (0-based), i.e. N_{i}.
  int offset(int i) const;
  /// Index of the block containing coordinate r.
  int block_of(int r) const;

  std::string describe() const;

  friend bool operator==(const BlockType&, const BlockType&) = default;
  friend auto operator<=>(const BlockType& a, const BlockType& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// floor(n^2/4) + 1, the largest dimension of a commutative subalgebra of M_n.
inline std::int64_t schur_bound(std::int64_t n) { return n * n / 4 + 1; }

}  // namespace dq
