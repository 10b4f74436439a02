#include "dqalg/block_type.hpp"

namespace dq {

BlockType::BlockType(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(ErrorCode::InvalidInput, "block type needs at least one part");
  for (int p : parts_) {
    if (p < 1) throw Error(ErrorCode::InvalidInput, "block sizes must be positive");
    n_ += p;
  }
}

std::vector<int> BlockType::partial_sums() const {
  std::vector<int> out;
  int acc = 0;
  for (int p : parts_) out.push_back(acc += p);
  return out;
}

int BlockType::offset(int i) const {
  int acc = 0;
  for (int j = 0; j < i; ++j) acc += parts_[j];
  return acc;
}

int BlockType::block_of(int r) const {
  int acc = 0;
  for (int i = 0; i < q(); ++i) {
    acc += parts_[i];
    if (r < acc) return i;
  }
  return q() - 1;
}

std::string BlockType::describe() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

}  // namespace dq
