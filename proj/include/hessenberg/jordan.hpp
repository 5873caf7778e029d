#pragma once

#include <string>
#include <vector>

namespace hessenberg {

// One eigenvalue of the operator together with its Jordan block sizes,
// recorded as a partition d_1 >= d_2 >= ... >= d_k.  Labels are opaque:
// only their equality pattern enters any dimension formula.  Numeric
// scalars are assigned separately, inside the matrix-form machinery.
struct JordanBlock {
  std::string label;
  std::vector<int> shape;

  int boxes() const;
  bool operator==(const JordanBlock&) const = default;
};

// The conjugacy-class descriptor of a linear operator: an ordered list of
// eigenvalue blocks whose shapes partition n.
class JordanData {
 public:
  explicit JordanData(std::vector<JordanBlock> blocks);

  int size() const { return n_; }  // n = total number of boxes
  const std::vector<JordanBlock>& blocks() const { return blocks_; }

  bool operator==(const JordanData&) const = default;

 private:
  std::vector<JordanBlock> blocks_;
  int n_ = 0;
};

// Vertical stacking order of the tableaux, bottom to top.
enum class BlockOrder {
  SizeAscending,   // smallest total size at the bottom; ties keep input order
  InputOrder,
  SizeDescending,
};

// Indices into jordan.blocks(), listed bottom-to-top for the chosen order.
std::vector<int> block_stacking(const JordanData& jordan, BlockOrder order);

}  // namespace hessenberg
