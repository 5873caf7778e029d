#include "hessenberg/jordan.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hessenberg {

int JordanBlock::boxes() const {
  return std::accumulate(shape.begin(), shape.end(), 0);
}

JordanData::JordanData(std::vector<JordanBlock> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw std::invalid_argument("JordanData: no blocks");
  std::set<std::string> labels;
  for (const auto& b : blocks_) {
    if (!labels.insert(b.label).second)
      throw std::invalid_argument("JordanData: duplicate label '" + b.label + "'");
    if (b.shape.empty())
      throw std::invalid_argument("JordanData: empty shape for label '" + b.label + "'");
    for (size_t r = 0; r < b.shape.size(); ++r) {
      if (b.shape[r] < 1)
        throw std::invalid_argument("JordanData: nonpositive part for label '" + b.label + "'");
      if (r > 0 && b.shape[r] > b.shape[r - 1])
        throw std::invalid_argument("JordanData: parts not weakly decreasing for label '" +
                                    b.label + "'");
    }
    n_ += b.boxes();
  }
}

std::vector<int> block_stacking(const JordanData& jordan, BlockOrder order) {
  std::vector<int> idx(jordan.blocks().size());
  std::iota(idx.begin(), idx.end(), 0);
  const auto& bs = jordan.blocks();
  switch (order) {
    case BlockOrder::InputOrder:
      break;
    case BlockOrder::SizeAscending:
      std::stable_sort(idx.begin(), idx.end(),
                       [&](int a, int b) { return bs[a].boxes() < bs[b].boxes(); });
      break;
    case BlockOrder::SizeDescending:
      std::stable_sort(idx.begin(), idx.end(),
                       [&](int a, int b) { return bs[a].boxes() > bs[b].boxes(); });
      break;
  }
  return idx;
}

}  // namespace hessenberg
