#pragma once

#include <string>
#include <vector>

#include "hessenberg/hessenberg_function.hpp"
#include "hessenberg/jordan.hpp"
#include "hessenberg/perm.hpp"

namespace hessenberg {

// A box of the multitableau.  Tableaux are numbered 1..t bottom-to-top in
// stacking order; rows are numbered 1..k top-to-bottom as drawn; columns
// 1..d_1 left-to-right.
struct Box {
  int tableau = 0;
  int row = 0;
  int col = 0;
};

// The stacked Young diagrams of an operator's eigenvalue blocks, with box
// positions 1..n enumerating tableaux bottom-to-top and, inside a tableau,
// columns left-to-right with each column filled bottom-to-top.  With this
// numbering, for boxes p < q of one tableau, box p lies in a column strictly
// left of q's or directly below q in the same column; across tableaux,
// p < q exactly when p's tableau is stacked below q's.
class MultiTableau {
 public:
  static MultiTableau build(const JordanData& jordan,
                            BlockOrder order = BlockOrder::SizeAscending);

  int size() const { return static_cast<int>(boxes_.size()); }
  int tableau_count() const { return static_cast<int>(shapes_.size()); }

  const Box& box(int p) const { return boxes_[p - 1]; }
  int tableau_of(int p) const { return boxes_[p - 1].tableau; }
  bool same_tableau(int p, int q) const { return tableau_of(p) == tableau_of(q); }

  // Position of the box immediately right/left of box p, or 0 if none.
  int right_neighbor(int p) const { return right_[p - 1]; }
  int left_neighbor(int p) const { return left_[p - 1]; }

  // Shape and label of tableau t (1-based, bottom-to-top).
  const std::vector<int>& shape(int t) const { return shapes_[t - 1]; }
  const std::string& label(int t) const { return labels_[t - 1]; }

  // Position holding cell (row, col) of tableau t.
  int position_at(int t, int row, int col) const;

  bool operator==(const MultiTableau&) const = default;

 private:
  std::vector<Box> boxes_;
  std::vector<int> right_, left_;
  std::vector<std::vector<int>> shapes_;  // per tableau, rows top-to-bottom
  std::vector<std::string> labels_;
  std::vector<std::vector<std::vector<int>>> grid_;  // [t][row][col] -> position
};

// A bijective labeling of the boxes by 1..n.  labels(p) is the value in box
// p, so the labels are exactly the permutation w with w(p) in box p.
struct Filling {
  MultiTableau tableau;
  Perm labels;

  int size() const { return labels.size(); }
};

// The column-major bottom-up labeling; its permutation is the identity.
Filling base_filling(const JordanData& jordan, BlockOrder order = BlockOrder::SizeAscending);

Filling filling_of(const MultiTableau& tableau, const Perm& w);
const Perm& permutation_of(const Filling& filling);

// True iff every horizontally adjacent pair (left value k, right value j)
// satisfies k <= h(j).  Exactly the nonempty-cell criterion.
bool is_valid_filling(const Filling& filling, const HessenbergFunction& h);

// Dimension of the affine cell attached to a valid filling, computed on the
// filling itself.  Writing p(v) for the position of value v, it counts
//   (1) pairs k < i in one tableau with p(i) < p(k) where either box p(k)
//       has no right neighbor or its right value j satisfies i <= h(j), and
//   (2) pairs k < i in different tableaux with p(i) < p(k) and i <= h(k).
int cell_dimension_tableau(const Filling& filling, const HessenbergFunction& h);

// The same dimension evaluated on matrix indices: pairs i < k of positions
// with w(i) > w(k), split by whether positions i and k carry equal diagonal
// scalars, with the pivot of row k (the right neighbor in the base filling)
// supplying the h-inequality in the equal-scalar clause.
int cell_dimension_bundle(const Perm& w, const MultiTableau& tableau,
                          const HessenbergFunction& h);
int cell_dimension_bundle(const Perm& w, const JordanData& jordan,
                          const HessenbergFunction& h);

namespace detail {
// Allocation-free cores used by the enumerator: labels[p-1] = value in box p,
// pos_of[v-1] = position of value v.
bool valid_filling_raw(const MultiTableau& tableau, const int* labels,
                       const HessenbergFunction& h);
int dim_tableau_raw(const MultiTableau& tableau, const int* labels, const int* pos_of,
                    const HessenbergFunction& h);
}  // namespace detail

}  // namespace hessenberg
