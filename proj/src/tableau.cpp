#include "hessenberg/tableau.hpp"

#include <stdexcept>

namespace hessenberg {

MultiTableau MultiTableau::build(const JordanData& jordan, BlockOrder order) {
  MultiTableau mt;
  const auto stacking = block_stacking(jordan, order);
  int pos = 0;
  for (int bi : stacking) {
    const JordanBlock& block = jordan.blocks()[bi];
    const int t = static_cast<int>(mt.shapes_.size()) + 1;
    mt.shapes_.push_back(block.shape);
    mt.labels_.push_back(block.label);
    const int nrows = static_cast<int>(block.shape.size());
    // grid_[t-1][row-1][col-1] = position; 0 where the diagram has no box
    mt.grid_.emplace_back(nrows, std::vector<int>(block.shape[0], 0));
    for (int c = 1; c <= block.shape[0]; ++c) {
      int colheight = 0;
      while (colheight < nrows && block.shape[colheight] >= c) ++colheight;
      for (int r = colheight; r >= 1; --r) {
        ++pos;
        mt.boxes_.push_back(Box{t, r, c});
        mt.grid_.back()[r - 1][c - 1] = pos;
      }
    }
  }
  const int n = pos;
  mt.right_.assign(n, 0);
  mt.left_.assign(n, 0);
  for (int p = 1; p <= n; ++p) {
    const Box& b = mt.boxes_[p - 1];
    if (b.col < mt.shapes_[b.tableau - 1][b.row - 1]) {
      const int q = mt.grid_[b.tableau - 1][b.row - 1][b.col];
      mt.right_[p - 1] = q;
      mt.left_[q - 1] = p;
    }
  }
  return mt;
}

int MultiTableau::position_at(int t, int row, int col) const {
  return grid_[t - 1][row - 1][col - 1];
}

Filling base_filling(const JordanData& jordan, BlockOrder order) {
  MultiTableau mt = MultiTableau::build(jordan, order);
  const int n = mt.size();
  return Filling{std::move(mt), Perm::identity(n)};
}

Filling filling_of(const MultiTableau& tableau, const Perm& w) {
  if (w.size() != tableau.size())
    throw std::invalid_argument("filling_of: size mismatch");
  return Filling{tableau, w};
}

const Perm& permutation_of(const Filling& filling) { return filling.labels; }

bool is_valid_filling(const Filling& filling, const HessenbergFunction& h) {
  if (filling.size() != h.size())
    throw std::invalid_argument("is_valid_filling: size mismatch");
  return detail::valid_filling_raw(filling.tableau, filling.labels.one_line().data(), h);
}

int cell_dimension_tableau(const Filling& filling, const HessenbergFunction& h) {
  if (!is_valid_filling(filling, h))
    throw std::invalid_argument("cell_dimension_tableau: filling is not valid for h");
  const Perm pos_of = filling.labels.inverse();
  return detail::dim_tableau_raw(filling.tableau, filling.labels.one_line().data(),
                                 pos_of.one_line().data(), h);
}

int cell_dimension_bundle(const Perm& w, const MultiTableau& tableau,
                          const HessenbergFunction& h) {
  const int n = tableau.size();
  if (w.size() != n || h.size() != n)
    throw std::invalid_argument("cell_dimension_bundle: size mismatch");
  // Nonemptiness: every pivot slot (p,q) of the base operator must land in
  // wHw^{-1}, i.e. w(p) <= h(w(q)).
  for (int p = 1; p <= n; ++p) {
    const int q = tableau.right_neighbor(p);
    if (q != 0 && w(p) > h(w(q)))
      throw std::invalid_argument("cell_dimension_bundle: empty cell");
  }
  int dim = 0;
  for (int i = 1; i <= n; ++i) {
    for (int k = i + 1; k <= n; ++k) {
      if (tableau.same_tableau(i, k)) {
        if (w(i) > w(k)) {
          const int j = tableau.right_neighbor(k);  // pivot of row k, if any
          if (j == 0 || h(w(j)) >= w(i)) ++dim;
        }
      } else {
        if (h(w(k)) >= w(i) && w(i) > w(k)) ++dim;
      }
    }
  }
  return dim;
}

int cell_dimension_bundle(const Perm& w, const JordanData& jordan,
                          const HessenbergFunction& h) {
  return cell_dimension_bundle(w, MultiTableau::build(jordan), h);
}

namespace detail {

bool valid_filling_raw(const MultiTableau& tableau, const int* labels,
                       const HessenbergFunction& h) {
  const int n = tableau.size();
  for (int p = 1; p <= n; ++p) {
    const int q = tableau.right_neighbor(p);
    if (q != 0 && labels[p - 1] > h(labels[q - 1])) return false;
  }
  return true;
}

int dim_tableau_raw(const MultiTableau& tableau, const int* labels, const int* pos_of,
                    const HessenbergFunction& h) {
  const int n = tableau.size();
  int dim = 0;
  for (int i = 2; i <= n; ++i) {
    const int pi = pos_of[i - 1];
    for (int k = 1; k < i; ++k) {
      const int pk = pos_of[k - 1];
      if (pi >= pk) continue;
      if (tableau.same_tableau(pi, pk)) {
        const int jpos = tableau.right_neighbor(pk);
        if (jpos == 0 || i <= h(labels[jpos - 1])) ++dim;
      } else {
        if (i <= h(k)) ++dim;
      }
    }
  }
  return dim;
}

}  // namespace detail

}  // namespace hessenberg
