#pragma once

#include <string>
#include <vector>

#include "hessenberg/hessenberg_function.hpp"
#include "hessenberg/matrix.hpp"
#include "hessenberg/tableau.hpp"

namespace hessenberg {

// A pivot of a matrix: a nonzero entry with every entry below it in its
// column and every entry left of it in its row equal to zero.
struct PivotPos {
  int row = 0;
  int col = 0;
  bool operator==(const PivotPos&) const = default;
  bool operator<(const PivotPos& o) const {
    return col != o.col ? col < o.col : row < o.row;
  }
};

template <class F>
struct PivotSet {
  std::vector<PivotPos> positions;  // global coordinates, sorted by column
  std::vector<F> values;            // aligned with positions
  bool operator==(const PivotSet&) const = default;
};

template <class F>
struct OperatorPair {
  Matrix<F> S;  // diagonal
  Matrix<F> N;  // strictly upper-triangular
};

// Scalars per tableau (bottom-to-top).  Labels that are integer literals are
// used verbatim; otherwise tableaux get 0,1,2,... in stacking order.
std::vector<Rat> eigenvalue_scalars(const MultiTableau& tableau);
// Over F_q the residues 0..k-1 are used; requires q >= tableau_count().
std::vector<Fq> eigenvalue_scalars_mod(const MultiTableau& tableau, long long q);

// The canonical highest-form representative of the conjugacy class: S has
// the tableau scalar at each box position; N has a one at (p,q) exactly when
// box p is the immediate left neighbor of box q in the base filling.
template <class F>
OperatorPair<F> permuted_jordan_form(const MultiTableau& tableau,
                                     const std::vector<F>& scalars);
OperatorPair<Rat> permuted_jordan_form(const MultiTableau& tableau);
OperatorPair<Rat> permuted_jordan_form(const JordanData& jordan,
                                       BlockOrder order = BlockOrder::SizeAscending);

// Pivots of an arbitrary matrix, sorted by column.
template <class F>
PivotSet<F> matrix_pivots(const Matrix<F>& m);

// Indices j (ascending) with S_jj == c.
template <class F>
std::vector<int> eigenvalue_block(const Matrix<F>& S, const F& c);

// The minor of m keeping exactly the rows and columns of c's eigenspace.
template <class F>
Matrix<F> eigenvalue_minor(const Matrix<F>& m, const Matrix<F>& S, const F& c);

// Pivots of every per-eigenvalue submatrix N_c, reported in global
// coordinates.  Requires S+N upper-triangular with equal diagonal entries
// contiguous.
template <class F>
PivotSet<F> pivots(const Matrix<F>& N, const Matrix<F>& S);

// Highest form: upper-triangular, equal diagonal entries contiguous, and in
// every block submatrix the pivot rows form a nondecreasing sequence across
// columns (pivotless columns count as row 0).
template <class F>
bool is_highest_form(const Matrix<F>& S, const Matrix<F>& N);

// Membership of the matrix unit E_{jk} in wHw^{-1}: true iff w(j) <= h(w(k)).
bool entry_in_wHw(int j, int k, const Perm& w, const HessenbergFunction& h);

// ---- template definitions ----

template <class F>
OperatorPair<F> permuted_jordan_form(const MultiTableau& tableau,
                                     const std::vector<F>& scalars) {
  const int n = tableau.size();
  if (static_cast<int>(scalars.size()) != tableau.tableau_count())
    throw std::invalid_argument("permuted_jordan_form: one scalar per tableau required");
  for (size_t a = 0; a < scalars.size(); ++a)
    for (size_t b = a + 1; b < scalars.size(); ++b)
      if (scalars[a] == scalars[b])
        throw std::invalid_argument("permuted_jordan_form: duplicate scalars for distinct labels");
  OperatorPair<F> op{Matrix<F>(n), Matrix<F>(n)};
  for (int p = 1; p <= n; ++p) {
    op.S(p, p) = scalars[tableau.tableau_of(p) - 1];
    const int q = tableau.right_neighbor(p);
    if (q != 0) op.N(p, q) = F(1);
  }
  return op;
}

template <class F>
PivotSet<F> matrix_pivots(const Matrix<F>& m) {
  const int n = m.size();
  PivotSet<F> ps;
  for (int j = 1; j <= n; ++j)
    for (int i = n; i >= 1; --i) {
      if (m(i, j) == F(0)) continue;
      // lowest nonzero entry of column j; a pivot iff its left row part is zero
      bool pivot = true;
      for (int jj = 1; jj < j && pivot; ++jj)
        if (!(m(i, jj) == F(0))) pivot = false;
      if (pivot) {
        ps.positions.push_back(PivotPos{i, j});
        ps.values.push_back(m(i, j));
      }
      break;
    }
  return ps;
}

namespace detail {
// Maximal runs of equal diagonal entries; throws if a value recurs in a
// later run (non-contiguous eigenvalue blocks).
template <class F>
std::vector<std::pair<int, int>> diagonal_runs(const Matrix<F>& S) {
  const int n = S.size();
  std::vector<std::pair<int, int>> runs;
  for (int i = 1; i <= n;) {
    int j = i;
    while (j + 1 <= n && S(j + 1, j + 1) == S(i, i)) ++j;
    runs.emplace_back(i, j);
    i = j + 1;
  }
  for (size_t a = 0; a < runs.size(); ++a)
    for (size_t b = a + 1; b < runs.size(); ++b)
      if (S(runs[a].first, runs[a].first) == S(runs[b].first, runs[b].first))
        throw std::invalid_argument("eigenvalue blocks are not contiguous");
  return runs;
}
}  // namespace detail

template <class F>
std::vector<int> eigenvalue_block(const Matrix<F>& S, const F& c) {
  std::vector<int> idx;
  for (int j = 1; j <= S.size(); ++j)
    if (S(j, j) == c) idx.push_back(j);
  return idx;
}

template <class F>
Matrix<F> eigenvalue_minor(const Matrix<F>& m, const Matrix<F>& S, const F& c) {
  const auto idx = eigenvalue_block(S, c);
  Matrix<F> r(static_cast<int>(idx.size()));
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = 0; b < idx.size(); ++b)
      r(static_cast<int>(a) + 1, static_cast<int>(b) + 1) = m(idx[a], idx[b]);
  return r;
}

template <class F>
PivotSet<F> pivots(const Matrix<F>& N, const Matrix<F>& S) {
  const int n = N.size();
  if (!(S + N).is_upper_triangular())
    throw std::invalid_argument("pivots: S+N must be upper-triangular");
  PivotSet<F> out;
  for (const auto& [lo, hi] : detail::diagonal_runs(S)) {
    Matrix<F> sub(hi - lo + 1);
    for (int i = lo; i <= hi; ++i)
      for (int j = lo; j <= hi; ++j) sub(i - lo + 1, j - lo + 1) = N(i, j);
    PivotSet<F> ps = matrix_pivots(sub);
    for (size_t t = 0; t < ps.positions.size(); ++t) {
      out.positions.push_back(
          PivotPos{ps.positions[t].row + lo - 1, ps.positions[t].col + lo - 1});
      out.values.push_back(ps.values[t]);
    }
  }
  // global column order (runs are already ascending, but keep it canonical)
  for (size_t a = 0; a + 1 < out.positions.size(); ++a)
    for (size_t b = a + 1; b < out.positions.size(); ++b)
      if (out.positions[b] < out.positions[a]) {
        std::swap(out.positions[a], out.positions[b]);
        std::swap(out.values[a], out.values[b]);
      }
  return out;
}

template <class F>
bool is_highest_form(const Matrix<F>& S, const Matrix<F>& N) {
  if (!(S + N).is_upper_triangular()) return false;
  for (const auto& [lo, hi] : detail::diagonal_runs(S)) {
    Matrix<F> sub(hi - lo + 1);
    for (int i = lo; i <= hi; ++i)
      for (int j = lo; j <= hi; ++j) sub(i - lo + 1, j - lo + 1) = N(i, j);
    const PivotSet<F> ps = matrix_pivots(sub);
    // r_j = pivot row of column j, 0 when the column has no pivot; the block
    // is in highest form iff r_1 <= r_2 <= ... literally, zeros included
    std::vector<int> pivot_row(sub.size() + 1, 0);
    for (const auto& p : ps.positions) pivot_row[p.col] = p.row;
    for (int j = 2; j <= sub.size(); ++j)
      if (pivot_row[j] < pivot_row[j - 1]) return false;
  }
  return true;
}

}  // namespace hessenberg
