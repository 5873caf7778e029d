#include "hessenberg/rank_oracle.hpp"

#include <random>
#include <stdexcept>
#include <vector>

#include "hessenberg/errors.hpp"

namespace hessenberg {

namespace {

// Row echelon solve of A x = b over the rationals.  Pivot choice: columns
// left to right, first row with a nonzero entry.  Free unknowns take values
// from draw(); returns the rank.  Throws InternalError when inconsistent.
template <class Draw>
int solve_affine(std::vector<std::vector<Rat>>& A, std::vector<Rat>& b,
                 std::vector<Rat>& x, Draw&& draw) {
  const int rows = static_cast<int>(A.size());
  const int cols = rows == 0 ? static_cast<int>(x.size()) : static_cast<int>(A[0].size());
  std::vector<int> pivot_col_of_row;
  std::vector<char> is_pivot_col(cols, 0);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pr = -1;
    for (int r = rank; r < rows; ++r)
      if (A[r][c] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(A[pr], A[rank]);
    std::swap(b[pr], b[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || A[r][c] == 0) continue;
      const Rat f = A[r][c] / A[rank][c];
      for (int cc = c; cc < cols; ++cc) A[r][cc] -= f * A[rank][cc];
      b[r] -= f * b[rank];
    }
    pivot_col_of_row.push_back(c);
    is_pivot_col[c] = 1;
    ++rank;
  }
  for (int r = rank; r < rows; ++r)
    if (b[r] != 0) throw InternalError("rank oracle: inconsistent affine system on a nonempty cell");
  for (int c = 0; c < cols; ++c)
    if (!is_pivot_col[c]) x[c] = draw();
  for (int r = rank - 1; r >= 0; --r) {
    const int c = pivot_col_of_row[r];
    Rat rhs = b[r];
    for (int cc = c + 1; cc < cols; ++cc)
      if (!is_pivot_col[cc]) rhs -= A[r][cc] * x[cc];
    x[c] = rhs / A[r][c];
  }
  return rank;
}

}  // namespace

int cell_dimension_rank_oracle(const Perm& w, const MultiTableau& tableau,
                               const HessenbergFunction& h, std::uint64_t seed) {
  const int n = tableau.size();
  if (w.size() != n || h.size() != n)
    throw std::invalid_argument("cell_dimension_rank_oracle: size mismatch");
  const OperatorPair<Rat> op = permuted_jordan_form(tableau);
  const PivotSet<Rat> ps = pivots(op.N, op.S);
  for (const auto& p : ps.positions)
    if (!entry_in_wHw(p.row, p.col, w, h))
      throw std::invalid_argument("cell_dimension_rank_oracle: empty cell");

  std::mt19937_64 gen(seed);
  auto draw = [&gen]() { return Rat(static_cast<long long>(gen() % 21) - 10); };

  const Matrix<Rat> SN = op.S + op.N;
  Matrix<Rat> sample = Matrix<Rat>::identity(n);
  int dim = 0;
  for (int i = n - 1; i >= 1; --i) {
    const Matrix<Rat> Y = conjugate(sample, SN);
    std::vector<int> free_cols;  // k > i with w(i) > w(k)
    for (int k = i + 1; k <= n; ++k)
      if (w(i) > w(k)) free_cols.push_back(k);
    // one equation per column j > i with w(i) > h(w(j)); columns j <= i give
    // identically zero rows and are skipped
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b;
    for (int j = i + 1; j <= n; ++j) {
      if (w(i) <= h(w(j))) continue;
      std::vector<Rat> row(free_cols.size());
      for (size_t t = 0; t < free_cols.size(); ++t) {
        const int k = free_cols[t];
        row[t] = Y(k, j) - (k == j ? op.S(i, i) : Rat(0));
      }
      A.push_back(std::move(row));
      b.push_back(Y(i, j));
    }
    std::vector<Rat> x(free_cols.size(), Rat(0));
    const int rank = solve_affine(A, b, x, draw);
    dim += static_cast<int>(free_cols.size()) - rank;
    Matrix<Rat> step = Matrix<Rat>::identity(n);
    for (size_t t = 0; t < free_cols.size(); ++t) step(i, free_cols[t]) = x[t];
    sample = sample * step;
  }
  // the finished sample point must satisfy every Hessenberg condition
  const Matrix<Rat> final_conj = conjugate(sample, SN);
  for (int a = 1; a <= n; ++a)
    for (int bcol = 1; bcol <= n; ++bcol)
      if (w(a) > h(w(bcol)) && final_conj(a, bcol) != 0)
        throw InternalError("rank oracle: sample point escapes the Hessenberg conditions");
  return dim;
}

int cell_dimension_rank_oracle(const Perm& w, const JordanData& jordan,
                               const HessenbergFunction& h, std::uint64_t seed) {
  return cell_dimension_rank_oracle(w, MultiTableau::build(jordan), h, seed);
}

}  // namespace hessenberg
