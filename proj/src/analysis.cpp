#include "hessenberg/analysis.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "hessenberg/errors.hpp"

namespace hessenberg {

namespace {

struct Search {
  const MultiTableau& mt;
  const HessenbergFunction& h;
  int n;
  std::vector<int> labels;  // labels[p-1] = value in box p, 0 = unassigned
  std::vector<int> pos_of;  // pos_of[v-1] = position of value v
  std::vector<char> used;
  std::vector<CellRecord>& out;

  Search(const MultiTableau& mt_, const HessenbergFunction& h_,
         std::vector<CellRecord>& out_)
      : mt(mt_), h(h_), n(mt_.size()), labels(n, 0), pos_of(n, 0), used(n + 1, 0),
        out(out_) {}

  void run(int p) {
    if (p > n) {
      Perm w(labels);
      const int dim = detail::dim_tableau_raw(mt, labels.data(), pos_of.data(), h);
      const int inv = w.inversions();
      out.push_back(CellRecord{std::move(w), dim, inv});
      return;
    }
    const int left = mt.left_neighbor(p);
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      if (left != 0 && labels[left - 1] > h(v)) continue;
      used[v] = 1;
      labels[p - 1] = v;
      pos_of[v - 1] = p;
      run(p + 1);
      used[v] = 0;
    }
    labels[p - 1] = 0;
  }

  // restrict box 1 to a fixed label; used by the partitioned search
  void run_with_first(int v) {
    used[v] = 1;
    labels[0] = v;
    pos_of[v - 1] = 1;
    run(2);
    used[v] = 0;
  }
};

}  // namespace

std::vector<CellRecord> enumerate_cells(const JordanData& jordan,
                                        const HessenbergFunction& h,
                                        const EnumerationOptions& opts) {
  const int n = jordan.size();
  if (h.size() != n) throw std::invalid_argument("enumerate_cells: size mismatch");
  if (n > opts.guard && !opts.force)
    throw GuardError("enumeration over " + std::to_string(n) +
                     "! fillings exceeds the guard n <= " + std::to_string(opts.guard) +
                     " (use force to override)");
  const MultiTableau mt = MultiTableau::build(jordan, opts.order);
  if (opts.jobs <= 1 || n < 2) {
    std::vector<CellRecord> cells;
    Search s(mt, h, cells);
    s.run(1);
    return cells;
  }
  // one subtask per label of box 1; concatenation in label order restores
  // the lexicographic output order
  std::vector<std::future<std::vector<CellRecord>>> tasks;
  for (int v = 1; v <= n; ++v) {
    tasks.push_back(std::async(std::launch::async, [&mt, &h, v]() {
      std::vector<CellRecord> part;
      Search s(mt, h, part);
      s.run_with_first(v);
      return part;
    }));
  }
  std::vector<CellRecord> cells;
  for (auto& t : tasks) {
    auto part = t.get();
    cells.insert(cells.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
  }
  return cells;
}

PavingReport betti_numbers(const JordanData& jordan, const HessenbergFunction& h,
                           const EnumerationOptions& opts) {
  PavingReport report{.n = jordan.size(),
                      .jordan = jordan,
                      .h = h,
                      .cells = enumerate_cells(jordan, h, opts)};
  int maxdim = 0, mindim = 0;
  if (!report.cells.empty()) mindim = report.cells.front().dimension;
  for (const auto& c : report.cells) {
    maxdim = std::max(maxdim, c.dimension);
    mindim = std::min(mindim, c.dimension);
  }
  report.betti.assign(maxdim + 1, 0);
  for (const auto& c : report.cells) ++report.betti[c.dimension];
  report.poincare = report.betti;
  report.euler = static_cast<long long>(report.cells.size());
  report.variety_dimension = maxdim;
  report.min_dimension = mindim;
  report.symmetric = true;
  for (int d = 0; d <= maxdim; ++d)
    if (report.betti[d] != report.betti[maxdim - d]) report.symmetric = false;
  report.unimodal = true;
  bool fell = false;
  for (int d = 1; d <= maxdim; ++d) {
    if (report.betti[d] < report.betti[d - 1]) fell = true;
    else if (fell && report.betti[d] > report.betti[d - 1]) report.unimodal = false;
  }
  return report;
}

namespace {

void standard_extend(const std::vector<int>& shape, std::vector<std::vector<int>>& grid,
                     int next, int n, long long& count) {
  if (next > n) {
    ++count;
    return;
  }
  for (size_t r = 0; r < shape.size(); ++r) {
    int c = 0;
    while (c < shape[r] && grid[r][c] != 0) ++c;
    if (c == shape[r]) continue;
    // cell (r,c) is the leftmost empty cell of its row; placing next here is
    // legal iff the cell above is filled (rows fill left to right, so the
    // row constraint holds by construction)
    if (r > 0 && grid[r - 1][c] == 0) continue;
    grid[r][c] = next;
    standard_extend(shape, grid, next + 1, n, count);
    grid[r][c] = 0;
  }
}

}  // namespace

long long count_standard_fillings(const std::vector<int>& shape) {
  int n = 0;
  for (int p : shape) n += p;
  std::vector<std::vector<int>> grid;
  for (int p : shape) grid.emplace_back(p, 0);
  long long count = 0;
  standard_extend(shape, grid, 1, n, count);
  return count;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<CheckResult> closed_form_checks(const JordanData& jordan,
                                            const HessenbergFunction& h,
                                            const PavingReport& report) {
  const int n = jordan.size();
  std::vector<CheckResult> out;
  bool springer_h = true;
  for (int i = 1; i <= n; ++i)
    if (h(i) != i) springer_h = false;

  const auto& blocks = jordan.blocks();
  if (springer_h && blocks.size() == 1) {
    long long expected = 0;
    for (size_t r = 0; r < blocks[0].shape.size(); ++r)
      expected += static_cast<long long>(r) * blocks[0].shape[r];
    out.push_back(CheckResult{"springer dimension sum (i-1) d_i", expected,
                              report.variety_dimension,
                              expected == report.variety_dimension});
    long long top = 0;
    for (const auto& c : report.cells)
      if (c.dimension == report.variety_dimension) ++top;
    const long long standard = count_standard_fillings(blocks[0].shape);
    out.push_back(CheckResult{"springer top cells = standard fillings", standard, top,
                              standard == top});
  }
  if (blocks.size() == 1 && blocks[0].shape.size() == 1) {
    long long expected = 0;
    for (int i = 1; i <= n; ++i) expected += h(i) - i;
    out.push_back(CheckResult{"regular nilpotent dimension sum (h(i)-i)", expected,
                              report.variety_dimension,
                              expected == report.variety_dimension});
  }
  bool all_one_box = true;
  for (const auto& b : blocks)
    if (b.shape != std::vector<int>{1}) all_one_box = false;
  if (all_one_box) {
    out.push_back(CheckResult{"diagonal euler characteristic n!", factorial(n),
                              report.euler, factorial(n) == report.euler});
  }
  return out;
}

}  // namespace hessenberg
