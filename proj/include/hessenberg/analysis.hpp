#pragma once

#include <string>
#include <vector>

#include "hessenberg/hessenberg_function.hpp"
#include "hessenberg/jordan.hpp"
#include "hessenberg/perm.hpp"
#include "hessenberg/tableau.hpp"

namespace hessenberg {

// One nonempty cell of the paving.
struct CellRecord {
  Perm w;  // equals the filling's labels in box-position order
  int dimension = 0;
  int schubert_dimension = 0;  // inversion count of w
  bool operator==(const CellRecord&) const = default;
};

struct PavingReport {
  int n = 0;
  JordanData jordan;
  HessenbergFunction h;
  std::vector<CellRecord> cells;
  std::vector<long long> betti;     // betti[d] = b_{2d}; odd Betti numbers vanish
  std::vector<long long> poincare;  // coefficient of q^d; same numbers as betti
  long long euler = 0;
  int variety_dimension = 0;  // max cell dimension
  int min_dimension = 0;      // min cell dimension (raw statistic)
  bool symmetric = false;
  bool unimodal = false;
};

struct EnumerationOptions {
  int guard = 10;  // refuse n beyond this unless force
  bool force = false;
  int jobs = 1;
  BlockOrder order = BlockOrder::SizeAscending;
};

// All valid fillings with their dimensions, lexicographic by filling labels.
// Partial fillings are pruned as soon as a committed horizontal pair violates
// k <= h(j).  With jobs > 1 the search space is split by the label of box 1
// and the lexicographic order restored on merge.
std::vector<CellRecord> enumerate_cells(const JordanData& jordan,
                                        const HessenbergFunction& h,
                                        const EnumerationOptions& opts = {});

PavingReport betti_numbers(const JordanData& jordan, const HessenbergFunction& h,
                           const EnumerationOptions& opts = {});

struct CheckResult {
  std::string formula;
  long long expected = 0;
  long long actual = 0;
  bool pass = false;
};

// Closed-form cross-checks, run when their hypotheses apply:
//  - h(i)=i with a single eigenvalue: variety dimension = sum (i-1) d_i and
//    the top-dimensional cell count equals the number of standard fillings;
//  - a single block of size n: variety dimension = sum (h(i)-i);
//  - all 1-box blocks: euler = n!.
std::vector<CheckResult> closed_form_checks(const JordanData& jordan,
                                            const HessenbergFunction& h,
                                            const PavingReport& report);

// Brute-force count of standard fillings of a Young diagram (rows and
// columns strictly increasing).
long long count_standard_fillings(const std::vector<int>& shape);

long long factorial(int n);

}  // namespace hessenberg
