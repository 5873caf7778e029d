#pragma once

#include <map>
#include <vector>

#include "hessenberg/forms.hpp"

namespace hessenberg {

struct PointCountResult {
  // one-line permutation -> number of flags of F_q^n in that Schubert cell
  // satisfying the Hessenberg conditions
  std::map<std::vector<int>, long long> per_cell;
  long long total = 0;
};

// Brute-force count of the F_q-points of H(S+N, h), cell by cell: for each w
// every element u of U_w is enumerated (free entries exactly where i < k and
// w(i) > w(k)) and (uw)^{-1}(S+N)(uw) is tested entrywise against H.
// Exponential in n; guarded at n <= 4 unless force is set.  q must be prime
// and admit one distinct scalar per eigenvalue label.
PointCountResult point_count_oracle(const JordanData& jordan, const HessenbergFunction& h,
                                    long long q, bool force = false,
                                    BlockOrder order = BlockOrder::SizeAscending);

}  // namespace hessenberg
