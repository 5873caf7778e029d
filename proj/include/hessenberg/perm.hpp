#pragma once

#include <vector>

namespace hessenberg {

// Permutation of {1..n} in one-line notation.  w(i) is 1-based, as are all
// indices in this library's public surface.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> one_line);

  static Perm identity(int n);

  int size() const { return static_cast<int>(vals_.size()); }
  int operator()(int i) const { return vals_[i - 1]; }
  const std::vector<int>& one_line() const { return vals_; }

  Perm inverse() const;
  bool is_identity() const;

  // |{(i,j): i < j, w(i) > w(j)}| — the dimension of the Schubert cell C_w.
  int inversions() const;

  bool operator==(const Perm&) const = default;
  bool operator<(const Perm& o) const { return vals_ < o.vals_; }

 private:
  std::vector<int> vals_;
};

// All permutations of {1..n} in lexicographic one-line order.
std::vector<Perm> all_permutations(int n);

}  // namespace hessenberg
