#include "hessenberg/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hessenberg {

Perm::Perm(std::vector<int> one_line) : vals_(std::move(one_line)) {
  const int n = size();
  std::vector<char> seen(n + 1, 0);
  for (int v : vals_) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("Perm: one-line notation is not a bijection on {1..n}");
    seen[v] = 1;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Perm(std::move(v));
}

Perm Perm::inverse() const {
  std::vector<int> inv(vals_.size());
  for (int i = 1; i <= size(); ++i) inv[(*this)(i) - 1] = i;
  return Perm(std::move(inv));
}

bool Perm::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

int Perm::inversions() const {
  int count = 0;
  for (int i = 1; i <= size(); ++i)
    for (int j = i + 1; j <= size(); ++j)
      if ((*this)(i) > (*this)(j)) ++count;
  return count;
}

std::vector<Perm> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace hessenberg
