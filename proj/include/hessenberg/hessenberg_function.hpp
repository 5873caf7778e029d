#pragma once

#include <vector>

namespace hessenberg {

// Nondecreasing h: {1..n} -> {1..n} with h(i) >= i.  Defines the Hessenberg
// space H = { X : X_ij = 0 whenever i > h(j) }, which is never materialized;
// membership is always tested through h directly.
class HessenbergFunction {
 public:
  explicit HessenbergFunction(std::vector<int> values);

  static HessenbergFunction full(int n);      // h(i) = n
  static HessenbergFunction springer(int n);  // h(i) = i
  static HessenbergFunction banded(int n, int band);  // h(i) = min(i + band, n)

  int size() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const { return values_[i - 1]; }
  const std::vector<int>& values() const { return values_; }

  bool operator==(const HessenbergFunction&) const = default;

 private:
  std::vector<int> values_;
};

// All Hessenberg functions for a given n (Catalan-many), lexicographic.
std::vector<HessenbergFunction> all_hessenberg_functions(int n);

}  // namespace hessenberg
