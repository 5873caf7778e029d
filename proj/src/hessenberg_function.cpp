#include "hessenberg/hessenberg_function.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hessenberg {

HessenbergFunction::HessenbergFunction(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  if (n == 0) throw std::invalid_argument("HessenbergFunction: empty");
  for (int i = 1; i <= n; ++i) {
    const int hi = values_[i - 1];
    if (hi < 1 || hi > n)
      throw std::invalid_argument("HessenbergFunction: h(" + std::to_string(i) +
                                  ") out of range 1..n");
    if (hi < i)
      throw std::invalid_argument("HessenbergFunction: h(" + std::to_string(i) +
                                  ") < " + std::to_string(i));
    if (i > 1 && hi < values_[i - 2])
      throw std::invalid_argument("HessenbergFunction: not nondecreasing at index " +
                                  std::to_string(i));
  }
}

HessenbergFunction HessenbergFunction::full(int n) {
  return HessenbergFunction(std::vector<int>(n, n));
}

HessenbergFunction HessenbergFunction::springer(int n) {
  std::vector<int> v(n);
  for (int i = 1; i <= n; ++i) v[i - 1] = i;
  return HessenbergFunction(std::move(v));
}

HessenbergFunction HessenbergFunction::banded(int n, int band) {
  std::vector<int> v(n);
  for (int i = 1; i <= n; ++i) v[i - 1] = std::min(i + band, n);
  return HessenbergFunction(std::move(v));
}

namespace {
void extend(std::vector<int>& v, int n, std::vector<HessenbergFunction>& out) {
  const int i = static_cast<int>(v.size()) + 1;
  if (i > n) {
    out.push_back(HessenbergFunction(v));
    return;
  }
  const int lo = std::max(i, v.empty() ? 1 : v.back());
  for (int hi = lo; hi <= n; ++hi) {
    v.push_back(hi);
    extend(v, n, out);
    v.pop_back();
  }
}
}  // namespace

std::vector<HessenbergFunction> all_hessenberg_functions(int n) {
  std::vector<HessenbergFunction> out;
  std::vector<int> v;
  extend(v, n, out);
  return out;
}

}  // namespace hessenberg
