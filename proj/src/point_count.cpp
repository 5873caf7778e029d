#include "hessenberg/point_count.hpp"

#include <stdexcept>
#include <string>

#include "hessenberg/errors.hpp"

namespace hessenberg {

PointCountResult point_count_oracle(const JordanData& jordan, const HessenbergFunction& h,
                                    long long q, bool force, BlockOrder order) {
  const int n = jordan.size();
  if (h.size() != n) throw std::invalid_argument("point_count_oracle: size mismatch");
  if (!is_prime(q))
    throw std::invalid_argument("point_count_oracle: q = " + std::to_string(q) +
                                " is not prime");
  if (n > 4 && !force)
    throw GuardError("point counting is exponential; n = " + std::to_string(n) +
                     " exceeds the default guard n <= 4 (use force to override)");
  const MultiTableau mt = MultiTableau::build(jordan, order);
  const OperatorPair<Fq> op =
      permuted_jordan_form(mt, eigenvalue_scalars_mod(mt, q));
  const Matrix<Fq> SN = op.S + op.N;

  PointCountResult result;
  for (const Perm& w : all_permutations(n)) {
    std::vector<std::pair<int, int>> free_slots;
    for (int i = 1; i <= n; ++i)
      for (int k = i + 1; k <= n; ++k)
        if (w(i) > w(k)) free_slots.emplace_back(i, k);
    long long count = 0;
    std::vector<long long> odo(free_slots.size(), 0);
    while (true) {
      Matrix<Fq> u = Matrix<Fq>::identity(n);
      for (size_t t = 0; t < free_slots.size(); ++t)
        u(free_slots[t].first, free_slots[t].second) = Fq(odo[t], q);
      const Matrix<Fq> conj = conjugate(u, SN);
      // (uw)^{-1}(S+N)(uw) lies in H iff conj vanishes wherever w(i) > h(w(j))
      bool in_H = true;
      for (int i = 1; i <= n && in_H; ++i)
        for (int j = 1; j <= n && in_H; ++j)
          if (w(i) > h(w(j)) && !conj(i, j).is_zero()) in_H = false;
      if (in_H) ++count;
      size_t t = 0;
      while (t < odo.size() && ++odo[t] == q) odo[t++] = 0;
      if (t == odo.size()) break;
    }
    result.per_cell[w.one_line()] = count;
    result.total += count;
  }
  return result;
}

}  // namespace hessenberg
