#include "hessenberg/forms.hpp"

#include <optional>

#include "hessenberg/errors.hpp"

namespace hessenberg {

namespace {
std::optional<long long> parse_integer_label(const std::string& s) {
  if (s.empty()) return std::nullopt;
  size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return std::nullopt;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
  try {
    return std::stoll(s);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}
}  // namespace

std::vector<Rat> eigenvalue_scalars(const MultiTableau& tableau) {
  const int t = tableau.tableau_count();
  std::vector<Rat> out(t);
  std::vector<long long> numeric;
  bool all_numeric = true;
  for (int i = 1; i <= t && all_numeric; ++i) {
    auto v = parse_integer_label(tableau.label(i));
    if (v)
      numeric.push_back(*v);
    else
      all_numeric = false;
  }
  if (all_numeric) {
    for (size_t a = 0; a < numeric.size() && all_numeric; ++a)
      for (size_t b = a + 1; b < numeric.size(); ++b)
        if (numeric[a] == numeric[b]) all_numeric = false;
  }
  for (int i = 0; i < t; ++i) out[i] = all_numeric ? Rat(numeric[i]) : Rat(i);
  return out;
}

std::vector<Fq> eigenvalue_scalars_mod(const MultiTableau& tableau, long long q) {
  const int t = tableau.tableau_count();
  if (q < t)
    throw std::invalid_argument("eigenvalue_scalars_mod: q admits fewer than " +
                                std::to_string(t) + " distinct eigenvalues");
  std::vector<Fq> out(t);
  for (int i = 0; i < t; ++i) out[i] = Fq(i, q);
  return out;
}

OperatorPair<Rat> permuted_jordan_form(const MultiTableau& tableau) {
  return permuted_jordan_form(tableau, eigenvalue_scalars(tableau));
}

OperatorPair<Rat> permuted_jordan_form(const JordanData& jordan, BlockOrder order) {
  return permuted_jordan_form(MultiTableau::build(jordan, order));
}

bool entry_in_wHw(int j, int k, const Perm& w, const HessenbergFunction& h) {
  return w(j) <= h(w(k));
}

bool is_prime(long long q) {
  if (q < 2) return false;
  for (long long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace hessenberg
