#include "hessenberg/roots.hpp"

#include <stdexcept>

namespace hessenberg {

std::optional<Root> add(Root a, Root b) {
  if (a.j == b.i && a.i != b.j) return Root{a.i, b.j};
  if (b.j == a.i && b.i != a.j) return Root{b.i, a.j};
  return std::nullopt;
}

Root root_action(const Perm& w, Root r) { return Root{w(r.i), w(r.j)}; }

RootSets make_root_sets(const MultiTableau& tableau, const HessenbergFunction& h) {
  if (tableau.size() != h.size())
    throw std::invalid_argument("make_root_sets: size mismatch");
  RootSets sets;
  sets.n = tableau.size();
  for (int i = 1; i <= sets.n; ++i)
    for (int j = 1; j <= sets.n; ++j)
      if (i != j && i <= h(j)) sets.phi_H.insert({i, j});
  for (int p = 1; p <= sets.n; ++p) {
    const int q = tableau.right_neighbor(p);
    if (q != 0) sets.phi_SN.push_back(Root{p, q});
  }
  return sets;
}

bool cell_nonempty_root(const Perm& w, const RootSets& sets,
                        const HessenbergFunction& h) {
  for (const Root& beta : sets.phi_SN)
    if (!in_phi_H(h, root_action(w, beta))) return false;
  return true;
}

int cell_dimension_root(const Perm& w, const MultiTableau& tableau,
                        const HessenbergFunction& h) {
  const int n = tableau.size();
  if (w.size() != n || h.size() != n)
    throw std::invalid_argument("cell_dimension_root: size mismatch");
  const RootSets sets = make_root_sets(tableau, h);
  if (!cell_nonempty_root(w, sets, h))
    throw std::invalid_argument("cell_dimension_root: empty cell");
  int dim = 0;
  for (int i = 1; i <= n; ++i) {
    for (int k = i + 1; k <= n; ++k) {
      const Root alpha{i, k};
      const Root walpha = root_action(w, alpha);
      if (walpha.positive()) continue;  // need w(alpha) negative
      if (tableau.same_tableau(i, k)) {  // alpha(S) == 0
        std::optional<Root> beta;
        for (const Root& b : sets.phi_SN)
          if (b.i == alpha.j) beta = b;  // unique pivot root leaving row k
        if (!beta) {
          ++dim;
        } else {
          const std::optional<Root> sum = add(alpha, *beta);
          if (sum && in_phi_H(h, root_action(w, *sum))) ++dim;
        }
      } else {  // alpha(S) != 0
        if (in_phi_H(h, walpha)) ++dim;
      }
    }
  }
  return dim;
}

int cell_dimension_root(const Perm& w, const JordanData& jordan,
                        const HessenbergFunction& h) {
  return cell_dimension_root(w, MultiTableau::build(jordan), h);
}

}  // namespace hessenberg
