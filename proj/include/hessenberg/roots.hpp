#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "hessenberg/hessenberg_function.hpp"
#include "hessenberg/perm.hpp"
#include "hessenberg/tableau.hpp"

namespace hessenberg {

// Type A root attached to the matrix slot (i,j), i != j; positive iff i < j.
// Negation swaps the endpoints, matching transposition of matrix units.
struct Root {
  int i = 0;
  int j = 0;
  bool positive() const { return i < j; }
  bool operator==(const Root&) const = default;
  bool operator<(const Root& o) const {
    return i != o.i ? i < o.i : j < o.j;
  }
};

inline Root negate(Root r) { return Root{r.j, r.i}; }

// (i,k) + (k,j) = (i,j); any other pair of roots has no root sum.
std::optional<Root> add(Root a, Root b);

// Conjugation action on root spaces: E at slot r maps under w^{-1}(.)w to the
// slot (w(i), w(j)).
Root root_action(const Perm& w, Root r);

// The two root sets the dimension formula consumes: the roots spanning the
// Hessenberg space (all slots (i,j), i != j, with i <= h(j)) and the positive
// roots sitting at the pivot slots of the eigenvalue blocks.
struct RootSets {
  int n = 0;
  std::set<std::pair<int, int>> phi_H;
  std::vector<Root> phi_SN;
};

RootSets make_root_sets(const MultiTableau& tableau, const HessenbergFunction& h);

inline bool in_phi_H(const HessenbergFunction& h, Root r) {
  return r.i != r.j && r.i <= h(r.j);
}

// Nonemptiness in root terms: the w-image of every pivot root lies in phi_H.
bool cell_nonempty_root(const Perm& w, const RootSets& sets,
                        const HessenbergFunction& h);

// Third route to the cell dimension.  Counts positive roots alpha that w
// maps to negative roots, split by alpha(S): for alpha vanishing on S the
// unique pivot root beta leaving alpha's endpoint row must either not exist
// or have w(alpha+beta) inside phi_H; for alpha(S) != 0 the image w(alpha)
// itself must lie in phi_H.
int cell_dimension_root(const Perm& w, const MultiTableau& tableau,
                        const HessenbergFunction& h);
int cell_dimension_root(const Perm& w, const JordanData& jordan,
                        const HessenbergFunction& h);

}  // namespace hessenberg
