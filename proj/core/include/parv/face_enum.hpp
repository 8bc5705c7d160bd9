#pragma once

#include <vector>

namespace parv {

/// Closure of the given member sets under pairwise intersection, plus the
/// full set {0..n-1}. This is exactly the face enumeration of a polytope or
/// pointed cone from its facet incidence: every face is the intersection of
/// the facets containing it. The empty set appears whenever some facets are
/// disjoint (polytopes: the empty face; cones: the apex). Deterministic:
/// output sorted by (size, lex).
std::vector<std::vector<int>> incidence_closure(int n_members,
                                                const std::vector<std::vector<int>>& facet_members);

}  // namespace parv
