#pragma once

#include <string>
#include <utility>
#include <vector>

namespace parv {

/// Canonical certificate of a finite labeled poset given by its cover
/// relations: two posets produce the same string iff there is a relation-
/// and label-preserving bijection between them. Computed by iterative
/// color refinement plus full individualization backtracking, taking the
/// minimal certificate over all branches; the instances seen here are tiny
/// (at most a few hundred elements), so exactness wins over asymptotics.
std::string canonical_poset_certificate(const std::vector<int>& labels,
                                        const std::vector<std::pair<int, int>>& covers);

}  // namespace parv
