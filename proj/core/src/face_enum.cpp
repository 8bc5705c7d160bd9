#include "parv/face_enum.hpp"

#include <algorithm>
#include <set>

namespace parv {

std::vector<std::vector<int>> incidence_closure(int n_members,
                                                const std::vector<std::vector<int>>& facet_members) {
  std::vector<std::vector<int>> sorted_facets = facet_members;
  for (auto& f : sorted_facets) std::sort(f.begin(), f.end());

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> work;
  std::vector<int> full(n_members);
  for (int i = 0; i < n_members; ++i) full[i] = i;
  seen.insert(full);
  for (const auto& f : sorted_facets)
    if (seen.insert(f).second) work.push_back(f);
  while (!work.empty()) {
    const auto cur = std::move(work.back());
    work.pop_back();
    for (const auto& f : sorted_facets) {
      std::vector<int> meet;
      std::set_intersection(cur.begin(), cur.end(), f.begin(), f.end(),
                            std::back_inserter(meet));
      if (seen.insert(meet).second) work.push_back(std::move(meet));
    }
  }
  std::vector<std::vector<int>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace parv
