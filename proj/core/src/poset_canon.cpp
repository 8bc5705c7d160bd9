#include "parv/poset_canon.hpp"

#include <algorithm>
#include <map>

#include "parv/errors.hpp"

namespace parv {

namespace {

struct Canonizer {
  int n;
  const std::vector<int>& labels;
  std::vector<std::vector<int>> up, down;
  std::string best;
  bool have_best = false;

  Canonizer(const std::vector<int>& labels_, const std::vector<std::pair<int, int>>& covers)
      : n(static_cast<int>(labels_.size())), labels(labels_), up(n), down(n) {
    for (const auto& [a, b] : covers) {
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw internal_error("poset certificate: cover index out of range");
      up[a].push_back(b);
      down[b].push_back(a);
    }
  }

  // Refine colors until stable: the new color of an element is its old
  // color together with the multisets of neighbor colors, mapped back to
  // dense ints by sorted key order (which is isomorphism-invariant).
  std::vector<int> refine(std::vector<int> color) const {
    for (;;) {
      std::vector<std::vector<int>> keys(n);
      for (int i = 0; i < n; ++i) {
        auto& key = keys[i];
        key.push_back(color[i]);
        std::vector<int> ups, downs;
        for (int j : up[i]) ups.push_back(color[j]);
        for (int j : down[i]) downs.push_back(color[j]);
        std::sort(ups.begin(), ups.end());
        std::sort(downs.begin(), downs.end());
        key.push_back(static_cast<int>(ups.size()));
        key.insert(key.end(), ups.begin(), ups.end());
        key.push_back(-1);
        key.insert(key.end(), downs.begin(), downs.end());
      }
      std::map<std::vector<int>, int> order;
      for (const auto& k : keys) order.emplace(k, 0);
      int next = 0;
      for (auto& [k, v] : order) v = next++;
      std::vector<int> fresh(n);
      for (int i = 0; i < n; ++i) fresh[i] = order.at(keys[i]);
      if (fresh == color) return fresh;
      color = std::move(fresh);
    }
  }

  std::string certificate_for(const std::vector<int>& color) const {
    // Discrete coloring: color values are a permutation of 0..n-1.
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[color[i]] = i;
    std::string out;
    out += "n=" + std::to_string(n) + ";l=";
    for (int c = 0; c < n; ++c) out += std::to_string(labels[position[c]]) + ",";
    out += ";e=";
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j : up[i]) edges.emplace_back(color[i], color[j]);
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b] : edges)
      out += std::to_string(a) + ">" + std::to_string(b) + ",";
    return out;
  }

  void search(std::vector<int> color) {
    color = refine(std::move(color));
    // First non-singleton color class, smallest color value.
    std::vector<int> census(n, 0);
    for (int c : color) ++census[c];
    int split = -1;
    for (int c = 0; c < n && split < 0; ++c)
      if (census[c] > 1) split = c;
    if (split < 0) {
      std::string cert = certificate_for(color);
      if (!have_best || cert < best) {
        best = std::move(cert);
        have_best = true;
      }
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (color[i] != split) continue;
      auto branch = color;
      // Individualize element i: give it a fresh color just below its class.
      for (int& c : branch)
        if (c >= split) ++c;
      branch[i] = split;
      search(std::move(branch));
    }
  }

  std::string run() {
    std::vector<int> initial(n);
    std::map<int, int> label_order;
    for (int l : labels) label_order.emplace(l, 0);
    int next = 0;
    for (auto& [l, v] : label_order) v = next++;
    for (int i = 0; i < n; ++i) initial[i] = label_order.at(labels[i]);
    search(std::move(initial));
    return best;
  }
};

}  // namespace

std::string canonical_poset_certificate(const std::vector<int>& labels,
                                        const std::vector<std::pair<int, int>>& covers) {
  if (labels.empty()) return "n=0;l=;e=";
  return Canonizer(labels, covers).run();
}

}  // namespace parv
