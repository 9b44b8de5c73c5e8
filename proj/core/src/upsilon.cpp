#include "stallings/upsilon.hpp"

#include <set>
#include <string>

#include "stallings/detail/union_find.hpp"

namespace stallings {

namespace {

int pair_id(int u, int v, int n) {
  if (u > v) std::swap(u, v);
  // lexicographic position of (u,v), u < v, among all C(n,2) pairs
  return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

}  // namespace

UpsilonGraph build_upsilon(const CoreGraph& g) {
  UpsilonGraph ups;
  const int n = g.vertex_count();
  ups.base_vertex_count = n;
  if (n < 2) return ups;  // degenerate: empty pair graph

  ups.pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) ups.pairs.emplace_back(u, v);
  }

  for (int j = 1; j <= g.ambient_rank(); ++j) {
    std::vector<std::pair<int, int>> labeled;
    for (int v = 0; v < n; ++v) {
      if (int t = g.out(v, j); t != CoreGraph::kNoVertex) labeled.emplace_back(v, t);
    }
    for (std::size_t a = 0; a < labeled.size(); ++a) {
      for (std::size_t b = a + 1; b < labeled.size(); ++b) {
        // Folded graphs never share origins or termini between distinct
        // equally-labeled edges, so both endpoint pairs are proper pairs.
        int from = pair_id(labeled[a].first, labeled[b].first, n);
        int to = pair_id(labeled[a].second, labeled[b].second, n);
        ups.edges.push_back(UpsilonGraph::Edge{from, to, j});
      }
    }
  }
  return ups;
}

int component_count(const UpsilonGraph& u) {
  if (u.pairs.empty()) return 0;
  detail::UnionFind uf(static_cast<int>(u.pairs.size()));
  for (const auto& e : u.edges) uf.unite(e.from, e.to);
  int components = 0;
  for (int v = 0; v < static_cast<int>(u.pairs.size()); ++v) {
    if (uf.find(v) == v) ++components;
  }
  return components;
}

bool is_forest(const UpsilonGraph& u) {
  if (u.pairs.empty()) return true;
  detail::UnionFind uf(static_cast<int>(u.pairs.size()));
  for (const auto& e : u.edges) {
    if (uf.joined(e.from, e.to)) return false;  // loop or second path
    uf.unite(e.from, e.to);
  }
  return true;
}

std::size_t immediate_quotient_count(const CoreGraph& g) {
  std::set<std::string> keys;
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      keys.insert(merge_and_fold(g, u, v).canonical_text());
    }
  }
  return keys.size();
}

bool verify_correspondence(const CoreGraph& g) {
  return immediate_quotient_count(g) ==
         static_cast<std::size_t>(component_count(build_upsilon(g)));
}

}  // namespace stallings
