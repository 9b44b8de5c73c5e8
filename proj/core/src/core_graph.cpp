#include "stallings/core_graph.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "stallings/detail/splitmix.hpp"

namespace stallings {

namespace {

void check_vertex(const CoreGraph& g, int v, const char* what) {
  if (v < 0 || v >= g.vertex_count()) {
    throw PreconditionError(std::string(what) + ": vertex id out of range");
  }
}

}  // namespace

// A mutable graph under Stallings folding: union-find on vertices plus one
// out- and one in-slot per (vertex, label). Only representatives carry
// authoritative slots; stored endpoints may be stale and are resolved with
// find() on use.
class FoldGraph {
 public:
  FoldGraph(int k, std::optional<std::uint64_t> shuffle_seed)
      : k_(k) {
    if (shuffle_seed) shuffle_.emplace(*shuffle_seed);
  }

  int add_vertex() {
    int id = static_cast<int>(parent_.size());
    parent_.push_back(id);
    weight_.push_back(1);
    out_.insert(out_.end(), static_cast<std::size_t>(k_), kNone);
    in_.insert(in_.end(), static_cast<std::size_t>(k_), kNone);
    return id;
  }

  int find(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }

  void merge_now(int a, int b) {
    pending_.emplace_back(a, b);
    process();
  }

  // Ensures the edge find(u) -(j0)-> find(v) exists, folding as needed.
  void add_edge(int u, int j0, int v) {
    for (;;) {
      u = find(u);
      v = find(v);
      int& uo = out_slot(u, j0);
      if (uo != kNone) {
        if (find(uo) != v) merge_now(uo, v);
        return;
      }
      int& vi = in_slot(v, j0);
      if (vi != kNone) {
        // Another j0-edge enters v; its origin must coincide with u.
        merge_now(vi, u);
        continue;
      }
      uo = v;
      vi = u;
      return;
    }
  }

  struct Packed {
    CoreGraph graph;
    std::vector<int> raw_to_packed;
  };

  Packed pack(int basepoint) const {
    const int raw = static_cast<int>(parent_.size());
    std::vector<int> packed_id(static_cast<std::size_t>(raw), -1);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(raw));

    int bp = find(basepoint);
    packed_id[static_cast<std::size_t>(bp)] = 0;
    order.push_back(bp);
    for (std::size_t head = 0; head < order.size(); ++head) {
      int v = order[head];
      for (int j = 0; j < k_; ++j) {
        for (int t : {out_slot_val(v, j), in_slot_val(v, j)}) {
          if (t == kNone) continue;
          t = find(t);
          if (packed_id[static_cast<std::size_t>(t)] == -1) {
            packed_id[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
            order.push_back(t);
          }
        }
      }
    }

    const int n = static_cast<int>(order.size());
    std::vector<int> out_flat(static_cast<std::size_t>(n) * k_, kNone);
    std::vector<int> in_flat(static_cast<std::size_t>(n) * k_, kNone);
    for (int id = 0; id < n; ++id) {
      int v = order[static_cast<std::size_t>(id)];
      for (int j = 0; j < k_; ++j) {
        if (int t = out_slot_val(v, j); t != kNone) {
          out_flat[static_cast<std::size_t>(id) * k_ + j] = packed_id[static_cast<std::size_t>(find(t))];
        }
        if (int s = in_slot_val(v, j); s != kNone) {
          in_flat[static_cast<std::size_t>(id) * k_ + j] = packed_id[static_cast<std::size_t>(find(s))];
        }
      }
    }

    std::vector<int> raw_map(static_cast<std::size_t>(raw));
    for (int v = 0; v < raw; ++v) {
      raw_map[static_cast<std::size_t>(v)] = packed_id[static_cast<std::size_t>(find(v))];
    }
    return Packed{CoreGraph(k_, n, std::move(out_flat), std::move(in_flat)),
                  std::move(raw_map)};
  }

 private:
  static constexpr int kNone = CoreGraph::kNoVertex;

  int& out_slot(int v, int j0) { return out_[static_cast<std::size_t>(v) * k_ + j0]; }
  int& in_slot(int v, int j0) { return in_[static_cast<std::size_t>(v) * k_ + j0]; }
  int out_slot_val(int v, int j0) const { return out_[static_cast<std::size_t>(v) * k_ + j0]; }
  int in_slot_val(int v, int j0) const { return in_[static_cast<std::size_t>(v) * k_ + j0]; }

  void process() {
    while (!pending_.empty()) {
      std::size_t pick = pending_.size() - 1;
      if (shuffle_) pick = static_cast<std::size_t>(shuffle_->below(pending_.size()));
      auto [ra, rb] = pending_[pick];
      pending_[pick] = pending_.back();
      pending_.pop_back();

      int a = find(ra);
      int b = find(rb);
      if (a == b) continue;
      if (weight_[static_cast<std::size_t>(a)] < weight_[static_cast<std::size_t>(b)]) std::swap(a, b);
      parent_[static_cast<std::size_t>(b)] = a;
      weight_[static_cast<std::size_t>(a)] += weight_[static_cast<std::size_t>(b)];

      for (int j = 0; j < k_; ++j) {
        int bo = out_slot_val(b, j);
        if (bo != kNone) {
          int& ao = out_slot(a, j);
          if (ao == kNone) {
            ao = bo;
          } else if (find(ao) != find(bo)) {
            pending_.emplace_back(ao, bo);
          }
        }
        int bi = in_slot_val(b, j);
        if (bi != kNone) {
          int& ai = in_slot(a, j);
          if (ai == kNone) {
            ai = bi;
          } else if (find(ai) != find(bi)) {
            pending_.emplace_back(ai, bi);
          }
        }
      }
    }
  }

  int k_;
  mutable std::vector<int> parent_;
  std::vector<int> weight_;
  std::vector<int> out_, in_;
  std::vector<std::pair<int, int>> pending_;
  std::optional<detail::SplitMix64> shuffle_;
};

CoreGraph::CoreGraph(int k, int vcount, std::vector<int> out_flat, std::vector<int> in_flat)
    : k_(k), vcount_(vcount), out_(std::move(out_flat)), in_(std::move(in_flat)) {
  key_ = "k=" + std::to_string(k_) + " v=" + std::to_string(vcount_) + "\n";
  for (int j = 1; j <= k_; ++j) {
    for (int v = 0; v < vcount_; ++v) {
      int t = out(v, j);
      if (t != kNoVertex) {
        key_ += std::to_string(j) + " " + std::to_string(v) + " " + std::to_string(t) + "\n";
      }
    }
  }
}

CoreGraph CoreGraph::wedge(int ambient_rank) {
  if (ambient_rank < 1) throw PreconditionError("ambient rank must be >= 1");
  std::vector<int> loops(static_cast<std::size_t>(ambient_rank), 0);
  return CoreGraph(ambient_rank, 1, loops, loops);
}

CoreGraph CoreGraph::trivial(int ambient_rank) {
  if (ambient_rank < 1) throw PreconditionError("ambient rank must be >= 1");
  std::vector<int> none(static_cast<std::size_t>(ambient_rank), kNoVertex);
  return CoreGraph(ambient_rank, 1, none, none);
}

int CoreGraph::edge_count() const {
  int e = 0;
  for (int x : out_) e += (x != kNoVertex);
  return e;
}

int CoreGraph::edge_count(int label) const {
  int e = 0;
  for (int v = 0; v < vcount_; ++v) e += (out(v, label) != kNoVertex);
  return e;
}

int CoreGraph::max_label_edge_count() const {
  int m = 0;
  for (int j = 1; j <= k_; ++j) m = std::max(m, edge_count(j));
  return m;
}

int CoreGraph::degree(int v) const {
  int d = 0;
  for (int j = 1; j <= k_; ++j) {
    d += (out(v, j) != kNoVertex);
    d += (in(v, j) != kNoVertex);
  }
  return d;
}

std::vector<CoreGraph::Edge> CoreGraph::edges() const {
  std::vector<Edge> es;
  es.reserve(static_cast<std::size_t>(edge_count()));
  for (int j = 1; j <= k_; ++j) {
    for (int v = 0; v < vcount_; ++v) {
      if (int t = out(v, j); t != kNoVertex) es.push_back(Edge{v, j, t});
    }
  }
  return es;
}

TraceResult CoreGraph::trace(const Word& w) const {
  if (w.ambient_rank() != k_) throw PreconditionError("trace: ambient ranks differ");
  int v = 0;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    int nxt = ls[i].sign > 0 ? out(v, ls[i].generator) : in(v, ls[i].generator);
    if (nxt == kNoVertex) return TraceResult{false, v, i};
    v = nxt;
  }
  return TraceResult{true, v, ls.size()};
}

bool CoreGraph::contains(const Word& w) const {
  TraceResult r = trace(w);
  return r.complete && r.vertex == 0;
}

namespace {

// Spanning-tree parents in canonical BFS order. parent_letter[v] is the
// letter read when entering v from parent[v].
struct SpanningTree {
  std::vector<int> parent;
  std::vector<Letter> letter;
};

SpanningTree spanning_tree(const CoreGraph& g) {
  SpanningTree t;
  t.parent.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  t.letter.assign(static_cast<std::size_t>(g.vertex_count()), Letter{1, 1});
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  seen[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int j = 1; j <= g.ambient_rank(); ++j) {
      if (int w = g.out(v, j); w != CoreGraph::kNoVertex && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        t.parent[static_cast<std::size_t>(w)] = v;
        t.letter[static_cast<std::size_t>(w)] = Letter{j, 1};
        queue.push_back(w);
      }
      if (int w = g.in(v, j); w != CoreGraph::kNoVertex && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        t.parent[static_cast<std::size_t>(w)] = v;
        t.letter[static_cast<std::size_t>(w)] = Letter{j, -1};
        queue.push_back(w);
      }
    }
  }
  return t;
}

}  // namespace

Word CoreGraph::path_word(int v) const {
  check_vertex(*this, v, "path_word");
  SpanningTree t = spanning_tree(*this);
  std::vector<Letter> rev;
  for (int cur = v; cur != 0; cur = t.parent[static_cast<std::size_t>(cur)]) {
    rev.push_back(t.letter[static_cast<std::size_t>(cur)]);
  }
  std::reverse(rev.begin(), rev.end());
  return Word::from_letters(k_, std::move(rev));
}

std::vector<Word> CoreGraph::subgroup_basis() const {
  SpanningTree t = spanning_tree(*this);
  std::vector<Word> paths;
  paths.reserve(static_cast<std::size_t>(vcount_));
  for (int v = 0; v < vcount_; ++v) paths.push_back(path_word(v));

  // Tree edges are those used to enter each non-basepoint vertex.
  auto is_tree_edge = [&](int from, int j, int to) {
    if (to != 0 && t.parent[static_cast<std::size_t>(to)] == from &&
        t.letter[static_cast<std::size_t>(to)] == Letter{j, 1}) {
      return true;
    }
    if (from != 0 && t.parent[static_cast<std::size_t>(from)] == to &&
        t.letter[static_cast<std::size_t>(from)] == Letter{j, -1}) {
      return true;
    }
    return false;
  };

  std::vector<Word> basis;
  for (const Edge& e : edges()) {
    if (is_tree_edge(e.from, e.label, e.to)) continue;
    Word mid = Word::from_letters(k_, {Letter{e.label, 1}});
    basis.push_back(paths[static_cast<std::size_t>(e.from)]
                        .multiply(mid)
                        .multiply(paths[static_cast<std::size_t>(e.to)].inverse()));
  }
  return basis;
}

CoreGraph build_core_graph(const GeneratingSet& gens, const FoldOptions& options) {
  if (gens.ambient_rank < 1) throw PreconditionError("ambient rank must be >= 1");
  for (const Word& w : gens.generators) {
    if (w.ambient_rank() != gens.ambient_rank) {
      throw PreconditionError("generator rank differs from ambient rank");
    }
  }

  FoldGraph fg(gens.ambient_rank, options.shuffle_seed);
  const int bp = fg.add_vertex();
  for (const Word& w : gens.generators) {
    int cur = bp;
    const auto& ls = w.letters();
    for (std::size_t i = 0; i < ls.size(); ++i) {
      const bool last = (i + 1 == ls.size());
      const int nxt = last ? bp : fg.add_vertex();
      const int j0 = ls[i].generator - 1;
      if (ls[i].sign > 0) {
        fg.add_edge(cur, j0, nxt);
      } else {
        fg.add_edge(nxt, j0, cur);
      }
      cur = nxt;
    }
  }
  return fg.pack(bp).graph;
}

CoreGraph merge_and_fold(const CoreGraph& g, int u, int v, std::vector<int>* projection) {
  check_vertex(g, u, "merge_and_fold");
  check_vertex(g, v, "merge_and_fold");
  if (u == v) throw PreconditionError("merge_and_fold: vertices must differ");

  FoldGraph fg(g.ambient_rank(), std::nullopt);
  for (int i = 0; i < g.vertex_count(); ++i) fg.add_vertex();
  for (const CoreGraph::Edge& e : g.edges()) fg.add_edge(e.from, e.label - 1, e.to);
  fg.merge_now(u, v);
  FoldGraph::Packed packed = fg.pack(0);
  if (projection) *projection = std::move(packed.raw_to_packed);
  return packed.graph;
}

std::optional<Morphism> find_morphism(const CoreGraph& source, const CoreGraph& target) {
  if (source.ambient_rank() != target.ambient_rank()) {
    throw PreconditionError("find_morphism: ambient ranks differ");
  }
  std::vector<int> map(static_cast<std::size_t>(source.vertex_count()), -1);
  map[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int j = 1; j <= source.ambient_rank(); ++j) {
      if (int t = source.out(v, j); t != CoreGraph::kNoVertex) {
        int mt = target.out(map[static_cast<std::size_t>(v)], j);
        if (mt == CoreGraph::kNoVertex) return std::nullopt;
        int& slot = map[static_cast<std::size_t>(t)];
        if (slot == -1) {
          slot = mt;
          queue.push_back(t);
        } else if (slot != mt) {
          return std::nullopt;
        }
      }
      if (int s = source.in(v, j); s != CoreGraph::kNoVertex) {
        int ms = target.in(map[static_cast<std::size_t>(v)], j);
        if (ms == CoreGraph::kNoVertex) return std::nullopt;
        int& slot = map[static_cast<std::size_t>(s)];
        if (slot == -1) {
          slot = ms;
          queue.push_back(s);
        } else if (slot != ms) {
          return std::nullopt;
        }
      }
    }
  }
  return Morphism{source, target, std::move(map)};
}

CoreGraph image_subgraph(const Morphism& m) {
  const CoreGraph& src = m.source;
  const CoreGraph& tgt = m.target;
  const int k = tgt.ambient_rank();

  std::vector<int> out_flat(static_cast<std::size_t>(tgt.vertex_count()) * k, CoreGraph::kNoVertex);
  std::vector<int> in_flat(static_cast<std::size_t>(tgt.vertex_count()) * k, CoreGraph::kNoVertex);
  for (const CoreGraph::Edge& e : src.edges()) {
    int a = m.vertex_map[static_cast<std::size_t>(e.from)];
    int b = m.vertex_map[static_cast<std::size_t>(e.to)];
    out_flat[static_cast<std::size_t>(a) * k + e.label - 1] = b;
    in_flat[static_cast<std::size_t>(b) * k + e.label - 1] = a;
  }

  // Canonical repack of the image, reachable from the basepoint.
  std::vector<int> packed_id(static_cast<std::size_t>(tgt.vertex_count()), -1);
  std::vector<int> order{0};
  packed_id[0] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    int v = order[head];
    for (int j = 0; j < k; ++j) {
      for (int t : {out_flat[static_cast<std::size_t>(v) * k + j],
                    in_flat[static_cast<std::size_t>(v) * k + j]}) {
        if (t == CoreGraph::kNoVertex) continue;
        if (packed_id[static_cast<std::size_t>(t)] == -1) {
          packed_id[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
          order.push_back(t);
        }
      }
    }
  }

  const int n = static_cast<int>(order.size());
  std::vector<int> out2(static_cast<std::size_t>(n) * k, CoreGraph::kNoVertex);
  std::vector<int> in2(static_cast<std::size_t>(n) * k, CoreGraph::kNoVertex);
  for (int id = 0; id < n; ++id) {
    int v = order[static_cast<std::size_t>(id)];
    for (int j = 0; j < k; ++j) {
      if (int t = out_flat[static_cast<std::size_t>(v) * k + j]; t != CoreGraph::kNoVertex) {
        out2[static_cast<std::size_t>(id) * k + j] = packed_id[static_cast<std::size_t>(t)];
      }
      if (int s = in_flat[static_cast<std::size_t>(v) * k + j]; s != CoreGraph::kNoVertex) {
        in2[static_cast<std::size_t>(id) * k + j] = packed_id[static_cast<std::size_t>(s)];
      }
    }
  }
  return CoreGraph(k, n, std::move(out2), std::move(in2));
}

int handle_number(const CoreGraph& g, const Word& w) {
  if (g.contains(w)) {
    throw PreconditionError("handle_number: word lies in the subgroup");
  }

  TraceResult fwd = g.trace(w);
  const std::size_t prefix = fwd.complete ? w.length() : fwd.stuck_index;

  std::size_t suffix = 0;
  int v = 0;
  const auto& ls = w.letters();
  for (std::size_t i = ls.size(); i-- > 0;) {
    int prev = ls[i].sign > 0 ? g.in(v, ls[i].generator) : g.out(v, ls[i].generator);
    if (prev == CoreGraph::kNoVertex) break;
    v = prev;
    ++suffix;
  }

  const std::size_t covered = prefix + suffix;
  return covered < w.length() ? static_cast<int>(w.length() - covered) : 0;
}

}  // namespace stallings
