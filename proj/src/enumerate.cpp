#include "cartan/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace cartan {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// Rooted AHU encoding with edge multiplicities: a complete isomorphism
// invariant for labelled trees.
std::string ahu(const CoxeterDiagram& d, int v, int parent) {
  std::vector<std::string> subs;
  for (int nb : d.neighbors(v)) {
    if (nb == parent) continue;
    subs.push_back(std::to_string(d.mult(v, nb)) + ahu(d, nb, v));
  }
  std::sort(subs.begin(), subs.end());
  std::string out = "(";
  for (const auto& s : subs) out += s;
  out += ")";
  return out;
}

// Tree centers by repeated leaf stripping (one or two of them).
std::vector<int> centers(const CoxeterDiagram& d) {
  const int n = d.vertices();
  if (n == 1) return {0};
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = d.degree(v);
  std::vector<char> removed(n, 0);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v)
    if (deg[v] <= 1) layer.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = 1;
      --remaining;
      for (int nb : d.neighbors(v))
        if (!removed[nb] && --deg[nb] == 1) next.push_back(nb);
    }
    layer = std::move(next);
  }
  std::vector<int> c;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) c.push_back(v);
  return c;
}

std::string tree_key(const CoxeterDiagram& d) {
  auto c = centers(d);
  if (c.size() == 1) return "C" + ahu(d, c[0], -1);
  std::string k1 = ahu(d, c[0], c[1]);
  std::string k2 = ahu(d, c[1], c[0]);
  if (k2 < k1) std::swap(k1, k2);
  return "B" + std::to_string(d.mult(c[0], c[1])) + k1 + "|" + k2;
}

CoxeterDiagram diagram_of(int n, const EdgeList& edges, const std::vector<int>& mults) {
  CoxeterDiagram d(n);
  for (size_t i = 0; i < edges.size(); ++i) d.add_edge(edges[i].first, edges[i].second, mults[i]);
  return d;
}

// Unlabelled tree shapes of the given rank, via parent arrays deduped by
// the AHU key.
std::vector<EdgeList> tree_shapes(int rank) {
  std::vector<EdgeList> shapes;
  std::set<std::string> seen;
  EdgeList edges;
  std::vector<int> parent(rank, -1);
  auto emit = [&] {
    EdgeList e;
    for (int v = 1; v < rank; ++v) e.emplace_back(parent[v], v);
    std::vector<int> ones(e.size(), 1);
    std::string key = tree_key(diagram_of(rank, e, ones));
    if (seen.insert(key).second) shapes.push_back(std::move(e));
  };
  if (rank == 1) {
    shapes.push_back({});
    return shapes;
  }
  auto rec = [&](auto&& self, int v) -> void {
    if (v == rank) {
      emit();
      return;
    }
    for (int p = 0; p < v; ++p) {
      parent[v] = p;
      self(self, v + 1);
    }
  };
  rec(rec, 1);
  return shapes;
}

void assign_mults(int rank, const EdgeList& edges, std::map<std::string, CoxeterDiagram>& out) {
  std::vector<int> mults(edges.size(), 1);
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == edges.size()) {
      CoxeterDiagram d = diagram_of(rank, edges, mults);
      std::string key = tree_key(d);
      out.try_emplace(std::move(key), std::move(d));
      return;
    }
    for (int m = 1; m <= 3; ++m) {
      mults[i] = m;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

int tree_shape_count(int rank) { return static_cast<int>(tree_shapes(rank).size()); }

std::vector<CoxeterDiagram> enumerate_trees(int rank) {
  if (rank < 1 || rank > kMaxTreeRank)
    throw std::out_of_range("tree enumeration bound exceeded (rank must be 1.." +
                            std::to_string(kMaxTreeRank) + ")");
  std::map<std::string, CoxeterDiagram> out;  // canonical key -> representative
  for (const auto& shape : tree_shapes(rank)) assign_mults(rank, shape, out);
  std::vector<CoxeterDiagram> result;
  result.reserve(out.size());
  for (auto& [key, d] : out) result.push_back(std::move(d));
  return result;
}

namespace {

// Full multiplicity matrix flattened under a relabelling; used for the
// unicyclic canonical form.
std::vector<int> flat_mults(const CoxeterDiagram& d, const std::vector<int>& relabel) {
  const int n = d.vertices();
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  std::vector<int> inverse(n);
  for (int i = 0; i < n; ++i) inverse[relabel[i]] = i;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) flat.push_back(d.mult(inverse[i], inverse[j]));
  return flat;
}

bool connected_edges(int n, const EdgeList& edges) {
  std::vector<int> find(n);
  std::iota(find.begin(), find.end(), 0);
  auto root = [&](int v) {
    while (find[v] != v) v = find[v] = find[find[v]];
    return v;
  };
  int parts = n;
  for (auto [u, v] : edges) {
    int ru = root(u), rv = root(v);
    if (ru != rv) {
      find[ru] = rv;
      --parts;
    }
  }
  return parts == 1;
}

struct CycleShape {
  EdgeList edges;
  std::vector<std::vector<int>> automorphisms;
};

void find_automorphisms(const CoxeterDiagram& d, std::vector<int>& p, std::vector<bool>& used,
                        int i, std::vector<std::vector<int>>& out) {
  const int n = d.vertices();
  if (i == n) {
    out.push_back(p);
    return;
  }
  for (int t = 0; t < n; ++t) {
    if (used[t]) continue;
    bool ok = d.degree(t) == d.degree(i);
    for (int j = 0; j < i && ok; ++j) ok = d.mult(t, p[j]) == d.mult(i, j);
    if (!ok) continue;
    p[i] = t;
    used[t] = true;
    find_automorphisms(d, p, used, i + 1, out);
    used[t] = false;
  }
}

// Cheap isomorphism invariant (degree profile with neighbour degrees).
std::vector<int> shape_invariant(const CoxeterDiagram& d) {
  std::vector<std::vector<int>> prof;
  for (int v = 0; v < d.vertices(); ++v) {
    std::vector<int> p{d.degree(v)};
    for (int nb : d.neighbors(v)) p.push_back(d.degree(nb));
    std::sort(p.begin() + 1, p.end());
    prof.push_back(std::move(p));
  }
  std::sort(prof.begin(), prof.end());
  std::vector<int> flat;
  for (const auto& p : prof) {
    flat.insert(flat.end(), p.begin(), p.end());
    flat.push_back(-1);
  }
  return flat;
}

std::vector<CycleShape> unicyclic_shapes(int rank) {
  std::vector<std::pair<int, int>> all_pairs;
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) all_pairs.emplace_back(i, j);
  const int np = static_cast<int>(all_pairs.size());

  std::vector<CycleShape> shapes;
  std::vector<CoxeterDiagram> reps;
  std::map<std::vector<int>, std::vector<size_t>> buckets;
  std::vector<int> pick(rank);

  auto consider = [&](const EdgeList& edges) {
    if (!connected_edges(rank, edges)) return;
    std::vector<int> ones(edges.size(), 1);
    CoxeterDiagram d = diagram_of(rank, edges, ones);
    auto& bucket = buckets[shape_invariant(d)];
    for (size_t idx : bucket)
      if (diagrams_isomorphic(reps[idx], d)) return;
    std::vector<std::vector<int>> autos;
    std::vector<int> p(rank, -1);
    std::vector<bool> used(rank, false);
    find_automorphisms(d, p, used, 0, autos);
    bucket.push_back(reps.size());
    reps.push_back(d);
    shapes.push_back(CycleShape{edges, std::move(autos)});
  };

  // All edge subsets of size `rank` (one more edge than a spanning tree).
  auto rec = [&](auto&& self, int from, int chosen) -> void {
    if (chosen == rank) {
      EdgeList edges;
      for (int i = 0; i < chosen; ++i) edges.push_back(all_pairs[pick[i]]);
      consider(edges);
      return;
    }
    if (np - from < rank - chosen) return;
    for (int i = from; i < np; ++i) {
      pick[chosen] = i;
      self(self, i + 1, chosen + 1);
    }
  };
  if (rank >= 3) rec(rec, 0, 0);
  return shapes;
}

}  // namespace

std::vector<CoxeterDiagram> enumerate_unicyclic(int rank) {
  if (rank < 1 || rank > kMaxCycleRank)
    throw std::out_of_range("one-cycle enumeration bound exceeded (rank must be 1.." +
                            std::to_string(kMaxCycleRank) + ")");
  std::vector<CoxeterDiagram> result;
  for (const auto& shape : unicyclic_shapes(rank)) {
    std::set<std::vector<int>> seen;  // canonical flat multiplicity matrices
    std::vector<int> mults(shape.edges.size(), 1);
    auto rec = [&](auto&& self, size_t i) -> void {
      if (i == shape.edges.size()) {
        CoxeterDiagram d = diagram_of(rank, shape.edges, mults);
        std::vector<int> best;
        for (const auto& a : shape.automorphisms) {
          std::vector<int> f = flat_mults(d, a);
          if (best.empty() || f < best) best = std::move(f);
        }
        if (seen.insert(best).second) result.push_back(std::move(d));
        return;
      }
      for (int m = 1; m <= 3; ++m) {
        mults[i] = m;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  }
  return result;
}

std::vector<CoxeterDiagram> enumerate_connected(int max_rank, bool include_cycles) {
  std::vector<CoxeterDiagram> out;
  for (int l = 1; l <= max_rank; ++l) {
    auto trees = enumerate_trees(l);
    std::move(trees.begin(), trees.end(), std::back_inserter(out));
    if (include_cycles && l >= 3) {
      auto cyc = enumerate_unicyclic(l);
      std::move(cyc.begin(), cyc.end(), std::back_inserter(out));
    }
  }
  return out;
}

}  // namespace cartan
