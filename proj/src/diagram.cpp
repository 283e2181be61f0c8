#include "cartan/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cartan {

void CoxeterDiagram::add_edge(int u, int v, int mult) {
  if (u == v) throw std::invalid_argument("self-loop in diagram");
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge vertex out of range");
  if (mult < 1 || mult > 3) throw std::invalid_argument("multiplicity outside 1..3");
  if (u > v) std::swap(u, v);
  if (this->mult(u, v) != 0) throw std::invalid_argument("duplicate edge");
  edges_.push_back({u, v, mult, std::nullopt});
}

void CoxeterDiagram::set_direction(int u, int v, std::pair<int, int> dir) {
  if (u > v) std::swap(u, v);
  if (std::min(dir.first, dir.second) != u || std::max(dir.first, dir.second) != v)
    throw std::invalid_argument("direction pair does not match the line");
  for (auto& e : edges_)
    if (e.u == u && e.v == v) {
      if (e.mult < 2) throw std::invalid_argument("direction on a single line");
      e.dir = dir;
      return;
    }
  throw std::invalid_argument("no such line");
}

int CoxeterDiagram::mult(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (const auto& e : edges_)
    if (e.u == u && e.v == v) return e.mult;
  return 0;
}

int CoxeterDiagram::degree(int v) const {
  int d = 0;
  for (const auto& e : edges_) d += (e.u == v || e.v == v);
  return d;
}

int CoxeterDiagram::degree_with_mult(int v) const {
  int d = 0;
  for (const auto& e : edges_)
    if (e.u == v || e.v == v) d += e.mult;
  return d;
}

std::vector<int> CoxeterDiagram::neighbors(int v) const {
  std::vector<int> r;
  for (const auto& e : edges_) {
    if (e.u == v) r.push_back(e.v);
    if (e.v == v) r.push_back(e.u);
  }
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<std::vector<int>> CoxeterDiagram::connected_components() const {
  std::vector<int> mark(n_, -1);
  std::vector<std::vector<int>> parts;
  for (int s = 0; s < n_; ++s) {
    if (mark[s] >= 0) continue;
    std::vector<int> block{s};
    mark[s] = static_cast<int>(parts.size());
    for (size_t q = 0; q < block.size(); ++q)
      for (int j : neighbors(block[q]))
        if (mark[j] < 0) {
          mark[j] = mark[s];
          block.push_back(j);
        }
    std::sort(block.begin(), block.end());
    parts.push_back(std::move(block));
  }
  return parts;
}

bool CoxeterDiagram::is_connected() const { return connected_components().size() <= 1; }

bool CoxeterDiagram::is_forest() const {
  // A graph is a forest iff every component has |edges| = |vertices| - 1.
  auto parts = connected_components();
  size_t tree_edges = 0;
  for (const auto& p : parts) tree_edges += p.size() - 1;
  return edges_.size() == tree_edges;
}

CoxeterDiagram CoxeterDiagram::induced(const std::vector<int>& keep) const {
  std::vector<int> where(n_, -1);
  for (size_t i = 0; i < keep.size(); ++i) where[keep[i]] = static_cast<int>(i);
  CoxeterDiagram d(static_cast<int>(keep.size()));
  for (const auto& e : edges_)
    if (where[e.u] >= 0 && where[e.v] >= 0) d.add_edge(where[e.u], where[e.v], e.mult);
  return d;
}

Mat<QF> CoxeterDiagram::sym_matrix(const std::vector<int>& order) const {
  std::vector<int> where(n_);
  if (order.empty()) {
    for (int i = 0; i < n_; ++i) where[i] = i;
  } else {
    if (static_cast<int>(order.size()) != n_) throw std::invalid_argument("bad vertex order");
    for (int i = 0; i < n_; ++i) where[order[i]] = i;
  }
  Mat<QF> b(n_);
  for (int i = 0; i < n_; ++i) b(i, i) = QF(2);
  for (const auto& e : edges_) {
    QF entry = -QF::sqrt_of_rational(Rational(e.mult));
    b(where[e.u], where[e.v]) = entry;
    b(where[e.v], where[e.u]) = entry;
  }
  return b;
}

void GenCoxeterDiagram::add_edge(int u, int v, Rational mult) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("bad edge");
  if (mult.sign() <= 0) throw std::invalid_argument("multiplicity must be positive");
  if (u > v) std::swap(u, v);
  edges_.push_back({u, v, std::move(mult)});
}

Rational GenCoxeterDiagram::mult(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (const auto& e : edges_)
    if (e.u == u && e.v == v) return e.mult;
  return Rational(0);
}

GenCoxeterDiagram GenCoxeterDiagram::from_sym(const Mat<QF>& b) {
  const int n = b.size();
  GenCoxeterDiagram d(n);
  for (int i = 0; i < n; ++i) {
    if (b(i, i) != QF(2)) throw std::domain_error("diagonal entry is not 2");
    for (int j = i + 1; j < n; ++j) {
      if (b(i, j) != b(j, i)) throw std::domain_error("matrix is not symmetric");
      if (b(i, j).is_zero()) continue;
      if (b(i, j).sign() != Sign::negative)
        throw std::domain_error("off-diagonal entry is not of the form -sqrt(q)");
      QF sq = b(i, j) * b(i, j);
      if (!sq.is_rational())
        throw std::domain_error("squared off-diagonal entry is irrational");
      d.add_edge(i, j, sq.as_rational());
    }
  }
  return d;
}

std::vector<std::vector<int>> GenCoxeterDiagram::connected_components() const {
  std::vector<std::vector<int>> adj(n_);
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> mark(n_, -1);
  std::vector<std::vector<int>> parts;
  for (int s = 0; s < n_; ++s) {
    if (mark[s] >= 0) continue;
    std::vector<int> block{s};
    mark[s] = static_cast<int>(parts.size());
    for (size_t q = 0; q < block.size(); ++q)
      for (int j : adj[block[q]])
        if (mark[j] < 0) {
          mark[j] = mark[s];
          block.push_back(j);
        }
    std::sort(block.begin(), block.end());
    parts.push_back(std::move(block));
  }
  return parts;
}

std::optional<std::vector<Rational>> GenCoxeterDiagram::chain_from(int start) const {
  std::vector<std::vector<int>> adj(n_);
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  if (adj[start].size() > 1) return std::nullopt;
  std::vector<Rational> t;
  int prev = -1, cur = start;
  while (true) {
    int next = -1;
    for (int nb : adj[cur]) {
      if (nb == prev) continue;
      if (next >= 0) return std::nullopt;  // branching: not a path
      next = nb;
    }
    if (next < 0) break;
    t.push_back(mult(cur, next));
    prev = cur;
    cur = next;
  }
  return t;
}

SymCartanMatrix coxeter_to_sym(const CoxeterDiagram& d, const std::vector<int>& order) {
  // Weights are meaningful only relative to a generating integer Cartan
  // matrix, so none are attached here.
  return SymCartanMatrix{d.sym_matrix(order), {}};
}

CartanMatrix orient(const CoxeterDiagram& d, const std::vector<std::pair<int, int>>& directions) {
  if (!d.is_forest()) throw std::invalid_argument("orient requires a forest diagram");
  const int n = d.vertices();
  std::map<std::pair<int, int>, std::pair<int, int>> dir;
  for (auto [p, q] : directions) {
    std::pair<int, int> key{std::min(p, q), std::max(p, q)};
    if (d.mult(p, q) < 2) throw std::invalid_argument("direction given for a non-multiple line");
    if (!dir.emplace(key, std::pair{p, q}).second)
      throw std::invalid_argument("duplicate direction for a line");
  }
  Mat<int> a(n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  for (const auto& e : d.edges()) {
    if (e.mult == 1) {
      a(e.u, e.v) = a(e.v, e.u) = -1;
      continue;
    }
    auto it = dir.find({e.u, e.v});
    if (it == dir.end())
      throw std::invalid_argument("missing direction for multiple line " +
                                  std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1));
    auto [p, q] = it->second;
    a(p, q) = -1;
    a(q, p) = -e.mult;
  }
  return CartanMatrix::unchecked(std::move(a));
}

CoxeterDiagram coxeter_of_cartan(const CartanMatrix& a) {
  const int l = a.rank();
  CoxeterDiagram d(l);
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j)
      if (a.at(i, j) != 0) d.add_edge(i, j, a.mult(i, j));
  return d;
}

DynkinDiagram dynkin_of_cartan(const CartanMatrix& a) {
  DynkinDiagram dd{coxeter_of_cartan(a)};
  // Directions: (p,q) with A_pq = -1, A_qp = -m.
  std::vector<DiagramEdge> multiples;
  for (const auto& e : dd.graph.edges())
    if (e.mult >= 2) multiples.push_back(e);
  for (const auto& e : multiples) {
    if (a.at(e.u, e.v) == -1)
      dd.graph.set_direction(e.u, e.v, {e.u, e.v});
    else
      dd.graph.set_direction(e.u, e.v, {e.v, e.u});
  }
  return dd;
}

CartanMatrix cartan_of_dynkin(const DynkinDiagram& d) {
  std::vector<std::pair<int, int>> dirs;
  for (const auto& e : d.graph.edges()) {
    if (e.mult < 2) continue;
    if (!e.dir) throw std::invalid_argument("undirected multiple line in Dynkin diagram");
    dirs.push_back(*e.dir);
  }
  return orient(d.graph, dirs);
}

namespace {

bool extend_iso(const CoxeterDiagram& a, const CoxeterDiagram& b, bool dirs, std::vector<int>& p,
                std::vector<bool>& used, int i) {
  const int n = a.vertices();
  if (i == n) {
    if (!dirs) return true;
    // All adjacency already matched; check direction pairs map onto each
    // other.
    for (const auto& e : a.edges()) {
      if (e.mult < 2) continue;
      if (!e.dir) return false;
      auto [pp, qq] = *e.dir;
      int lo = std::min(p[pp], p[qq]), hi = std::max(p[pp], p[qq]);
      for (const auto& f : b.edges()) {
        if (f.u == lo && f.v == hi) {
          if (!f.dir || f.dir->first != p[pp] || f.dir->second != p[qq]) return false;
        }
      }
    }
    return true;
  }
  for (int t = 0; t < n; ++t) {
    if (used[t]) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j) ok = b.mult(t, p[j]) == a.mult(i, j);
    if (!ok) continue;
    p[i] = t;
    used[t] = true;
    if (extend_iso(a, b, dirs, p, used, i + 1)) return true;
    used[t] = false;
  }
  return false;
}

}  // namespace

bool diagrams_isomorphic(const CoxeterDiagram& a, const CoxeterDiagram& b,
                         bool respect_directions) {
  if (a.vertices() != b.vertices() || a.edges().size() != b.edges().size()) return false;
  std::vector<int> p(a.vertices(), -1);
  std::vector<bool> used(a.vertices(), false);
  return extend_iso(a, b, respect_directions, p, used, 0);
}

}  // namespace cartan
