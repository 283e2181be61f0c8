#include "cartan/notation.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace cartan {

namespace {

// Edge as scanned from the text: multiplicity plus, in directed mode, the
// direction relative to (left, right) reading order.
struct Token {
  int mult;
  int arrow;  // 0 none, +1 "=>"/"#>" (left row holds -m), -1 "<="/"<#"
};

class Parser {
 public:
  Parser(const std::string& text, bool directed) : s_(text), directed_(directed) {}

  CoxeterDiagram run() {
    skip_ws();
    parse_branch();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    CoxeterDiagram d(next_vertex_);
    for (const auto& [u, v, tok] : edges_) {
      d.add_edge(u, v, tok.mult);
      if (tok.arrow != 0) {
        if (tok.mult < 2) fail("arrow on a single line");
        // "u=>v": A_uv = -m, so the pair (p,q) with A_pq = -1 is (v,u).
        if (tok.arrow > 0)
          d.set_direction(u, v, {v, u});
        else
          d.set_direction(u, v, {u, v});
      } else if (directed_ && tok.mult >= 2) {
        fail("multiple line without direction in directed mode");
      }
    }
    return d;
  }

 private:
  struct Branch {
    int rightmost;
  };

  [[noreturn]] void fail(const std::string& why) const { throw ParseError(why, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int parse_vertex() {
    if (!eat('*')) fail("expected '*'");
    return next_vertex_++;
  }

  // Scans an edge token, or returns nullopt when the next input cannot
  // start an edge.
  std::optional<Token> try_edge() {
    skip_ws();
    if (pos_ >= s_.size()) return std::nullopt;
    if (s_.compare(pos_, 3, "\xe2\x89\xa1") == 0) {  // '≡' alias
      pos_ += 3;
      return Token{3, 0};
    }
    char c = s_[pos_];
    auto directed_tail = [&](int mult) -> Token {
      if (pos_ < s_.size() && s_[pos_] == '>') {
        if (!directed_) fail("directed marker in undirected mode");
        ++pos_;
        return Token{mult, +1};
      }
      return Token{mult, 0};
    };
    switch (c) {
      case '-':
        ++pos_;
        return Token{1, 0};
      case '=':
        ++pos_;
        return directed_tail(2);
      case '#':
        ++pos_;
        return directed_tail(3);
      case '<': {
        if (!directed_) fail("directed marker in undirected mode");
        if (pos_ + 1 >= s_.size()) fail("dangling '<'");
        char n = s_[pos_ + 1];
        if (n != '=' && n != '#') fail("expected '<=' or '<#'");
        pos_ += 2;
        return Token{n == '=' ? 2 : 3, -1};
      }
      default:
        return std::nullopt;
    }
  }

  Branch parse_chain() {
    int v = parse_vertex();
    return parse_chain_from(v);
  }

  Branch parse_chain_from(int v) {
    while (auto tok = try_edge()) {
      int w = parse_vertex();
      edges_.emplace_back(v, w, *tok);
      v = w;
    }
    return Branch{v};
  }

  Branch parse_branch() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '(') return parse_node();
    return parse_chain();
  }

  Branch parse_node() {
    if (!eat('(')) fail("expected '('");
    Branch first = parse_branch();
    if (!eat(',')) fail("expected ','");
    Branch second = parse_branch();
    if (!eat(')')) fail("expected ')'");
    if (!eat('>')) fail("expected '>'");
    int node = parse_vertex();
    edges_.emplace_back(first.rightmost, node, Token{1, 0});
    edges_.emplace_back(second.rightmost, node, Token{1, 0});
    Branch result{node};
    if (auto tok = try_edge()) {
      int v = parse_vertex();
      edges_.emplace_back(node, v, *tok);
      result = parse_chain_from(v);
    }
    return result;
  }

  const std::string& s_;
  bool directed_;
  size_t pos_ = 0;
  int next_vertex_ = 0;
  std::vector<std::tuple<int, int, Token>> edges_;
};

// ---- printing ----

struct ChainStep {
  int mult;
  int arrow;

  auto operator<=>(const ChainStep&) const = default;
};

std::string chain_text(const std::vector<ChainStep>& steps) {
  std::string out = "*";
  for (const auto& s : steps) {
    switch (s.mult) {
      case 1: out += "-"; break;
      case 2: out += s.arrow > 0 ? "=>" : (s.arrow < 0 ? "<=" : "="); break;
      default: out += s.arrow > 0 ? "#>" : (s.arrow < 0 ? "<#" : "#"); break;
    }
    out += "*";
  }
  return out;
}

class Printer {
 public:
  explicit Printer(const CoxeterDiagram& d) : d_(d) {}

  std::string run() {
    if (!d_.is_connected()) throw NotExpressibleError("diagram is disconnected");
    if (!d_.is_forest()) throw NotExpressibleError("diagram has a cycle");
    for (int v = 0; v < d_.vertices(); ++v)
      if (d_.degree(v) > 3) throw NotExpressibleError("vertex of degree > 3");
    std::vector<int> deg3;
    for (int v = 0; v < d_.vertices(); ++v)
      if (d_.degree(v) == 3) deg3.push_back(v);
    if (deg3.empty()) return path_text();

    // Candidate top nodes and trailing assignments; canonical choice =
    // longest trailing chain, then lexicographically smallest text.
    std::optional<std::pair<size_t, std::string>> best;  // (-trail size) via comparison below
    for (int t : deg3) {
      auto subs = subtrees(t, -1, all_vertices());
      for (size_t z = 0; z < subs.size(); ++z) {
        auto text = try_top(t, subs, z);
        if (!text) continue;
        size_t trail = subs[z].verts.size();
        if (!best || trail > best->first || (trail == best->first && *text < best->second))
          best = {trail, *text};
      }
    }
    if (!best) throw NotExpressibleError("no grammar decomposition found");
    return best->second;
  }

 private:
  struct Subtree {
    std::vector<int> verts;
    int root;  // vertex adjacent to the split vertex
  };

  std::vector<int> all_vertices() const {
    std::vector<int> v(d_.vertices());
    for (int i = 0; i < d_.vertices(); ++i) v[i] = i;
    return v;
  }

  bool in(const std::vector<int>& set, int v) const {
    return std::find(set.begin(), set.end(), v) != set.end();
  }

  // Connected pieces of `within` after removing `t` (only pieces adjacent
  // to t are returned; within must be connected and contain t).
  std::vector<Subtree> subtrees(int t, int skip, const std::vector<int>& within) const {
    std::vector<Subtree> subs;
    for (int nb : d_.neighbors(t)) {
      if (nb == skip || !in(within, nb)) continue;
      Subtree s;
      s.root = nb;
      std::vector<char> seen(d_.vertices(), 0);
      seen[t] = 1;
      seen[nb] = 1;
      s.verts.push_back(nb);
      for (size_t q = 0; q < s.verts.size(); ++q)
        for (int w : d_.neighbors(s.verts[q]))
          if (in(within, w) && !seen[w]) {
            seen[w] = 1;
            s.verts.push_back(w);
          }
      subs.push_back(std::move(s));
    }
    return subs;
  }

  ChainStep step(int from, int to) const {
    int lo = std::min(from, to), hi = std::max(from, to);
    for (const auto& e : d_.edges()) {
      if (e.u != lo || e.v != hi) continue;
      ChainStep st{e.mult, 0};
      if (e.dir) st.arrow = (e.dir->first == to && e.dir->second == from) ? +1 : -1;
      return st;
    }
    return {0, 0};
  }

  std::string walk_text(const std::vector<int>& walk) const {
    std::vector<ChainStep> steps;
    for (size_t i = 0; i + 1 < walk.size(); ++i) steps.push_back(step(walk[i], walk[i + 1]));
    return chain_text(steps);
  }

  // Whole diagram is a path: canonical reading = lexicographically largest
  // (multiplicity, arrow) sequence.
  std::string path_text() const {
    if (d_.vertices() == 1) return "*";
    std::vector<int> ends;
    for (int v = 0; v < d_.vertices(); ++v)
      if (d_.degree(v) == 1) ends.push_back(v);
    auto walk_from = [&](int start) {
      std::vector<int> walk{start};
      int prev = -1, cur = start;
      while (true) {
        int next = -1;
        for (int nb : d_.neighbors(cur))
          if (nb != prev) next = nb;
        if (next < 0) break;
        walk.push_back(next);
        prev = cur;
        cur = next;
      }
      return walk;
    };
    auto key = [&](const std::vector<int>& walk) {
      std::vector<ChainStep> k;
      for (size_t i = 0; i + 1 < walk.size(); ++i) k.push_back(step(walk[i], walk[i + 1]));
      return k;
    };
    std::vector<int> w1 = walk_from(ends[0]), w2 = walk_from(ends[1]);
    return key(w1) >= key(w2) ? walk_text(w1) : walk_text(w2);
  }

  // Branch text with `r` rightmost, or nullopt if inexpressible.
  std::optional<std::string> express_branch(const Subtree& s, int r) const {
    std::vector<int> walk{r};
    int prev = -1, cur = r;
    while (true) {
      std::vector<int> nexts;
      for (int nb : d_.neighbors(cur))
        if (in(s.verts, nb) && nb != prev) nexts.push_back(nb);
      if (nexts.empty()) {
        std::vector<int> rev(walk.rbegin(), walk.rend());
        return walk_text(rev);
      }
      if (nexts.size() == 1) {
        prev = cur;
        cur = nexts[0];
        walk.push_back(cur);
        continue;
      }
      if (nexts.size() != 2) return std::nullopt;
      // cur is the branch's node; walk (r..cur) is its trailing chain.
      std::vector<std::string> texts;
      std::vector<size_t> sizes;
      for (int nb : nexts) {
        if (d_.mult(cur, nb) != 1) return std::nullopt;  // paren lines are single
        auto pieces = subtrees(cur, prev, s.verts);
        for (const auto& p : pieces) {
          if (p.root != nb) continue;
          auto txt = express_branch(p, p.root);
          if (!txt) return std::nullopt;
          texts.push_back(*txt);
          sizes.push_back(p.verts.size());
        }
      }
      if (texts.size() != 2) return std::nullopt;
      order_pair(sizes, texts);
      std::string out = "(" + texts[0] + "," + texts[1] + ")>*";
      if (cur != r) {
        std::vector<int> trail(walk.rbegin(), walk.rend());  // cur .. r
        out += walk_text(trail).substr(1);
      }
      return out;
    }
  }

  // Shorter branch second; ties by text.
  static void order_pair(std::vector<size_t>& sizes, std::vector<std::string>& texts) {
    if (sizes[0] < sizes[1] || (sizes[0] == sizes[1] && texts[0] > texts[1])) {
      std::swap(sizes[0], sizes[1]);
      std::swap(texts[0], texts[1]);
    }
  }

  std::optional<std::string> try_top(int t, const std::vector<Subtree>& subs,
                                     size_t trail_idx) const {
    const Subtree& z = subs[trail_idx];
    std::vector<int> trail{t};
    int prev = t, cur = z.root;
    while (true) {
      trail.push_back(cur);
      int next = -1;
      for (int nb : d_.neighbors(cur)) {
        if (!in(z.verts, nb) || nb == prev) continue;
        if (next >= 0) return std::nullopt;  // branching inside the trailing chain
        next = nb;
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    if (trail.size() != z.verts.size() + 1) return std::nullopt;
    std::vector<std::string> texts;
    std::vector<size_t> sizes;
    for (size_t i = 0; i < subs.size(); ++i) {
      if (i == trail_idx) continue;
      if (d_.mult(t, subs[i].root) != 1) return std::nullopt;
      auto txt = express_branch(subs[i], subs[i].root);
      if (!txt) return std::nullopt;
      texts.push_back(*txt);
      sizes.push_back(subs[i].verts.size());
    }
    if (texts.size() != 2) return std::nullopt;
    order_pair(sizes, texts);
    return "(" + texts[0] + "," + texts[1] + ")>*" + walk_text(trail).substr(1);
  }

  const CoxeterDiagram& d_;
};

std::string dot_text(const CoxeterDiagram& d, bool directed) {
  std::ostringstream os;
  os << "graph diagram {\n  node [shape=circle];\n";
  for (int v = 0; v < d.vertices(); ++v) os << "  " << (v + 1) << ";\n";
  for (const auto& e : d.edges()) {
    if (directed && e.dir) {
      // Arrow drawn out of the -m row, matching the text notation.
      os << "  " << (e.dir->second + 1) << " -- " << (e.dir->first + 1) << " [mult=" << e.mult
         << ", dir=forward];\n";
    } else {
      os << "  " << (e.u + 1) << " -- " << (e.v + 1) << " [mult=" << e.mult << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace

CoxeterDiagram parse_coxeter(const std::string& text) { return Parser(text, false).run(); }

DynkinDiagram parse_dynkin(const std::string& text) {
  return DynkinDiagram{Parser(text, true).run()};
}

bool has_directed_tokens(const std::string& text) {
  for (size_t i = 0; i + 1 < text.size(); ++i) {
    char a = text[i], b = text[i + 1];
    if ((a == '=' || a == '#') && b == '>') return true;
    if (a == '<' && (b == '=' || b == '#')) return true;
  }
  return false;
}

std::string print_diagram(const CoxeterDiagram& d) { return Printer(d).run(); }

std::string print_diagram(const DynkinDiagram& d) { return Printer(d.graph).run(); }

std::string to_dot(const CoxeterDiagram& d) { return dot_text(d, false); }

std::string to_dot(const DynkinDiagram& d) { return dot_text(d.graph, true); }

}  // namespace cartan
