#include "cartan/symmetrise.hpp"

#include <algorithm>

namespace cartan {

namespace {

std::string cycle_text(const std::vector<int>& cycle) {
  std::string s;
  for (size_t q = 0; q < cycle.size(); ++q) {
    if (q) s += " -> ";
    s += std::to_string(cycle[q] + 1);
  }
  return s;
}

}  // namespace

NotSymmetrisableError::NotSymmetrisableError(std::vector<int> cycle, const Rational& ratio)
    : std::domain_error("not symmetrisable: cycle " + cycle_text(cycle) +
                        " has ratio product " + cartan::to_string(ratio)),
      cycle_(std::move(cycle)),
      ratio_(ratio) {}

SymCartanMatrix symmetrise(const CartanMatrix& a) {
  const int l = a.rank();
  std::vector<Rational> w2(l, Rational(0));
  std::vector<int> parent(l, -1);
  std::vector<char> seen(l, 0);

  for (int s = 0; s < l; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    w2[s] = 1;
    std::vector<int> queue{s};
    for (size_t q = 0; q < queue.size(); ++q) {
      int i = queue[q];
      for (int j = 0; j < l; ++j) {
        if (j == i || a.at(i, j) == 0) continue;
        Rational along = Rational(a.at(i, j)) / a.at(j, i);
        if (!seen[j]) {
          seen[j] = 1;
          parent[j] = i;
          w2[j] = w2[i] * along;
          queue.push_back(j);
        } else if (w2[j] != w2[i] * along) {
          // Witness: closed walk i -> lca -> j -> i (tree paths plus the
          // inconsistent edge).
          auto path_to_root = [&](int v) {
            std::vector<int> p{v};
            while (parent[p.back()] >= 0) p.push_back(parent[p.back()]);
            return p;
          };
          std::vector<int> pi = path_to_root(i), pj = path_to_root(j);
          while (pi.size() >= 2 && pj.size() >= 2 && pi[pi.size() - 2] == pj[pj.size() - 2]) {
            pi.pop_back();
            pj.pop_back();
          }
          std::vector<int> cycle = pi;  // i .. lca
          cycle.insert(cycle.end(), pj.rbegin() + 1, pj.rend());  // .. j
          cycle.push_back(i);
          Rational prod = 1;
          for (size_t e = 0; e + 1 < cycle.size(); ++e)
            prod *= Rational(a.at(cycle[e], cycle[e + 1])) / a.at(cycle[e + 1], cycle[e]);
          throw NotSymmetrisableError(std::move(cycle), prod);
        }
      }
    }
  }

  Mat<QF> b(l);
  for (int i = 0; i < l; ++i) {
    b(i, i) = QF(2);
    for (int j = i + 1; j < l; ++j) {
      if (a.at(i, j) == 0) continue;
      QF entry = -QF::sqrt_of_rational(Rational(a.mult(i, j)));
      b(i, j) = entry;
      b(j, i) = entry;
    }
  }
  return SymCartanMatrix{std::move(b), std::move(w2)};
}

bool satisfies_weight_relation(const CartanMatrix& a, const SymCartanMatrix& s) {
  const int l = a.rank();
  if (s.rank() != l || static_cast<int>(s.weight2.size()) != l) return false;
  std::vector<QF> c(l), c_inv(l);
  for (int i = 0; i < l; ++i) {
    if (s.weight2[i].sign() <= 0) return false;
    c[i] = QF::sqrt_of_rational(s.weight2[i]);
    c_inv[i] = QF(1) / c[i];
  }
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      if (a.at(i, j) == 0 && i != j) {
        if (!s.b(i, j).is_zero()) return false;
        continue;
      }
      if (s.b(i, j) != c[i] * QF(Rational(a.at(i, j))) * c_inv[j]) return false;
    }
  return true;
}

}  // namespace cartan
