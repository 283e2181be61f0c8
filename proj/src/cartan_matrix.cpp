#include "cartan/cartan_matrix.hpp"

#include <algorithm>
#include <map>

namespace cartan {

const char* AxiomViolation::axiom_name() const {
  switch (axiom) {
    case Axiom::not_square: return "square";
    case Axiom::diagonal: return "ii";
    case Axiom::off_diagonal_sign: return "iii";
    case Axiom::product_range: return "iv";
    case Axiom::zero_pairing: return "iv";
  }
  return "?";
}

std::string AxiomViolation::message() const {
  std::string at = i >= 0 ? " at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"
                          : std::string();
  switch (axiom) {
    case Axiom::not_square:
      return "input is not a square matrix";
    case Axiom::diagonal:
      return "axiom (ii) violated" + at + ": diagonal entry must be 2";
    case Axiom::off_diagonal_sign:
      return "axiom (iii) violated" + at + ": off-diagonal entry must be non-positive";
    case Axiom::product_range:
      return "axiom (iv) violated" + at + ": product A_ij*A_ji outside 0..3";
    case Axiom::zero_pairing:
      return "axiom (iv) violated" + at + ": A_ij = 0 but A_ji != 0";
  }
  return "invalid Cartan matrix";
}

std::optional<AxiomViolation> check_cartan(const std::vector<std::vector<int>>& raw) {
  using Axiom = AxiomViolation::Axiom;
  const int l = static_cast<int>(raw.size());
  if (l == 0) return AxiomViolation{Axiom::not_square};
  for (int i = 0; i < l; ++i)
    if (static_cast<int>(raw[i].size()) != l) return AxiomViolation{Axiom::not_square, i, -1};
  for (int i = 0; i < l; ++i) {
    if (raw[i][i] != 2) return AxiomViolation{Axiom::diagonal, i, i};
    for (int j = 0; j < l; ++j) {
      if (i == j) continue;
      if (raw[i][j] > 0) return AxiomViolation{Axiom::off_diagonal_sign, i, j};
      if (raw[i][j] == 0 && raw[j][i] != 0) return AxiomViolation{Axiom::zero_pairing, i, j};
      int prod = raw[i][j] * raw[j][i];
      if (prod > 3) return AxiomViolation{Axiom::product_range, i, j};
    }
  }
  return std::nullopt;
}

CartanMatrix CartanMatrix::validated(const std::vector<std::vector<int>>& raw) {
  if (auto v = check_cartan(raw)) throw CartanAxiomError(*v);
  const int l = static_cast<int>(raw.size());
  Mat<int> e(l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) e(i, j) = raw[i][j];
  return CartanMatrix(std::move(e));
}

CartanMatrix CartanMatrix::unchecked(Mat<int> entries) { return CartanMatrix(std::move(entries)); }

std::vector<std::vector<int>> CartanMatrix::rows() const {
  const int l = rank();
  std::vector<std::vector<int>> r(l, std::vector<int>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) r[i][j] = entries_(i, j);
  return r;
}

ComponentPartition components(const CartanMatrix& a) {
  const int l = a.rank();
  std::vector<int> mark(l, -1);
  ComponentPartition parts;
  for (int s = 0; s < l; ++s) {
    if (mark[s] >= 0) continue;
    std::vector<int> block{s};
    mark[s] = static_cast<int>(parts.size());
    for (size_t q = 0; q < block.size(); ++q) {
      int i = block[q];
      for (int j = 0; j < l; ++j)
        if (mark[j] < 0 && a.at(i, j) != 0) {
          mark[j] = mark[s];
          block.push_back(j);
        }
    }
    std::sort(block.begin(), block.end());
    parts.push_back(std::move(block));
  }
  return parts;
}

namespace {

// Sorted row profile (multiset of off-diagonal entries) used for pruning.
std::vector<int> row_profile(const CartanMatrix& m, int i) {
  std::vector<int> p;
  p.reserve(m.rank() - 1);
  for (int j = 0; j < m.rank(); ++j)
    if (j != i) p.push_back(m.at(i, j));
  std::sort(p.begin(), p.end());
  return p;
}

bool extend(const CartanMatrix& a, const CartanMatrix& b, std::vector<int>& p,
            std::vector<bool>& used, int i) {
  const int l = a.rank();
  if (i == l) return true;
  for (int t = 0; t < l; ++t) {
    if (used[t]) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j)
      ok = b.at(t, p[j]) == a.at(i, j) && b.at(p[j], t) == a.at(j, i);
    if (!ok || b.at(t, t) != a.at(i, i)) continue;
    p[i] = t;
    used[t] = true;
    if (extend(a, b, p, used, i + 1)) return true;
    used[t] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const CartanMatrix& a, const CartanMatrix& b) {
  const int l = a.rank();
  if (b.rank() != l) return std::nullopt;
  std::map<std::vector<int>, int> profiles;
  for (int i = 0; i < l; ++i) {
    ++profiles[row_profile(a, i)];
    --profiles[row_profile(b, i)];
  }
  for (const auto& [prof, count] : profiles)
    if (count != 0) return std::nullopt;
  std::vector<int> p(l, -1);
  std::vector<bool> used(l, false);
  if (extend(a, b, p, used, 0)) return p;
  return std::nullopt;
}

}  // namespace cartan
