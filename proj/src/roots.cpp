#include "cartan/roots.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <numeric>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cartan {

namespace {

struct VecHash {
  std::size_t operator()(const RootVector& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

using RootSet = std::unordered_set<RootVector, VecHash>;

void check_guard(const RootVector& k, const RootGenOptions& opts) {
  for (int x : k)
    if (x > opts.guard || x < -opts.guard)
      throw NotFiniteWithinGuardError(NotFiniteWithinGuardError::Trigger::coefficient_bound, k,
                                      opts.guard);
}

std::vector<RootVector> sorted_roots(const RootSet& set) {
  std::vector<RootVector> roots(set.begin(), set.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

RootSystem finish(const CartanMatrix& a, SymCartanMatrix sym, std::vector<RootVector> roots) {
  Mat<Rational> gram = gram_matrix(a, sym);
  return RootSystem{a, std::move(sym), std::move(gram), std::move(roots)};
}

}  // namespace

Mat<Rational> gram_matrix(const CartanMatrix& a, const SymCartanMatrix& s) {
  const int l = a.rank();
  Mat<Rational> g(l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) g(i, j) = Rational(a.at(i, j)) * s.weight2[i] / 2;
  return g;
}

RootVector simple_reflection(const CartanMatrix& a, int i, const RootVector& k) {
  const int l = a.rank();
  if (i < 0 || i >= l) throw std::out_of_range("reflection index out of range");
  if (static_cast<int>(k.size()) != l) throw std::invalid_argument("vector length mismatch");
  long long s = 0;
  for (int j = 0; j < l; ++j) s += static_cast<long long>(a.at(i, j)) * k[j];
  RootVector r = k;
  r[i] = static_cast<int>(k[i] - s);
  return r;
}

RootSystem generate_roots_serial(const CartanMatrix& a, const RootGenOptions& opts) {
  if (opts.guard < 1) throw std::invalid_argument("guard must be >= 1");
  SymCartanMatrix sym = symmetrise(a);
  const int l = a.rank();
  RootSet set;
  std::vector<RootVector> work;
  for (int i = 0; i < l; ++i) {
    RootVector e(l, 0);
    e[i] = 1;
    set.insert(e);
    work.push_back(std::move(e));
  }
  while (!work.empty()) {
    RootVector k = std::move(work.back());
    work.pop_back();
    for (int i = 0; i < l; ++i) {
      RootVector r = simple_reflection(a, i, k);
      check_guard(r, opts);
      if (set.insert(r).second) {
        if (set.size() > opts.max_roots)
          throw NotFiniteWithinGuardError(NotFiniteWithinGuardError::Trigger::set_size, r,
                                          opts.guard);
        work.push_back(std::move(r));
      }
    }
  }
  return finish(a, std::move(sym), sorted_roots(set));
}

RootSystem generate_roots(const CartanMatrix& a, const RootGenOptions& opts) {
  if (opts.guard < 1) throw std::invalid_argument("guard must be >= 1");
  SymCartanMatrix sym = symmetrise(a);
  const int l = a.rank();
  RootSet set;
  std::vector<RootVector> frontier;
  for (int i = 0; i < l; ++i) {
    RootVector e(l, 0);
    e[i] = 1;
    set.insert(e);
    frontier.push_back(std::move(e));
  }
  // Frontier rounds: reflections of the whole frontier are computed in
  // parallel, then merged serially so the result is the plain closure.
  while (!frontier.empty()) {
    const auto n = static_cast<long long>(frontier.size());
    std::vector<std::vector<RootVector>> produced;
#ifdef _OPENMP
    int threads = omp_get_max_threads();
#else
    int threads = 1;
#endif
    produced.resize(threads);
    std::optional<NotFiniteWithinGuardError> guard_error;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long idx = 0; idx < n; ++idx) {
#ifdef _OPENMP
      int tid = omp_get_thread_num();
#else
      int tid = 0;
#endif
      for (int i = 0; i < l; ++i) {
        RootVector r = simple_reflection(a, i, frontier[idx]);
        bool over = false;
        for (int x : r) over |= (x > opts.guard || x < -opts.guard);
        if (over) {
#ifdef _OPENMP
#pragma omp critical(root_guard)
#endif
          {
            if (!guard_error)
              guard_error.emplace(NotFiniteWithinGuardError::Trigger::coefficient_bound, r,
                                  opts.guard);
          }
        } else {
          produced[tid].push_back(std::move(r));
        }
      }
    }
    if (guard_error) throw *guard_error;
    std::vector<RootVector> next;
    for (auto& bucket : produced)
      for (auto& r : bucket)
        if (set.insert(r).second) {
          if (set.size() > opts.max_roots)
            throw NotFiniteWithinGuardError(NotFiniteWithinGuardError::Trigger::set_size, r,
                                            opts.guard);
          next.push_back(std::move(r));
        }
    frontier = std::move(next);
  }
  return finish(a, std::move(sym), sorted_roots(set));
}

namespace {

Rational dot(const Mat<Rational>& g, const RootVector& x, const RootVector& y) {
  const int l = g.size();
  Rational acc;
  for (int i = 0; i < l; ++i) {
    if (x[i] == 0) continue;
    Rational row;
    for (int j = 0; j < l; ++j)
      if (y[j] != 0) row += g(i, j) * y[j];
    acc += Rational(x[i]) * row;
  }
  return acc;
}

}  // namespace

std::vector<RootVector> gram_closure(const CartanMatrix& a, const RootGenOptions& opts) {
  SymCartanMatrix sym = symmetrise(a);
  Mat<Rational> g = gram_matrix(a, sym);
  const int l = a.rank();
  RootSet set;
  std::vector<RootVector> all;
  for (int i = 0; i < l; ++i) {
    RootVector e(l, 0);
    e[i] = 1;
    set.insert(e);
    all.push_back(e);
  }
  // Reflect every member in every member until fixpoint.  w_alpha(beta) =
  // beta - (2(beta,alpha)/(alpha,alpha)) alpha, all exact rationals.
  size_t processed = 0;
  while (processed < all.size()) {
    const size_t upto = all.size();
    for (size_t bi = 0; bi < upto; ++bi) {
      for (size_t ai = (bi < processed ? processed : 0); ai < upto; ++ai) {
        const RootVector& alpha = all[ai];
        const RootVector& beta = all[bi];
        Rational n2 = 2 * dot(g, beta, alpha);
        Rational nn = dot(g, alpha, alpha);
        if (nn.sign() == 0) throw std::domain_error("zero-norm vector in Gram closure");
        Rational coef = n2 / nn;
        if (!is_integer(coef))
          throw std::domain_error("non-integral reflection coefficient in Gram closure");
        long long c = static_cast<long long>(rational_num(coef));
        RootVector r = beta;
        for (int j = 0; j < l; ++j) r[j] -= static_cast<int>(c * alpha[j]);
        check_guard(r, opts);
        if (set.insert(r).second) {
          if (set.size() > opts.max_roots)
            throw NotFiniteWithinGuardError(NotFiniteWithinGuardError::Trigger::set_size, r,
                                            opts.guard);
          all.push_back(std::move(r));
        }
      }
    }
    processed = upto;
  }
  std::sort(all.begin(), all.end());
  return all;
}

namespace {

VerifyReport verify_impl(const RootSystem& rs, bool parallel) {
  VerifyReport rep;
  const auto& roots = rs.roots;
  const auto& g = rs.gram;
  const int l = rs.rank();
  const auto n = static_cast<long long>(roots.size());

  RootSet set(roots.begin(), roots.end());

  auto vec_text = [](const RootVector& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + ")";
  };

  // (a) + (b): reflect every beta in every alpha; coefficient integral and
  // image present.  The pair sweep is the heavy kernel.
  std::atomic<bool> closure_ok{true}, integral_ok{true};
  std::string closure_witness, integral_witness;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
#endif
  for (long long ai = 0; ai < n; ++ai) {
    const RootVector& alpha = roots[ai];
    Rational nn = dot(g, alpha, alpha);
    for (long long bi = 0; bi < n; ++bi) {
      if (!closure_ok.load(std::memory_order_relaxed) &&
          !integral_ok.load(std::memory_order_relaxed))
        continue;
      const RootVector& beta = roots[bi];
      Rational coef = 2 * dot(g, beta, alpha) / nn;
      if (!is_integer(coef)) {
#ifdef _OPENMP
#pragma omp critical(verify_witness)
#endif
        {
          integral_ok = false;
          if (integral_witness.empty())
            integral_witness = "2(beta,alpha)/(alpha,alpha) = " + cartan::to_string(coef) +
                               " for alpha=" + vec_text(alpha) + ", beta=" + vec_text(beta);
        }
        continue;
      }
      long long c = static_cast<long long>(rational_num(coef));
      RootVector r = beta;
      for (int j = 0; j < l; ++j) r[j] -= static_cast<int>(c * alpha[j]);
      if (!set.count(r)) {
#ifdef _OPENMP
#pragma omp critical(verify_witness)
#endif
        {
          closure_ok = false;
          if (closure_witness.empty())
            closure_witness = "w_alpha(beta) = " + vec_text(r) + " missing for alpha=" +
                              vec_text(alpha) + ", beta=" + vec_text(beta);
        }
      }
    }
  }
  rep.closure = {closure_ok.load(), closure_witness};
  rep.integrality = {integral_ok.load(), integral_witness};

  // (c) reduced: group by primitive direction; each class must be {v, -v}.
  {
    std::map<RootVector, std::vector<const RootVector*>> classes;
    for (const auto& r : roots) {
      int g0 = 0;
      for (int x : r) g0 = std::gcd(g0, std::abs(x));
      RootVector prim(r.size());
      for (size_t j = 0; j < r.size(); ++j) prim[j] = r[j] / g0;
      RootVector neg(prim.size());
      for (size_t j = 0; j < prim.size(); ++j) neg[j] = -prim[j];
      classes[std::min(prim, neg)].push_back(&r);
    }
    for (const auto& [prim, members] : classes) {
      bool ok = members.size() <= 2;
      if (members.size() == 2) {
        for (size_t j = 0; j < prim.size(); ++j)
          if ((*members[0])[j] + (*members[1])[j] != 0) ok = false;
      }
      // A single member is fine only if R = -R fails elsewhere; proportional
      // pairs tv with |t| != 1 are the violation this check hunts.
      if (!ok) {
        rep.reduced.pass = false;
        rep.reduced.witness = "proportional roots " + vec_text(*members[0]) + " and " +
                              vec_text(*members[1]);
        break;
      }
    }
  }

  // (d) norm bound.
  {
    Rational max_simple;
    for (int i = 0; i < l; ++i) max_simple = std::max(max_simple, g(i, i));
    for (const auto& r : roots) {
      Rational nn = dot(g, r, r);
      if (nn > max_simple) {
        rep.norm_bound.pass = false;
        rep.norm_bound.witness =
            "(alpha,alpha) = " + cartan::to_string(nn) + " for alpha=" + vec_text(r);
        break;
      }
    }
  }

  // (e) signs.
  for (const auto& r : roots) {
    bool has_pos = false, has_neg = false;
    for (int x : r) {
      has_pos |= x > 0;
      has_neg |= x < 0;
    }
    if (has_pos && has_neg) {
      rep.sign_consistency.pass = false;
      rep.sign_consistency.witness = "mixed-sign coefficients in " + vec_text(r);
      break;
    }
  }
  return rep;
}

}  // namespace

VerifyReport verify_root_system(const RootSystem& rs) { return verify_impl(rs, true); }

VerifyReport verify_root_system_serial(const RootSystem& rs) { return verify_impl(rs, false); }

std::vector<Rational> root_norms(const RootSystem& rs) {
  std::vector<Rational> norms;
  norms.reserve(rs.roots.size());
  for (const auto& r : rs.roots) norms.push_back(dot(rs.gram, r, r));
  return norms;
}

}  // namespace cartan
