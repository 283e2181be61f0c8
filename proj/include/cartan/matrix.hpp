// Minimal dense square matrix, value-semantic, used at desk scale only.
#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace cartan {

template <class T>
class Mat {
 public:
  Mat() = default;
  explicit Mat(int n, const T& fill = T()) : n_(n), v_(static_cast<size_t>(n) * n, fill) {}

  static Mat identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int size() const { return n_; }

  T& operator()(int i, int j) {
    assert(0 <= i && i < n_ && 0 <= j && j < n_);
    return v_[static_cast<size_t>(i) * n_ + j];
  }
  const T& operator()(int i, int j) const {
    assert(0 <= i && i < n_ && 0 <= j && j < n_);
    return v_[static_cast<size_t>(i) * n_ + j];
  }

  friend bool operator==(const Mat& x, const Mat& y) { return x.n_ == y.n_ && x.v_ == y.v_; }

  Mat transposed() const {
    Mat t(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    assert(x.n_ == y.n_);
    Mat r(x.n_);
    for (int i = 0; i < x.n_; ++i)
      for (int k = 0; k < x.n_; ++k) {
        const T& xik = x(i, k);
        if (xik == T()) continue;
        for (int j = 0; j < x.n_; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }

  // P * M * P^T for a permutation p acting as "row i moves to row p[i]".
  Mat permuted(const std::vector<int>& p) const {
    assert(static_cast<int>(p.size()) == n_);
    Mat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r(p[i], p[j]) = (*this)(i, j);
    return r;
  }

 private:
  int n_ = 0;
  std::vector<T> v_;
};

template <class T>
Mat<T> congruence(const Mat<T>& t, const Mat<T>& b) {  // T B T^t
  return t * b * t.transposed();
}

}  // namespace cartan
