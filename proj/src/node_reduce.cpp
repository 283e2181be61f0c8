#include "cartan/node_reduce.hpp"

namespace cartan {

namespace {

Mat<QF> x_pattern(NodeCase c) {
  auto build = [](std::initializer_list<std::initializer_list<int>> rows) {
    Mat<QF> m(static_cast<int>(rows.size()));
    int i = 0;
    for (const auto& row : rows) {
      int j = 0;
      for (int v : row) m(i, j++) = QF(v);
      ++i;
    }
    return m;
  };
  switch (c) {
    case NodeCase::y_node:
      return build({{2, 0, -1}, {0, 2, -1}, {-1, -1, 2}});
    case NodeCase::e_node:
      return build({{2, -1, 0, 0}, {-1, 2, 0, -1}, {0, 0, 2, -1}, {0, -1, -1, 2}});
    case NodeCase::h_node:
      return build({{2, 0, -1, 0, 0},
                    {0, 2, 0, -1, 0},
                    {-1, 0, 2, 0, -1},
                    {0, -1, 0, 2, -1},
                    {0, 0, -1, -1, 2}});
  }
  throw std::logic_error("unknown node case");
}

}  // namespace

int node_case_block(NodeCase c) {
  switch (c) {
    case NodeCase::y_node: return 3;
    case NodeCase::e_node: return 4;
    case NodeCase::h_node: return 5;
  }
  throw std::logic_error("unknown node case");
}

Mat<QF> node_case_s(NodeCase c) {
  const QF h = QF::sqrt_half();
  switch (c) {
    case NodeCase::y_node: {
      Mat<QF> s(3);
      s(0, 0) = h;  s(0, 1) = -h; s(0, 2) = 0;
      s(1, 0) = h;  s(1, 1) = h;  s(1, 2) = 0;
      s(2, 2) = QF(1);
      return s;
    }
    case NodeCase::e_node: {
      Mat<QF> s(4);
      s(0, 1) = h;     s(0, 2) = -h;
      s(1, 0) = QF(1);
      s(2, 1) = h;     s(2, 2) = h;
      s(3, 3) = QF(1);
      return s;
    }
    case NodeCase::h_node: {
      Mat<QF> s(5);
      s(0, 2) = h;  s(0, 3) = -h;
      s(1, 0) = h;  s(1, 1) = -h;
      s(2, 0) = h;  s(2, 1) = h;
      s(3, 2) = h;  s(3, 3) = h;
      s(4, 4) = QF(1);
      return s;
    }
  }
  throw std::logic_error("unknown node case");
}

Mat<QF> node_reduce(const Mat<QF>& b, NodeCase c) {
  const int k = node_case_block(c);
  const int n = b.size();
  if (n < k) throw PatternMismatchError("matrix smaller than the case block");
  Mat<QF> x = x_pattern(c);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (b(i, j) != x(i, j)) throw PatternMismatchError("X block mismatch (wrong vertex order?)");
  // Only the node row (last X row) may meet the rest, and by a single line
  // to the first Z row.
  for (int i = 0; i < k; ++i)
    for (int j = k; j < n; ++j) {
      bool node_to_first = (i == k - 1 && j == k);
      if (node_to_first) {
        if (b(i, j) != QF(-1) && !b(i, j).is_zero())
          throw PatternMismatchError("node must meet the chain by a single line");
      } else if (!b(i, j).is_zero() || !b(j, i).is_zero()) {
        throw PatternMismatchError("branch rows must not meet the rest of the diagram");
      }
    }

  // T = diag(S, I); since S's last row is the node unit row, the Y block is
  // untouched and the congruence only rewrites the X block.
  Mat<QF> t = Mat<QF>::identity(n);
  Mat<QF> s = node_case_s(c);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t(i, j) = s(i, j);
  return congruence(t, b);
}

}  // namespace cartan
