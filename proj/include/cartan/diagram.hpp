// Coxeter and Dynkin diagrams as multiplicity-labelled graphs, and the
// conversions between diagrams and (symmetrised) Cartan matrices.
//
// A directed multiple line is stored as the ordered pair (p, q) with
//   A_pq = -1,  A_qp = -m .
// In the inline text notation (notation.hpp) the same line renders as
// "q => p": the fat arrow leaves the row holding the -m entry.
#pragma once

#include "cartan/cartan_matrix.hpp"
#include "cartan/qf.hpp"
#include "cartan/symmetrise.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cartan {

struct DiagramEdge {
  int u, v;   // vertices, 0-based, u < v
  int mult;   // 1..3
  // Direction (p,q) for multiple lines; nullopt on Coxeter diagrams.
  std::optional<std::pair<int, int>> dir;
};

class CoxeterDiagram {
 public:
  CoxeterDiagram() = default;
  explicit CoxeterDiagram(int vertices) : n_(vertices) {}

  int vertices() const { return n_; }
  const std::vector<DiagramEdge>& edges() const { return edges_; }

  // Throws std::invalid_argument on self-loops, duplicate pairs, or
  // multiplicity outside 1..3.
  void add_edge(int u, int v, int mult);

  // Attaches a direction pair to an existing multiple line.
  void set_direction(int u, int v, std::pair<int, int> dir);

  int mult(int u, int v) const;               // 0 when not adjacent
  int degree(int v) const;                    // number of lines (merged)
  int degree_with_mult(int v) const;          // sum of multiplicities
  std::vector<int> neighbors(int v) const;

  bool is_connected() const;
  bool is_forest() const;                     // edge count check per component
  std::vector<std::vector<int>> connected_components() const;

  // Induced subdiagram; vertex i of the result is keep[i] of the original.
  CoxeterDiagram induced(const std::vector<int>& keep) const;

  // B with diagonal 2 and off-diagonal -sqrt(m_ij) under the current
  // vertex order, optionally permuted (order[i] = original vertex placed
  // at row i).
  Mat<QF> sym_matrix(const std::vector<int>& order = {}) const;

 private:
  int n_ = 0;
  std::vector<DiagramEdge> edges_;
};

struct DynkinDiagram {
  CoxeterDiagram graph;  // edges carry dir on every multiple line

  int vertices() const { return graph.vertices(); }
};

// Generalised diagram: multiplicities are positive rationals (the 1/2
// lines produced by the node reductions).
class GenCoxeterDiagram {
 public:
  GenCoxeterDiagram() = default;
  explicit GenCoxeterDiagram(int vertices) : n_(vertices) {}

  int vertices() const { return n_; }
  struct Edge {
    int u, v;
    Rational mult;
  };
  const std::vector<Edge>& edges() const { return edges_; }
  void add_edge(int u, int v, Rational mult);
  Rational mult(int u, int v) const;

  // Reads the diagram off a symmetric QF matrix with diagonal 2 whose
  // off-diagonal entries are all of the form -sqrt(q); throws
  // std::domain_error otherwise.
  static GenCoxeterDiagram from_sym(const Mat<QF>& b);

  std::vector<std::vector<int>> connected_components() const;

  // If the component containing `start` is a path with `start` at one end,
  // returns the squared-subdiagonal sequence read along it.
  std::optional<std::vector<Rational>> chain_from(int start) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// Coxeter diagram of a symmetrised Cartan matrix under a vertex order.
SymCartanMatrix coxeter_to_sym(const CoxeterDiagram& d, const std::vector<int>& order = {});

// Cartan matrix from an orientation of every multiple line of a forest
// diagram.  `directions` holds one ordered pair (p,q) per multiple line;
// single lines become -1/-1.  Throws std::invalid_argument on cycles,
// missing or duplicate directions, or pairs that are not multiple lines.
CartanMatrix orient(const CoxeterDiagram& d,
                    const std::vector<std::pair<int, int>>& directions);

// The (directed) diagram of a Cartan matrix: m_ij = A_ij * A_ji lines,
// direction on each multiple line per the entry comparison.
DynkinDiagram dynkin_of_cartan(const CartanMatrix& a);

// Underlying undirected diagram.
CoxeterDiagram coxeter_of_cartan(const CartanMatrix& a);

// Cartan matrix of a fully directed Dynkin diagram.
CartanMatrix cartan_of_dynkin(const DynkinDiagram& d);

// Graph isomorphism respecting multiplicities (and directions when both
// carry them); used by round-trip tests.
bool diagrams_isomorphic(const CoxeterDiagram& a, const CoxeterDiagram& b,
                         bool respect_directions = false);

}  // namespace cartan
