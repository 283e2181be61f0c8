#include "cartan/diagram.hpp"
#include "cartan/json_io.hpp"
#include "cartan/minors.hpp"
#include "cartan/notation.hpp"

#include <doctest.h>

#include "test_util.hpp"

#include <random>

using namespace cartan;
using namespace testutil;

TEST_CASE("parse the F4 chain") {
  CoxeterDiagram d = parse_coxeter("*-*=*-*");
  CHECK(d.vertices() == 4);
  CHECK(d.mult(0, 1) == 1);
  CHECK(d.mult(1, 2) == 2);
  CHECK(d.mult(2, 3) == 1);
}

TEST_CASE("parse the E6 node expression") {
  CoxeterDiagram d = parse_coxeter("(*-*,*)>*-*-*");
  CHECK(d.vertices() == 6);
  // Reading order: branch 0-1, branch 2, node 3, chain 4-5.
  CHECK(d.mult(0, 1) == 1);
  CHECK(d.mult(1, 3) == 1);
  CHECK(d.mult(2, 3) == 1);
  CHECK(d.mult(3, 4) == 1);
  CHECK(d.mult(4, 5) == 1);
  CHECK(d.edges().size() == 5);
  CHECK(d.degree(3) == 3);
}

TEST_CASE("parse the triple line and its alias") {
  for (const char* text : {"*#*", "*\xe2\x89\xa1*"}) {
    CoxeterDiagram d = parse_coxeter(text);
    CHECK(d.vertices() == 2);
    CHECK(d.mult(0, 1) == 3);
  }
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_coxeter("*-"), ParseError);
  CHECK_THROWS_AS(parse_coxeter("*-*)"), ParseError);
  CHECK_THROWS_AS(parse_coxeter(""), ParseError);
  CHECK_THROWS_AS(parse_coxeter("(*,*>*"), ParseError);
  // Directed markers are rejected in undirected mode.
  CHECK_THROWS_AS(parse_coxeter("*=>*"), ParseError);
  CHECK_THROWS_AS(parse_coxeter("*<#*"), ParseError);
  // Directed mode requires arrows on multiple lines.
  CHECK_THROWS_AS(parse_dynkin("*=*"), ParseError);
  CHECK_NOTHROW(parse_dynkin("*=>*"));
  CHECK_NOTHROW(parse_dynkin("*-*"));
}

TEST_CASE("canonical printing") {
  CHECK(print_diagram(star_diagram(1, 1, 1)) == "(*,*)>*-*");
  CHECK(print_diagram(chain_diagram({2, 1})) == "*=*-*");
  CHECK(print_diagram(chain_diagram({1, 2})) == "*=*-*");
  CHECK(print_diagram(parse_coxeter("*")) == "*");
  CHECK(print_diagram(parse_coxeter("(*-*,*)>*-*-*")) == "(*-*,*)>*-*-*");
  CHECK(print_diagram(star_diagram(4, 2, 1)) == "(*-*,*)>*-*-*-*-*");  // E8 shape

  CoxeterDiagram triangle(3);
  triangle.add_edge(0, 1, 1);
  triangle.add_edge(1, 2, 1);
  triangle.add_edge(0, 2, 1);
  CHECK_THROWS_AS(print_diagram(triangle), NotExpressibleError);

  CoxeterDiagram disconnected(2);
  CHECK_THROWS_AS(print_diagram(disconnected), NotExpressibleError);

  // Degree-4 vertex is outside the grammar.
  CoxeterDiagram star4(5);
  for (int v = 1; v < 5; ++v) star4.add_edge(0, v, 1);
  CHECK_THROWS_AS(print_diagram(star4), NotExpressibleError);
}

TEST_CASE("coxeter_to_sym literal entries") {
  CHECK(coxeter_to_sym(parse_coxeter("*=*")).b(0, 1) == -QF::sqrt2());
  CHECK(coxeter_to_sym(parse_coxeter("*#*")).b(0, 1) == -QF::sqrt3());
  CHECK(coxeter_to_sym(parse_coxeter("*-*")).b(0, 1) == QF(-1));
  CHECK(coxeter_to_sym(parse_coxeter("*-*")).b(0, 0) == QF(2));
}

TEST_CASE("orientation fixes the B3 and C3 matrices") {
  CoxeterDiagram d = parse_coxeter("*=*-*");
  // Pair (2,1) in 1-based terms = (1,0): A_21 = -1, A_12 = -2 -> B3.
  CartanMatrix b3 = orient(d, {{1, 0}});
  CHECK(b3.at(0, 1) == -2);
  CHECK(b3.at(1, 0) == -1);
  // Pair (1,2) = (0,1): A_12 = -1, A_21 = -2 -> C3.
  CartanMatrix c3 = orient(d, {{0, 1}});
  CHECK(c3.at(1, 0) == -2);
  CHECK(c3.at(0, 1) == -1);
  // Simply-laced diagrams need no directions and equal their symmetrisation.
  CartanMatrix a3 = orient(a_diagram(3), {});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(QF(Rational(a3.at(i, j))) == coxeter_to_sym(a_diagram(3)).b(i, j));

  CHECK_THROWS_AS(orient(d, {}), std::invalid_argument);        // missing direction
  CHECK_THROWS_AS(orient(d, {{1, 2}}), std::invalid_argument);  // single line directed
  CoxeterDiagram triangle(3);
  triangle.add_edge(0, 1, 1);
  triangle.add_edge(1, 2, 1);
  triangle.add_edge(0, 2, 1);
  CHECK_THROWS_AS(orient(triangle, {}), std::invalid_argument);  // cycle
}

TEST_CASE("dynkin diagram of a Cartan matrix") {
  DynkinDiagram g2d = dynkin_of_cartan(g2());
  REQUIRE(g2d.graph.edges().size() == 1);
  const auto& e = g2d.graph.edges()[0];
  CHECK(e.mult == 3);
  REQUIRE(e.dir.has_value());
  CHECK(*e.dir == std::pair<int, int>{0, 1});  // A_12 = -1, A_21 = -3
  CHECK(print_diagram(g2d) == "*#>*");

  DynkinDiagram a2d = dynkin_of_cartan(a2());
  CHECK_FALSE(a2d.graph.edges()[0].dir.has_value());

  // Standard F4 with A_23 = -2, A_32 = -1 prints with the fat arrow.
  CartanMatrix f4 = orient(parse_coxeter("*-*=*-*"), {{2, 1}});
  CHECK(f4.at(1, 2) == -2);
  CHECK(f4.at(2, 1) == -1);
  CHECK(print_diagram(dynkin_of_cartan(f4)) == "*-*=>*-*");
}

TEST_CASE("dynkin text round trip through the Cartan matrix") {
  for (const char* text : {"*=>*-*", "*<=*-*", "*-*=>*-*", "*#>*", "*-*-*"}) {
    DynkinDiagram d = parse_dynkin(text);
    CartanMatrix a = cartan_of_dynkin(d);
    CHECK(print_diagram(dynkin_of_cartan(a)) == print_diagram(d));
  }
  // The anchors: "*=>*-*" must be B3 (A_12 = -2), "*<=*-*" must be C3.
  CHECK(cartan_of_dynkin(parse_dynkin("*=>*-*")).at(0, 1) == -2);
  CHECK(cartan_of_dynkin(parse_dynkin("*<=*-*")).at(1, 0) == -2);
}

TEST_CASE("orient then read back is the identity up to isomorphism") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    int l = std::uniform_int_distribution<int>(1, 9)(rng);
    CoxeterDiagram d = random_tree(rng, l);
    // Random directions on the multiple lines.
    std::vector<std::pair<int, int>> dirs;
    for (const auto& e : d.edges())
      if (e.mult >= 2) {
        if (std::uniform_int_distribution<int>(0, 1)(rng))
          dirs.emplace_back(e.u, e.v);
        else
          dirs.emplace_back(e.v, e.u);
        d.set_direction(e.u, e.v, dirs.back());
      }
    CartanMatrix a = orient(d, dirs);
    DynkinDiagram back = dynkin_of_cartan(a);
    CHECK(diagrams_isomorphic(d, back.graph, true));
    // Symmetrising the oriented matrix reproduces the diagram matrix.
    CHECK(symmetrise(a).b == d.sym_matrix());
  }
}

TEST_CASE("parse of print is the identity up to isomorphism") {
  std::mt19937 rng(47);
  int printed = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int l = std::uniform_int_distribution<int>(1, 9)(rng);
    CoxeterDiagram d = random_tree(rng, l);
    std::string text;
    try {
      text = print_diagram(d);
    } catch (const NotExpressibleError&) {
      continue;  // degree > 3 or nested shape outside the grammar
    }
    ++printed;
    CoxeterDiagram back = parse_coxeter(text);
    CHECK(diagrams_isomorphic(d, back));
  }
  CHECK(printed > 100);
}

TEST_CASE("positive definiteness is a property of the isomorphism class") {
  std::mt19937 rng(53);
  for (const auto& mults :
       {std::vector<int>{1, 2, 1}, {1, 2, 1, 1}, {3}, {1, 1, 1}}) {
    CoxeterDiagram d = chain_diagram(mults);
    bool pd = sylvester_pd(d.sym_matrix()).positive_definite;
    for (int trial = 0; trial < 10; ++trial) {
      auto p = random_permutation(rng, d.vertices());
      CoxeterDiagram shuffled = permuted_diagram(d, p);
      CHECK(sylvester_pd(shuffled.sym_matrix()).positive_definite == pd);
    }
  }
}

TEST_CASE("dot export") {
  std::string dot = to_dot(parse_coxeter("*=*-*"));
  CHECK(dot.find("graph") == 0);
  CHECK(dot.find("1 -- 2 [mult=2]") != std::string::npos);
  CHECK(dot.find("2 -- 3 [mult=1]") != std::string::npos);

  std::string ddot = to_dot(parse_dynkin("*=>*-*"));
  CHECK(ddot.find("dir=forward") != std::string::npos);
}

TEST_CASE("diagram json round trip") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 50; ++trial) {
    int l = std::uniform_int_distribution<int>(1, 8)(rng);
    CoxeterDiagram d = random_tree(rng, l);
    for (const auto& e : d.edges())
      if (e.mult >= 2) d.set_direction(e.u, e.v, {e.v, e.u});
    Json j = diagram_to_json(d);
    CoxeterDiagram back = diagram_from_json(j);
    CHECK(back.vertices() == d.vertices());
    CHECK(diagram_to_json(back) == j);
  }
}

TEST_CASE("gen diagram from a symmetrised matrix") {
  Mat<QF> b(3);
  for (int i = 0; i < 3; ++i) b(i, i) = QF(2);
  b(0, 1) = b(1, 0) = -QF::sqrt_half();
  b(1, 2) = b(2, 1) = -QF::sqrt2();
  GenCoxeterDiagram g = GenCoxeterDiagram::from_sym(b);
  CHECK(g.mult(0, 1) == Rational(1, 2));
  CHECK(g.mult(1, 2) == Rational(2));
  auto t = g.chain_from(0);
  REQUIRE(t.has_value());
  CHECK(*t == std::vector<Rational>{Rational(1, 2), Rational(2)});
  CHECK_FALSE(g.chain_from(1).has_value());  // middle of the path

  Mat<QF> bad(2);
  bad(0, 0) = bad(1, 1) = QF(2);
  bad(0, 1) = bad(1, 0) = QF(1) + QF::sqrt2();  // positive, not -sqrt(q)
  CHECK_THROWS_AS(GenCoxeterDiagram::from_sym(bad), std::domain_error);
}
