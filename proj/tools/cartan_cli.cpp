// Command-line surface: validate, symmetrise, classify, minors, enumerate,
// roots, export-dot.  JSON on stdout (one object per line for enumerate),
// error JSON on stderr.  Exit codes: 0 success, 1 usage or parse error,
// 2 domain error (axiom violation, not symmetrisable, guard tripped).
// OMP_NUM_THREADS controls internal parallelism; output is byte-stable
// regardless.

#include "cartan/classify.hpp"
#include "cartan/enumerate.hpp"
#include "cartan/json_io.hpp"
#include "cartan/notation.hpp"
#include "cartan/roots.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace cartan;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

CartanMatrix matrix_from_file(const std::string& path) {
  return CartanMatrix::validated(matrix_rows_from_json(read_json_file(path)));
}

// "i>j[,i>j...]", 1-based; "i>j" orients the line so that A_ij = -m (the
// same convention as the text arrow "i=>j").
std::vector<std::pair<int, int>> parse_orient_spec(const std::string& spec) {
  std::vector<std::pair<int, int>> dirs;
  size_t pos = 0;
  while (pos < spec.size()) {
    size_t comma = spec.find(',', pos);
    std::string item = spec.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
    size_t gt = item.find('>');
    if (gt == std::string::npos || gt == 0 || gt + 1 >= item.size())
      throw std::invalid_argument("bad --orient item: " + item);
    int i = std::stoi(item.substr(0, gt));
    int j = std::stoi(item.substr(gt + 1));
    if (i < 1 || j < 1) throw std::invalid_argument("--orient vertices are 1-based");
    // A_ij = -m, A_ji = -1  =>  ordered pair (p,q) = (j,i).
    dirs.emplace_back(j - 1, i - 1);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return dirs;
}

int run_validate(const std::string& matrix_file) {
  Json j = read_json_file(matrix_file);
  auto rows = matrix_rows_from_json(j);
  if (auto violation = check_cartan(rows)) {
    std::cerr << Json{{"error", axiom_violation_to_json(*violation)}} << "\n";
    return 2;
  }
  CartanMatrix a = CartanMatrix::validated(rows);
  Json parts = Json::array();
  for (const auto& block : components(a)) {
    Json b = Json::array();
    for (int v : block) b.push_back(v + 1);
    parts.push_back(std::move(b));
  }
  std::cout << Json{{"valid", true}, {"rank", a.rank()}, {"components", std::move(parts)}} << "\n";
  return 0;
}

int run_symmetrise(const std::string& matrix_file) {
  CartanMatrix a = matrix_from_file(matrix_file);
  SymCartanMatrix s = symmetrise(a);
  std::cout << sym_to_json(s) << "\n";
  return 0;
}

CoxeterDiagram diagram_input(const std::string& text, const std::string& matrix_file) {
  if (!text.empty()) return parse_coxeter(text);
  return coxeter_of_cartan(matrix_from_file(matrix_file));
}

int run_classify(const std::string& text, const std::string& matrix_file) {
  CoxeterDiagram d = diagram_input(text, matrix_file);
  ClassificationResult r = classify_connected(d);
  std::cout << classification_to_json(r, d) << "\n";
  return 0;
}

int run_minors(const std::string& text) {
  CoxeterDiagram d = parse_coxeter(text);
  // Multiplicities read off the chain in the diagram's own vertex order.
  std::vector<Rational> t;
  for (int v = 0; v + 1 < d.vertices(); ++v) {
    int m = d.mult(v, v + 1);
    if (m == 0) throw std::invalid_argument("diagram is not a chain in vertex order");
    t.emplace_back(m);
  }
  if (static_cast<int>(d.edges().size()) != d.vertices() - 1)
    throw std::invalid_argument("diagram is not a chain in vertex order");
  MinorSequence seq = minor_sequence(t);
  Json j{{"p", minors_to_json(seq)}};
  j["first_nonpositive"] = seq.first_nonpositive ? Json(*seq.first_nonpositive) : Json(nullptr);
  std::cout << j << "\n";
  return 0;
}

int run_enumerate(int max_rank, bool cycles) {
  auto diagrams = enumerate_connected(max_rank, cycles);
  std::vector<ClassificationResult> results(diagrams.size());
  const auto n = static_cast<long long>(diagrams.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
  for (long long i = 0; i < n; ++i) results[i] = classify_connected(diagrams[i]);

  int pd = 0;
  std::map<std::string, std::set<int>> by_family;
  for (long long i = 0; i < n; ++i) {
    std::cout << classification_to_json(results[i], diagrams[i]) << "\n";
    if (!results[i].positive_definite) continue;
    ++pd;
    std::string key;
    switch (*results[i].family) {
      case Family::A: key = "A"; break;
      case Family::BC: key = "B/C"; break;
      case Family::D: key = "D"; break;
      case Family::E: key = "E"; break;
      case Family::F: key = "F"; break;
      case Family::G: key = "G"; break;
    }
    by_family[key].insert(results[i].rank);
  }
  Json fam = Json::object();
  for (const auto& [key, ranks] : by_family) fam[key] = std::vector<int>(ranks.begin(), ranks.end());
  std::cout << Json{{"summary",
                     {{"total", diagrams.size()},
                      {"positive_definite", pd},
                      {"families", std::move(fam)}}}}
            << "\n";
  return 0;
}

int run_roots(const std::string& text, const std::string& matrix_file, const std::string& orient_spec,
              int guard) {
  CartanMatrix a = [&] {
    if (!text.empty()) {
      CoxeterDiagram d = parse_coxeter(text);
      return orient(d, parse_orient_spec(orient_spec));
    }
    return matrix_from_file(matrix_file);
  }();
  RootGenOptions opts;
  opts.guard = guard;
  RootSystem rs = generate_roots(a, opts);
  VerifyReport rep = verify_root_system(rs);
  std::cout << Json{{"roots", roots_to_json(rs)}, {"verification", verify_report_to_json(rep)}}
            << "\n";
  return 0;
}

int run_export_dot(const std::string& text, const std::string& matrix_file) {
  if (!text.empty()) {
    if (has_directed_tokens(text))
      std::cout << to_dot(parse_dynkin(text));
    else
      std::cout << to_dot(parse_coxeter(text));
    return 0;
  }
  std::cout << to_dot(dynkin_of_cartan(matrix_from_file(matrix_file)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cartan matrix and Coxeter/Dynkin diagram classifier"};
  app.require_subcommand(1);

  std::string matrix_file, diagram_text, orient_spec;
  int max_rank = 9, guard = 30;
  bool cycles = false;

  auto* validate = app.add_subcommand("validate", "check the Cartan matrix axioms");
  validate->add_option("--matrix", matrix_file, "matrix JSON file")->required();

  auto* symmetrise_cmd = app.add_subcommand("symmetrise", "symmetrised Cartan matrix and weights");
  symmetrise_cmd->add_option("--matrix", matrix_file, "matrix JSON file")->required();

  auto* classify = app.add_subcommand("classify", "positive definiteness of a connected diagram");
  classify->add_option("--diagram", diagram_text, "inline diagram text");
  classify->add_option("--matrix", matrix_file, "matrix JSON file");

  auto* minors = app.add_subcommand("minors", "leading principal minors of a chain diagram");
  minors->add_option("--diagram", diagram_text, "inline chain text")->required();

  auto* enumerate = app.add_subcommand("enumerate", "classify all diagrams up to a rank");
  enumerate->add_option("--max-rank", max_rank, "largest rank to enumerate")->required();
  enumerate->add_flag("--cycles", cycles, "include one-cycle diagrams");

  auto* roots = app.add_subcommand("roots", "generate the root system by reflection closure");
  roots->add_option("--diagram", diagram_text, "inline diagram text");
  roots->add_option("--matrix", matrix_file, "matrix JSON file");
  roots->add_option("--orient", orient_spec, "directions i>j per multiple line (A_ij = -m)");
  roots->add_option("--guard", guard, "coefficient bound (default 30)");

  auto* export_dot = app.add_subcommand("export-dot", "DOT text for a diagram or matrix");
  export_dot->add_option("--diagram", diagram_text, "inline diagram text");
  export_dot->add_option("--matrix", matrix_file, "matrix JSON file");

  CLI11_PARSE(app, argc, argv);

  auto need_one_input = [&](CLI::App* cmd) {
    if (diagram_text.empty() == matrix_file.empty()) {
      std::cerr << Json{{"error", {{"message", "provide exactly one of --diagram / --matrix"}}}}
                << "\n";
      std::exit(1);
    }
    (void)cmd;
  };

  try {
    if (validate->parsed()) return run_validate(matrix_file);
    if (symmetrise_cmd->parsed()) return run_symmetrise(matrix_file);
    if (classify->parsed()) {
      need_one_input(classify);
      return run_classify(diagram_text, matrix_file);
    }
    if (minors->parsed()) return run_minors(diagram_text);
    if (enumerate->parsed()) return run_enumerate(max_rank, cycles);
    if (roots->parsed()) {
      need_one_input(roots);
      return run_roots(diagram_text, matrix_file, orient_spec, guard);
    }
    if (export_dot->parsed()) {
      need_one_input(export_dot);
      return run_export_dot(diagram_text, matrix_file);
    }
  } catch (const CartanAxiomError& e) {
    std::cerr << Json{{"error", axiom_violation_to_json(e.violation())}} << "\n";
    return 2;
  } catch (const NotSymmetrisableError& e) {
    Json cycle = Json::array();
    for (int v : e.cycle()) cycle.push_back(v + 1);
    std::cerr << Json{{"error",
                       {{"kind", "not_symmetrisable"},
                        {"message", e.what()},
                        {"cycle", std::move(cycle)},
                        {"ratio", cartan::to_string(e.ratio())}}}}
              << "\n";
    return 2;
  } catch (const NotFiniteWithinGuardError& e) {
    std::cerr << Json{{"error",
                       {{"kind", "not_finite_within_guard"},
                        {"message", e.what()},
                        {"trigger", e.trigger() == NotFiniteWithinGuardError::Trigger::coefficient_bound
                                        ? "coefficient_bound"
                                        : "set_size"},
                        {"witness", e.witness()}}}}
              << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << Json{{"error", {{"kind", "parse"}, {"message", e.what()}}}} << "\n";
    return 1;
  } catch (const NotExpressibleError& e) {
    std::cerr << Json{{"error", {{"kind", "not_expressible"}, {"message", e.what()}}}} << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", {{"message", e.what()}}}} << "\n";
    return 1;
  }
  return 1;
}
