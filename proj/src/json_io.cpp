#include "cartan/json_io.hpp"

namespace cartan {

Json matrix_to_json(const CartanMatrix& a) {
  return Json{{"rank", a.rank()}, {"entries", a.rows()}};
}

std::vector<std::vector<int>> matrix_rows_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("entries"))
    throw std::invalid_argument("matrix JSON must be an object with an \"entries\" field");
  auto rows = j.at("entries").get<std::vector<std::vector<int>>>();
  if (j.contains("rank") && j.at("rank").get<int>() != static_cast<int>(rows.size()))
    throw std::invalid_argument("matrix JSON rank does not match the entry rows");
  return rows;
}

namespace {

Json qf_to_json(const QF& x) {
  auto t = x.to_tuple();
  return Json{t[0], t[1], t[2], t[3]};
}

}  // namespace

Json sym_to_json(const SymCartanMatrix& s) {
  Json entries = Json::array();
  for (int i = 0; i < s.rank(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < s.rank(); ++j) row.push_back(qf_to_json(s.b(i, j)));
    entries.push_back(std::move(row));
  }
  Json weights = Json::array();
  for (const auto& w : s.weight2) weights.push_back(cartan::to_string(w));
  return Json{{"rank", s.rank()}, {"entries", std::move(entries)}, {"weights", std::move(weights)}};
}

Json diagram_to_json(const CoxeterDiagram& d) {
  Json edges = Json::array();
  for (const auto& e : d.edges()) {
    Json je{{"u", e.u + 1}, {"v", e.v + 1}, {"m", e.mult}};
    if (e.dir)
      je["dir"] = (e.dir->first == e.u) ? "uv" : "vu";
    else
      je["dir"] = nullptr;
    edges.push_back(std::move(je));
  }
  return Json{{"vertices", d.vertices()}, {"edges", std::move(edges)}};
}

CoxeterDiagram diagram_from_json(const Json& j) {
  CoxeterDiagram d(j.at("vertices").get<int>());
  for (const auto& je : j.at("edges")) {
    int u = je.at("u").get<int>() - 1;
    int v = je.at("v").get<int>() - 1;
    d.add_edge(u, v, je.at("m").get<int>());
    if (je.contains("dir") && !je.at("dir").is_null()) {
      std::string dir = je.at("dir").get<std::string>();
      int lo = std::min(u, v), hi = std::max(u, v);
      if (dir == "uv")
        d.set_direction(lo, hi, {u, v});
      else if (dir == "vu")
        d.set_direction(lo, hi, {v, u});
      else
        throw std::invalid_argument("edge dir must be \"uv\", \"vu\" or null");
    }
  }
  return d;
}

Json minors_to_json(const MinorSequence& seq) {
  Json p = Json::array();
  for (const auto& x : seq.p) p.push_back(cartan::to_string(x));
  return p;
}

Json classification_to_json(const ClassificationResult& r, const CoxeterDiagram& input) {
  Json j{{"input", diagram_to_json(input)},
         {"verdict", r.positive_definite ? "positive_definite" : "not_positive_definite"},
         {"rank", r.rank}};
  j["family"] = r.positive_definite ? Json(r.family_label()) : Json(nullptr);
  j["minors"] = r.minors ? minors_to_json(*r.minors) : Json(nullptr);
  if (r.witness) {
    Json w{{"description", r.witness->description}};
    if (r.witness->proposition) w["proposition"] = *r.witness->proposition;
    if (!r.witness->vertices.empty()) {
      Json verts = Json::array();
      for (int v : r.witness->vertices) verts.push_back(v + 1);
      w["vertices"] = std::move(verts);
    }
    if (r.witness->minors) w["minors"] = minors_to_json(*r.witness->minors);
    if (!r.witness->null_vector.empty()) w["null_vector"] = r.witness->null_vector;
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json roots_to_json(const RootSystem& rs) {
  Json roots = Json::array();
  for (const auto& r : rs.roots) roots.push_back(r);
  Json norms = Json::array();
  for (const auto& nrm : root_norms(rs)) norms.push_back(cartan::to_string(nrm));
  return Json{{"rank", rs.rank()},
              {"count", rs.roots.size()},
              {"roots", std::move(roots)},
              {"norms", std::move(norms)}};
}

Json verify_report_to_json(const VerifyReport& rep) {
  auto check = [](const VerifyCheck& c) {
    Json j{{"pass", c.pass}};
    if (!c.pass) j["witness"] = c.witness;
    return j;
  };
  return Json{{"closure", check(rep.closure)},
              {"integrality", check(rep.integrality)},
              {"reduced", check(rep.reduced)},
              {"norm_bound", check(rep.norm_bound)},
              {"sign_consistency", check(rep.sign_consistency)},
              {"all_pass", rep.all_pass()}};
}

Json axiom_violation_to_json(const AxiomViolation& v) {
  Json j{{"axiom", v.axiom_name()}, {"message", v.message()}};
  if (v.i >= 0) j["i"] = v.i + 1;
  if (v.j >= 0) j["j"] = v.j + 1;
  return j;
}

}  // namespace cartan
