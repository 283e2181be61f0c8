// JSON surfaces.  Vertex and matrix indices are 1-based externally.
//
//   matrix:         {"rank": l, "entries": [[int,...],...]}
//   symmetrised:    {"rank": l, "entries": [[[a,b,c,d],...],...],
//                    "weights": ["1","1/2",...]}   (QF values as 4-tuples
//                    of rational strings)
//   diagram:        {"vertices": l,
//                    "edges": [{"u":i,"v":j,"m":m,"dir":"uv"|"vu"|null}]}
//                   ("dir":"uv" is the pair (u,v): A_uv = -1, A_vu = -m)
//   classification: {"input":..., "verdict":..., "family":..., "rank":...,
//                    "witness":..., "minors":[...]}
//   roots:          {"rank": l, "count": n, "roots": [[k...],...],
//                    "norms": [...]}, lexicographically sorted
#pragma once

#include "cartan/cartan_matrix.hpp"
#include "cartan/classify.hpp"
#include "cartan/diagram.hpp"
#include "cartan/roots.hpp"
#include "cartan/symmetrise.hpp"

#include <json.hpp>

namespace cartan {

using Json = nlohmann::json;

Json matrix_to_json(const CartanMatrix& a);
std::vector<std::vector<int>> matrix_rows_from_json(const Json& j);

Json sym_to_json(const SymCartanMatrix& s);

Json diagram_to_json(const CoxeterDiagram& d);
CoxeterDiagram diagram_from_json(const Json& j);

Json minors_to_json(const MinorSequence& seq);
Json classification_to_json(const ClassificationResult& r, const CoxeterDiagram& input);

Json roots_to_json(const RootSystem& rs);
Json verify_report_to_json(const VerifyReport& rep);

Json axiom_violation_to_json(const AxiomViolation& v);

}  // namespace cartan
