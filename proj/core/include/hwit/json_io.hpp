#pragma once

#include <hwit/grid.hpp>
#include <hwit/group_coh.hpp>

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace hwit {

// Insertion-ordered so identical computations serialize byte-identically.
using Json = nlohmann::ordered_json;

// ---- Parsing. All throw ParseError on malformed input. ----

// A rational entry: "2", "-1/3", or an integral JSON number. Floats are
// rejected to keep every computation exact.
Rat json_to_rat(const nlohmann::json& j);

// ["2","6"] — diagonal form entries.
DiagonalForm parse_diagonal(const nlohmann::json& j);

// "2,6" — the CSV shorthand used by CLI flags.
std::vector<Rat> parse_rat_csv(const std::string& text);

// [["0","1"],["1","0"]] — Gram matrix rows.
QuadraticForm parse_gram(const nlohmann::json& j);

// { "radicands": [3], "form": ["1","1"],
//   "values": { "<galois mask>": [[row],[row]], ... } }
// Matrix entries are rational scalars or subset-coefficient maps
// {"0":"1","1":"1/2"} keyed by field subset mask. The identity mask "0"
// may be omitted; every other mask is required.
OrthCocycle parse_cocycle(const nlohmann::json& j);

// { "table": [[0,1],[1,0]] } — multiplication table over indices, identity
// first.
Group parse_group(const nlohmann::json& j);

// ---- Rendering ----

Json to_json(const Rat& r);                 // "2", "-1/3"
Json to_json(const DiagonalForm& d);        // ["2","6"]
Json to_json(const Mat<Rat>& m);            // rows of rational strings
Json to_json(const FieldElement& x);        // subset-coefficient map
Json to_json(const Mat<FieldElement>& m);
Json to_json(const SquareClass& c);         // rendered: "⟨3⟩"
Json to_json(const BrauerClass& b);         // rendered: "{2,3}"
Json to_json(const LocalData& data);
Json to_json(const Cor62Report& rep);
Json to_json(const GridReport& rep);

}  // namespace hwit
