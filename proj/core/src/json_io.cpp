#include <hwit/json_io.hpp>

#include <hwit/errors.hpp>

#include <cstdint>
#include <string>

namespace hwit {

namespace {

unsigned parse_mask_key(const std::string& key, std::size_t bound, const char* what) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(key, &pos);
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + " key '" + key + "' is not a bitmask");
  }
  if (pos != key.size() || v >= bound)
    throw ParseError(std::string(what) + " key '" + key + "' is out of range");
  return static_cast<unsigned>(v);
}

FieldElement parse_field_element(const nlohmann::json& j, const MQField& field) {
  if (!j.is_object()) return FieldElement(field, json_to_rat(j));
  FieldElement x(field, Rat(0));
  for (const auto& [key, value] : j.items()) {
    const unsigned sub = parse_mask_key(key, field->dim(), "field subset");
    x = x + FieldElement::monomial(field, sub, json_to_rat(value));
  }
  return x;
}

Json tally_json(const GridTally& t) {
  Json j;
  j["cells"] = t.cells;
  j["identity_i"] = t.identity_i;
  j["identity_ii"] = t.identity_ii;
  j["two_route"] = t.two_route;
  j["bridge"] = t.bridge;
  return j;
}

}  // namespace

Rat json_to_rat(const nlohmann::json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rat(Int(j.get<std::uint64_t>()));
    return Rat(Int(j.get<std::int64_t>()));
  }
  throw ParseError("expected a rational string or integer, got " + j.dump());
}

DiagonalForm parse_diagonal(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("diagonal form needs a nonempty array");
  std::vector<Rat> entries;
  entries.reserve(j.size());
  for (const auto& e : j) entries.push_back(json_to_rat(e));
  for (const Rat& e : entries)
    if (e == 0) throw SingularFormError("diagonal entry 0 makes the form singular");
  return DiagonalForm(std::move(entries));
}

std::vector<Rat> parse_rat_csv(const std::string& text) {
  std::vector<Rat> out;
  std::size_t start = 0;
  if (text.empty()) throw ParseError("empty rational list");
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string piece =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_rat(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

QuadraticForm parse_gram(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("Gram matrix needs a nonempty array of rows");
  const std::size_t n = j.size();
  Mat<Rat> gram(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n)
      throw ParseError("Gram matrix row " + std::to_string(r) + " is not length " +
                       std::to_string(n));
    for (std::size_t c = 0; c < n; ++c) gram(r, c) = json_to_rat(j[r][c]);
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c)
      if (gram(r, c) != gram(c, r)) throw ParseError("Gram matrix is not symmetric");
  return QuadraticForm(std::move(gram));
}

OrthCocycle parse_cocycle(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("cocycle JSON must be an object");
  if (!j.contains("radicands") || !j["radicands"].is_array() || j["radicands"].empty())
    throw ParseError("cocycle needs a nonempty 'radicands' array");
  if (!j.contains("form")) throw ParseError("cocycle needs a 'form' array");

  std::vector<Int> radicands;
  for (const auto& r : j["radicands"]) {
    const Rat v = json_to_rat(r);
    if (den(v) != 1) throw ParseError("radicands must be integers");
    radicands.push_back(num(v));
  }
  MQField field;
  try {
    field = MultiQuadField::create(radicands);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad radicands: ") + e.what());
  }

  const DiagonalForm form = parse_diagonal(j["form"]);
  const std::size_t n = form.rank();

  if (!j.contains("values") || !j["values"].is_object())
    throw ParseError("cocycle needs a 'values' object keyed by Galois mask");

  Mat<FieldElement> ident(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) ident(r, c) = FieldElement(field, Rat(r == c ? 1 : 0));
  std::vector<Mat<FieldElement>> values(field->dim(), ident);
  std::vector<bool> given(field->dim(), false);
  given[0] = true;

  for (const auto& [key, rows] : j["values"].items()) {
    const unsigned mask = parse_mask_key(key, field->dim(), "Galois mask");
    if (!rows.is_array() || rows.size() != n)
      throw ParseError("cocycle value '" + key + "' is not an " + std::to_string(n) + "-row matrix");
    Mat<FieldElement> m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      if (!rows[r].is_array() || rows[r].size() != n)
        throw ParseError("cocycle value '" + key + "' row " + std::to_string(r) +
                         " is not length " + std::to_string(n));
      for (std::size_t c = 0; c < n; ++c) m(r, c) = parse_field_element(rows[r][c], field);
    }
    values[mask] = std::move(m);
    given[mask] = true;
  }
  for (unsigned g = 0; g < field->dim(); ++g)
    if (!given[g]) throw ParseError("cocycle value for mask " + std::to_string(g) + " missing");

  try {
    return OrthCocycle(field, form, std::move(values));
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid cocycle: ") + e.what());
  }
}

Group parse_group(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("table") || !j["table"].is_array())
    throw ParseError("group JSON must be an object with a 'table' array");
  const auto& t = j["table"];
  std::vector<std::vector<unsigned>> table(t.size());
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (!t[r].is_array() || t[r].size() != t.size())
      throw ParseError("group table is not square");
    for (const auto& e : t[r]) {
      if (!e.is_number_unsigned() || e.get<std::uint64_t>() >= t.size())
        throw ParseError("group table entry out of range");
      table[r].push_back(e.get<unsigned>());
    }
  }
  try {
    return FiniteGroup::from_table(std::move(table));
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid group table: ") + e.what());
  }
}

Json to_json(const Rat& r) { return to_string(r); }

Json to_json(const DiagonalForm& d) {
  Json j = Json::array();
  for (const Rat& e : d.entries()) j.push_back(to_string(e));
  return j;
}

Json to_json(const Mat<Rat>& m) {
  Json j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    j.push_back(std::move(row));
  }
  return j;
}

Json to_json(const FieldElement& x) {
  Json j = Json::object();
  for (unsigned sub = 0; sub < x.field()->dim(); ++sub)
    if (x.coeff(sub) != 0) j[std::to_string(sub)] = to_string(x.coeff(sub));
  return j;
}

Json to_json(const Mat<FieldElement>& m) {
  Json j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    j.push_back(std::move(row));
  }
  return j;
}

Json to_json(const SquareClass& c) { return c.str(); }

Json to_json(const BrauerClass& b) { return b.str(); }

Json to_json(const LocalData& data) {
  Json j;
  j["rank"] = data.rank;
  j["det"] = data.det_class.str();
  j["signature"] = Json::array({data.signature.first, data.signature.second});
  Json hasse = Json::object();
  for (const auto& [place, sign] : data.hasse_signs) hasse[place.str()] = sign;
  j["hasse"] = std::move(hasse);
  return j;
}

Json to_json(const Cor62Report& rep) {
  Json j;
  j["twisted_gram"] = to_json(rep.twisted.gram());
  j["twisted_diagonal"] =
      to_json(diagonalize(rep.twisted, PivotStrategy::kFirstNonzeroDiagonal).diag);
  j["descent_basis"] = to_json(rep.descent_basis);
  j["w1_base"] = rep.w1_base.str();
  j["w1_twisted"] = rep.w1_twisted.str();
  j["delta1"] = rep.d1.str();
  j["w2_base"] = rep.w2_base.str();
  j["w2_twisted"] = rep.w2_twisted.str();
  j["delta2"] = rep.d2.str();
  j["identity_i"] = rep.identity_i;
  j["identity_ii"] = rep.identity_ii;
  j["invariant_route_delta2"] = rep.invariant_route_d2.str();
  j["two_route_match"] = rep.two_route_match;
  return j;
}

Json to_json(const GridReport& rep) {
  Json j;
  j["forms"] = rep.forms;
  j["total"] = tally_json(rep.total);
  Json by_twist = Json::array();
  for (const auto& [d, tally] : rep.by_twist) {
    Json row;
    row["twist"] = d;
    row.update(tally_json(tally));
    by_twist.push_back(std::move(row));
  }
  j["by_twist"] = std::move(by_twist);
  j["robustness_cells"] = rep.robustness_cells;
  j["robustness_pass"] = rep.robustness_pass;
  j["failure_count"] = rep.failure_count;
  Json failures = Json::array();
  for (const GridFailure& f : rep.failures) {
    Json row;
    row["form"] = to_json(f.form);
    row["twist"] = f.twist;
    row["isometry"] = to_json(f.isometry);
    row["what"] = f.what;
    row["report"] = to_json(f.report);
    failures.push_back(std::move(row));
  }
  j["failures"] = std::move(failures);
  j["all_pass"] = rep.all_pass();
  return j;
}

}  // namespace hwit