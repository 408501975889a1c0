#include "degflag/serialize.hpp"

#include <string>

namespace degflag {

Json to_json(const BigInt& x) { return to_decimal(x); }

Json to_json(const Triangle& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_decimal(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json to_json(const QPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_decimal(c));
  return Json{{"coeffs", coeffs}};
}

Json to_json(const DellacConfig& d) {
  Json boxes = Json::array();
  for (const auto& b : d.boxes()) boxes.push_back({b.col, b.row});
  return Json{{"n", d.n()}, {"boxes", boxes}};
}

Json to_json(const FixedPointTuple& t) {
  return Json{{"n", t.n}, {"dims", t.dims}, {"subsets", t.subsets}};
}

Json to_json(const DumontPermutation& p) { return p.values(); }

Json to_json(const Subspace& v) {
  return Json{{"p", v.field().p()}, {"n", v.n()}, {"d", v.dim()}, {"rows", v.rows()}};
}

Json to_json(const std::vector<CellCount>& cells) {
  Json out = Json::array();
  for (const auto& c : cells) {
    Json entry{{"tuple", c.tuple.subsets}};
    entry["dellac_length"] = c.dellac_length ? Json(*c.dellac_length) : Json(nullptr);
    entry["count"] = to_decimal(c.count);
    out.push_back(std::move(entry));
  }
  return out;
}

Json to_json(const PlueckerRelation& r) {
  Json terms = Json::array();
  for (const auto& t : r.terms) terms.push_back({{"sign", t.sign}, {"L", t.L}, {"J", t.J}});
  return Json{{"k", r.k},
              {"L", r.L},
              {"J", r.J},
              {"kind", r.kind == RelationKind::classical ? "classical" : "degenerate"},
              {"terms", terms}};
}

Json to_json(const CutoutReport& r) {
  return Json{{"product_points", r.product_points},
              {"points_by_chain", r.points_by_chain},
              {"points_by_relations", r.points_by_relations},
              {"relations", r.relations},
              {"mismatches", r.mismatches},
              {"equal", r.equal}};
}

Json to_json(const ValidationReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"constraint", x.constraint}, {"detail", x.detail}});
  return Json{{"ok", r.ok()}, {"violations", v}};
}

namespace {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw StructuralError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw StructuralError(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

DellacConfig dellac_from_json(const Json& j) {
  int n = field<int>(j, "n");
  std::vector<Box> boxes;
  for (const auto& pair : field<std::vector<std::vector<int>>>(j, "boxes")) {
    if (pair.size() != 2) throw StructuralError("a box is a [column, row] pair");
    boxes.push_back({pair[0], pair[1]});
  }
  return DellacConfig::from_boxes(n, boxes);
}

FixedPointTuple tuple_from_json(const Json& j) {
  FixedPointTuple t{field<int>(j, "n"), field<std::vector<int>>(j, "dims"),
                    field<std::vector<std::vector<int>>>(j, "subsets")};
  auto report = validate_tuple(t);
  if (!report.ok()) throw InvalidArgument(report.summary());
  return t;
}

DumontPermutation dumont_from_json(int n, const Json& j) {
  std::vector<int> values;
  try {
    values = j.get<std::vector<int>>();
  } catch (const nlohmann::json::exception&) {
    throw StructuralError("a permutation is a list of integers");
  }
  return DumontPermutation(n, std::move(values));
}

}  // namespace degflag
