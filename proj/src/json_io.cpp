#include "orderdim/json_io.hpp"

#include <string>

#include "orderdim/rational.hpp"

namespace orderdim {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::kParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) bad(std::string("field '") + key + "' is not an array");
  return v;
}

std::size_t as_size(const Json& v, const char* what) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    bad(std::string(what) + " must be a non-negative integer");
  return v.get<std::size_t>();
}

std::vector<std::string> labels_from(const Json& j) {
  std::vector<std::string> labels;
  for (const Json& e : array_field(j, "elements")) {
    if (!e.is_string()) bad("element labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  return labels;
}

Json index_list(const std::vector<std::size_t>& v) { return Json(v); }

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

Json poset_to_json(const FinitePoset& p) {
  Json lt = Json::array();
  for (std::size_t a = 0; a < p.size(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < p.size(); ++b) row.push_back(p.less(a, b));
    lt.push_back(std::move(row));
  }
  return Json{{"elements", p.labels()}, {"lt", std::move(lt)}};
}

FinitePoset poset_from_json(const Json& j) {
  std::vector<std::string> labels = labels_from(j);
  std::vector<std::vector<bool>> lt;
  for (const Json& row : array_field(j, "lt")) {
    if (!row.is_array()) bad("lt rows must be arrays");
    std::vector<bool> r;
    for (const Json& x : row) {
      if (!x.is_boolean()) bad("lt entries must be booleans");
      r.push_back(x.get<bool>());
    }
    lt.push_back(std::move(r));
  }
  return FinitePoset::validate(std::move(labels), lt);
}

Json order_to_json(const FinitePoset& p, const LinearOrder& o) {
  Json seq = Json::array();
  for (std::size_t e : o.sequence()) seq.push_back(p.label(e));
  return seq;
}

namespace {

LinearOrder order_from_labels(const std::vector<std::string>& labels, const Json& j) {
  if (!j.is_array()) bad("an order must be an array of labels");
  std::vector<std::size_t> seq;
  for (const Json& x : j) {
    if (!x.is_string()) bad("order entries must be labels");
    const std::string l = x.get<std::string>();
    std::size_t k = 0;
    while (k < labels.size() && labels[k] != l) ++k;
    if (k == labels.size()) throw Error(ErrorKind::kElementMismatch, "unknown label in order", {l});
    seq.push_back(k);
  }
  if (seq.size() != labels.size())
    throw Error(ErrorKind::kElementMismatch, "order does not list every element once");
  return LinearOrder(std::move(seq));
}

}  // namespace

LinearOrder order_from_json(const FinitePoset& p, const Json& j) {
  return order_from_labels(p.labels(), j);
}

Json structure_to_json(const OrderedStructure& s) {
  Json j = poset_to_json(s.poset());
  Json orders = Json::array();
  for (const LinearOrder& o : s.realizers()) orders.push_back(order_to_json(s.poset(), o));
  j["realizers"] = std::move(orders);
  return j;
}

OrderedStructure structure_from_json(const Json& j) {
  std::vector<std::string> labels = labels_from(j);
  RealizerTuple orders;
  for (const Json& o : array_field(j, "realizers")) orders.push_back(order_from_labels(labels, o));
  if (!j.contains("lt")) return OrderedStructure::from_orders(std::move(labels), std::move(orders));
  return OrderedStructure(poset_from_json(j), std::move(orders));
}

Json point_to_json(const Point& p) {
  Json a = Json::array();
  for (const Rational& q : p.coords) a.push_back(format_rational(q));
  return a;
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) bad("a point must be an array of fraction strings");
  Point p;
  for (const Json& x : j) {
    if (x.is_string()) {
      p.coords.push_back(parse_rational(x.get<std::string>()));
    } else if (x.is_number_integer()) {
      p.coords.emplace_back(x.get<long>());
    } else {
      bad("coordinates must be fraction strings \"p/q\"");
    }
  }
  return p;
}

Json cloud_to_json(const PointCloud& c) {
  Json pts = Json::array();
  for (const Point& p : c.points()) pts.push_back(point_to_json(p));
  return Json{{"dim", c.dim()}, {"points", std::move(pts)}};
}

PointCloud cloud_from_json(const Json& j) {
  const std::size_t dim = as_size(field(j, "dim"), "dim");
  std::vector<Point> pts;
  for (const Json& p : array_field(j, "points")) pts.push_back(point_from_json(p));
  return PointCloud::from_points(dim, std::move(pts));
}

Json region_to_json(const Region& r) {
  Json a = Json::array();
  for (const Interval& iv : r.intervals)
    a.push_back(Json::array({iv.lo ? Json(format_rational(*iv.lo)) : Json(nullptr),
                             iv.hi ? Json(format_rational(*iv.hi)) : Json(nullptr)}));
  return a;
}

Json report_to_json(const AxiomReport& r) {
  Json defects = Json::array();
  for (const DensityDefect& d : r.density_defects) {
    Json below = Json::array(), above = Json::array();
    for (const auto& b : d.below) below.push_back(b ? Json(*b) : Json(nullptr));
    for (const auto& a : d.above) above.push_back(a ? Json(*a) : Json(nullptr));
    Json dj{{"gaps", d.gaps}, {"below", below}, {"above", above}};
    dj["region"] = d.region ? region_to_json(*d.region) : Json(nullptr);
    dj["fillable"] = d.fillable;
    defects.push_back(std::move(dj));
  }
  return Json{{"poset_ok", r.poset_ok},
              {"linears_ok", r.linears_ok},
              {"realization_ok", r.realization_ok},
              {"universal_ok", r.universal_ok()},
              {"density_defects", std::move(defects)}};
}

Json certificate_to_json(const Certificate& c) {
  Json points = Json::array();
  for (const auto& [name, p] : c.points)
    points.push_back(Json{{"name", name}, {"coords", point_to_json(p)}});
  Json counts = Json::object();
  for (const auto& [name, v] : c.counts) counts[name] = v;
  Json checks = Json::array();
  for (const auto& [name, ok] : c.checks) checks.push_back(Json{{"claim", name}, {"holds", ok}});
  return Json{{"kind", std::string(to_string(c.kind))},
              {"n", c.n},
              {"points", std::move(points)},
              {"counts", std::move(counts)},
              {"checks", std::move(checks)},
              {"verdict", c.verdict}};
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) bad("kind must be a string");
  bool known = false;
  for (CertificateKind k : {CertificateKind::kAPFailure, CertificateKind::kNotUltrahomogeneous,
                            CertificateKind::kQnLexNotUltrahomogeneous,
                            CertificateKind::kTwoHomogeneityExtension})
    if (to_string(k) == kind.get<std::string>()) c.kind = k, known = true;
  if (!known) bad("unknown certificate kind '" + kind.get<std::string>() + "'");
  c.n = as_size(field(j, "n"), "n");
  for (const Json& p : array_field(j, "points"))
    c.points.emplace_back(field(p, "name").get<std::string>(), point_from_json(field(p, "coords")));
  const Json& counts = field(j, "counts");
  if (!counts.is_object()) bad("counts must be an object");
  for (const auto& [name, v] : counts.items()) {
    if (!v.is_number_integer()) bad("counts must be integers");
    c.counts[name] = v.get<long long>();
  }
  for (const Json& ch : array_field(j, "checks"))
    c.checks.emplace_back(field(ch, "claim").get<std::string>(), field(ch, "holds").get<bool>());
  const Json& verdict = field(j, "verdict");
  if (!verdict.is_boolean()) bad("verdict must be a boolean");
  c.verdict = verdict.get<bool>();
  return c;
}

Json decomposition_to_json(const DecompositionReport& r) {
  Json facts = Json::array();
  for (const Factorization& f : r.factorizations)
    facts.push_back(Json{{"g", index_list(f.g)}, {"sigma", index_list(f.sigma)}, {"h", index_list(f.h)}});
  Json fails = Json::array();
  for (const auto& g : r.failures) fails.push_back(index_list(g));
  return Json{{"group_order", r.group_order},
              {"order_preserving", r.order_preserving},
              {"coordinate_symmetries", r.coordinate_symmetries},
              {"factorizations", std::move(facts)},
              {"failures", std::move(fails)},
              {"unique", r.unique},
              {"order_law", r.order_law ? Json(*r.order_law) : Json(nullptr)}};
}

}  // namespace orderdim
