#ifndef G2K_TOOLS_JSON_IO_HPP
#define G2K_TOOLS_JSON_IO_HPP

// JSON encodings of curves, points, cubics, divisors and reports. Field elements are
// strings: decimal residues for F_p, "n" or "n/d" for Q.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "g2k/covering.hpp"
#include "g2k/curve.hpp"
#include "g2k/interpolation.hpp"
#include "g2k/jacobian.hpp"
#include "g2k/multipoly.hpp"

namespace g2k::io {

using json = nlohmann::ordered_json;

inline const char* kSchema = "1";

inline json report() { return json{{"schema", kSchema}}; }

template <FieldDescriptor F>
json elem(const elem_t<F>& a) {
  return to_string(a);
}

template <FieldDescriptor F>
elem_t<F> parse_elem(const F& K, const json& j) {
  if (j.is_string()) return K.parse(j.get<std::string>());
  if (j.is_number_integer()) return K.parse(std::to_string(j.get<long long>()));
  fail(ErrorCode::ParseError, "expected a field element, got " + j.dump());
}

inline json field_json(const RationalField&) { return json{{"type", "Q"}}; }
inline json field_json(const PrimeField& K) { return json{{"type", "Fp"}, {"p", std::to_string(K.p)}}; }

template <FieldDescriptor F>
json curve_json(const CurveGenus2<F>& C) {
  json lam = json::array();
  for (const auto& l : C.lambdas()) lam.push_back(elem<F>(l));
  return json{{"field", field_json(C.field())}, {"lambda", lam}};
}

template <FieldDescriptor F>
json point_json(const PointP113<F>& P) {
  return json{{"x", elem<F>(P.x())}, {"y", elem<F>(P.y())}, {"z", elem<F>(P.z())}};
}

/// {"x":..,"y":..,"z":..} or [x, y, z]; must lie on C.
template <FieldDescriptor F>
PointP113<F> parse_point(const CurveGenus2<F>& C, const json& j) {
  const F& K = C.field();
  PointP113<F> P = [&] {
    if (j.is_object() && j.contains("x") && j.contains("y") && j.contains("z"))
      return C.point(parse_elem(K, j["x"]), parse_elem(K, j["y"]), parse_elem(K, j["z"]));
    if (j.is_array() && j.size() == 3) return C.point(parse_elem(K, j[0]), parse_elem(K, j[1]), parse_elem(K, j[2]));
    fail(ErrorCode::ParseError, "expected a point {x, y, z}, got " + j.dump());
  }();
  C.require_on_curve(P);
  return P;
}

template <FieldDescriptor F>
json cubic_json(const CubicForm<F>& g) {
  json a = json::array();
  for (const auto& c : g.alpha()) a.push_back(elem<F>(c));
  return json{{"alpha", a}};
}

template <FieldDescriptor F>
CubicForm<F> parse_cubic(const F& K, const json& j) {
  const json& a = j.is_object() && j.contains("alpha") ? j["alpha"] : j;
  if (!a.is_array() || a.size() != 5) fail(ErrorCode::ParseError, "a cubic needs five coefficients alpha0..alpha4");
  std::array<elem_t<F>, 5> v{parse_elem(K, a[0]), parse_elem(K, a[1]), parse_elem(K, a[2]), parse_elem(K, a[3]), parse_elem(K, a[4])};
  return CubicForm<F>(v);
}

template <FieldDescriptor F>
json weighted_json(const WeightedPoints<F>& w) {
  json out = json::array();
  for (const auto& [p, m] : w.items()) out.push_back(json{{"point", point_json(p)}, {"mult", m}});
  return out;
}

/// A list whose entries are points or {"point":.., "mult":..}.
template <FieldDescriptor F>
WeightedPoints<F> parse_points(const CurveGenus2<F>& C, const json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "expected a list of points");
  WeightedPoints<F> w;
  for (const auto& e : j) {
    if (e.is_object() && e.contains("point")) {
      const long m = e.value("mult", 1L);
      if (m < 1) fail(ErrorCode::ParseError, "multiplicity must be positive");
      w.add(parse_point(C, e["point"]), static_cast<unsigned>(m));
    } else {
      w.add(parse_point(C, e));
    }
  }
  return w;
}

template <FieldDescriptor F>
json divisor_json(const DivisorClass<F>& D) {
  static const char* names[] = {"zero", "one", "two"};
  json pts = json::array();
  for (const auto& p : D.points()) pts.push_back(point_json(p));
  return json{{"type", names[static_cast<int>(D.kind())]}, {"points", pts}};
}

/// {"points":[...]} with at most two points, or the bare list.
template <FieldDescriptor F>
DivisorClass<F> parse_divisor(const CurveGenus2<F>& C, const json& j) {
  const json& pts = j.is_object() && j.contains("points") ? j["points"] : j;
  if (!pts.is_array() || pts.size() > 2) fail(ErrorCode::ParseError, "a reduced divisor has at most two points");
  if (pts.empty()) return DivisorClass<F>::zero();
  if (pts.size() == 1) return from_point(C, parse_point(C, pts[0]));
  return from_points(C, parse_point(C, pts[0]), parse_point(C, pts[1]));
}

template <FieldDescriptor F>
json unipoly_json(const UniPoly<F>& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(elem<F>(c));
  return out;
}

template <FieldDescriptor F>
json mumford_json(const MumfordRep<F>& M) {
  return json{{"u", unipoly_json(M.u)}, {"v", unipoly_json(M.v)}};
}

template <FieldDescriptor F>
json pairing_json(const TriplePairing<F>& t) {
  json out = json::array();
  for (const auto& [p, q] : t.pairs()) out.push_back(json{{"p", point_json(p)}, {"q", point_json(q)}});
  return out;
}

/// [[exponents], coefficient] per term, terms in increasing exponent order.
template <FieldDescriptor F>
json poly_json(const MultiPoly<F>& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(json::array({json(e), elem<F>(c)}));
  return out;
}

/// The parts of a curve description; the field is resolved by the caller.
struct CurveSpec {
  std::optional<std::string> field;
  std::vector<std::string> lambda;
};

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// Parses JSON text, reading it from a file first when `text` names one.
inline json load_json(const std::string& text) {
  std::string body = text;
  if (!text.empty() && text.front() != '{' && text.front() != '[') body = slurp(text);
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, std::string("bad JSON: ") + e.what());
  }
}

inline std::string field_from_json(const json& f) {
  if (!f.is_object() || !f.contains("type")) fail(ErrorCode::ParseError, "field must be {\"type\": ...}");
  const auto t = f["type"].get<std::string>();
  if (t == "Q") return "Q";
  if (t == "Fp") {
    if (!f.contains("p")) fail(ErrorCode::ParseError, "Fp needs \"p\"");
    return f["p"].is_string() ? f["p"].get<std::string>() : std::to_string(f["p"].get<long long>());
  }
  fail(ErrorCode::ParseError, "unknown field type " + t);
}

/// Curve JSON (inline or a file), or an inline list such as "2,3,5" or "lambda=(2,3,5)".
inline CurveSpec parse_curve_spec(const std::string& s) {
  CurveSpec spec;
  std::string t = s;
  for (const std::string prefix : {"lambda=", "\xCE\xBB="})
    if (t.rfind(prefix, 0) == 0) t = t.substr(prefix.size());
  const bool looks_inline = !t.empty() && (std::isdigit(static_cast<unsigned char>(t[0])) || t[0] == '(' || t[0] == '-');
  if (looks_inline) {
    std::string cleaned;
    for (char c : t)
      if (c != '(' && c != ')' && c != ' ') cleaned += c;
    std::stringstream ss(cleaned);
    std::string item;
    while (std::getline(ss, item, ',')) spec.lambda.push_back(item);
  } else {
    auto j = load_json(t);
    if (j.contains("field")) spec.field = field_from_json(j["field"]);
    if (!j.contains("lambda") || !j["lambda"].is_array()) fail(ErrorCode::ParseError, "curve JSON needs \"lambda\"");
    for (const auto& l : j["lambda"]) spec.lambda.push_back(l.is_string() ? l.get<std::string>() : l.dump());
  }
  if (spec.lambda.size() != 3) fail(ErrorCode::ParseError, "a curve needs exactly three lambdas");
  return spec;
}

template <FieldDescriptor F>
CurveGenus2<F> build_curve(const F& K, const CurveSpec& spec) {
  return CurveGenus2<F>(K, K.parse(spec.lambda[0]), K.parse(spec.lambda[1]), K.parse(spec.lambda[2]));
}

}  // namespace g2k::io

#endif  // G2K_TOOLS_JSON_IO_HPP
