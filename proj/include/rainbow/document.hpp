#pragma once
// JSON documents: colorings, certificates, equation lists and integer sets.
//
// Coloring document:
//   { "n": 4, "k": 6, "scheme": "c1" | "c2" | "explicit",
//     "params": { "S": [...], "M": 9 } | { "S": [...], "N": 5, "eps": "1" } | {},
//     "edges": [ { "b": "<hex bottom mask>", "dir": <1-based>, "color": [d, p] }, ... ] }
// Edges are written bottom-ascending then direction-ascending and must cover Q_n exactly once.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/equations.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/hypercube.hpp"
#include "rainbow/verifier.hpp"

namespace rainbow {

using Json = nlohmann::json;

inline std::string to_hex(Mask m) {
  std::ostringstream os;
  os << std::hex << m;
  return os.str();
}

inline Mask parse_hex_mask(const std::string& text) {
  std::string digits = text;
  if (digits.rfind("0x", 0) == 0 || digits.rfind("0X", 0) == 0) digits = digits.substr(2);
  if (digits.empty() || digits.size() > 8) throw FormatError("bad hex mask '" + text + "'");
  Mask m = 0;
  for (char ch : digits) {
    int v;
    if (ch >= '0' && ch <= '9') v = ch - '0';
    else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
    else if (ch >= 'A' && ch <= 'F') v = ch - 'A' + 10;
    else throw FormatError("bad hex mask '" + text + "'");
    m = (m << 4) | static_cast<Mask>(v);
  }
  return m;
}

inline Json set_to_json(const IntSet& s) { return Json(s.elems()); }

inline Json params_to_json(const SchemeParams& params) {
  Json j = Json::object();
  if (const auto* p1 = std::get_if<Construction1Params>(&params)) {
    j["S"] = set_to_json(p1->S);
    j["M"] = p1->M;
  } else if (const auto* p2 = std::get_if<Construction2Params>(&params)) {
    j["S"] = set_to_json(p2->S);
    j["N"] = p2->N;
    if (p2->eps) j["eps"] = p2->eps->to_string();
  }
  return j;
}

inline Json coloring_to_json(const EdgeColoring& c) {
  Json edges = Json::array();
  for_each_edge(c.dim(), [&](const Edge& e) {
    const ColorPair& col = c.color(e);
    edges.push_back({{"b", to_hex(e.bottom.bits)}, {"dir", e.dir}, {"color", {col.d, col.p}}});
  });
  return Json{{"n", c.dim().value()},
              {"k", c.k()},
              {"scheme", std::string(scheme_name(c.scheme()))},
              {"params", params_to_json(c.params())},
              {"edges", std::move(edges)}};
}

namespace detail {

inline const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw FormatError(std::string("missing field '") + name + "'");
  return j.at(name);
}

inline std::int64_t integer_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw FormatError(std::string("field '") + name + "' must be an integer");
  return v.get<std::int64_t>();
}

inline IntSet set_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_array()) throw FormatError(std::string("field '") + name + "' must be an integer array");
  std::vector<std::int64_t> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw FormatError(std::string("field '") + name + "' must be an integer array");
    out.push_back(x.get<std::int64_t>());
  }
  try {
    return IntSet(std::move(out));
  } catch (const UsageError& e) {
    throw FormatError(std::string("field '") + name + "': " + e.what());
  }
}

}  // namespace detail

/// Parses and validates a coloring document. Scheme documents must match their params.
inline EdgeColoring coloring_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("coloring document must be a JSON object");
  const std::int64_t n_raw = detail::integer_field(j, "n");
  if (n_raw < 1 || n_raw > kMaxMaterializedDim) throw FormatError("n out of range");
  const Dim n(static_cast<int>(n_raw));
  const std::int64_t k = detail::integer_field(j, "k");
  if (k < 4 || k % 2 != 0 || k > 1 << 20) throw FormatError("k must be an even integer >= 4");
  const Json& scheme_field = detail::field(j, "scheme");
  if (!scheme_field.is_string()) throw FormatError("field 'scheme' must be a string");
  Scheme scheme;
  try {
    scheme = parse_scheme(scheme_field.get<std::string>());
  } catch (const UsageError& e) {
    throw FormatError(e.what());
  }

  const Json& edges = detail::field(j, "edges");
  if (!edges.is_array()) throw FormatError("field 'edges' must be an array");
  if (edges.size() != n.edge_count())
    throw FormatError("expected " + std::to_string(n.edge_count()) + " edges, found " + std::to_string(edges.size()));
  std::vector<ColorPair> colors(n.edge_count());
  std::vector<char> covered(n.edge_count(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Json& rec = edges[i];
    const std::string where = "edge record " + std::to_string(i) + ": ";
    if (!rec.is_object()) throw FormatError(where + "not an object");
    const Json& b = detail::field(rec, "b");
    if (!b.is_string()) throw FormatError(where + "'b' must be a hex string");
    Edge e{Vertex{parse_hex_mask(b.get<std::string>())}, 0};
    const std::int64_t dir = detail::integer_field(rec, "dir");
    if (dir < 1 || dir > n.value()) throw FormatError(where + "dir out of range");
    e.dir = static_cast<int>(dir);
    if (e.bottom.bits & ~n.full_mask()) throw FormatError(where + "mask has bits above n");
    if (e.bottom.has(e.dir)) throw FormatError(where + "dir bit is set in the bottom mask");
    const Json& col = detail::field(rec, "color");
    if (!col.is_array() || col.size() != 2 || !col[0].is_number_integer() || !col[1].is_number_integer())
      throw FormatError(where + "'color' must be a pair of integers");
    const std::size_t idx = edge_index(n, e);
    if (covered[idx]) throw FormatError(where + "duplicate edge");
    covered[idx] = 1;
    colors[idx] = ColorPair{col[0].get<std::int64_t>(), col[1].get<std::int64_t>()};
  }

  const Json& pj = detail::field(j, "params");
  if (!pj.is_object()) throw FormatError("field 'params' must be an object");
  SchemeParams params;
  if (scheme == Scheme::construction1) {
    params = Construction1Params{detail::set_field(pj, "S"), detail::integer_field(pj, "M")};
  } else if (scheme == Scheme::construction2) {
    Construction2Params p{detail::set_field(pj, "S"), detail::integer_field(pj, "N"), std::nullopt};
    if (pj.contains("eps")) {
      if (!pj["eps"].is_string()) throw FormatError("field 'eps' must be a string");
      try {
        p.eps = Rational::parse(pj["eps"].get<std::string>());
      } catch (const UsageError& e) {
        throw FormatError(e.what());
      }
    }
    params = std::move(p);
  }
  if (const auto* p1 = std::get_if<Construction1Params>(&params)) {
    if (p1->S.size() < static_cast<std::size_t>(n.value())) throw FormatError("params.S has fewer than n elements");
    if (p1->M < 1) throw FormatError("params.M must be positive");
  }
  if (const auto* p2 = std::get_if<Construction2Params>(&params)) {
    if (p2->S.size() < static_cast<std::size_t>(n.value())) throw FormatError("params.S has fewer than n elements");
    if (p2->N < 1) throw FormatError("params.N must be positive");
  }

  EdgeColoring c(n, static_cast<int>(k), scheme, std::move(params), std::move(colors));
  if (scheme != Scheme::explicit_colors && recompute(c).colors() != c.colors())
    throw FormatError("stored edge colors do not match the scheme parameters");
  return c;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << j.dump(1) << '\n';
}

inline Json cycle_to_json(const Cycle& c) {
  Json vs = Json::array();
  for (Vertex v : c.vertices()) vs.push_back(to_hex(v.bits));
  return vs;
}

inline Json edge_to_json(const Edge& e) { return Json{{"b", to_hex(e.bottom.bits)}, {"dir", e.dir}}; }

inline Json certificate_to_json(Dim n, int k, const BoundCertificate& cert) {
  Json edges = Json::array();
  for (const Edge& e : cert.edges) edges.push_back(edge_to_json(e));
  Json pairs = Json::array();
  for (const auto& pw : cert.pair_witnesses)
    pairs.push_back({{"pair", {pw.first, pw.second}}, {"cycle", cycle_to_json(pw.cycle)}});
  return Json{{"n", n.value()}, {"k", k}, {"level", cert.level}, {"edges", std::move(edges)}, {"witnesses", std::move(pairs)}};
}

/// {"equations": [[a_1, ..., a_k], ...]}
inline EquationSystem equations_from_json(const Json& j) {
  const Json& list = detail::field(j, "equations");
  if (!list.is_array() || list.empty()) throw FormatError("'equations' must be a nonempty array");
  std::vector<LinearEquation> eqs;
  for (const auto& row : list) {
    if (!row.is_array()) throw FormatError("each equation must be an array of integers");
    std::vector<std::int64_t> coeffs;
    for (const auto& a : row) {
      if (!a.is_number_integer()) throw FormatError("each equation must be an array of integers");
      coeffs.push_back(a.get<std::int64_t>());
    }
    try {
      eqs.emplace_back(std::move(coeffs));
    } catch (const UsageError& e) {
      throw FormatError(e.what());
    }
  }
  return EquationSystem(std::move(eqs));
}

/// Accepts a bare integer array or {"set": [...]}; the values are sorted first.
inline IntSet set_from_json(const Json& j) {
  const Json& arr = j.is_object() ? detail::field(j, "set") : j;
  if (!arr.is_array()) throw FormatError("set must be an array of integers");
  std::vector<std::int64_t> out;
  for (const auto& x : arr) {
    if (!x.is_number_integer()) throw FormatError("set must be an array of integers");
    out.push_back(x.get<std::int64_t>());
  }
  try {
    return IntSet::from_unsorted(std::move(out));
  } catch (const UsageError& e) {
    throw FormatError(e.what());
  }
}

}  // namespace rainbow
