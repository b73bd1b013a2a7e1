#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "tautilt/chop/module.hpp"
#include "tautilt/screen/screen.hpp"
#include "tautilt/silting/silting.hpp"
#include "tautilt/skew/skew_algebra.hpp"

namespace tautilt::io {

using nlohmann::json;

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

/// Typed access that reports schema violations as ParseError.
template <class T>
T get(const json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError("missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError("field '" + key + "': " + e.what());
  }
}

template <class T>
T as(const json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw ParseError(what + ": " + e.what());
  }
}

// -- fields and matrices ----------------------------------------------------

inline json field_to_json(const FiniteField& f) { return {{"p", f.p()}, {"k", f.degree()}}; }

inline FiniteField field_from_json(const json& j) {
  const auto p = get<std::uint32_t>(j, "p");
  const auto k = j.contains("k") ? get<unsigned>(j, "k") : 1u;
  return FiniteField(p, k);
}

inline json matrix_to_json(const FFMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

inline FFMatrix matrix_from_json(const FiniteField& f, const json& j, std::size_t dim) {
  const auto rows = as<std::vector<std::vector<std::int64_t>>>(j, "matrix");
  if (rows.size() != dim) throw ParseError("matrix has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(dim));
  FFMatrix m(f, dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (rows[r].size() != dim) throw ParseError("matrix row has wrong length");
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = f.from_code(rows[r][c]);
  }
  return m;
}

inline json integer_matrix_to_json(const std::vector<std::vector<std::int64_t>>& m) { return m; }

/// Accepts a bare array of rows or an object with a "matrix" member.
inline SymmetricIntegerMatrix symmetric_matrix_from_json(const json& j) {
  const json& m = j.is_object() ? j.at("matrix") : j;
  return SymmetricIntegerMatrix(as<std::vector<std::vector<std::int64_t>>>(m, "matrix"));
}

inline json symmetric_matrix_to_json(const SymmetricIntegerMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

// -- modules ----------------------------------------------------------------

/// { "field": {"p","k"}, "dim": d, "generators": [ rows... ] } with field
/// elements as integer codes 0..q-1.
inline json module_to_json(const MatModule& m) {
  json gens = json::array();
  for (const auto& g : m.generators()) gens.push_back(matrix_to_json(g));
  return {{"field", field_to_json(m.field())}, {"dim", m.dim()}, {"generators", gens}};
}

inline MatModule module_from_json(const json& j) {
  const auto f = field_from_json(get<json>(j, "field"));
  const auto dim = get<std::size_t>(j, "dim");
  std::vector<FFMatrix> gens;
  for (const auto& g : get<json>(j, "generators")) gens.push_back(matrix_from_json(f, g, dim));
  return MatModule(f, dim, std::move(gens));
}

// -- certificates and verdicts ---------------------------------------------

inline json gram_to_json(std::size_t n, const std::string& group, const GramCertificate& c) {
  const auto& f = c.matrix.field();
  return {{"n", n},       {"group", group},       {"p", f.p()}, {"k", f.degree()},
          {"rank", c.rank}, {"nondegenerate", c.nondegenerate}};
}

inline json witness_to_json(const std::optional<IntegerVector>& w) { return w ? json(*w) : json::array(); }

inline json screen_to_json(const ScreenVerdict& v) {
  return {{"verdict", to_string(v.verdict)},
          {"tau_tilting_infinite", v.tau_tilting_infinite},
          {"not_g_tame", v.not_g_tame},
          {"witness", witness_to_json(v.witness)},
          {"justification", v.justification}};
}

inline json verdict_to_json(const GroupAlgebraVerdict& v) {
  json j{{"verdict", to_string(v.verdict)},
         {"rule", v.rule},
         {"rank", v.hyperfocal ? json(v.hyperfocal->rank) : json(nullptr)},
         {"ibr", v.ibr},
         {"pl_ge_n", v.pl_ge_n},
         {"witness", v.witness},
         {"p", v.p},
         {"m", v.m},
         {"n", v.n},
         {"l", v.l},
         {"p_prime_group", v.p_prime_group}};
  return j;
}

inline json cartan_to_json(std::size_t n, const std::string& group, std::uint32_t p, const CartanReport& r) {
  return {{"n", n},
          {"group", group},
          {"p", p},
          {"field", field_to_json(r.field)},
          {"dims", r.dims},
          {"twist", r.twist},
          {"matrix", symmetric_matrix_to_json(r.matrix)}};
}

// -- based algebras ---------------------------------------------------------

inline json algebra_to_json(const BasedAlgebra& a) {
  json mult = json::array();
  for (std::size_t i = 0; i < a.dimension(); ++i)
    for (std::size_t j = 0; j < a.dimension(); ++j)
      for (const auto& [k, c] : a.product_of_basis(i, j)) mult.push_back({i, j, k, c});
  json idem = json::array();
  for (const auto& e : a.idempotents()) idem.push_back(e);
  return {{"field", field_to_json(a.field())},
          {"dim", a.dimension()},
          {"basis", a.labels()},
          {"mult", mult},
          {"idempotents", idem}};
}

/// Reads either the structure-constant schema or a quiver presentation
/// { "field", "quiver": { "vertices", "arrows": [{"name","source","target"}],
/// "relations": [...], "bound" } } with 1-indexed vertices.
inline BasedAlgebra algebra_from_json(const json& j) {
  const auto f = field_from_json(get<json>(j, "field"));
  if (j.contains("quiver")) {
    const json& q = j.at("quiver");
    const auto vertices = get<std::size_t>(q, "vertices");
    std::vector<Arrow> arrows;
    for (const auto& a : get<json>(q, "arrows")) {
      const auto s = get<std::size_t>(a, "source"), t = get<std::size_t>(a, "target");
      if (s == 0 || t == 0) throw ParseError("quiver vertices are numbered from 1");
      arrows.push_back({get<std::string>(a, "name"), s - 1, t - 1});
    }
    const auto rel = q.contains("relations") ? get<std::vector<std::string>>(q, "relations") : std::vector<std::string>{};
    const auto bound = q.contains("bound") ? get<std::size_t>(q, "bound") : std::size_t{16};
    return from_quiver(f, vertices, arrows, rel, bound);
  }
  const auto d = get<std::size_t>(j, "dim");
  std::vector<std::string> labels;
  if (j.contains("basis")) {
    labels = get<std::vector<std::string>>(j, "basis");
  } else {
    for (std::size_t i = 0; i < d; ++i) labels.push_back("b" + std::to_string(i));
  }
  std::vector<StructureConstant> mult;
  for (const auto& m : get<json>(j, "mult")) {
    const auto v = as<std::vector<std::int64_t>>(m, "mult entry");
    if (v.size() != 4) throw ParseError("mult entries are [i, j, k, c]");
    for (int t = 0; t < 3; ++t)
      if (v[t] < 0) throw ParseError("negative basis index in mult");
    mult.push_back({static_cast<std::uint32_t>(v[0]), static_cast<std::uint32_t>(v[1]), static_cast<std::uint32_t>(v[2]),
                    f.from_code(v[3])});
  }
  std::vector<FFVec> idem;
  for (const auto& e : get<json>(j, "idempotents")) {
    const auto v = as<std::vector<std::int64_t>>(e, "idempotent");
    FFVec x;
    for (auto c : v) x.push_back(f.from_code(c));
    idem.push_back(std::move(x));
  }
  return BasedAlgebra(f, d, std::move(labels), mult, std::move(idem));
}

// -- exchange graphs --------------------------------------------------------

inline json complex_to_json(const TwoTermComplex& c) {
  json d = json::array();
  for (const auto& row : c.d.e) d.push_back(row);
  json m1 = json::array(), z = json::array();
  for (auto v : c.minus1()) m1.push_back(v + 1);
  for (auto v : c.zero()) z.push_back(v + 1);
  return {{"degree_minus1", m1}, {"degree_0", z}, {"differential", d}};
}

/// Adjacency list keyed by object id; each object carries its g-matrix
/// (rows sorted) and its summands.
inline json exchange_graph_to_json(const BasedAlgebra& a, const ExchangeGraph& g, bool with_complexes = false) {
  json objects = json::array();
  std::vector<json> adjacency(g.objects.size(), json::array());
  for (const auto& e : g.edges) adjacency[e.from].push_back({{"to", e.to}, {"direction", e.direction}});
  for (std::size_t i = 0; i < g.objects.size(); ++i) {
    json o{{"id", i}, {"g_matrix", g.key(a, i)}, {"left_mutations", adjacency[i]}, {"left_exits", g.left_exits[i]}};
    const auto st = support_tau_tilting_of(a, g.objects[i]);
    json proj = json::array();
    for (auto v : st.projective_vertices) proj.push_back(v + 1);
    o["support_tau_tilting"] = {{"module_dimension_vectors", st.module_dimension_vectors}, {"projective_vertices", proj}};
    if (with_complexes) {
      json cs = json::array();
      for (const auto& c : g.objects[i]) cs.push_back(complex_to_json(c));
      o["summands"] = cs;
    }
    objects.push_back(std::move(o));
  }
  return {{"status", to_string(g.status)},
          {"budget", g.budget},
          {"vertices", a.vertex_count()},
          {"object_count", g.objects.size()},
          {"edge_count", g.edges.size()},
          {"objects", objects}};
}

inline int exit_code(ExploreStatus s) { return s == ExploreStatus::CompleteFinite ? 0 : 3; }

inline int exit_code(ScreenOutcome s) { return s == ScreenOutcome::Inconclusive ? 2 : 1; }

}  // namespace tautilt::io
