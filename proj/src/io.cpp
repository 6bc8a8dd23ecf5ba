#include "splines/io.hpp"

#include <fstream>

namespace splines::io {

namespace {

std::string id_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw PreconditionError("vertex ids must be strings or integers");
}

std::string poly_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw PreconditionError("polynomials must be given as strings");
}

Rational rational_of(const json& j) { return parse_rational(poly_text(j)); }

}  // namespace

GraphPtr graph_from_json(const json& j) {
  if (!j.contains("vertices") || !j.at("vertices").is_array()) throw PreconditionError("graph needs a vertex list");
  std::vector<VertexId> vertices;
  for (const auto& v : j.at("vertices")) vertices.push_back(id_text(v));

  const json edges = j.value("edges", json::array());
  int nvars = 1;
  for (const auto& e : edges) {
    nvars = std::max(nvars, variables_used(poly_text(e.at("label"))));
    if (e.contains("factors"))
      for (const auto& f : e.at("factors")) nvars = std::max(nvars, variables_used(poly_text(f.at(0))));
  }
  if (j.contains("nvars")) {
    const int declared = j.at("nvars").get<int>();
    if (declared < nvars || declared > kMaxVariables) throw PreconditionError("declared nvars does not fit the labels");
    nvars = declared;
  }

  std::vector<EdgeSpec> specs;
  for (const auto& e : edges) {
    EdgeSpec s{id_text(e.at("u")), id_text(e.at("v")), parse_poly(poly_text(e.at("label")), nvars), std::nullopt};
    if (e.contains("factors")) {
      std::vector<Factor> fs;
      for (const auto& f : e.at("factors")) fs.push_back({parse_poly(poly_text(f.at(0)), nvars), f.at(1).get<int>()});
      s.factors = std::move(fs);
    }
    specs.push_back(std::move(s));
  }
  return make_graph(std::move(vertices), specs, nvars);
}

json graph_to_json(const EdgeLabeledGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({{"u", g.id(e.u)}, {"v", g.id(e.v)}, {"label", e.label.to_string()}});
  return {{"vertices", g.vertices()}, {"edges", edges}, {"nvars", g.nvars()}};
}

std::vector<Poly> entries_from_json(const EdgeLabeledGraph& g, const json& j) {
  const json& entries = j.contains("entries") ? j.at("entries") : j;
  if (!entries.is_object()) throw PreconditionError("spline entries must be an object keyed by vertex");
  std::vector<Poly> out(g.vertex_count(), Poly(g.nvars()));
  std::vector<bool> seen(g.vertex_count(), false);
  for (const auto& [id, value] : entries.items()) {
    if (!g.has_vertex(id)) throw PreconditionError("entry for unknown vertex '" + id + "'");
    const auto v = g.index_of(id);
    out[v] = parse_poly(poly_text(value), g.nvars());
    seen[v] = true;
  }
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (!seen[v]) throw PreconditionError("missing entry for vertex '" + g.id(v) + "'");
  return out;
}

json spline_to_json(const Spline& s) {
  json entries = json::object();
  const auto& g = *s.graph();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) entries[g.id(v)] = s.at(v).to_string();
  return {{"entries", entries}};
}

GeneratingSet generating_set_from_json(const GraphPtr& g, const json& j) {
  std::vector<Spline> gens;
  for (const auto& item : j.at("generators")) gens.emplace_back(g, entries_from_json(*g, item));
  return GeneratingSet(g, std::move(gens));
}

json generating_set_to_json(const GeneratingSet& b) {
  json gens = json::array();
  for (std::size_t i = 0; i < b.size(); ++i) {
    json item = spline_to_json(b[i]);
    item["degree"] = b.degrees()[i] ? json(*b.degrees()[i]) : json(nullptr);
    gens.push_back(std::move(item));
  }
  json out{{"size", b.size()}, {"generators", gens}};
  try {
    out["degree_sequence"] = degree_sequence(b);
  } catch (const PreconditionError&) {
    out["degree_sequence"] = nullptr;
  }
  return out;
}

Pinwheel pinwheel_from_json(const json& j) {
  const auto& c = j.at("center");
  if (!c.is_array() || c.size() != 2) throw PreconditionError("center must be a pair of rationals");
  std::vector<Poly> rays;
  for (const auto& r : j.at("rays")) {
    const json& text = r.is_array() ? r.at(0) : r;
    rays.push_back(parse_poly(poly_text(text), 2));
  }
  return Pinwheel({rational_of(c[0]), rational_of(c[1])}, std::move(rays), j.value("r", 1));
}

json certification_to_json(const std::vector<CertificationRow>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"degree", r.degree},
                   {"predicted", r.predicted},
                   {"actual", r.actual},
                   {"span_rank", r.span_rank},
                   {"pass", r.pass}});
  return out;
}

json pinwheel_report_to_json(const PinwheelReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"degree", row.degree},
                    {"predicted", row.predicted},
                    {"formula", row.formula},
                    {"oracle", row.oracle},
                    {"pass", row.pass}});
  return {{"n", r.n}, {"singular", r.singular}, {"degree_sequence", r.degree_sequence}, {"rows", rows}};
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw PreconditionError(path + ": " + e.what());
  }
}

}  // namespace splines::io
