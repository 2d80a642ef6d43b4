#include "hypertrace/json_io.hpp"

#include "hypertrace/errors.hpp"

namespace hypertrace {

Json to_json(const Quad5& x) { return Json{{"a", to_string(x.a())}, {"b", to_string(x.b())}}; }

Quad5 quad5_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j["a"].is_string() || !j["b"].is_string())
    throw DomainError("Quad5 JSON must be {\"a\": \"p/q\", \"b\": \"r/s\"}");
  return {parse_bigrat(j["a"].get<std::string>()), parse_bigrat(j["b"].get<std::string>())};
}

Json to_json(const UniformHypergraph& h) {
  Json edges = Json::array();
  for (const Edge& e : h.edges()) edges.push_back(e);
  return Json{{"k", h.k()}, {"n", h.n()}, {"edges", std::move(edges)}};
}

UniformHypergraph hypergraph_from_json(const Json& j) {
  try {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back(e.get<Edge>());
    return UniformHypergraph(j.at("k").get<int>(), j.at("n").get<int>(), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed hypergraph JSON: ") + e.what());
  }
}

Json to_json(const TraceReport& r) {
  Json patterns = Json::array();
  for (const auto& p : r.patterns) {
    Json roots = Json::array();
    for (const auto& rc : p.pattern.roots) roots.push_back({rc.vertex, rc.edge, rc.count});
    patterns.push_back(Json{{"usage", p.pattern.usage},
                            {"roots", std::move(roots)},
                            {"count", to_string(p.count)},
                            {"b", to_string(p.b)},
                            {"c", to_string(p.c)},
                            {"walks", to_string(p.walks)},
                            {"contribution", to_string(p.contribution)}});
  }
  return Json{{"k", r.k},
              {"j", r.j},
              {"engine", r.engine},
              {"value", to_compact_string(r.value)},
              {"patterns", std::move(patterns)},
              {"status", r.status}};
}

Json to_json(const FactoredCharPoly& p) {
  Json factors = Json::array();
  for (const auto& f : p.factors) factors.push_back(Json{{"root", to_json(f.root)}, {"mult", to_string(f.mult)}});
  Json out{{"k", p.k},
           {"lambda_power", to_string(p.lambda_power)},
           {"factors", std::move(factors)},
           {"degree", to_string(p.degree())},
           {"status", p.status}};
  if (!p.note.empty()) out["note"] = p.note;
  return out;
}

Json to_json(const MultiDigraph& d) {
  Json arcs = Json::array();
  for (const auto& [arc, mult] : d.arcs()) arcs.push_back(Json{{"from", arc.first}, {"to", arc.second}, {"mult", mult}});
  return Json{{"vertices", d.vertices()}, {"arcs", std::move(arcs)}};
}

}  // namespace hypertrace
