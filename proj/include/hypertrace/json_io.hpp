#pragma once

#include <json.hpp>

#include "hypertrace/digraph.hpp"
#include "hypertrace/hypergraph.hpp"
#include "hypertrace/quad5.hpp"
#include "hypertrace/spectra.hpp"
#include "hypertrace/trace.hpp"

namespace hypertrace {

// Insertion-ordered so that serialization is byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const Quad5& x);
Quad5 quad5_from_json(const Json& j);

Json to_json(const UniformHypergraph& h);
// Validates through the UniformHypergraph constructor; DomainError on bad shape.
UniformHypergraph hypergraph_from_json(const Json& j);

Json to_json(const TraceReport& r);
Json to_json(const FactoredCharPoly& p);
Json to_json(const MultiDigraph& d);

}  // namespace hypertrace
