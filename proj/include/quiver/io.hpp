#pragma once

// Serialization: JSON documents, JSON-lines records, DOT graphs and the
// aligned text rendering used by the command-line tool.

#include <json.hpp>

#include <string>

#include "quiver/formula.hpp"
#include "quiver/picture_group.hpp"
#include "quiver/quiver_core.hpp"
#include "quiver/roots.hpp"
#include "quiver/search.hpp"

namespace quiver {

using Json = nlohmann::json;

Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

/// {"n": int, "b": [[int]], "c": [[int]]}
Json to_json(const ExtendedExchangeMatrix& m);
ExtendedExchangeMatrix state_from_json(const Json& j);

/// 1-based vertex array.
Json to_json(const MutationSequence& s);
MutationSequence sequence_from_json(const Json& j);
/// Whitespace- or comma-separated vertices, e.g. "2 1 2" or "2,1,2".
MutationSequence parse_sequence(const std::string& text);

/// {"sign": +-1, "i": int, "j": int}
Json to_json(const SignedRoot& r);
SignedRoot signed_root_from_json(const Json& j);

/// {"ok": bool, "violations": [{"row_a", "row_b", "reason"}]}
Json to_json(const ValidationReport& r);

/// {"i": int, "j": int, "delta": "+" | "-"}
Json to_json(const SignedGenerator& g);
SignedGenerator generator_from_json(const Json& j);

/// Factors in application order.
Json word_factors_json(const PictureWord& w);
/// {"factors": [...], "display": right-to-left string}
Json to_json(const PictureWord& w);
PictureWord word_from_json(const Json& j);

/// {"sequence", "word", "display", "sigma", "formula", "observed", "observed_kind", "verdict"}
Json to_json(const FormulaReport& r);

/// One JSON-lines record: {"vertices", "word", "permutation", "length"}.
Json to_json(const MgsRecord& r);
Json to_json(const LoopRecord& r);
Json to_json(const MgsCensus& c);

/// The ice quiver: vertices "1".."n" and frozen "1'".."n'", one edge per unit.
std::string ice_quiver_dot(const ExtendedExchangeMatrix& m);
/// Undirected exchange graph, nodes labeled by c-matrices, edges by vertex.
std::string exchange_graph_dot(const ExchangeGraph& g);

/// Right-aligned signed integers, one row per line, "|" between B and C.
std::string format_state(const ExtendedExchangeMatrix& m);
std::string format_matrix(const IntMatrix& m);

}  // namespace quiver
