#ifndef BNALG_GRAPH_IO_HPP
#define BNALG_GRAPH_IO_HPP

#include <string>

#include "json.hpp"

#include "bnalg/dag.hpp"

namespace bnalg {

/// {"variables":[{"id":1,"levels":2},...],"edges":[[1,3],...]}. Throws
/// InvalidInput on malformed JSON or missing fields.
RawGraph parse_graph_json(const std::string& text);

/// Reads and parses a graph file; throws InvalidInput if it cannot be read.
RawGraph read_graph_file(const std::string& path);

/// The model in canonical numbering, same layout as the input format.
nlohmann::ordered_json graph_to_json(const DagModel& dag);

}  // namespace bnalg

#endif  // BNALG_GRAPH_IO_HPP
