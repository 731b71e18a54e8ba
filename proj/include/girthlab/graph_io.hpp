#ifndef GIRTHLAB_GRAPH_IO_HPP
#define GIRTHLAB_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "girthlab/digraph.hpp"

namespace girthlab {

/// Canonical edge-list text format. UTF-8, '\n' line ends, '#' comment
/// lines ignored, first significant line "n <N>", then one "<u> <v>" per
/// edge with a single ASCII space. The serializer emits edges sorted by
/// (u, v), so parse(serialize(d)) == d bit-exactly.
Digraph parse_edge_list(std::istream& in);
Digraph parse_edge_list_string(const std::string& text);
void serialize_edge_list(const Digraph& d, std::ostream& out);
std::string serialize_edge_list_string(const Digraph& d);

/// JSON mirror {"n":N,"edges":[[u,v],...]} with the same edge order.
std::string to_json_string(const Digraph& d);
Digraph parse_json_string(const std::string& text);

} // namespace girthlab

#endif
