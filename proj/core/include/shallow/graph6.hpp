#pragma once

#include <functional>
#include <istream>
#include <string>
#include <string_view>

#include "shallow/graph.hpp"

namespace shallow {

/// Decodes one graph6 line (an optional ">>graph6<<" header is accepted).
/// Throws InputError on a malformed size header, characters outside 63..126,
/// a wrong data length, or nonzero padding bits.
Graph parse_graph6(std::string_view text);

/// Standard graph6 encoding, without header or newline.
std::string encode_graph6(const Graph& graph);

/// Reads LF-terminated graph6 lines. Blank lines are skipped. Parse failures
/// are rethrown as InputError prefixed with "line N: ".
void read_graph6_stream(std::istream& in, const std::function<void(int line, std::string_view text, Graph graph)>& sink);

}  // namespace shallow
