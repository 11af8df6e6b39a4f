#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hz/graph.hpp"

namespace hz {

/// Encodes into the standard graph6 ASCII format (63-offset bytes, upper
/// triangle packed column by column, 6 bits per byte).
std::string to_graph6(const SimpleGraph& g);

/// Decodes one graph6 line. Throws std::invalid_argument on malformed input.
SimpleGraph from_graph6(std::string_view line);

/// Reads a file with one graph6 line per graph; skips the optional
/// ">>graph6<<" header and blank lines.
std::vector<SimpleGraph> read_graph6_file(const std::string& path);

void write_graph6_file(const std::string& path, const std::vector<SimpleGraph>& graphs);

}  // namespace hz
