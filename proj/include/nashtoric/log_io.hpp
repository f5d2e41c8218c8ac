#pragma once

#include <iosfwd>
#include <string>

#include "nashtoric/explore.hpp"

namespace nashtoric {

// Exploration log: line-delimited JSON. First line is a self-describing
// header {version, rank, seed, options}, then one record per node, then a
// closing summary record. Lattice entries are decimal strings, since they can
// exceed machine word size.
void write_log(const ExplorationReport& report, std::ostream& out);
void write_log(const ExplorationReport& report, const std::string& path);

// Lossless inverse of write_log. Throws ParseError naming the offending line
// and field on malformed input.
ExplorationReport read_log(std::istream& in);
ExplorationReport read_log(const std::string& path);

}  // namespace nashtoric
