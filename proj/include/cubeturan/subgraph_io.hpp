#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "cubeturan/cube.hpp"

namespace cubeturan {

// Text format, LF line endings:
//   cube v1 n=<n>
//   <one edge star string per line>
// Blank lines and lines starting with '#' are skipped. Edges are written in
// lexicographic order.
void write_subgraph(std::ostream& out, const Subgraph& g);
Subgraph read_subgraph(std::istream& in, const std::string& source_name = "<stream>");

std::string format_subgraph(const Subgraph& g);

void save_subgraph(const Subgraph& g, const std::filesystem::path& path);
Subgraph load_subgraph(const std::filesystem::path& path);

}  // namespace cubeturan
