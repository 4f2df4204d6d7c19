#include "cubeturan/subgraph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace cubeturan {

namespace {

Error parse_error(const std::string& source, int line, const std::string& what) {
  return Error(ErrorKind::ParseError, source + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

void write_subgraph(std::ostream& out, const Subgraph& g) {
  out << "cube v1 n=" << g.dimension() << '\n';
  for (const std::string& key : g.sorted_keys()) out << key << '\n';
}

std::string format_subgraph(const Subgraph& g) {
  std::ostringstream out;
  write_subgraph(out, g);
  return out.str();
}

Subgraph read_subgraph(std::istream& in, const std::string& source_name) {
  std::string line;
  int line_no = 0;
  int n = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    static constexpr std::string_view kHeader = "cube v1 n=";
    if (line.rfind(kHeader, 0) != 0) throw parse_error(source_name, line_no, "expected header 'cube v1 n=<n>'");
    std::string digits = line.substr(kHeader.size());
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 3) {
      throw parse_error(source_name, line_no, "bad dimension '" + digits + "'");
    }
    n = std::stoi(digits);
    if (n < 1) throw parse_error(source_name, line_no, "dimension must be positive");
    break;
  }
  if (n < 0) throw parse_error(source_name, line_no, "missing header");
  require_materializable(n);

  std::vector<Edge> edges;
  std::unordered_set<std::size_t> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    Edge e;
    try {
      e = parse_edge(line, n);
    } catch (const Error& err) {
      throw parse_error(source_name, line_no, err.what());
    }
    if (!seen.insert(edge_index(e)).second) {
      throw Error(ErrorKind::DuplicateEdge,
                  source_name + ":" + std::to_string(line_no) + ": duplicate edge " + e.to_string());
    }
    edges.push_back(e);
  }
  return Subgraph::from_edges(n, edges, source_name);
}

void save_subgraph(const Subgraph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot open " + path.string() + " for writing");
  write_subgraph(out, g);
}

Subgraph load_subgraph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  return read_subgraph(in, path.string());
}

}  // namespace cubeturan
