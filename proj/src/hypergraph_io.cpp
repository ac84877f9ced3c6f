#include "turanlab/hypergraph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "turanlab/error.hpp"
#include "turanlab/text_util.hpp"

namespace turanlab {

Hypergraph3 read_hypergraph(std::istream& in) {
  LineReader reader(in, "hypergraph");
  auto header = reader.next();
  if (!header || header->size() != 2 || (*header)[0] != "n") {
    throw InvalidArgument("hypergraph: expected header line 'n <count>'");
  }
  const auto n = parse_count((*header)[1], "hypergraph: vertex count");
  std::vector<Triple> edges;
  while (auto fields = reader.next()) {
    if (fields->size() != 4 || (*fields)[0] != "e") {
      throw InvalidArgument(reader.where() + ": expected 'e a b c'");
    }
    Vertex v[3];
    for (int i = 0; i < 3; ++i) {
      v[i] = parse_vertex((*fields)[static_cast<std::size_t>(i) + 1], n, reader.where());
    }
    if (!is_three_set(v[0], v[1], v[2])) {
      throw InvalidArgument(reader.where() + ": edge has a repeated vertex");
    }
    edges.emplace_back(v[0], v[1], v[2]);
  }
  return Hypergraph3(n, std::move(edges));
}

void write_hypergraph(std::ostream& out, const Hypergraph3& h) {
  out << "n " << h.vertex_count() << '\n';
  for (const auto& t : h.edges()) out << "e " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

Hypergraph3 parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  return read_hypergraph(in);
}

std::string format_hypergraph(const Hypergraph3& h) {
  std::ostringstream out;
  write_hypergraph(out, h);
  return out.str();
}

}  // namespace turanlab
