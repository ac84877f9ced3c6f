#include "turanlab/text_util.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include "turanlab/error.hpp"

namespace turanlab {

std::optional<std::vector<std::string>> LineReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    std::istringstream fields(line);
    std::vector<std::string> out;
    for (std::string f; fields >> f;) out.push_back(std::move(f));
    if (out.empty() || out.front().starts_with('#')) continue;
    return out;
  }
  return std::nullopt;
}

std::string LineReader::where() const { return context_ + " line " + std::to_string(line_no_); }

std::size_t parse_count(const std::string& field, const std::string& what) {
  std::size_t value = 0;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw InvalidArgument(what + ": not a non-negative integer: '" + field + "'");
  return value;
}

Vertex parse_vertex(const std::string& field, std::size_t vertex_count, const std::string& where) {
  const auto v = parse_count(field, where);
  if (v >= vertex_count) throw InvalidArgument(where + ": vertex " + field + " out of range");
  return static_cast<Vertex>(v);
}

}  // namespace turanlab
