#include "mostar/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace mostar {
namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw Error(Errc::kParse, "line " + std::to_string(line_no) + ": " + msg);
}

// Parses exactly two unsigned decimal fields separated by blanks.
bool parse_pair(std::string_view line, std::uint64_t& a, std::uint64_t& b) {
  auto skip = [&](std::size_t i) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    return i;
  };
  auto number = [&](std::size_t& i, std::uint64_t& out) {
    const char* first = line.data() + i;
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr == first) return false;
    i = static_cast<std::size_t>(ptr - line.data());
    return true;
  };
  std::size_t i = skip(0);
  if (!number(i, a)) return false;
  const std::size_t after_first = i;
  i = skip(i);
  if (i == after_first) return false;
  if (!number(i, b)) return false;
  return skip(i) == line.size();
}

bool ignorable(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t order = 0;
  std::uint64_t declared = 0;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (ignorable(line)) continue;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    if (!parse_pair(line, a, b)) fail(line_no, "expected two non-negative integers");
    if (!have_header) {
      if (a == 0) fail(line_no, "order must be at least 1");
      if (a > std::numeric_limits<std::uint32_t>::max()) fail(line_no, "order too large");
      order = a;
      declared = b;
      have_header = true;
      edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(declared, 1u << 24)));
      continue;
    }
    if (edges.size() == declared) fail(line_no, "more edge lines than declared");
    if (a >= order || b >= order) fail(line_no, "vertex id out of range");
    if (a == b) fail(line_no, "self-loop");
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  if (!have_header) fail(line_no, "missing header line");
  if (edges.size() != declared) {
    fail(line_no, "expected " + std::to_string(declared) + " edges, found " +
                      std::to_string(edges.size()));
  }
  try {
    return Graph::build(static_cast<std::uint32_t>(order), edges);
  } catch (const Error& e) {
    throw Error(Errc::kParse, e.what());
  }
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kParse, "cannot open " + path);
  return read_edge_list(in);
}

void save_edge_list(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_edge_list(out, g);
}

}  // namespace mostar
