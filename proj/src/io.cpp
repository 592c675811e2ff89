#include "gulf/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace gulf {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, int line_no) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": not an integer: '" + std::string(tok) + "'");
  return v;
}

struct Pairs {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;
};

Pairs parse_pairs(std::string_view text) {
  Pairs out;
  bool header = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto tok = tokens(line);
    if (!header) {
      if (tok.size() != 2 || tok[0] != "n") throw ParseError("malformed header: expected 'n <count>'");
      long long n = to_int(tok[1], line_no);
      if (n < 0 || n > 1'000'000) throw ParseError("malformed header: bad vertex count");
      out.n = static_cast<int>(n);
      header = true;
      continue;
    }
    if (tok.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": expected two vertex indices");
    long long a = to_int(tok[0], line_no), b = to_int(tok[1], line_no);
    if (a < 0 || b < 0 || a >= out.n || b >= out.n)
      throw ParseError("line " + std::to_string(line_no) + ": vertex index out of range");
    if (a == b) throw ParseError("line " + std::to_string(line_no) + ": loop rejected");
    out.pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (!header) throw ParseError("malformed header: missing 'n <count>' line");
  return out;
}

} // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  std::vector<int> bytes;
  for (char c : text) {
    int b = static_cast<unsigned char>(c) - 63;
    if (b < 0 || b > 63) throw ParseError("graph6: byte out of range");
    bytes.push_back(b);
  }
  if (bytes.empty()) throw ParseError("graph6: empty input");
  std::size_t at = 0;
  long long n = 0;
  if (bytes[0] < 63) {
    n = bytes[0];
    at = 1;
  } else if (bytes.size() >= 4 && bytes[1] < 63) {
    n = (bytes[1] << 12) | (bytes[2] << 6) | bytes[3];
    at = 4;
  } else if (bytes.size() >= 8 && bytes[1] == 63) {
    for (int k = 2; k < 8; ++k) n = (n << 6) | bytes[static_cast<std::size_t>(k)];
    at = 8;
  } else {
    throw ParseError("graph6: malformed size field");
  }
  const long long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (bytes.size() - at != need) throw ParseError("graph6: wrong length for n=" + std::to_string(n));
  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int byte = bytes[at + static_cast<std::size_t>(k / 6)];
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  // padding bits must be zero
  for (; k < static_cast<long long>(need) * 6; ++k)
    if ((bytes[at + static_cast<std::size_t>(k / 6)] >> (5 - k % 6)) & 1) throw ParseError("graph6: nonzero padding");
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph &g) {
  std::string out;
  const long long n = g.n();
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n < 258048) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  int cur = 0, used = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      cur = (cur << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(cur + 63));
        cur = used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<char>((cur << (6 - used)) + 63));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  Pairs p = parse_pairs(text);
  GraphBuilder b(p.n);
  try {
    for (auto [u, v] : p.pairs) b.add_edge(u, v);
  } catch (const GraphError &e) {
    throw ParseError(e.what());
  }
  return b.build();
}

std::string to_edge_list(const Graph &g) {
  std::ostringstream os;
  os << "n " << g.n() << '\n';
  for (auto e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

DiGraph parse_digraph(std::string_view text) {
  Pairs p = parse_pairs(text);
  try {
    return DiGraph(p.n, p.pairs);
  } catch (const GraphError &e) {
    throw ParseError(e.what());
  }
}

std::string to_digraph_text(const DiGraph &d) {
  std::ostringstream os;
  os << "n " << d.n() << '\n';
  for (auto [u, v] : d.arcs()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edge_list(text);
}

std::string serialize_graph(const Graph &g, GraphFormat format) {
  return format == GraphFormat::graph6 ? to_graph6(g) : to_edge_list(g);
}

Graph parse_graph_auto(std::string_view text) {
  auto t = trim(text);
  while (t.starts_with('#')) {
    auto nl = t.find('\n');
    t = nl == std::string_view::npos ? std::string_view{} : trim(t.substr(nl + 1));
  }
  if (t.starts_with("n ") || t.starts_with("n\t")) return parse_edge_list(text);
  return parse_graph6(t);
}

std::string read_text_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

Graph read_graph_file(const std::string &path) { return parse_graph_auto(read_text_file(path)); }

} // namespace gulf
