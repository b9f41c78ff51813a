#include "twograph/io.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace twograph {

ParseError::ParseError(ParseErrorKind kind, int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      kind_(kind),
      line_(line),
      column_(column) {}

GraphFormat parse_format_name(std::string_view name) {
  if (name == "edge-list" || name == "edges") return GraphFormat::edge_list;
  if (name == "adjacency" || name == "adj") return GraphFormat::adjacency;
  if (name == "seidel") return GraphFormat::seidel;
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

std::string_view format_name(GraphFormat f) {
  switch (f) {
    case GraphFormat::edge_list:
      return "edge-list";
    case GraphFormat::adjacency:
      return "adjacency";
    case GraphFormat::seidel:
      return "seidel";
    case GraphFormat::graph6:
      return "graph6";
  }
  return "?";
}

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

struct Line {
  int number;  // 1-based
  std::vector<Token> tokens;
};

// Splits into nonblank lines of whitespace-separated tokens; '#' starts a comment.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

int to_int(const Token& t, int line) {
  int value = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  if (!t.text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError(ParseErrorKind::bad_token, line, t.column,
                     "expected an integer, got '" + std::string(t.text) + "'");
  }
  return value;
}

Graph parse_edge_list(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(ParseErrorKind::malformed_header, 1, 1, "missing vertex count");
  const Line& header = lines.front();
  if (header.tokens.size() != 1) {
    throw ParseError(ParseErrorKind::malformed_header, header.number, header.tokens[1].column,
                     "header must be a single vertex count");
  }
  int n = to_int(header.tokens[0], header.number);
  if (n < 1 || n > kMaxVertices) {
    throw ParseError(ParseErrorKind::malformed_header, header.number, header.tokens[0].column,
                     "vertex count out of range");
  }
  Graph g(n);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    if (line.tokens.size() != 2) {
      throw ParseError(ParseErrorKind::wrong_row_length, line.number, line.tokens.front().column,
                       "edge line needs exactly two vertices");
    }
    int u = to_int(line.tokens[0], line.number);
    int v = to_int(line.tokens[1], line.number);
    for (int k = 0; k < 2; ++k) {
      int x = k == 0 ? u : v;
      if (x < 1 || x > n) {
        throw ParseError(ParseErrorKind::out_of_range, line.number, line.tokens[static_cast<std::size_t>(k)].column,
                         "vertex " + std::to_string(x) + " not in 1.." + std::to_string(n));
      }
    }
    if (u == v) {
      throw ParseError(ParseErrorKind::loop, line.number, line.tokens[1].column,
                       "loop at vertex " + std::to_string(u));
    }
    g.add_edge(u - 1, v - 1);
  }
  return g;
}

// Reads an n x n integer matrix; n is the length of the first row.
std::vector<int> parse_square(std::string_view text, int& n, std::vector<Line>& lines) {
  lines = tokenize(text);
  if (lines.empty()) throw ParseError(ParseErrorKind::malformed_header, 1, 1, "empty matrix");
  n = static_cast<int>(lines.front().tokens.size());
  if (n > kMaxVertices) {
    throw ParseError(ParseErrorKind::malformed_header, lines.front().number, 1, "matrix too large");
  }
  if (static_cast<int>(lines.size()) != n) {
    const Line& at = lines.size() > static_cast<std::size_t>(n) ? lines[static_cast<std::size_t>(n)] : lines.back();
    throw ParseError(ParseErrorKind::wrong_row_count, at.number, 1,
                     "expected " + std::to_string(n) + " rows, got " + std::to_string(lines.size()));
  }
  std::vector<int> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Line& line = lines[static_cast<std::size_t>(i)];
    if (static_cast<int>(line.tokens.size()) != n) {
      throw ParseError(ParseErrorKind::wrong_row_length, line.number, 1,
                       "row has " + std::to_string(line.tokens.size()) + " entries, expected " +
                           std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      m[static_cast<std::size_t>(i * n + j)] = to_int(line.tokens[static_cast<std::size_t>(j)], line.number);
    }
  }
  return m;
}

void check_matrix(const std::vector<int>& m, int n, const std::vector<Line>& lines, bool seidel) {
  auto col = [&](int i, int j) { return lines[static_cast<std::size_t>(i)].tokens[static_cast<std::size_t>(j)].column; };
  auto row = [&](int i) { return lines[static_cast<std::size_t>(i)].number; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int e = m[static_cast<std::size_t>(i * n + j)];
      if (i == j) {
        if (e != 0) {
          throw ParseError(ParseErrorKind::bad_diagonal, row(i), col(i, j),
                           "diagonal entry must be 0, got " + std::to_string(e));
        }
        continue;
      }
      bool ok = seidel ? (e == 1 || e == -1) : (e == 0 || e == 1);
      if (!ok) {
        throw ParseError(ParseErrorKind::bad_entry, row(i), col(i, j),
                         std::string(seidel ? "Seidel entry must be -1 or 1" : "adjacency entry must be 0 or 1") +
                             ", got " + std::to_string(e));
      }
      if (e != m[static_cast<std::size_t>(j * n + i)]) {
        throw ParseError(ParseErrorKind::asymmetric, row(i), col(i, j),
                         "matrix is not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
  }
}

Graph parse_adjacency(std::string_view text) {
  int n = 0;
  std::vector<Line> lines;
  auto m = parse_square(text, n, lines);
  check_matrix(m, n, lines, false);
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (m[static_cast<std::size_t>(i * n + j)] == 1) g.add_edge(i, j);
    }
  }
  return g;
}

Graph parse_graph6(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  std::size_t last = text.find_last_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError(ParseErrorKind::bad_graph6, 1, 1, "empty graph6 string");
  std::string_view s = text.substr(first, last - first + 1);
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 63 || s[i] > 126) {
      throw ParseError(ParseErrorKind::bad_graph6, 1, static_cast<int>(i) + 1, "character outside graph6 range");
    }
  }
  if (s[0] == 126) {
    throw ParseError(ParseErrorKind::bad_graph6, 1, 1, "only the n <= 62 header form is supported");
  }
  int n = s[0] - 63;
  if (n < 1) throw ParseError(ParseErrorKind::bad_graph6, 1, 1, "graph6 vertex count must be >= 1");
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (s.size() - 1 != need) {
    throw ParseError(ParseErrorKind::bad_graph6, 1, static_cast<int>(s.size()),
                     "expected " + std::to_string(need) + " data bytes, got " + std::to_string(s.size() - 1));
  }
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = s[1 + k / 6] - 63;
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i, j);
    }
  }
  // padding bits must be zero
  for (; k < need * 6; ++k) {
    int byte = s[1 + k / 6] - 63;
    if ((byte >> (5 - static_cast<int>(k % 6))) & 1) {
      throw ParseError(ParseErrorKind::bad_graph6, 1, static_cast<int>(2 + k / 6), "nonzero padding bits");
    }
  }
  return g;
}

std::string format_matrix(int n, auto entry) {
  std::string out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(entry(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace

SeidelMatrix parse_seidel(std::string_view text) {
  int n = 0;
  std::vector<Line> lines;
  auto m = parse_square(text, n, lines);
  check_matrix(m, n, lines, true);
  return SeidelMatrix(n, std::move(m));
}

std::string format_seidel(const SeidelMatrix& s) {
  return format_matrix(s.order(), [&](int i, int j) { return s(i, j); });
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::edge_list:
      return parse_edge_list(text);
    case GraphFormat::adjacency:
      return parse_adjacency(text);
    case GraphFormat::seidel:
      return graph_of_seidel(parse_seidel(text));
    case GraphFormat::graph6:
      return parse_graph6(text);
  }
  throw std::invalid_argument("unknown format");
}

std::string format_graph(const Graph& g, GraphFormat format) {
  const int n = g.order();
  switch (format) {
    case GraphFormat::edge_list: {
      std::string out = std::to_string(n) + "\n";
      for (auto [u, v] : g.edges()) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
      return out;
    }
    case GraphFormat::adjacency:
      return format_matrix(n, [&](int i, int j) { return g.adjacent(i, j) ? 1 : 0; });
    case GraphFormat::seidel:
      return format_seidel(seidel_matrix(g));
    case GraphFormat::graph6: {
      if (n > 62) throw std::invalid_argument("graph6 writer supports n <= 62 only");
      std::string out(1, static_cast<char>(63 + n));
      int acc = 0;
      int filled = 0;
      for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
          acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
          if (++filled == 6) {
            out += static_cast<char>(63 + acc);
            acc = 0;
            filled = 0;
          }
        }
      }
      if (filled > 0) out += static_cast<char>(63 + (acc << (6 - filled)));
      return out + "\n";
    }
  }
  throw std::invalid_argument("unknown format");
}

GraphFormat detect_format(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(ParseErrorKind::malformed_header, 1, 1, "empty input");
  const Line& first = lines.front();
  if (first.tokens.size() == 1) {
    std::string_view t = first.tokens[0].text;
    // graph6 bytes start at '?', so a digit-only first line is an edge-list header
    if (t.find_first_not_of("0123456789") == std::string_view::npos) return GraphFormat::edge_list;
    if (lines.size() == 1) return GraphFormat::graph6;
  }
  // only a Seidel matrix has negative entries
  for (const Line& line : lines) {
    for (const auto& tok : line.tokens) {
      if (tok.text.starts_with('-')) return GraphFormat::seidel;
    }
  }
  throw ParseError(ParseErrorKind::malformed_header, first.number, 1,
                   "cannot tell adjacency from Seidel text; pass an explicit format");
}

Graph parse_graph_literal(std::string_view literal) {
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError(ParseErrorKind::bad_token, 1, 1, "graph literal '" + std::string(literal) + "': " + why);
  };
  if (!literal.starts_with("n=")) throw fail("must start with n=");
  std::size_t semi = literal.find(';');
  std::string_view count = literal.substr(2, semi == std::string_view::npos ? std::string_view::npos : semi - 2);
  int n = 0;
  auto [p, ec] = std::from_chars(count.data(), count.data() + count.size(), n);
  if (ec != std::errc() || p != count.data() + count.size()) throw fail("bad vertex count");
  if (n < 1 || n > kMaxVertices) throw fail("vertex count out of range");
  Graph g(n);
  if (semi == std::string_view::npos) return g;
  std::string_view rest = literal.substr(semi + 1);
  while (!rest.empty()) {
    std::size_t comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (item.empty()) continue;
    int u = 0;
    int v = 0;
    if (auto dash = item.find('-'); dash != std::string_view::npos) {
      auto a = item.substr(0, dash);
      auto b = item.substr(dash + 1);
      auto r1 = std::from_chars(a.data(), a.data() + a.size(), u);
      auto r2 = std::from_chars(b.data(), b.data() + b.size(), v);
      if (r1.ec != std::errc() || r2.ec != std::errc() || r1.ptr != a.data() + a.size() ||
          r2.ptr != b.data() + b.size()) {
        throw fail("bad pair '" + std::string(item) + "'");
      }
    } else if (item.size() == 2 && std::isdigit(static_cast<unsigned char>(item[0])) &&
               std::isdigit(static_cast<unsigned char>(item[1]))) {
      u = item[0] - '0';
      v = item[1] - '0';
    } else {
      throw fail("bad pair '" + std::string(item) + "'");
    }
    if (u < 1 || u > n || v < 1 || v > n) throw fail("vertex out of range in '" + std::string(item) + "'");
    if (u == v) throw fail("loop in '" + std::string(item) + "'");
    g.add_edge(u - 1, v - 1);
  }
  return g;
}

std::string format_graph_literal(const Graph& g) {
  std::string out = "n=" + std::to_string(g.order()) + ";";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(u + 1) + "-" + std::to_string(v + 1);
  }
  return out;
}

}  // namespace twograph
