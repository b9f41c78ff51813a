#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "twograph/graph.hpp"

namespace twograph {

enum class GraphFormat { edge_list, adjacency, seidel, graph6 };

GraphFormat parse_format_name(std::string_view name);
std::string_view format_name(GraphFormat f);

enum class ParseErrorKind {
  malformed_header,
  bad_token,
  out_of_range,
  loop,
  wrong_row_length,
  wrong_row_count,
  asymmetric,
  bad_diagonal,
  bad_entry,
  bad_graph6,
};

/// Parse failure with a 1-based line/column position (0 when not applicable).
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, int column, const std::string& what);
  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  ParseErrorKind kind_;
  int line_;
  int column_;
};

Graph parse_graph(std::string_view text, GraphFormat format);
std::string format_graph(const Graph& g, GraphFormat format);

/// Seidel text straight to a matrix (no round-trip through Graph).
SeidelMatrix parse_seidel(std::string_view text);
std::string format_seidel(const SeidelMatrix& s);

/// Guesses edge-list, graph6, or Seidel (a matrix with a negative entry); a
/// 0/1 matrix is ambiguous and needs an explicit format.
GraphFormat detect_format(std::string_view text);

/// Inline literal "n=6;12,13,24,34" (1-based; pairs either as two digits or "u-v").
Graph parse_graph_literal(std::string_view literal);
/// Always writes the "u-v" pair form.
std::string format_graph_literal(const Graph& g);

}  // namespace twograph
