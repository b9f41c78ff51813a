#include "twograph/figures.hpp"

#include <stdexcept>

namespace twograph {

const std::vector<NamedFigure>& named_figures() {
  static const std::vector<NamedFigure> figures = [] {
    std::vector<NamedFigure> f;
    auto add = [&](std::string name, std::string description, int n, std::initializer_list<std::pair<int, int>> edges) {
      f.push_back({std::move(name), std::move(description), graph_from_edges_1based(n, edges)});
    };
    add("x1-3", "3 vertices, no edges", 3, {});
    add("x2-3", "3 vertices, path 2-1-3", 3, {{1, 2}, {1, 3}});
    add("x3-3", "3 vertices, one edge", 3, {{1, 2}});
    add("x4-3", "3 vertices, triangle", 3, {{1, 2}, {1, 3}, {2, 3}});

    add("x1-4", "4 vertices, no edges", 4, {});
    add("x2-4", "4 vertices, one edge", 4, {{1, 2}});
    add("x3-4", "4 vertices, path on three vertices", 4, {{1, 2}, {2, 3}});
    add("x4-4", "4 vertices, perfect matching", 4, {{1, 2}, {3, 4}});
    add("x5-4", "4 vertices, triangle plus isolated vertex", 4, {{1, 2}, {2, 3}, {3, 1}});
    add("x6-4", "4 vertices, path 4-1-2-3", 4, {{1, 2}, {2, 3}, {1, 4}});

    add("t1-5", "5 vertices, one edge", 5, {{1, 2}});
    add("t2-5", "5 vertices, path on three vertices", 5, {{1, 2}, {2, 3}});
    add("t3-5", "5 vertices, two disjoint edges", 5, {{1, 2}, {3, 4}});
    add("t4-5", "5 vertices, path on four vertices", 5, {{1, 2}, {2, 3}, {3, 4}});
    add("t5-5", "5 vertices, triangle", 5, {{1, 2}, {2, 3}, {3, 1}});

    add("x1-6", "6 vertices, 4-cycle 1-2-4-3", 6, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
    add("x2-6", "6 vertices, path 3-1-2-4-5", 6, {{1, 2}, {1, 3}, {2, 4}, {4, 5}});

    add("y1-8", "8 vertices, cospectral triple member 1", 8,
        {{1, 2}, {1, 4}, {1, 6}, {2, 3}, {2, 4}, {4, 5}, {6, 7}, {6, 8}});
    add("y2-8", "8 vertices, cospectral triple member 2", 8,
        {{1, 2}, {1, 4}, {1, 8}, {2, 4}, {4, 5}, {5, 6}, {6, 7}, {6, 8}});
    add("y3-8", "8 vertices, cospectral triple member 3", 8,
        {{1, 2}, {1, 5}, {1, 7}, {3, 4}, {5, 6}, {5, 7}, {7, 8}});
    return f;
  }();
  return figures;
}

const Graph& named_figure(std::string_view name) {
  for (const NamedFigure& f : named_figures()) {
    if (f.name == name) return f.graph;
  }
  std::string known;
  for (const NamedFigure& f : named_figures()) known += (known.empty() ? "" : ", ") + f.name;
  throw std::invalid_argument("unknown figure '" + std::string(name) + "' (known: " + known + ")");
}

}  // namespace twograph
