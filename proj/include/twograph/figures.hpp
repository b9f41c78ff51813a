#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "twograph/graph.hpp"

namespace twograph {

/// Labeled example graphs, built from 1-based figure edge lists.
struct NamedFigure {
  std::string name;
  std::string description;
  Graph graph;
};

/// 3-vertex X1..X4, 4-vertex X1..X6, the five 5-vertex infinity-norm class
/// representatives, the 6-vertex pair X1/X2 and the cospectral 8-vertex
/// Y1/Y2/Y3.
const std::vector<NamedFigure>& named_figures();

/// Throws std::invalid_argument listing the known names.
const Graph& named_figure(std::string_view name);

}  // namespace twograph
