#pragma once

#include <cstddef>
#include <vector>

#include "ultra/rational.hpp"
#include "ultra/space.hpp"

namespace ultra {

/// Complete multipartite form of the diametrical graph: points in different
/// parts are exactly diam X apart, points inside one part are closer.
struct DiametricalDecomposition {
  Rational diameter;
  /// Point indices, each part ascending; parts ordered by smallest index.
  std::vector<std::vector<std::size_t>> parts;

  std::size_t k() const { return parts.size(); }
};

/// Splits X into the classes of the relation d(x,y) < diam X.
/// Throws TooSmall when |X| < 2.
DiametricalDecomposition diametrical_decompose(const UltrametricSpace& space);

/// Edges {i, j}, i < j, of the diametrical graph, lexicographic.
std::vector<std::pair<std::size_t, std::size_t>> diametrical_edges(
    const UltrametricSpace& space);

}  // namespace ultra
