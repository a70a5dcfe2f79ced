#include "ultra/diametrical.hpp"


#include "ultra/errors.hpp"

namespace ultra {

DiametricalDecomposition diametrical_decompose(const UltrametricSpace& space) {
  const std::size_t n = space.size();
  if (n < 2) throw TooSmall("diametrical decomposition needs at least 2 points");

  DiametricalDecomposition out{space.diameter(), {}};
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> part_of(n, unassigned);
  for (std::size_t i = 0; i < n; ++i) {
    if (part_of[i] != unassigned) continue;
    part_of[i] = out.parts.size();
    std::vector<std::size_t> part{i};
    for (std::size_t j = i + 1; j < n; ++j) {
      if (part_of[j] == unassigned && space.d(i, j) < out.diameter) {
        part_of[j] = part_of[i];
        part.push_back(j);
      }
    }
    out.parts.push_back(std::move(part));
  }

  // The class of i was collected by closeness to i alone; it is an
  // equivalence class only if the relation is transitive.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool same = part_of[i] == part_of[j];
      if (same != (space.d(i, j) < out.diameter)) {
        throw InternalError("closeness below the diameter is not transitive");
      }
    }
  }
  if (out.k() < 2) throw InternalError("diametrical decomposition has one part");
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> diametrical_edges(
    const UltrametricSpace& space) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const Rational diam = space.diameter();
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i + 1; j < space.size(); ++j) {
      if (space.d(i, j) == diam) edges.emplace_back(i, j);
    }
  }
  return edges;
}

}  // namespace ultra
