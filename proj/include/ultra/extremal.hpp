#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ultra/rational.hpp"
#include "ultra/space.hpp"

namespace ultra {

/// Hamiltonian path x_1..x_n with weights[i] = d(x_i, x_{i+1}), pairwise
/// distinct and positive. One- and two-point paths count as characteristic.
struct CharacteristicPath {
  std::vector<std::string> order;
  std::vector<Rational> weights;
};

/// Hamiltonian cycle x_1..x_n, n >= 3, weights[i] = d(x_i, x_{i+1 mod n}).
/// Exactly two weights attain the maximum; the others are pairwise distinct
/// and positive.
struct CharacteristicCycle {
  std::vector<std::string> order;
  std::vector<Rational> weights;
};

/// |Sp X| = |X|.
bool is_extremal(const UltrametricSpace& space);

/// Recursive construction along the diametrical decomposition: the path of
/// the part holding the smallest index, then the other part's path, joined
/// by an edge of weight diam X. Throws NotExtremal.
CharacteristicPath characteristic_ham_path(const UltrametricSpace& space);

/// Closes the path with {x_1, x_n}. Throws TooSmall for fewer than 3 points.
CharacteristicCycle path_to_cycle(const CharacteristicPath& path,
                                  const UltrametricSpace& space);

/// Any rotation or reflection of a characteristic cycle is accepted.
/// Throws NotHamiltonian when `order` is not a permutation of the points,
/// TooSmall when |X| < 3.
bool is_characteristic_cycle(const std::vector<std::string>& order,
                             const UltrametricSpace& space);

/// Weights sequence test shared by cycles and their files: exactly two
/// maxima, the rest pairwise distinct, all positive.
bool has_characteristic_cycle_weights(const std::vector<Rational>& weights);

/// The unique ultrametric extending a path with injective positive
/// weights: d(x_i, x_j) = max(weights[i..j-1]). Points follow path order.
/// Throws NotInjective.
UltrametricSpace reconstruct_from_path(const CharacteristicPath& path);

/// Drops the first maximal edge and reconstructs from the remaining path;
/// the result agrees with every cycle edge. Throws NotCharacteristic.
UltrametricSpace reconstruct_from_cycle(const CharacteristicCycle& cycle);

/// Same, dropping the maximal edge with the given occurrence (0 or 1).
UltrametricSpace reconstruct_from_cycle(const CharacteristicCycle& cycle,
                                        std::size_t which_max);

/// Hamiltonian cycle of a subset with exactly two edges of maximal weight.
struct SubsetCycle {
  std::vector<std::string> order;
  std::vector<Rational> weights;
};

/// Splits the subset at the lowest common ancestor of its leaves in T_X and
/// concatenates the two halves. Throws NotStrictlyBinary, TooSmall,
/// UnknownPoint.
SubsetCycle two_max_cycle_for_subset(const UltrametricSpace& space,
                                     const std::vector<std::string>& subset);

}  // namespace ultra
