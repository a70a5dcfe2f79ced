#pragma once

#include <cstddef>
#include <memory>

#include "ultra/ballposet.hpp"
#include "ultra/rational.hpp"
#include "ultra/reptree.hpp"
#include "ultra/space.hpp"

namespace ultra {

/// Bijective map W -> Y whose distortion max |d(x,y) - rho(Fx, Fy)| is
/// `max_deviation <= epsilon`.
struct EpsIsometryWitness {
  PointMap map;
  Rational epsilon;
  Rational max_deviation;
};

struct LiftResult {
  std::shared_ptr<const UltrametricSpace> lifted;
  PointMap projection;  // lifted -> source, surjective and ball-preserving
  RepTree tree;
};

/// Lifts are unfoldings of the ball diagram and grow with its number of
/// maximal chains; larger lifts are refused with Oversize.
inline constexpr std::size_t kMaxLiftPoints = 4096;

/// Unfolds the Hasse diagram of the balls into a tree (root = X, children =
/// direct predecessors, singletons are leaves), names the leaves y1..yN in
/// depth-first order and realizes the tree with label(v) = height(v).
/// Throws EmptySpace, Oversize.
LiftResult lift_semimetric(const SemimetricSpace& space);

struct Approximation {
  std::shared_ptr<const UltrametricSpace> space;  // extremal
  EpsIsometryWitness witness;                     // space -> input, identity on names
};

/// Binarizes T_Y (children in canonical order, folded left to right) and
/// lowers repeated labels by multiples of delta = min(eps, g) / (2m), where
/// g is the smallest positive gap among labels and parent-child labels of
/// T_Y and m the internal node count after binarization. Throws BadEpsilon.
Approximation approximate_extremal(const UltrametricSpace& space, const Rational& epsilon);

struct PipelineResult {
  LiftResult lift;            // Y and F: Y -> X
  Approximation approximation;  // Z and Phi: Z -> Y
  /// F(Phi(z)) for every point z of Z, as indices of X.
  std::vector<std::size_t> composite;
};

/// X = F(Phi(Z)) with Z extremal. Throws EmptySpace, BadEpsilon.
PipelineResult compose_pipeline(const SemimetricSpace& space, const Rational& epsilon);

/// max over source pairs of |d(x,y) - rho(Fx, Fy)|. Throws NotSurjective.
Rational eps_isometry_deviation(const PointMap& map);

}  // namespace ultra
