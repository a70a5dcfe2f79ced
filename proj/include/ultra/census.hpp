#pragma once

#include <cstddef>
#include <vector>

#include "ultra/rational.hpp"
#include "ultra/space.hpp"

namespace ultra {

/// Number of pairwise non-isometric extremal n-point spaces sharing one
/// spectrum, by the recurrence
///   k(n) = sum_{j=2}^{n-1} C(n-3, j-2) k(j) k(n-j),  k(1) = k(2) = 1.
/// Exact for every n >= 1; k(0) is 0.
BigInt kappa(std::size_t n);

inline constexpr std::size_t kDefaultEnumerationLimit = 10;

struct EnumerationOptions {
  std::size_t max_n = kDefaultEnumerationLimit;
  std::size_t jobs = 1;
};

/// Every extremal space on n points with spectrum {0, 1, ..., n-1}, one per
/// isometry class. Points are named p1..pn in canonical leaf order and the
/// list is sorted by isometry code. Throws Oversize when n > max_n.
std::vector<UltrametricSpace> enumerate_extremal(std::size_t n,
                                                 const EnumerationOptions& options = {});

}  // namespace ultra
