#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ultra/space.hpp"

namespace ultra::testing {

using Rng = std::mt19937_64;

inline std::vector<std::string> point_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

/// Random ultrametric from a random hierarchy: each cluster of m >= 2 points
/// is cut into 2..4 parts (2 most often) and every part gets a label drawn
/// strictly below its parent's. Small label ranges make ties frequent, so
/// both extremal and non-extremal spaces come out. `binary_only` always
/// cuts in two.
inline UltrametricSpace random_tree_ultrametric(Rng& rng, std::size_t n,
                                                bool binary_only = false) {
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  std::vector<std::size_t> pts(n);
  std::iota(pts.begin(), pts.end(), 0);
  std::shuffle(pts.begin(), pts.end(), rng);

  auto split = [&](auto&& self, std::vector<std::size_t> members, long long label) -> void {
    if (members.size() < 2) return;
    std::uniform_int_distribution<int> coin(0, 9);
    std::size_t k = 2;
    if (!binary_only && members.size() >= 3 && coin(rng) >= 6) {
      k = std::min<std::size_t>(members.size(), coin(rng) >= 7 ? 4 : 3);
    }
    // k nonempty parts: k-1 distinct cut positions in 1..m-1
    std::vector<std::size_t> cuts(members.size() - 1);
    std::iota(cuts.begin(), cuts.end(), 1);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(k - 1);
    std::sort(cuts.begin(), cuts.end());
    cuts.insert(cuts.begin(), 0);
    cuts.push_back(members.size());
    std::vector<std::vector<std::size_t>> parts;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      parts.emplace_back(members.begin() + static_cast<long>(cuts[i]),
                         members.begin() + static_cast<long>(cuts[i + 1]));
    }
    for (std::size_t a = 0; a < parts.size(); ++a) {
      for (std::size_t b = a + 1; b < parts.size(); ++b) {
        for (auto x : parts[a]) {
          for (auto y : parts[b]) m[x][y] = m[y][x] = label;
        }
      }
    }
    for (auto& part : parts) {
      if (part.size() < 2) continue;
      const auto lo = static_cast<long long>(part.size()) - 1;
      if (lo > label - 1) throw std::logic_error("generator ran out of labels");
      std::uniform_int_distribution<long long> pick(lo, label - 1);
      self(self, part, pick(rng));
    }
  };
  std::uniform_int_distribution<long long> top(static_cast<long long>(n) - 1,
                                               static_cast<long long>(n) + 2);
  split(split, pts, std::max<long long>(top(rng), 1));
  return UltrametricSpace(SemimetricSpace(point_names(n), std::move(m)));
}

/// Random semimetric with integer distances in [1, max_value]; no triangle
/// inequality of any kind.
inline SemimetricSpace random_semimetric(Rng& rng, std::size_t n, long long max_value) {
  std::uniform_int_distribution<long long> pick(1, max_value);
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) m[i][j] = m[j][i] = pick(rng);
  }
  return SemimetricSpace(point_names(n), std::move(m));
}

}  // namespace ultra::testing
