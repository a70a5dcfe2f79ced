#pragma once

// Brute-force references. Nothing here calls into the library's algorithms;
// only the space container is shared.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "ultra/space.hpp"

namespace ultra::testing {

/// All ordered triples, d(x,y) <= max(d(x,z), d(z,y)).
inline bool brute_is_ultrametric(const SemimetricSpace& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      for (std::size_t k = 0; k < s.size(); ++k)
        if (s.d(i, j) > std::max(s.d(i, k), s.d(k, j))) return false;
  return true;
}

inline std::size_t brute_spectrum_size(const SemimetricSpace& s) {
  std::set<Rational> values;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) values.insert(s.d(i, j));
  return values.size();
}

/// Distances replaced by their rank in the sorted distinct values; lets the
/// enumeration oracles compare small integers.
inline std::vector<std::vector<int>> rank_matrix(const SemimetricSpace& s) {
  std::set<Rational> values;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) values.insert(s.d(i, j));
  std::vector<Rational> sorted(values.begin(), values.end());
  std::vector<std::vector<int>> out(s.size(), std::vector<int>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      out[i][j] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), s.d(i, j)) -
                                   sorted.begin());
  return out;
}

/// Visits every Hamiltonian path once per undirected ordering (n!/2 for
/// n >= 2). Return false from `fn` to stop early.
inline void for_each_undirected_ordering(std::size_t n,
                                         const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (n >= 2 && p.front() > p.back()) continue;
    if (!fn(p)) return;
  } while (std::next_permutation(p.begin(), p.end()));
}

/// Visits every Hamiltonian cycle once ((n-1)!/2 for n >= 3): point 0
/// first, reflections skipped.
inline void for_each_cycle(std::size_t n,
                           const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (n >= 3 && p[1] > p[n - 1]) continue;
    if (!fn(p)) return;
  } while (std::next_permutation(p.begin() + 1, p.end()));
}

inline bool brute_characteristic_path_exists(const SemimetricSpace& s) {
  const auto ranks = rank_matrix(s);
  bool found = false;
  for_each_undirected_ordering(s.size(), [&](const std::vector<std::size_t>& p) {
    std::set<int> seen;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < p.size() && ok; ++i) ok = seen.insert(ranks[p[i]][p[i + 1]]).second;
    if (ok) found = true;
    return !found;
  });
  return found;
}

inline bool brute_characteristic_cycle_exists(const SemimetricSpace& s) {
  const auto ranks = rank_matrix(s);
  const std::size_t n = s.size();
  bool found = false;
  for_each_cycle(n, [&](const std::vector<std::size_t>& p) {
    std::vector<int> w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(ranks[p[i]][p[(i + 1) % n]]);
    const int top = *std::max_element(w.begin(), w.end());
    std::multiset<int> rest;
    for (int x : w) if (x != top) rest.insert(x);
    std::set<int> distinct(rest.begin(), rest.end());
    if (n - rest.size() == 2 && distinct.size() == rest.size()) found = true;
    return !found;
  });
  return found;
}

/// Smallest number of maximal-weight edges over all Hamiltonian cycles.
inline std::size_t min_max_edge_count_over_cycles(const SemimetricSpace& s) {
  const auto ranks = rank_matrix(s);
  const std::size_t n = s.size();
  std::size_t best = n;
  for_each_cycle(n, [&](const std::vector<std::size_t>& p) {
    std::vector<int> w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(ranks[p[i]][p[(i + 1) % n]]);
    const int top = *std::max_element(w.begin(), w.end());
    best = std::min<std::size_t>(best, static_cast<std::size_t>(std::count(w.begin(), w.end(), top)));
    return true;
  });
  return best;
}

/// Number of ultrametrics on path.size() points that agree with the path
/// edges, when every free pair takes a value from `candidates`.
inline std::size_t count_ultrametric_extensions(const std::vector<Rational>& path_weights,
                                                const std::vector<Rational>& candidates) {
  const std::size_t n = path_weights.size() + 1;
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, Rational(-1)));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) d[i][i + 1] = d[i + 1][i] = path_weights[i];
  std::vector<std::pair<std::size_t, std::size_t>> free_pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 2; j < n; ++j) free_pairs.emplace_back(i, j);

  auto consistent = [&](std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < n; ++c) {
      if (d[a][c] < 0 || d[b][c] < 0) continue;
      const Rational& x = d[a][b];
      const Rational& y = d[a][c];
      const Rational& z = d[b][c];
      if (x > std::max(y, z) || y > std::max(x, z) || z > std::max(x, y)) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!consistent(i, i + 1)) return 0;
  }
  std::size_t count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == free_pairs.size()) {
      ++count;
      return;
    }
    const auto [a, b] = free_pairs[k];
    for (const auto& v : candidates) {
      d[a][b] = d[b][a] = v;
      if (consistent(a, b)) go(k + 1);
    }
    d[a][b] = d[b][a] = Rational(-1);
  };
  go(0);
  return count;
}

/// Euler zigzag numbers a(0..n) by the boustrophedon (Seidel) triangle.
inline std::vector<BigInt> zigzag_numbers(std::size_t n) {
  std::vector<BigInt> out{1};
  std::vector<BigInt> row{1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<BigInt> next(m + 1);
    next[0] = 0;
    for (std::size_t k = 1; k <= m; ++k) next[k] = next[k - 1] + row[m - k];
    row = std::move(next);
    out.push_back(row[m]);
  }
  return out;
}

using LabelSet = std::set<std::string>;

/// Every center against every radius in the value set, by label.
inline std::set<LabelSet> brute_balls(const SemimetricSpace& s,
                                      const std::vector<Rational>& radii) {
  std::set<LabelSet> out;
  for (std::size_t t = 0; t < s.size(); ++t) {
    for (const auto& r : radii) {
      LabelSet ball;
      for (std::size_t x = 0; x < s.size(); ++x)
        if (s.d(x, t) <= r) ball.insert(s.label(x));
      out.insert(ball);
    }
  }
  return out;
}

inline std::vector<Rational> all_distance_values(const SemimetricSpace& s) {
  std::set<Rational> v;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) v.insert(s.d(i, j));
  return {v.begin(), v.end()};
}

inline bool strict_subset(const LabelSet& a, const LabelSet& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Inclusion pairs minus those with an intermediate element.
inline std::set<std::pair<LabelSet, LabelSet>> brute_covering_pairs(const std::set<LabelSet>& sets) {
  std::set<std::pair<LabelSet, LabelSet>> out;
  for (const auto& a : sets)
    for (const auto& b : sets) {
      if (!strict_subset(a, b)) continue;
      bool between = false;
      for (const auto& c : sets)
        if (strict_subset(a, c) && strict_subset(c, b)) between = true;
      if (!between) out.emplace(a, b);
    }
  return out;
}

}  // namespace ultra::testing
