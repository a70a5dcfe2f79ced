#pragma once

#include <string>
#include <vector>

#include "ultra/space.hpp"

namespace ultra::testing {

inline Rational r(long long num, long long den = 1) { return Rational(num, den); }

inline SemimetricSpace make_space(std::vector<std::string> labels,
                                  std::vector<std::vector<long long>> m) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : m) {
    std::vector<Rational> out;
    for (auto v : row) out.emplace_back(v);
    rows.push_back(std::move(out));
  }
  return SemimetricSpace(std::move(labels), std::move(rows));
}

// d(a,b)=1, d(a,c)=d(b,c)=2
inline UltrametricSpace I3() {
  return UltrametricSpace(make_space({"a", "b", "c"}, {{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}));
}

// equilateral, all sides 1
inline UltrametricSpace E3() {
  return UltrametricSpace(make_space({"a", "b", "c"}, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
}

// d(a,b)=3, d(a,c)=d(b,c)=7
inline UltrametricSpace J3() {
  return UltrametricSpace(make_space({"a", "b", "c"}, {{0, 3, 7}, {3, 0, 7}, {7, 7, 0}}));
}

// d(a,b)=1, d(b,c)=2, d(a,c)=3; not ultrametric
inline SemimetricSpace S3() {
  return make_space({"a", "b", "c"}, {{0, 1, 3}, {1, 0, 2}, {3, 2, 0}});
}

// Path p1-p2-p3-p4 with weights 1, 3, 2 closed up by hand.
inline UltrametricSpace U4() {
  return UltrametricSpace(make_space({"p1", "p2", "p3", "p4"}, {{0, 1, 3, 3},
                                                                 {1, 0, 3, 3},
                                                                 {3, 3, 0, 2},
                                                                 {3, 3, 2, 0}}));
}

inline UltrametricSpace single_point(const std::string& label = "x") {
  return UltrametricSpace(make_space({label}, {{0}}));
}

}  // namespace ultra::testing
