#include "doctest.h"
#include "support/oracles.hpp"
#include "ultra/census.hpp"
#include "ultra/diametrical.hpp"
#include "ultra/errors.hpp"
#include "ultra/extremal.hpp"
#include "ultra/reptree.hpp"

using namespace ultra;
using namespace ultra::testing;

TEST_SUITE_BEGIN("census");

TEST_CASE("kappa matches the published small values") {
  const std::vector<long> expected{1, 1, 1, 2, 5, 16, 61};
  for (std::size_t n = 1; n <= 7; ++n) CHECK(kappa(n) == expected[n - 1]);
  CHECK(kappa(0) == 0);
}

TEST_CASE("kappa against the boustrophedon zigzag numbers") {
  const auto zig = zigzag_numbers(40);
  CHECK(zig[9] == 7936);  // frozen from the oracle
  for (std::size_t n = 1; n <= 41; ++n) CHECK(kappa(n) == zig[n - 1]);
  CHECK(kappa(10) == 7936);
}

TEST_CASE("enumerate_extremal small cases") {
  const auto one = enumerate_extremal(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].label(0) == "p1");

  const auto four = enumerate_extremal(4);
  CHECK(four.size() == 2);

  const auto six = enumerate_extremal(6);
  CHECK(six.size() == 16);
  for (std::size_t i = 0; i < six.size(); ++i)
    for (std::size_t j = i + 1; j < six.size(); ++j) CHECK_FALSE(are_isometric(six[i], six[j]));
}

TEST_CASE("enumerated spaces are extremal with spectrum 0..n-1") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto spaces = enumerate_extremal(n);
    CHECK(spaces.size() == kappa(n));
    std::vector<Rational> want;
    for (std::size_t v = 0; v < n; ++v) want.emplace_back(static_cast<long long>(v));
    for (const auto& s : spaces) {
      CHECK(brute_is_ultrametric(s));
      CHECK(is_extremal(s));
      CHECK(spectrum_of(s).values == want);
      for (std::size_t i = 0; i < n; ++i) CHECK(s.label(i) == "p" + std::to_string(i + 1));
      if (n >= 2) CHECK(diametrical_decompose(s).k() == 2);
    }
  }
}

TEST_CASE("output is sorted, deterministic and independent of jobs") {
  const auto a = enumerate_extremal(7);
  const auto b = enumerate_extremal(7, EnumerationOptions{10, 4});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].same_matrix(b[i]));
  for (std::size_t i = 1; i < a.size(); ++i) {
    CHECK(canonical_code(build_representing_tree(a[i - 1]), CodeMode::isometry) <
          canonical_code(build_representing_tree(a[i]), CodeMode::isometry));
  }
}

TEST_CASE("pairwise non-weakly-similar up to 6") {
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto spaces = enumerate_extremal(n);
    std::set<std::string> shapes;
    for (const auto& s : spaces) shapes.insert(canonical_code(build_representing_tree(s), CodeMode::shape).code);
    CHECK(shapes.size() == spaces.size());
  }
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(enumerate_extremal(11), Oversize);
  CHECK_THROWS_AS(enumerate_extremal(5, EnumerationOptions{4, 1}), Oversize);
  CHECK_THROWS_AS(enumerate_extremal(0), TooSmall);
}

TEST_SUITE_END();
