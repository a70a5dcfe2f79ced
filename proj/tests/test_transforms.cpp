#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "ultra/errors.hpp"
#include "ultra/extremal.hpp"
#include "ultra/transforms.hpp"

using namespace ultra;
using namespace ultra::testing;

namespace {

std::vector<std::string> projection_labels(const LiftResult& lift) {
  std::vector<std::string> out;
  for (std::size_t y = 0; y < lift.lifted->size(); ++y) {
    out.push_back(lift.projection.to->label(lift.projection(y)));
  }
  return out;
}

// Image of every source ball must be a target ball (checked without
// check_ball_preserving).
bool images_are_balls(const PointMap& f) {
  const auto target = brute_balls(*f.to, all_distance_values(*f.to));
  for (const auto& ball : brute_balls(*f.from, all_distance_values(*f.from))) {
    LabelSet image;
    for (const auto& x : ball) image.insert(f.to->label(f(f.from->index_of(x))));
    if (!target.contains(image)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("transforms");

TEST_CASE("lift S3 duplicates the shared point") {
  const auto lift = lift_semimetric(S3());
  CHECK(lift.lifted->size() == 4);
  CHECK(lift.lifted->labels() == std::vector<std::string>{"y1", "y2", "y3", "y4"});
  CHECK(projection_labels(lift) == std::vector<std::string>{"a", "b", "b", "c"});
  CHECK(lift.projection.is_surjective());
  CHECK(check_ball_preserving(lift.projection));
  CHECK(images_are_balls(lift.projection));
  CHECK(check_arc_surjective_hom(lift.projection) == DiagramMapKind::hom_arc_surjective);
  // heights: root 2, both 2-point balls 1
  CHECK(lift.lifted->d(0, 1) == 1);
  CHECK(lift.lifted->d(2, 3) == 1);
  CHECK(lift.lifted->d(0, 3) == 2);
}

TEST_CASE("lift of I3 is a bijection") {
  const auto lift = lift_semimetric(I3());
  CHECK(lift.lifted->size() == 3);
  CHECK(lift.projection.is_injective());
  CHECK(lift.projection.is_surjective());
  CHECK(check_arc_surjective_hom(lift.projection) == DiagramMapKind::iso);
}

TEST_CASE("lift of a point") {
  const auto lift = lift_semimetric(single_point("q"));
  CHECK(lift.lifted->size() == 1);
  CHECK(projection_labels(lift) == std::vector<std::string>{"q"});
  CHECK_THROWS_AS(lift_semimetric(SemimetricSpace({}, {})), EmptySpace);
}

TEST_CASE("approximate_extremal E3") {
  const auto result = approximate_extremal(E3(), r(1, 2));
  const auto& w = *result.space;
  // g = 1, m = 2, delta = min(1/2, 1) / 4 = 1/8
  CHECK(w.d(w.index_of("a"), w.index_of("b")) == r(7, 8));
  CHECK(w.d(w.index_of("a"), w.index_of("c")) == 1);
  CHECK(w.d(w.index_of("b"), w.index_of("c")) == 1);
  CHECK(result.witness.max_deviation == r(1, 8));
  CHECK(result.witness.max_deviation <= r(1, 2));
  CHECK(spectrum_of(w).size() == 3);
  CHECK(is_extremal(w));
  CHECK(eps_isometry_deviation(result.witness.map) == r(1, 8));
}

TEST_CASE("extremal inputs are returned unchanged") {
  for (const auto& eps : {r(1, 1000), r(1), r(5)}) {
    for (const auto& y : {I3(), U4(), single_point()}) {
      const auto result = approximate_extremal(y, eps);
      CHECK(result.space->same_matrix(y));
      CHECK(result.witness.max_deviation == 0);
    }
  }
}

TEST_CASE("approximation errors") {
  CHECK_THROWS_AS(approximate_extremal(E3(), r(0)), BadEpsilon);
  CHECK_THROWS_AS(approximate_extremal(E3(), r(-1)), BadEpsilon);
  CHECK_THROWS_AS(compose_pipeline(S3(), r(0)), BadEpsilon);
}

TEST_CASE("eps_isometry_deviation") {
  auto i3 = std::make_shared<const SemimetricSpace>(I3());
  CHECK(eps_isometry_deviation(PointMap(i3, i3, {0, 1, 2})) == 0);
  auto two = std::make_shared<const SemimetricSpace>(make_space({"x", "y"}, {{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(eps_isometry_deviation(PointMap(two, two, {0, 0})), NotSurjective);
}

TEST_CASE("compose_pipeline examples") {
  SUBCASE("S3") {
    const auto s3 = S3();
    const auto p = compose_pipeline(s3, r(1, 2));
    CHECK(p.approximation.space->size() == 4);
    CHECK(is_extremal(*p.approximation.space));
    std::set<std::size_t> image(p.composite.begin(), p.composite.end());
    CHECK(image == std::set<std::size_t>{0, 1, 2});
  }
  SUBCASE("point") {
    const auto p = compose_pipeline(single_point(), r(3));
    CHECK(p.approximation.space->size() == 1);
    CHECK(p.composite == std::vector<std::size_t>{0});
  }
  SUBCASE("I3") {
    const auto p = compose_pipeline(I3(), r(1));
    CHECK(p.approximation.space->same_matrix(*p.lift.lifted));
    std::set<std::size_t> image(p.composite.begin(), p.composite.end());
    CHECK(image.size() == 3);
  }
}

TEST_CASE("lift properties on generated semimetric spaces") {
  Rng rng(61);
  for (int trial = 0; trial < 80; ++trial) {
    const auto s = random_semimetric(rng, 1 + trial % 6, 2 + trial % 5);
    const auto lift = lift_semimetric(s);
    CHECK(lift.projection.is_surjective());
    CHECK(images_are_balls(lift.projection));
    const auto kind = check_arc_surjective_hom(lift.projection);
    CHECK((kind == DiagramMapKind::hom_arc_surjective || kind == DiagramMapKind::iso));
    // lifted distances are realized by the tree
    for (std::size_t i = 0; i < lift.lifted->size(); ++i)
      for (std::size_t j = 0; j < lift.lifted->size(); ++j)
        CHECK(tree_distance(lift.tree, lift.lifted->label(i), lift.lifted->label(j)) ==
              lift.lifted->d(i, j));
  }
}

TEST_CASE("approximation properties on generated ultrametric spaces") {
  Rng rng(67);
  for (int trial = 0; trial < 150; ++trial) {
    const auto y = random_tree_ultrametric(rng, 1 + trial % 9);
    for (const auto& eps : {r(1, 1000), r(1), r(1, 3)}) {
      const auto a = approximate_extremal(y, eps);
      CHECK(a.space->size() == y.size());
      CHECK(a.space->labels() == y.labels());
      CHECK(brute_spectrum_size(*a.space) == y.size());
      CHECK(brute_is_ultrametric(*a.space));
      CHECK(a.witness.map.is_injective());
      CHECK(a.witness.max_deviation <= eps);
      CHECK(a.witness.max_deviation < eps / 2);
      const auto again = approximate_extremal(y, eps);
      CHECK(again.space->same_matrix(*a.space));
      const auto tree = build_representing_tree(*a.space);
      for (const auto& node : tree.nodes()) {
        if (!node.is_leaf()) CHECK(node.label > 0);
      }
    }
  }
}

TEST_SUITE_END();
