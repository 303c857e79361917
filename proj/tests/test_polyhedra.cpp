#include "doctest.h"
#include "error.hpp"
#include "polyhedra.hpp"

using namespace lierep;

namespace {

Cone triangle() { return cone_from_inequalities({{1, 1, -1}, {1, -1, 1}, {-1, 1, 1}}, {}, 3); }

}  // namespace

TEST_CASE("convex hull cones") {
  Cone q = convex_hull_cone({{1, 0}, {0, 1}});
  CHECK(q.facets == IntMatrix{{0, 1}, {1, 0}});
  CHECK(q.equations.empty());

  Cone planar = convex_hull_cone({{1, 1}, {1, -1}, {1, 0}});
  CHECK(planar.facets.size() == 2);
  CHECK(planar.rays.size() == 2);

  Cone half = convex_hull_cone({{1, 0}, {-1, 0}, {0, 1}});
  CHECK(half.facets == IntMatrix{{0, 1}});
  CHECK(half.lineality.size() == 1);
  CHECK(cone_dimension(half) == 2);

  Cone ray = convex_hull_cone({{1, 2, 3}, {2, 4, 6}});
  CHECK(cone_dimension(ray) == 1);
  CHECK(ray.rays == IntMatrix{{1, 2, 3}});

  Cone zero = convex_hull_cone({{0, 0, 0}});
  CHECK(cone_dimension(zero) == 0);
  CHECK(zero.rays.empty());
}

TEST_CASE("representations round-trip") {
  Cone t = triangle();
  CHECK(cone_dimension(t) == 3);
  CHECK(t.rays.size() == 3);
  Cone back = cone_from_generators(t.rays, t.lineality, 3);
  CHECK(back.facets == t.facets);
  CHECK(back.equations == t.equations);
  // A cone with a redundant inequality and one equation.
  Cone c = cone_from_inequalities({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}, {{0, 0, 1}}, 3);
  CHECK(c.facets.size() == 2);
  CHECK(cone_dimension(c) == 2);
  CHECK(cone_from_generators(c.rays, c.lineality, 3).facets == c.facets);
}

TEST_CASE("containment") {
  Cone t = triangle();
  CHECK(cone_contains(t, {1, 1, 2}) == Containment::boundary);
  CHECK(cone_contains(t, {1, 1, 1}) == Containment::interior);
  CHECK(cone_contains(t, {1, 1, 3}) == Containment::outside);
  Cone flat = cone_from_inequalities({{1, 0, 0}, {0, 1, 0}}, {{0, 0, 1}}, 3);
  CHECK(cone_contains(flat, {1, 1, 0}) == Containment::interior);
  CHECK(cone_contains(flat, {1, 1, 1}) == Containment::outside);
}

TEST_CASE("double description on the positive orthant") {
  ConeGenerators g = double_description({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, {}, 4);
  CHECK(g.lineality.empty());
  CHECK(g.rays.size() == 4);
  ConeGenerators all = double_description({}, {}, 2);
  CHECK(all.lineality.size() == 2);
}

TEST_CASE("support cones") {
  SupportCone a1 = support_cone(builtin_embedding("diagonal:A1"), 12);
  CHECK(a1.cone.facets == triangle().facets);
  CHECK(a1.report.stable_from <= 6);
  CHECK(!a1.report.gaps.empty());
  for (const auto& g : a1.report.gaps) CHECK((g[0] + g[1] + g[2]) % 2 != 0);

  SupportCone t1 = support_cone(builtin_embedding("torus:A1"), 8);
  CHECK(t1.cone.facets == IntMatrix{{1, -1}, {1, 1}});
  for (const auto& g : t1.report.gaps) CHECK((g[0] + g[1]) % 2 != 0);

  SupportCone z = support_cone(builtin_embedding("diagonal:A1"), 0);
  CHECK(cone_dimension(z.cone) == 0);
}
