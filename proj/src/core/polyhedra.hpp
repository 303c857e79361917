#pragma once

#include <vector>

#include "branching.hpp"
#include "integer_linear.hpp"

namespace lierep {

// Generators of {x : a.x >= 0 for a in inequalities, e.x = 0 for e in equations}.
struct ConeGenerators {
  IntMatrix lineality;
  IntMatrix rays;
};

// Exact double description over the integers.
ConeGenerators double_description(const IntMatrix& inequalities, const IntMatrix& equations, std::size_t dim);

// Rational polyhedral cone in both representations. All vectors are
// primitive integer vectors in canonical form: facets are reduced modulo the
// equation span and rays modulo the lineality space (orthogonal projection),
// then sorted.
struct Cone {
  std::size_t ambient_dim = 0;
  IntMatrix facets;     // f.x >= 0
  IntMatrix equations;  // e.x = 0, Hermite basis
  IntMatrix rays;
  IntMatrix lineality;  // Hermite basis
  IntMatrix lattice;    // Hermite basis of the Z-span of the generating points

  friend bool operator==(const Cone&, const Cone&) = default;
};

Cone convex_hull_cone(const IntMatrix& points);
// H-representation recomputed from the V-representation, and vice versa.
Cone cone_from_generators(const IntMatrix& rays, const IntMatrix& lineality, std::size_t dim);
Cone cone_from_inequalities(const IntMatrix& facets, const IntMatrix& equations, std::size_t dim);

enum class Containment { interior, boundary, outside };
// Interior means relative interior for a cone that is not full-dimensional.
Containment cone_contains(const Cone& cone, const std::vector<Int>& point);
std::size_t cone_dimension(const Cone& cone);

struct SaturationReport {
  int bound = 0;
  // Number of facets of the hull of the support with big coordinates <= b, b = 0..bound.
  std::vector<std::size_t> facet_counts;
  // Smallest b from which the facet list no longer changes.
  int stable_from = 0;
  // Lattice points inside the cone where the multiplicity vanishes.
  std::vector<std::vector<Int>> gaps;
};

struct SupportCone {
  Cone cone;
  SaturationReport report;
  BranchingTable table;
};

// Hull of {(big, small) : m(big, small) > 0, big coordinates <= bound}.
SupportCone support_cone(const Embedding& emb, int bound);

}  // namespace lierep
