#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "characters.hpp"
#include "rational.hpp"

namespace lierep {

// Torus weights of a unitary representation of the group of rs.
struct LinearRep {
  RootSystemPtr rs;
  std::vector<Weight> weights;
};

// Sym^0 .. Sym^D of a representation.
using GradedCharacter = std::vector<FormalCharacter>;

// Sum over w in W of t^{w lambda} / prod_{alpha > 0} (1 - t^{-w alpha}).
Rational fixed_point_character_value(const RootSystemPtr& rs, const Weight& lambda, const TorusPoint& t);

// True if t^alpha = 1 for some root alpha.
bool is_singular_point(const RootSystem& rs, const TorusPoint& t);

// Positive rationals with numerator and denominator <= 97, regular for rs.
// `rejected` counts singular draws.
TorusPoint sample_regular_point(const RootSystem& rs, std::mt19937_64& rng, std::size_t* rejected = nullptr);

// Sym(N) graded by the pairing with beta, pieces k = 0..D. Every weight must
// pair positively with beta (dual lattice coordinates; default is the first
// basis direction), which makes each piece finite.
GradedCharacter atiyah_index_truncation(const LinearRep& rep, int max_degree,
                                        std::optional<std::vector<Int>> beta = std::nullopt);

struct MomentZeroResult {
  bool origin_only = false;
  // origin_only: xi with <a_j, xi> > 0 for every weight a_j.
  std::vector<Int> witness;
  // otherwise: nonnegative, nonzero y with sum_j y_j a_j = 0.
  std::vector<Int> combination;
};

MomentZeroResult moment_zero_is_origin(const LinearRep& rep);
bool check_certificate(const LinearRep& rep, const MomentZeroResult& r);

// dim [Sym^d(W^*)]^K
Int sym_invariant_dimension(const LinearRep& rep, int d);
// Degrees 0..max_degree at once.
std::vector<Int> sym_invariant_dimensions(const LinearRep& rep, int max_degree);

}  // namespace lierep
