#include "localization.hpp"

#include "error.hpp"
#include "polyhedra.hpp"

namespace lierep {

bool is_singular_point(const RootSystem& rs, const TorusPoint& t) {
  for (const auto& a : rs.positive_roots())
    if (monomial_value(a, t) == 1) return true;
  return false;
}

Rational fixed_point_character_value(const RootSystemPtr& rs, const Weight& lambda, const TorusPoint& t) {
  if (lambda.size() != rs->rank()) fail(ErrorCode::invalid_argument, "weight " + lambda.str() + " has wrong length");
  if (!rs->is_dominant(lambda)) fail(ErrorCode::not_dominant, "weight " + lambda.str() + " is not dominant");
  if (t.values.size() != rs->rank()) fail(ErrorCode::invalid_argument, "torus point has wrong length");
  for (const auto& x : t.values)
    if (x == 0) fail(ErrorCode::invalid_argument, "torus point has a zero entry");
  for (const auto& a : rs->positive_roots())
    if (monomial_value(a, t) == 1)
      fail(ErrorCode::singular_point, "t^alpha = 1 for the root alpha = " + a.str());
  Rational total = 0;
  for (const auto& w : weyl_group_elements(*rs)) {
    Rational den = 1;
    for (const auto& a : rs->positive_roots()) den *= 1 - monomial_value(-apply(*rs, w, a), t);
    total += monomial_value(apply(*rs, w, lambda), t) / den;
  }
  return total;
}

TorusPoint sample_regular_point(const RootSystem& rs, std::mt19937_64& rng, std::size_t* rejected) {
  std::uniform_int_distribution<int> d(1, 97);
  while (true) {
    TorusPoint t;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      Rational q(d(rng), d(rng));
      q.canonicalize();
      t.values.push_back(q);
    }
    if (!is_singular_point(rs, t)) return t;
    if (rejected) ++*rejected;
  }
}

namespace {

void check_rep(const LinearRep& rep) {
  if (!rep.rs) fail(ErrorCode::invalid_argument, "representation without a root system");
  for (const auto& w : rep.weights)
    if (w.size() != rep.rs->rank()) fail(ErrorCode::invalid_argument, "weight " + w.str() + " has wrong length");
}

bool weyl_invariant_multiset(const LinearRep& rep) {
  FormalCharacter ch(rep.rs);
  for (const auto& w : rep.weights) ch.add(w, 1);
  return is_weyl_invariant(ch);
}

}  // namespace

GradedCharacter atiyah_index_truncation(const LinearRep& rep, int max_degree, std::optional<std::vector<Int>> beta) {
  check_rep(rep);
  if (max_degree < 0) fail(ErrorCode::invalid_argument, "negative degree");
  std::vector<Int> b = beta.value_or(std::vector<Int>{});
  if (!beta) {
    b.assign(rep.rs->rank(), 0);
    b[0] = 1;
  }
  if (b.size() != rep.rs->rank()) fail(ErrorCode::invalid_argument, "beta has wrong length");
  for (const auto& w : rep.weights) {
    Int p = 0;
    for (std::size_t i = 0; i < b.size(); ++i) p += w[i] * b[i];
    if (p <= 0) fail(ErrorCode::not_locally_finite, "index not locally finite for this beta: weight " + w.str());
  }
  // Graded by the beta-pairing. Every weight pairs to at least 1, so
  // polynomial degree d contributes only to pieces k >= d.
  auto pairing = [&](const Weight& w) {
    Int p = 0;
    for (std::size_t i = 0; i < b.size(); ++i) p += w[i] * b[i];
    return p;
  };
  GradedCharacter out(static_cast<std::size_t>(max_degree) + 1, FormalCharacter(rep.rs));
  for (const auto& sym : sym_power_series(rep.rs, rep.weights, max_degree))
    for (const auto& [w, m] : sym.support()) {
      const Int k = pairing(w);
      if (k <= max_degree) out[static_cast<std::size_t>(k)].add(w, m);
    }
  return out;
}

MomentZeroResult moment_zero_is_origin(const LinearRep& rep) {
  check_rep(rep);
  const std::size_t m = rep.weights.size(), r = rep.rs->rank();
  MomentZeroResult out;
  if (m == 0) {
    out.origin_only = true;
    out.witness.assign(r, 0);
    return out;
  }
  IntMatrix ineq(m, std::vector<Int>(m, 0));
  for (std::size_t j = 0; j < m; ++j) ineq[j][j] = 1;
  IntMatrix eq(r, std::vector<Int>(m, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m; ++j) eq[i][j] = rep.weights[j][i];
  ConeGenerators zero_sums = double_description(ineq, eq, m);
  if (!zero_sums.rays.empty()) {
    out.combination = zero_sums.rays.front();
    for (const auto& ray : zero_sums.rays) out.combination = std::min(out.combination, ray);
    return out;
  }
  // No zero combination: the weights span a pointed cone and xi is the sum
  // of the extreme rays of its dual.
  IntMatrix points;
  for (const auto& w : rep.weights) points.push_back(w.coords());
  ConeGenerators dual = double_description(points, {}, r);
  out.origin_only = true;
  out.witness.assign(r, 0);
  for (const auto& ray : dual.rays)
    for (std::size_t i = 0; i < r; ++i) out.witness[i] += ray[i];
  return out;
}

bool check_certificate(const LinearRep& rep, const MomentZeroResult& res) {
  const std::size_t r = rep.rs->rank();
  if (res.origin_only) {
    if (res.witness.size() != r) return false;
    for (const auto& w : rep.weights) {
      Int p = 0;
      for (std::size_t i = 0; i < r; ++i) p += w[i] * res.witness[i];
      if (p <= 0) return false;
    }
    return true;
  }
  if (res.combination.size() != rep.weights.size()) return false;
  bool nonzero = false;
  std::vector<Int> sum(r, 0);
  for (std::size_t j = 0; j < rep.weights.size(); ++j) {
    if (res.combination[j] < 0) return false;
    if (res.combination[j] > 0) nonzero = true;
    for (std::size_t i = 0; i < r; ++i) sum[i] += res.combination[j] * rep.weights[j][i];
  }
  for (Int s : sum)
    if (s != 0) return false;
  return nonzero;
}

std::vector<Int> sym_invariant_dimensions(const LinearRep& rep, int max_degree) {
  check_rep(rep);
  if (!weyl_invariant_multiset(rep))
    fail(ErrorCode::not_a_character, "representation weights are not Weyl-invariant");
  std::vector<Weight> dual;
  for (const auto& w : rep.weights) dual.push_back(-w);
  std::vector<Int> out;
  for (const auto& ch : sym_power_series(rep.rs, dual, max_degree)) out.push_back(invariant_multiplicity(ch));
  return out;
}

Int sym_invariant_dimension(const LinearRep& rep, int d) { return sym_invariant_dimensions(rep, d).back(); }

}  // namespace lierep
