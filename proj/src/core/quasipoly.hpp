#pragma once

#include <map>
#include <optional>
#include <vector>

#include "branching.hpp"
#include "rational.hpp"

namespace lierep {

// k -> pieces[k mod period](k), each piece a coefficient list c0 + c1 k + ...
struct QuasiPolynomial {
  int period = 1;
  int degree = 0;
  std::vector<RationalVector> pieces;

  friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;
};

Rational evaluate_quasi_polynomial(const QuasiPolynomial& qp, Int k);

// Smallest period, then smallest degree, reproducing every sample exactly.
// Empty when nothing within the bounds fits.
std::optional<QuasiPolynomial> fit_quasi_polynomial(const std::map<Int, Rational>& samples, int max_degree,
                                                    int max_period);

// (m(k big, k small))_{k = 0..kmax}
std::vector<Int> stretch_function(const Embedding& emb, const Weight& big, const Weight& small, int kmax);

}  // namespace lierep
