#include "quasipoly.hpp"

#include "error.hpp"

namespace lierep {

Rational evaluate_quasi_polynomial(const QuasiPolynomial& qp, Int k) {
  Int r = k % qp.period;
  if (r < 0) r += qp.period;
  const auto& c = qp.pieces[static_cast<std::size_t>(r)];
  Rational v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * k + c[i];
  return v;
}

namespace {

// Coefficients of the polynomial of degree < xs.size() through the points, by
// solving the Vandermonde system exactly.
RationalVector interpolate(const std::vector<Int>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  RationalMatrix v(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    Rational p = 1;
    for (std::size_t j = 0; j < n; ++j, p *= xs[i]) v[i][j] = p;
  }
  RationalMatrix vinv = inverse(v);
  RationalVector c(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i] += vinv[i][j] * ys[j];
  return c;
}

}  // namespace

std::optional<QuasiPolynomial> fit_quasi_polynomial(const std::map<Int, Rational>& samples, int max_degree,
                                                    int max_period) {
  if (max_degree < 0 || max_period < 1) fail(ErrorCode::invalid_argument, "degree must be >= 0 and period >= 1");
  const auto needed = static_cast<std::size_t>(max_degree + 1) * static_cast<std::size_t>(max_period);
  if (samples.size() < needed)
    fail(ErrorCode::insufficient_samples, "need at least " + std::to_string(needed) + " samples, got " +
                                              std::to_string(samples.size()));
  for (int period = 1; period <= max_period; ++period) {
    std::vector<std::vector<std::pair<Int, Rational>>> classes(static_cast<std::size_t>(period));
    for (const auto& [k, v] : samples) {
      Int r = k % period;
      if (r < 0) r += period;
      classes[static_cast<std::size_t>(r)].emplace_back(k, v);
    }
    for (int degree = 0; degree <= max_degree; ++degree) {
      QuasiPolynomial qp{period, degree, {}};
      bool ok = true;
      for (const auto& cls : classes) {
        if (cls.size() < static_cast<std::size_t>(degree) + 1) {
          ok = false;
          break;
        }
        std::vector<Int> xs;
        std::vector<Rational> ys;
        for (std::size_t i = 0; i <= static_cast<std::size_t>(degree); ++i) {
          xs.push_back(cls[i].first);
          ys.push_back(cls[i].second);
        }
        RationalVector c = interpolate(xs, ys);
        QuasiPolynomial one{1, degree, {c}};
        for (const auto& [k, v] : cls)
          if (evaluate_quasi_polynomial(one, k) != v) {
            ok = false;
            break;
          }
        if (!ok) break;
        qp.pieces.push_back(std::move(c));
      }
      if (ok) return qp;
    }
  }
  return std::nullopt;
}

std::vector<Int> stretch_function(const Embedding& emb, const Weight& big, const Weight& small, int kmax) {
  if (kmax < 0) fail(ErrorCode::invalid_argument, "kmax must be nonnegative");
  if (!emb.small()->is_dominant(small)) fail(ErrorCode::not_dominant, "weight " + small.str() + " is not dominant");
  std::vector<Int> out;
  for (Int k = 0; k <= kmax; ++k) out.push_back(branching_multiplicity(emb, k * big, k * small));
  return out;
}

}  // namespace lierep
