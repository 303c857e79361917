#include "doctest.h"
#include "error.hpp"
#include "quasipoly.hpp"

using namespace lierep;

namespace {

std::map<Int, Rational> samples(int n, auto&& f) {
  std::map<Int, Rational> out;
  for (int k = 0; k < n; ++k) out[k] = f(k);
  return out;
}

}  // namespace

TEST_CASE("fit linear") {
  auto qp = fit_quasi_polynomial(samples(6, [](int k) { return Rational(k + 1); }), 1, 2);
  REQUIRE(qp);
  CHECK(qp->period == 1);
  CHECK(qp->degree == 1);
  CHECK(qp->pieces == std::vector<RationalVector>{{Rational(1), Rational(1)}});
  CHECK(evaluate_quasi_polynomial(*qp, 10) == 11);
}

TEST_CASE("fit floor function") {
  auto qp = fit_quasi_polynomial(samples(10, [](int k) { return Rational(k / 2 + 1); }), 1, 2);
  REQUIRE(qp);
  CHECK(qp->period == 2);
  CHECK(qp->pieces[0] == RationalVector{Rational(1), Rational(1, 2)});
  CHECK(qp->pieces[1] == RationalVector{Rational(1, 2), Rational(1, 2)});
  CHECK(evaluate_quasi_polynomial(*qp, 7) == 4);
  for (int k = 0; k < 10; ++k) CHECK(evaluate_quasi_polynomial(*qp, k) == k / 2 + 1);
}

TEST_CASE("no fit and insufficient samples") {
  std::map<Int, Rational> exp{{0, 1}, {1, 2}, {2, 4}, {3, 8}};
  CHECK_FALSE(fit_quasi_polynomial(exp, 2, 1).has_value());
  try {
    fit_quasi_polynomial(exp, 2, 2);
    FAIL("expected insufficient_samples");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::insufficient_samples);
  }
}

TEST_CASE("prefers the smallest period and degree") {
  auto qp = fit_quasi_polynomial(samples(12, [](int) { return Rational(3); }), 2, 3);
  REQUIRE(qp);
  CHECK(qp->period == 1);
  CHECK(qp->degree == 0);
  auto alt = fit_quasi_polynomial(samples(12, [](int k) { return Rational(k % 2 == 0 ? 1 : 0); }), 2, 3);
  REQUIRE(alt);
  CHECK(alt->period == 2);
  CHECK(alt->degree == 0);
}

TEST_CASE("stretch functions") {
  Embedding d = builtin_embedding("diagonal:A1");
  CHECK(stretch_function(d, Weight{1, 1}, Weight{0}, 6) == std::vector<Int>(7, 1));
  CHECK(stretch_function(d, Weight{1, 1}, Weight{2}, 4) == std::vector<Int>{1, 1, 1, 1, 1});
  CHECK(stretch_function(d, Weight{0, 0}, Weight{0}, 3) == std::vector<Int>(4, 1));
  CHECK(stretch_function(d, Weight{1, 0}, Weight{1}, 4) == std::vector<Int>(5, 1));
  Embedding a2 = builtin_embedding("diagonal:A2");
  CHECK(stretch_function(a2, Weight{1, 1, 1, 1}, Weight{1, 1}, 4) == std::vector<Int>{1, 2, 3, 4, 5});
}
