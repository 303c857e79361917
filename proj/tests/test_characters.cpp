#include "branching.hpp"
#include "characters.hpp"
#include "doctest.h"
#include "error.hpp"

using namespace lierep;

namespace {

FormalCharacter make(const RootSystemPtr& rs, std::initializer_list<std::pair<Weight, Int>> terms) {
  FormalCharacter ch(rs);
  for (const auto& [w, m] : terms) ch.add(w, m);
  return ch;
}

}  // namespace

TEST_CASE("irreducible characters") {
  auto a1 = build_root_system("A1");
  CHECK(irreducible_character(a1, Weight{2}) == make(a1, {{Weight{2}, 1}, {Weight{0}, 1}, {Weight{-2}, 1}}));
  auto a2 = build_root_system("A2");
  FormalCharacter adj = irreducible_character(a2, Weight{1, 1});
  CHECK(adj.dimension() == 8);
  CHECK(adj.at(Weight{0, 0}) == 2);
  CHECK(irreducible_character(build_root_system("G2"), Weight{0, 0}) == make(build_root_system("G2"), {{Weight{0, 0}, 1}}));
  CHECK(irreducible_character(build_root_system("G2"), Weight{1, 1}).dimension() == 64);
  CHECK(irreducible_character(build_root_system("C3"), Weight{0, 1, 0}).dimension() == 14);
  CHECK_THROWS_AS(irreducible_character(a1, Weight{-1}), Error);
}

TEST_CASE("Freudenthal agrees with the Weyl dimension formula") {
  for (const char* spec : {"A2", "B2", "G2", "A3", "C3"}) {
    auto rs = build_root_system(spec);
    for (const auto& w : dominant_box(*rs, 2)) {
      CAPTURE(spec);
      CAPTURE(w.str());
      FormalCharacter ch = irreducible_character(rs, w);
      CHECK(BigInt(ch.dimension()) == weyl_dimension(*rs, w));
      CHECK(is_weyl_invariant(ch));
    }
  }
}

TEST_CASE("character products") {
  auto a1 = build_root_system("A1");
  FormalCharacter v1 = irreducible_character(a1, Weight{1});
  CHECK(multiply_characters(v1, v1) == make(a1, {{Weight{2}, 1}, {Weight{0}, 2}, {Weight{-2}, 1}}));
  CHECK(multiply_characters(v1, irreducible_character(a1, Weight{0})) == v1);
  CHECK(multiply_characters(FormalCharacter(a1), v1).empty());
}

TEST_CASE("decomposition into irreducibles") {
  auto a1 = build_root_system("A1");
  FormalCharacter sq = make(a1, {{Weight{2}, 1}, {Weight{0}, 2}, {Weight{-2}, 1}});
  for (auto method : {DecompositionMethod::subtraction, DecompositionMethod::alternating}) {
    CHECK(decompose_into_irreducibles(sq, method) == DecompositionMap{{Weight{0}, 1}, {Weight{2}, 1}});
    CHECK(decompose_into_irreducibles(FormalCharacter(a1), method).empty());
  }
  auto a2 = build_root_system("A2");
  FormalCharacter p = multiply_characters(irreducible_character(a2, Weight{1, 0}), irreducible_character(a2, Weight{0, 1}));
  CHECK(decompose_into_irreducibles(p, DecompositionMethod::subtraction) ==
        DecompositionMap{{Weight{0, 0}, 1}, {Weight{1, 1}, 1}});
  CHECK_THROWS_AS(decompose_into_irreducibles(make(a1, {{Weight{1}, 1}}), DecompositionMethod::subtraction), Error);
  try {
    decompose_into_irreducibles(make(a1, {{Weight{2}, 1}, {Weight{-2}, 1}}), DecompositionMethod::subtraction);
    FAIL("expected not_a_character");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_a_character);
  }
}

TEST_CASE("tensor products") {
  auto a1 = build_root_system("A1");
  CHECK(tensor_decompose(a1, Weight{2}, Weight{3}) == DecompositionMap{{Weight{1}, 1}, {Weight{3}, 1}, {Weight{5}, 1}});
  CHECK(tensor_decompose(a1, Weight{1}, Weight{1}) == DecompositionMap{{Weight{0}, 1}, {Weight{2}, 1}});
  auto g2 = build_root_system("G2");
  CHECK(tensor_decompose(g2, Weight{1, 1}, Weight{0, 0}) == DecompositionMap{{Weight{1, 1}, 1}});
  // 7 (x) 7 = 1 + 7 + 14 + 27 for G2.
  CHECK(tensor_decompose(g2, Weight{1, 0}, Weight{1, 0}) ==
        DecompositionMap{{Weight{0, 0}, 1}, {Weight{1, 0}, 1}, {Weight{0, 1}, 1}, {Weight{2, 0}, 1}});
}

TEST_CASE("symmetric powers") {
  auto t1 = build_root_system("T1");
  CHECK(sym_power_character(t1, {Weight{1}, Weight{1}}, 2) == make(t1, {{Weight{2}, 3}}));
  CHECK(sym_power_character(t1, {Weight{1}, Weight{2}}, 2) ==
        make(t1, {{Weight{2}, 1}, {Weight{3}, 1}, {Weight{4}, 1}}));
  CHECK(sym_power_character(t1, {Weight{5}}, 0) == make(t1, {{Weight{0}, 1}}));
  auto series = sym_power_series(t1, {Weight{1}, Weight{2}}, 6);
  REQUIRE(series.size() == 7);
  for (int d = 0; d <= 6; ++d) CHECK(series[d] == sym_power_character(t1, {Weight{1}, Weight{2}}, d));
}

TEST_CASE("invariant multiplicity") {
  auto a1 = build_root_system("A1");
  FormalCharacter v1 = irreducible_character(a1, Weight{1});
  CHECK(invariant_multiplicity(multiply_characters(v1, v1)) == 1);
  CHECK(invariant_multiplicity(irreducible_character(a1, Weight{2})) == 0);
  CHECK(invariant_multiplicity(irreducible_character(build_root_system("B2"), Weight{0, 0})) == 1);
}

TEST_CASE("character values") {
  auto a1 = build_root_system("A1");
  FormalCharacter v2 = irreducible_character(a1, Weight{2});
  CHECK(character_value(v2, TorusPoint{{Rational(2)}}) == Rational(21, 4));
  CHECK(character_value(v2, TorusPoint{{Rational(1)}}) == 3);
  CHECK(character_value(FormalCharacter(a1), TorusPoint{{Rational(7)}}) == 0);
  auto a2 = build_root_system("A2");
  CHECK(character_value(irreducible_character(a2, Weight{1, 1}), TorusPoint{{Rational(1), Rational(1)}}) == 8);
}
