#include <set>

#include "branching.hpp"
#include "doctest.h"
#include "error.hpp"

using namespace lierep;

TEST_CASE("embedding validation") {
  auto a1 = build_root_system("A1");
  CHECK_NOTHROW(build_embedding(build_root_system("A1xA1"), a1, {{1, 1}}));
  CHECK_NOTHROW(build_embedding(a1, build_root_system("T1"), {{1}}));
  // The weights {3,-3} are not the character of any A1 representation.
  try {
    build_embedding(a1, a1, {{3}});
    FAIL("expected invalid_embedding");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_embedding);
  }
  CHECK_THROWS_AS(build_embedding(a1, a1, {{1, 0}}), Error);
  // Principal A1 in A2: V(1,0) restricts to V2.
  CHECK_NOTHROW(build_embedding(build_root_system("A2"), a1, {{2, 2}}));
}

TEST_CASE("builtin embeddings") {
  CHECK(builtin_embedding("diagonal:A1").restriction() == IntMatrix{{1, 1}});
  Embedding t = builtin_embedding("torus:A1");
  CHECK(t.small()->spec().str() == "T1");
  CHECK(t.restriction() == IntMatrix{{1}});
  Embedding d = builtin_embedding("diagonal:A2");
  CHECK(d.big()->rank() == 4);
  CHECK(d.small()->rank() == 2);
  Embedding l = builtin_embedding("levi:A2");
  CHECK(l.small()->spec().str() == "A1xT1");
  CHECK_THROWS_AS(builtin_embedding("sideways:A2"), Error);
}

TEST_CASE("restriction of characters") {
  Embedding d = builtin_embedding("diagonal:A1");
  FormalCharacter outer = irreducible_character(d.big(), Weight{1, 1});
  FormalCharacter res = restrict_character(d, outer);
  CHECK(res.at(Weight{2}) == 1);
  CHECK(res.at(Weight{0}) == 2);
  CHECK(res.at(Weight{-2}) == 1);
  CHECK(res.dimension() == 4);
  CHECK(restrict_character(d, irreducible_character(d.big(), Weight{0, 0})).at(Weight{0}) == 1);
  Embedding t = builtin_embedding("torus:A1");
  FormalCharacter adj = restrict_character(t, irreducible_character(t.big(), Weight{2}));
  CHECK(adj.support().size() == 3);
  CHECK(adj.at(Weight{-2}) == 1);
}

TEST_CASE("branch") {
  Embedding d = builtin_embedding("diagonal:A1");
  CHECK(branch(d, Weight{1, 1}) == DecompositionMap{{Weight{0}, 1}, {Weight{2}, 1}});
  CHECK(branch(d, Weight{0, 0}) == DecompositionMap{{Weight{0}, 1}});
  CHECK(branch(builtin_embedding("torus:A1"), Weight{2}) ==
        DecompositionMap{{Weight{-2}, 1}, {Weight{0}, 1}, {Weight{2}, 1}});
  CHECK_THROWS_AS(branch(d, Weight{-1, 1}), Error);

  // Dual convention: V(1,0) of A2 restricted to the torus carries the weights of V(0,1).
  Embedding ta2 = builtin_embedding("torus:A2");
  auto dual = branch(ta2, Weight{1, 0});
  auto plain = branch(ta2, Weight{1, 0}, BranchConvention::plain);
  CHECK(dual.count(Weight{0, 1}) == 1);
  CHECK(plain.count(Weight{1, 0}) == 1);
  CHECK(dual != plain);
}

TEST_CASE("branching rows agree with branch") {
  for (const char* name : {"diagonal:A1", "diagonal:A2", "torus:A2", "levi:A2", "levi:B2"}) {
    Embedding emb = builtin_embedding(name);
    for (const auto& big : dominant_box(*emb.big(), 2)) {
      CAPTURE(name);
      CAPTURE(big.str());
      BranchingRow row(emb, big);
      for (const auto& [small, m] : branch(emb, big)) CHECK(row.multiplicity(small) == m);
    }
  }
}

TEST_CASE("branching tables") {
  Embedding d = builtin_embedding("diagonal:A1");
  BranchingTable t = branching_table(d, 1);
  std::map<Weight, int> rows;
  for (const auto& [key, m] : t.entries) ++rows[key.first];
  CHECK(rows.size() == 4);
  CHECK(rows[Weight{1, 1}] == 2);
  BranchingTable zero = branching_table(d, 0);
  CHECK(zero.entries.size() == 1);
  CHECK(zero.entries.at({Weight{0, 0}, Weight{0}}) == 1);
  BranchingTable tt = branching_table(builtin_embedding("torus:A2"), 1);
  std::set<Weight> bigs;
  for (const auto& [key, m] : tt.entries) bigs.insert(key.first);
  CHECK(bigs == std::set<Weight>{Weight{0, 0}, Weight{0, 1}, Weight{1, 0}, Weight{1, 1}});
  CHECK(dimension_violations(d, branching_table(d, 3)).empty());
  CHECK(dimension_violations(builtin_embedding("levi:A2"), branching_table(builtin_embedding("levi:A2"), 3)).empty());
}
