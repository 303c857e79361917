#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "characters.hpp"
#include "integer_linear.hpp"
#include "lie.hpp"

namespace lierep {

// K in K~ seen through the restriction map pi on weight lattices: an integer
// matrix with small.rank() rows and big.rank() columns.
class Embedding {
 public:
  Embedding(RootSystemPtr big, RootSystemPtr small, IntMatrix restriction, std::string label);

  const RootSystemPtr& big() const { return big_; }
  const RootSystemPtr& small() const { return small_; }
  const IntMatrix& restriction() const { return pi_; }
  const std::string& label() const { return label_; }

  Weight restrict(const Weight& big_weight) const;
  // Dual map i : t -> t~ on coroot coordinates, i(X) = pi^T X.
  RationalVector lift(const RationalVector& x) const;

 private:
  RootSystemPtr big_, small_;
  IntMatrix pi_;
  std::string label_;
};

// Validates dimensions and restricts every fundamental representation of
// the big group (Weyl invariance and a nonnegative subtraction decomposition).
Embedding build_embedding(RootSystemPtr big, RootSystemPtr small, IntMatrix restriction, std::string label = "custom");

enum class BuiltinKind { diagonal, maximal_torus, levi };
Embedding builtin_embedding(BuiltinKind kind, const CartanSpec& spec);
// "diagonal:A2", "torus:A1", "levi:A2" (A2 > A1 x T1).
Embedding builtin_embedding(const std::string& name);

FormalCharacter restrict_character(const Embedding& emb, const FormalCharacter& ch);

enum class BranchConvention {
  // Multiplicity of V_lambda in (V~_big)^* restricted to K.
  dual,
  // Multiplicity of V_lambda in V~_big restricted to K.
  plain,
};

// Both decomposition routes are run and required to agree.
DecompositionMap branch(const Embedding& emb, const Weight& big_weight,
                        BranchConvention convention = BranchConvention::dual);

// m(big_weight, small_weight) in the dual convention, through the alternating
// sum over the small Weyl group applied to the restricted character built
// factor by factor. Independent of branch().
Int branching_multiplicity(const Embedding& emb, const Weight& big_weight, const Weight& small_weight);

// branching_multiplicity for one big weight and many small weights.
class BranchingRow {
 public:
  BranchingRow(const Embedding& emb, const Weight& big_weight);
  Int multiplicity(const Weight& small_weight) const;

 private:
  RootSystemPtr small_;
  std::shared_ptr<FormalCharacter> head_, tail_;
  std::shared_ptr<std::vector<WeylElement>> group_;
};

// Restricted character of V~_lambda, assembled factor by factor of the big
// group (pushforward of each factor, then convolution).
FormalCharacter restricted_irreducible(const Embedding& emb, const Weight& big_weight);

struct BranchingTable {
  std::string label;
  IntMatrix matrix;
  int bound = 0;
  // (big weight, small weight) -> positive multiplicity
  std::map<std::pair<Weight, Weight>, Int> entries;
};

// All dominant big weights with every coordinate <= bound.
std::vector<Weight> dominant_box(const RootSystem& rs, int bound);

BranchingTable branching_table(const Embedding& emb, int bound);

// Rows violating sum_lambda m * dim V_lambda = dim V~.
std::vector<Weight> dimension_violations(const Embedding& emb, const BranchingTable& table);

}  // namespace lierep
