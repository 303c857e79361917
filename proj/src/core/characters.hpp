#pragma once

#include <functional>
#include <map>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lie.hpp"
#include "rational.hpp"
#include "weight.hpp"

namespace lierep {

// Finite weight -> multiplicity map. Zero multiplicities are never stored.
class FormalCharacter {
 public:
  using Support = std::unordered_map<Weight, Int, WeightHash>;

  explicit FormalCharacter(RootSystemPtr rs) : rs_(std::move(rs)) {}

  const RootSystem& rs() const { return *rs_; }
  const RootSystemPtr& rs_ptr() const { return rs_; }
  const Support& support() const { return support_; }
  bool empty() const { return support_.empty(); }

  Int at(const Weight& w) const {
    auto it = support_.find(w);
    return it == support_.end() ? 0 : it->second;
  }
  void add(const Weight& w, Int m);

  // Sum of multiplicities.
  Int dimension() const;
  // Lexicographically sorted support.
  std::vector<std::pair<Weight, Int>> sorted() const;

  friend bool operator==(const FormalCharacter& a, const FormalCharacter& b) {
    return a.rs_->spec() == b.rs_->spec() && a.support_ == b.support_;
  }

 private:
  RootSystemPtr rs_;
  Support support_;
};

// Dominant highest weight -> multiplicity, sorted lexicographically.
using DecompositionMap = std::map<Weight, Int>;

enum class DecompositionMethod { subtraction, alternating };

// Evaluation point on the torus: one nonzero rational per lattice-basis character.
struct TorusPoint {
  RationalVector values;
};

FormalCharacter irreducible_character(const RootSystemPtr& rs, const Weight& lambda);
// Memoized, shared instance of the same character.
std::shared_ptr<const FormalCharacter> irreducible(const RootSystemPtr& rs, const Weight& lambda);

FormalCharacter multiply_characters(const FormalCharacter& a, const FormalCharacter& b);

bool is_weyl_invariant(const FormalCharacter& ch);
// Weyl-invariant with nonnegative multiplicities.
bool is_genuine(const FormalCharacter& ch);

DecompositionMap decompose_into_irreducibles(const FormalCharacter& ch, DecompositionMethod method);

DecompositionMap tensor_decompose(const RootSystemPtr& rs, const Weight& lambda, const Weight& mu);

// Character of Sym^d of the representation with the given torus weights
// (a Weyl-invariant multiset when rs has roots).
FormalCharacter sym_power_character(const RootSystemPtr& rs, const std::vector<Weight>& rep, int d);
// Degrees 0..max_degree at once.
std::vector<FormalCharacter> sym_power_series(const RootSystemPtr& rs, const std::vector<Weight>& rep, int max_degree);

Int invariant_multiplicity(const FormalCharacter& ch);

// Multiplicity of V_lambda in a genuine character known only through its
// coefficient function, by the alternating sum over the Weyl group.
Int alternating_multiplicity(const RootSystem& rs, const std::vector<WeylElement>& group, const Weight& lambda,
                             const std::function<Int(const Weight&)>& coefficient);

Rational character_value(const FormalCharacter& ch, const TorusPoint& t);
// t^mu for a weight in lattice coordinates.
Rational monomial_value(const Weight& mu, const TorusPoint& t);

// Hook for an on-disk cache behind irreducible(); see cache.hpp.
class CharacterStore {
 public:
  virtual ~CharacterStore() = default;
  virtual FormalCharacter lookup_or_compute(const RootSystemPtr& rs, const Weight& lambda,
                                            const std::function<FormalCharacter()>& compute) = 0;
};
void set_character_store(std::shared_ptr<CharacterStore> store);
void clear_character_memo();

}  // namespace lierep
