#include "branching.hpp"

#include <algorithm>

#include "error.hpp"

namespace lierep {

Embedding::Embedding(RootSystemPtr big, RootSystemPtr small, IntMatrix restriction, std::string label)
    : big_(std::move(big)), small_(std::move(small)), pi_(std::move(restriction)), label_(std::move(label)) {
  if (pi_.size() != small_->rank())
    fail(ErrorCode::invalid_embedding, "restriction matrix must have " + std::to_string(small_->rank()) + " rows");
  for (const auto& row : pi_)
    if (row.size() != big_->rank())
      fail(ErrorCode::invalid_embedding,
           "restriction matrix must have " + std::to_string(big_->rank()) + " columns");
}

Weight Embedding::restrict(const Weight& w) const {
  Weight out(pi_.size());
  for (std::size_t r = 0; r < pi_.size(); ++r) {
    Int s = 0;
    for (std::size_t c = 0; c < w.size(); ++c) s += pi_[r][c] * w[c];
    out[r] = s;
  }
  return out;
}

RationalVector Embedding::lift(const RationalVector& x) const {
  RationalVector out(big_->rank(), 0);
  for (std::size_t r = 0; r < pi_.size(); ++r)
    for (std::size_t c = 0; c < big_->rank(); ++c) out[c] += pi_[r][c] * x[r];
  return out;
}

FormalCharacter restrict_character(const Embedding& emb, const FormalCharacter& ch) {
  if (!(ch.rs().spec() == emb.big()->spec()))
    fail(ErrorCode::invalid_argument, "character is not over " + emb.big()->spec().str());
  FormalCharacter out(emb.small());
  for (const auto& [w, m] : ch.support()) out.add(emb.restrict(w), m);
  return out;
}

Embedding build_embedding(RootSystemPtr big, RootSystemPtr small, IntMatrix restriction, std::string label) {
  Embedding emb(std::move(big), std::move(small), std::move(restriction), std::move(label));
  const RootSystem& b = *emb.big();
  for (std::size_t i = 0; i < b.rank(); ++i) {
    Weight omega(b.rank());
    omega[i] = 1;
    FormalCharacter ch = b.has_simple_root(i) ? irreducible_character(emb.big(), omega) : FormalCharacter(emb.big());
    if (!b.has_simple_root(i)) ch.add(omega, 1);
    FormalCharacter res = restrict_character(emb, ch);
    if (!is_weyl_invariant(res))
      fail(ErrorCode::invalid_embedding, "not a valid embedding datum: restriction of " + omega.str() +
                                             " is not Weyl-invariant for " + emb.small()->spec().str());
    try {
      decompose_into_irreducibles(res, DecompositionMethod::subtraction);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::not_a_character) throw;
      fail(ErrorCode::invalid_embedding,
           "not a valid embedding datum: restriction of " + omega.str() + " fails to decompose (" + e.what() + ")");
    }
  }
  return emb;
}

Embedding builtin_embedding(BuiltinKind kind, const CartanSpec& spec) {
  const auto n = static_cast<std::size_t>(spec.rank());
  switch (kind) {
    case BuiltinKind::diagonal: {
      IntMatrix pi(n, std::vector<Int>(2 * n, 0));
      for (std::size_t i = 0; i < n; ++i) pi[i][i] = pi[i][n + i] = 1;
      return build_embedding(build_root_system(product(spec, spec)), build_root_system(spec), pi,
                             "diagonal:" + spec.str());
    }
    case BuiltinKind::maximal_torus: {
      IntMatrix pi(n, std::vector<Int>(n, 0));
      for (std::size_t i = 0; i < n; ++i) pi[i][i] = 1;
      return build_embedding(build_root_system(spec), build_root_system(CartanSpec({{Series::T, spec.rank()}})), pi,
                             "torus:" + spec.str());
    }
    case BuiltinKind::levi: {
      // Centralizer of the last fundamental coweight.
      if (spec.factors().size() != 1 || spec.factors()[0].series == Series::T)
        fail(ErrorCode::invalid_argument, "levi embedding needs a simple type");
      auto big = build_root_system(spec);
      RationalMatrix a(n, RationalVector(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = big->cartan()[i][j];
      RationalMatrix ainv = inverse(a);
      RationalVector coweight(n);
      for (std::size_t i = 0; i < n; ++i) coweight[i] = ainv[i][n - 1];
      Centralizer c = centralizer_root_subsystem(*big, {coweight});
      return build_embedding(big, c.sub, c.coordinate_map, "levi:" + spec.str());
    }
  }
  fail(ErrorCode::invalid_argument, "unknown builtin embedding");
}

Embedding builtin_embedding(const std::string& name) {
  auto colon = name.find(':');
  if (colon == std::string::npos) fail(ErrorCode::invalid_argument, "builtin embedding must look like 'diagonal:A1'");
  const std::string kind = name.substr(0, colon);
  const CartanSpec spec = CartanSpec::parse(name.substr(colon + 1));
  if (kind == "diagonal") return builtin_embedding(BuiltinKind::diagonal, spec);
  if (kind == "torus" || kind == "maximal_torus") return builtin_embedding(BuiltinKind::maximal_torus, spec);
  if (kind == "levi") return builtin_embedding(BuiltinKind::levi, spec);
  fail(ErrorCode::invalid_argument, "unknown builtin embedding '" + kind + "'");
}

namespace {

void check_big_weight(const Embedding& emb, const Weight& w) {
  if (w.size() != emb.big()->rank()) fail(ErrorCode::invalid_argument, "weight " + w.str() + " has wrong length");
  if (!emb.big()->is_dominant(w)) fail(ErrorCode::not_dominant, "weight " + w.str() + " is not dominant");
}

// Pushforward of each simple/torus factor of the big group separately.
std::vector<FormalCharacter> factor_pushforwards(const Embedding& emb, const Weight& big_weight) {
  std::vector<FormalCharacter> out;
  std::size_t off = 0;
  for (const auto& f : emb.big()->spec().factors()) {
    const auto n = static_cast<std::size_t>(f.rank);
    FormalCharacter push(emb.small());
    const Weight part = big_weight.slice(off, n);
    if (f.series == Series::T) {
      Weight full(emb.big()->rank());
      for (std::size_t i = 0; i < n; ++i) full[off + i] = part[i];
      push.add(emb.restrict(full), 1);
    } else {
      auto frs = build_root_system(CartanSpec({f}));
      for (const auto& [w, m] : irreducible(frs, part)->support()) {
        Weight full(emb.big()->rank());
        for (std::size_t i = 0; i < n; ++i) full[off + i] = w[i];
        push.add(emb.restrict(full), m);
      }
    }
    out.push_back(std::move(push));
    off += n;
  }
  return out;
}

}  // namespace

FormalCharacter restricted_irreducible(const Embedding& emb, const Weight& big_weight) {
  check_big_weight(emb, big_weight);
  auto parts = factor_pushforwards(emb, big_weight);
  FormalCharacter acc = std::move(parts[0]);
  for (std::size_t k = 1; k < parts.size(); ++k) acc = multiply_characters(acc, parts[k]);
  return acc;
}

DecompositionMap branch(const Embedding& emb, const Weight& big_weight, BranchConvention convention) {
  check_big_weight(emb, big_weight);
  const Weight top = convention == BranchConvention::dual ? dual_weight(*emb.big(), big_weight) : big_weight;
  FormalCharacter res = restricted_irreducible(emb, top);
  DecompositionMap a = decompose_into_irreducibles(res, DecompositionMethod::subtraction);
  DecompositionMap b = decompose_into_irreducibles(res, DecompositionMethod::alternating);
  if (a != b) fail(ErrorCode::internal, "decomposition oracles disagree for " + big_weight.str());
  return a;
}

BranchingRow::BranchingRow(const Embedding& emb, const Weight& big_weight) : small_(emb.small()) {
  check_big_weight(emb, big_weight);
  auto parts = factor_pushforwards(emb, dual_weight(*emb.big(), big_weight));
  head_ = std::make_shared<FormalCharacter>(std::move(parts[0]));
  for (std::size_t k = 1; k + 1 < parts.size(); ++k) *head_ = multiply_characters(*head_, parts[k]);
  if (parts.size() > 1) tail_ = std::make_shared<FormalCharacter>(std::move(parts.back()));
  group_ = std::make_shared<std::vector<WeylElement>>(weyl_group_elements(*small_));
}

Int BranchingRow::multiplicity(const Weight& small_weight) const {
  if (small_weight.size() != small_->rank())
    fail(ErrorCode::invalid_argument, "weight " + small_weight.str() + " has wrong length");
  if (!small_->is_dominant(small_weight)) return 0;
  auto coefficient = [&](const Weight& nu) -> Int {
    if (!tail_) return head_->at(nu);
    Int c = 0;
    for (const auto& [x, m] : head_->support()) {
      Int t = tail_->at(nu - x);
      if (t) c += m * t;
    }
    return c;
  };
  return alternating_multiplicity(*small_, *group_, small_weight, coefficient);
}

Int branching_multiplicity(const Embedding& emb, const Weight& big_weight, const Weight& small_weight) {
  return BranchingRow(emb, big_weight).multiplicity(small_weight);
}

std::vector<Weight> dominant_box(const RootSystem& rs, int bound) {
  std::vector<Weight> out;
  const std::size_t n = rs.rank();
  Weight w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = rs.has_simple_root(i) ? 0 : -bound;
  while (true) {
    out.push_back(w);
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      if (w[i] < bound) {
        ++w[i];
        for (std::size_t j = i + 1; j < n; ++j) w[j] = rs.has_simple_root(j) ? 0 : -bound;
        advanced = true;
        break;
      }
    }
    if (!advanced) return out;
  }
}

BranchingTable branching_table(const Embedding& emb, int bound) {
  if (bound < 0) fail(ErrorCode::invalid_argument, "bound must be nonnegative");
  BranchingTable t;
  t.label = emb.label();
  t.matrix = emb.restriction();
  t.bound = bound;
  for (const auto& big : dominant_box(*emb.big(), bound))
    for (const auto& [small, m] : branch(emb, big)) t.entries[{big, small}] = m;
  return t;
}

std::vector<Weight> dimension_violations(const Embedding& emb, const BranchingTable& table) {
  std::map<Weight, BigInt> sums;
  for (const auto& [key, m] : table.entries) sums[key.first] += BigInt(m) * weyl_dimension(*emb.small(), key.second);
  std::vector<Weight> bad;
  for (const auto& big : dominant_box(*emb.big(), table.bound)) {
    BigInt expected = weyl_dimension(*emb.big(), big);
    if (sums[big] != expected) bad.push_back(big);
  }
  return bad;
}

}  // namespace lierep
