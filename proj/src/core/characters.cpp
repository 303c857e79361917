#include "characters.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_set>

#include "error.hpp"

namespace lierep {

void FormalCharacter::add(const Weight& w, Int m) {
  if (m == 0) return;
  auto [it, inserted] = support_.try_emplace(w, m);
  if (!inserted) {
    it->second += m;
    if (it->second == 0) support_.erase(it);
  }
}

Int FormalCharacter::dimension() const {
  Int d = 0;
  for (const auto& [w, m] : support_) d += m;
  return d;
}

std::vector<std::pair<Weight, Int>> FormalCharacter::sorted() const {
  std::vector<std::pair<Weight, Int>> out(support_.begin(), support_.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_rank(const RootSystem& rs, const Weight& w) {
  if (w.size() != rs.rank())
    fail(ErrorCode::invalid_argument, "weight " + w.str() + " has length " + std::to_string(w.size()) +
                                          ", expected " + std::to_string(rs.rank()));
}

// Dominant weights of V_lambda, connected to lambda through differences of
// positive roots inside the dominant chamber.
std::vector<Weight> dominant_weights(const RootSystem& rs, const Weight& lambda) {
  std::unordered_set<Weight, WeightHash> seen{lambda};
  std::vector<Weight> out{lambda};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& alpha : rs.positive_roots()) {
      Weight mu = out[k] - alpha;
      if (rs.is_dominant(mu) && seen.insert(mu).second) out.push_back(mu);
    }
  }
  return out;
}

FormalCharacter freudenthal(const RootSystemPtr& rsp, const Weight& lambda) {
  const RootSystem& rs = *rsp;
  std::vector<Weight> dom = dominant_weights(rs, lambda);
  std::sort(dom.begin(), dom.end(), [&](const Weight& a, const Weight& b) {
    Int ha = rs.height_scaled(a), hb = rs.height_scaled(b);
    return ha != hb ? ha > hb : a < b;
  });
  std::unordered_map<Weight, Int, WeightHash> mult;
  const Weight lr = lambda + rs.rho();
  const Int top = rs.inner_scaled(lr, lr);
  for (const auto& mu : dom) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    Int rhs = 0;
    for (const auto& alpha : rs.positive_roots()) {
      Weight nu = mu + alpha;
      while (true) {
        Weight d = make_dominant(rs, nu, false).dominant;
        auto it = mult.find(d);
        if (it == mult.end()) break;
        rhs += rs.inner_scaled(nu, alpha) * it->second;
        nu += alpha;
      }
    }
    rhs *= 2;
    const Weight mr = mu + rs.rho();
    const Int lhs = top - rs.inner_scaled(mr, mr);
    if (lhs <= 0 || rhs % lhs != 0) fail(ErrorCode::internal, "inexact Freudenthal step at " + mu.str());
    const Int m = rhs / lhs;
    if (m > 0) mult[mu] = m;
  }
  FormalCharacter ch(rsp);
  for (const auto& [mu, m] : mult)
    for (const auto& w : weyl_orbit(rs, mu)) ch.add(w, m);
  return ch;
}

struct Memo {
  std::shared_mutex mutex;
  std::unordered_map<std::string, std::shared_ptr<const FormalCharacter>> table;
};

Memo& memo() {
  static Memo m;
  return m;
}

thread_local std::shared_ptr<CharacterStore> tl_store;

}  // namespace

void set_character_store(std::shared_ptr<CharacterStore> store) { tl_store = std::move(store); }

void clear_character_memo() {
  std::unique_lock lock(memo().mutex);
  memo().table.clear();
}

std::shared_ptr<const FormalCharacter> irreducible(const RootSystemPtr& rs, const Weight& lambda) {
  check_rank(*rs, lambda);
  if (!rs->is_dominant(lambda)) fail(ErrorCode::not_dominant, "weight " + lambda.str() + " is not dominant");
  const std::string key = rs->spec().str() + "|" + lambda.str();
  {
    std::shared_lock lock(memo().mutex);
    auto it = memo().table.find(key);
    if (it != memo().table.end() && it->second->rs().spec() == rs->spec()) return it->second;
  }
  std::shared_ptr<const FormalCharacter> value;
  if (tl_store)
    value = std::make_shared<const FormalCharacter>(
        tl_store->lookup_or_compute(rs, lambda, [&] { return freudenthal(rs, lambda); }));
  else
    value = std::make_shared<const FormalCharacter>(freudenthal(rs, lambda));
  std::unique_lock lock(memo().mutex);
  auto [it, inserted] = memo().table.try_emplace(key, value);
  return it->second;
}

FormalCharacter irreducible_character(const RootSystemPtr& rs, const Weight& lambda) {
  auto ch = irreducible(rs, lambda);
  // Memo entries may come from an equal but distinct RootSystem instance.
  FormalCharacter out(rs);
  for (const auto& [w, m] : ch->support()) out.add(w, m);
  return out;
}

FormalCharacter multiply_characters(const FormalCharacter& a, const FormalCharacter& b) {
  if (!(a.rs().spec() == b.rs().spec())) fail(ErrorCode::invalid_argument, "characters of different root systems");
  FormalCharacter out(a.rs_ptr());
  for (const auto& [wa, ma] : a.support())
    for (const auto& [wb, mb] : b.support()) out.add(wa + wb, ma * mb);
  return out;
}

bool is_weyl_invariant(const FormalCharacter& ch) {
  const RootSystem& rs = ch.rs();
  for (const auto& [w, m] : ch.support()) {
    for (std::size_t i : rs.simple_indices()) {
      Weight r = w;
      rs.reflect(r, i);
      if (ch.at(r) != m) return false;
    }
  }
  return true;
}

bool is_genuine(const FormalCharacter& ch) {
  for (const auto& [w, m] : ch.support())
    if (m < 0) return false;
  return is_weyl_invariant(ch);
}

namespace {

DecompositionMap decompose_by_subtraction(const FormalCharacter& ch) {
  const RootSystem& rs = ch.rs();
  FormalCharacter rest = ch;
  DecompositionMap out;
  while (!rest.empty()) {
    const Weight* best = nullptr;
    Int best_h = 0;
    for (const auto& [w, m] : rest.support()) {
      Int h = rs.height_scaled(w);
      if (!best || h > best_h || (h == best_h && *best < w)) {
        best = &w;
        best_h = h;
      }
    }
    const Weight top = *best;
    const Int m = rest.at(top);
    if (m < 0 || !rs.is_dominant(top))
      fail(ErrorCode::not_a_character, "not a character: residual " + std::to_string(m) + " at " + top.str());
    out[top] += m;
    for (const auto& [w, k] : irreducible(ch.rs_ptr(), top)->support()) rest.add(w, -m * k);
  }
  return out;
}

DecompositionMap decompose_alternating(const FormalCharacter& ch) {
  if (!is_weyl_invariant(ch)) fail(ErrorCode::not_a_character, "not a character: support is not Weyl-invariant");
  const RootSystem& rs = ch.rs();
  // mult(lambda) = sum_w sign(w) ch[w(lambda + rho) - rho]; each support
  // weight contributes to the dominant weight in its dot orbit.
  DecompositionMap out;
  for (const auto& [w, m] : ch.support()) {
    Dominant d = make_dominant(rs, w, true);
    if (d.singular) continue;
    out[d.dominant] += d.parity * m;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second < 0)
      fail(ErrorCode::not_a_character,
           "not a character: negative multiplicity " + std::to_string(it->second) + " at " + it->first.str());
    if (it->second == 0)
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

}  // namespace

DecompositionMap decompose_into_irreducibles(const FormalCharacter& ch, DecompositionMethod method) {
  return method == DecompositionMethod::subtraction ? decompose_by_subtraction(ch) : decompose_alternating(ch);
}

DecompositionMap tensor_decompose(const RootSystemPtr& rs, const Weight& lambda, const Weight& mu) {
  auto a = irreducible(rs, lambda);
  auto b = irreducible(rs, mu);
  FormalCharacter prod = multiply_characters(*a, *b);
  return decompose_into_irreducibles(prod, DecompositionMethod::subtraction);
}

std::vector<FormalCharacter> sym_power_series(const RootSystemPtr& rs, const std::vector<Weight>& rep,
                                              int max_degree) {
  if (max_degree < 0) fail(ErrorCode::invalid_argument, "negative degree");
  for (const auto& w : rep) check_rank(*rs, w);
  std::vector<FormalCharacter> dp(static_cast<std::size_t>(max_degree) + 1, FormalCharacter(rs));
  dp[0].add(Weight(rs->rank()), 1);
  // Sym(A + L) = Sym(A) * (1 + L + L^2 + ...), one line L at a time.
  for (const auto& w : rep) {
    for (int k = max_degree; k >= 1; --k) {
      FormalCharacter next = dp[static_cast<std::size_t>(k)];
      Weight shift = w;
      for (int j = 1; j <= k; ++j, shift += w)
        for (const auto& [v, m] : dp[static_cast<std::size_t>(k - j)].support()) next.add(v + shift, m);
      dp[static_cast<std::size_t>(k)] = std::move(next);
    }
  }
  return dp;
}

FormalCharacter sym_power_character(const RootSystemPtr& rs, const std::vector<Weight>& rep, int d) {
  return std::move(sym_power_series(rs, rep, d).back());
}

Int invariant_multiplicity(const FormalCharacter& ch) {
  if (!is_genuine(ch)) fail(ErrorCode::not_a_character, "not a character");
  const RootSystem& rs = ch.rs();
  Int total = 0;
  for (const auto& [w, m] : ch.support()) {
    Dominant d = make_dominant(rs, w, true);
    if (!d.singular && d.dominant.is_zero()) total += d.parity * m;
  }
  return total;
}

Int alternating_multiplicity(const RootSystem& rs, const std::vector<WeylElement>& group, const Weight& lambda,
                             const std::function<Int(const Weight&)>& coefficient) {
  const Weight shifted = lambda + rs.rho();
  Int total = 0;
  for (const auto& w : group) {
    Weight nu = apply(rs, w, shifted) - rs.rho();
    Int c = coefficient(nu);
    if (c != 0) total += w.parity() * c;
  }
  return total;
}

Rational monomial_value(const Weight& mu, const TorusPoint& t) {
  Rational v = 1;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const Int e = mu[i];
    if (e == 0) continue;
    const Rational& x = t.values[i];
    BigInt num, den;
    const unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), ae);
    mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), ae);
    Rational p = e > 0 ? Rational(num, den) : Rational(den, num);
    p.canonicalize();
    v *= p;
  }
  return v;
}

Rational character_value(const FormalCharacter& ch, const TorusPoint& t) {
  if (t.values.size() != ch.rs().rank()) fail(ErrorCode::invalid_argument, "torus point has wrong length");
  for (const auto& x : t.values)
    if (x == 0) fail(ErrorCode::invalid_argument, "torus point has a zero entry");
  Rational total = 0;
  for (const auto& [w, m] : ch.support()) total += m * monomial_value(w, t);
  return total;
}

}  // namespace lierep
