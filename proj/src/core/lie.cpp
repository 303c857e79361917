#include "lie.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "error.hpp"
#include "integer_linear.hpp"

namespace lierep {

namespace {

char series_letter(Series s) {
  switch (s) {
    case Series::A: return 'A';
    case Series::B: return 'B';
    case Series::C: return 'C';
    case Series::D: return 'D';
    case Series::E: return 'E';
    case Series::F: return 'F';
    case Series::G: return 'G';
    case Series::T: return 'T';
  }
  return '?';
}

void validate_factor(const CartanFactor& f) {
  const int n = f.rank;
  bool ok = false;
  switch (f.series) {
    case Series::A: ok = n >= 1; break;
    case Series::B: ok = n >= 2; break;
    case Series::C: ok = n >= 2; break;
    case Series::D: ok = n >= 3; break;
    case Series::E: ok = n >= 6 && n <= 8; break;
    case Series::F: ok = n == 4; break;
    case Series::G: ok = n == 2; break;
    case Series::T: ok = n >= 1; break;
  }
  if (!ok)
    fail(ErrorCode::invalid_spec,
         std::string("invalid rank ") + std::to_string(n) + " for type " + series_letter(f.series));
}

// (alpha_i, alpha_j) for one simple factor, Bourbaki numbering, long roots of
// squared length 2. A Dynkin edge has (alpha_i, alpha_j) equal to minus the
// larger of the two half squared lengths.
RationalMatrix factor_root_gram(Series s, int n) {
  RationalMatrix b(n, RationalVector(n, 0));
  std::vector<Rational> half(n, 1);  // (alpha_i, alpha_i) / 2
  std::vector<std::pair<int, int>> edges;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) edges.emplace_back(i, i + 1);
  };
  switch (s) {
    case Series::A: chain(n); break;
    case Series::B: chain(n); half[n - 1] = Rational(1, 2); break;
    case Series::C:
      chain(n);
      for (int i = 0; i + 1 < n; ++i) half[i] = Rational(1, 2);
      break;
    case Series::D:
      chain(n - 1);
      edges.emplace_back(n - 3, n - 1);
      break;
    case Series::E:
      edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (int i = 4; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Series::F:
      chain(4);
      half[2] = half[3] = Rational(1, 2);
      break;
    case Series::G:
      edges = {{0, 1}};
      half[0] = Rational(1, 3);
      break;
    case Series::T: return RationalMatrix(n, RationalVector(n, 0));
  }
  for (int i = 0; i < n; ++i) b[i][i] = 2 * half[i];
  for (auto [i, j] : edges) b[i][j] = b[j][i] = -std::max(half[i], half[j]);
  return b;
}

std::uint64_t factor_weyl_order(Series s, int n) {
  auto fact = [](int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  switch (s) {
    case Series::A: return fact(n + 1);
    case Series::B:
    case Series::C: return (std::uint64_t{1} << n) * fact(n);
    case Series::D: return (std::uint64_t{1} << (n - 1)) * fact(n);
    case Series::E: return n == 6 ? 51840ull : n == 7 ? 2903040ull : 696729600ull;
    case Series::F: return 1152;
    case Series::G: return 12;
    case Series::T: return 1;
  }
  return 1;
}

struct VecHash {
  std::size_t operator()(const std::vector<Int>& v) const noexcept { return WeightHash{}(Weight(v)); }
};

}  // namespace

CartanSpec::CartanSpec(std::vector<CartanFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) fail(ErrorCode::invalid_spec, "empty Cartan type");
  for (const auto& f : factors_) validate_factor(f);
}

CartanSpec CartanSpec::parse(std::string_view text) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+00D7 MULTIPLICATION SIGN in UTF-8
    if (i + 1 < text.size() && static_cast<unsigned char>(text[i]) == 0xC3 &&
        static_cast<unsigned char>(text[i + 1]) == 0x97) {
      s += 'x';
      ++i;
      continue;
    }
    char ch = static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  std::vector<CartanFactor> factors;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find('x', pos);
    std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (tok.size() < 2 || !std::all_of(tok.begin() + 1, tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail(ErrorCode::invalid_spec, "cannot parse Cartan type '" + std::string(text) + "'");
    Series series;
    switch (tok[0]) {
      case 'a': series = Series::A; break;
      case 'b': series = Series::B; break;
      case 'c': series = Series::C; break;
      case 'd': series = Series::D; break;
      case 'e': series = Series::E; break;
      case 'f': series = Series::F; break;
      case 'g': series = Series::G; break;
      case 't': series = Series::T; break;
      default: fail(ErrorCode::invalid_spec, "unknown Cartan type '" + tok + "'");
    }
    if (tok.size() > 4) fail(ErrorCode::invalid_spec, "rank too large in '" + tok + "'");
    factors.push_back({series, std::stoi(tok.substr(1))});
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return CartanSpec(std::move(factors));
}

std::string CartanSpec::str() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += 'x';
    out += series_letter(factors_[i].series);
    out += std::to_string(factors_[i].rank);
  }
  return out;
}

int CartanSpec::rank() const {
  int r = 0;
  for (const auto& f : factors_) r += f.rank;
  return r;
}

CartanSpec product(const CartanSpec& a, const CartanSpec& b) {
  auto f = a.factors();
  f.insert(f.end(), b.factors().begin(), b.factors().end());
  return CartanSpec(std::move(f));
}

RootSystem::RootSystem(CartanSpec spec) : spec_(std::move(spec)) {
  rank_ = static_cast<std::size_t>(spec_.rank());
  if (rank_ == 0) fail(ErrorCode::invalid_spec, "total rank must be at least 1");
  is_simple_.assign(rank_, false);
  root_gram_.assign(rank_, RationalVector(rank_, 0));
  cartan_.assign(rank_, std::vector<Int>(rank_, 0));
  rho_ = Weight(rank_);
  gram_.assign(rank_, RationalVector(rank_, 0));
  RationalVector height(rank_, 0);

  std::size_t off = 0;
  for (const auto& f : spec_.factors()) {
    const auto n = static_cast<std::size_t>(f.rank);
    weyl_order_ *= factor_weyl_order(f.series, f.rank);
    if (f.series != Series::T) {
      RationalMatrix b = factor_root_gram(f.series, f.rank);
      RationalMatrix a(n, RationalVector(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          a[i][j] = 2 * b[i][j] / b[j][j];
          root_gram_[off + i][off + j] = b[i][j];
          cartan_[off + i][off + j] = a[i][j].get_num().get_si();
        }
      RationalMatrix ainv = inverse(a);
      for (std::size_t i = 0; i < n; ++i) {
        is_simple_[off + i] = true;
        simple_.push_back(off + i);
        rho_[off + i] = 1;
        Rational rowsum = 0;
        for (std::size_t j = 0; j < n; ++j) {
          // (omega_i, omega_j) = (A^-1)_{ji} (alpha_i, alpha_i) / 2
          gram_[off + i][off + j] = ainv[j][i] * b[i][i] / 2;
          rowsum += ainv[i][j];
        }
        height[off + i] = rowsum;
      }
    }
    off += n;
  }

  BigInt lcm = 1;
  for (std::size_t i = 0; i < rank_; ++i) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), height[i].get_den_mpz_t());
    for (std::size_t j = 0; j < rank_; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), gram_[i][j].get_den_mpz_t());
  }
  scale_ = lcm.get_si();
  gram_scaled_.assign(rank_, std::vector<Int>(rank_));
  height_scaled_.assign(rank_, 0);
  for (std::size_t i = 0; i < rank_; ++i) {
    height_scaled_[i] = Rational(height[i] * scale_).get_num().get_si();
    for (std::size_t j = 0; j < rank_; ++j) gram_scaled_[i][j] = Rational(gram_[i][j] * scale_).get_num().get_si();
  }

  // Positive roots by height: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0,
  // p = length of the alpha_i-string below beta.
  std::unordered_set<std::vector<Int>, VecHash> known;
  std::vector<std::vector<Int>> layer;
  for (std::size_t i : simple_) {
    std::vector<Int> e(rank_, 0);
    e[i] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    for (const auto& r : layer) pos_roots_simple_.push_back(r);
    std::vector<std::vector<Int>> next;
    for (const auto& beta : layer) {
      for (std::size_t i : simple_) {
        Int p = 0;
        std::vector<Int> down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        Int pairing = 0;
        for (std::size_t j = 0; j < rank_; ++j) pairing += beta[j] * cartan_[j][i];
        if (p - pairing > 0) {
          std::vector<Int> up = beta;
          up[i] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }
  for (const auto& b : pos_roots_simple_) {
    Weight w(rank_);
    for (std::size_t j = 0; j < rank_; ++j)
      if (b[j] != 0)
        for (std::size_t k = 0; k < rank_; ++k) w[k] += b[j] * cartan_[j][k];
    pos_roots_.push_back(w);
    Rational len = 0;
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) len += b[i] * b[j] * root_gram_[i][j];
    std::vector<Int> co(rank_, 0);
    for (std::size_t i = 0; i < rank_; ++i) {
      Rational c = b[i] * root_gram_[i][i] / len;
      if (!is_integer(c)) fail(ErrorCode::internal, "non-integral coroot");
      co[i] = c.get_num().get_si();
    }
    pos_coroots_.push_back(std::move(co));
  }
}

Weight RootSystem::simple_root(std::size_t i) const { return Weight(cartan_[i]); }

Rational RootSystem::inner(const Weight& a, const Weight& b) const { return Rational(inner_scaled(a, b), scale_); }

Int RootSystem::inner_scaled(const Weight& a, const Weight& b) const {
  Int s = 0;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    const auto& row = gram_scaled_[i];
    Int t = 0;
    for (std::size_t j = 0; j < rank_; ++j) t += row[j] * b[j];
    s += a[i] * t;
  }
  return s;
}

Int RootSystem::height_scaled(const Weight& w) const {
  Int s = 0;
  for (std::size_t i = 0; i < rank_; ++i) s += height_scaled_[i] * w[i];
  return s;
}

void RootSystem::reflect(Weight& w, std::size_t i) const {
  const Int c = w[i];
  if (c == 0) return;
  const auto& a = cartan_[i];
  for (std::size_t k = 0; k < rank_; ++k) w[k] -= c * a[k];
}

bool RootSystem::is_dominant(const Weight& w) const {
  for (std::size_t i : simple_)
    if (w[i] < 0) return false;
  return true;
}

Rational RootSystem::pair(const Weight& w, const RationalVector& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) s += w[i] * x[i];
  return s;
}

RootSystemPtr build_root_system(const CartanSpec& spec) {
  static std::mutex mutex;
  static std::unordered_map<std::string, RootSystemPtr> built;
  const std::string key = spec.str();
  {
    std::lock_guard lock(mutex);
    auto it = built.find(key);
    if (it != built.end()) return it->second;
  }
  auto rs = std::make_shared<const RootSystem>(spec);
  std::lock_guard lock(mutex);
  return built.try_emplace(key, rs).first->second;
}

RootSystemPtr build_root_system(std::string_view spec) { return build_root_system(CartanSpec::parse(spec)); }

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
  std::unordered_set<Weight, WeightHash> seen{w};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    Weight cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i : rs.simple_indices()) {
      if (cur[i] == 0) continue;
      Weight nxt = cur;
      rs.reflect(nxt, i);
      if (seen.insert(nxt).second) queue.push_back(std::move(nxt));
    }
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

Dominant make_dominant(const RootSystem& rs, const Weight& w, bool shifted) {
  Weight mu = shifted ? w + rs.rho() : w;
  int parity = 1;
  while (true) {
    bool moved = false;
    for (std::size_t i : rs.simple_indices()) {
      if (mu[i] < 0) {
        rs.reflect(mu, i);
        parity = -parity;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  bool singular = false;
  for (std::size_t i : rs.simple_indices())
    if (mu[i] == 0) singular = true;
  if (shifted) mu -= rs.rho();
  return {mu, parity, singular};
}

BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  if (lambda.size() != rs.rank()) fail(ErrorCode::invalid_argument, "weight has wrong length");
  if (!rs.is_dominant(lambda)) fail(ErrorCode::not_dominant, "weight " + lambda.str() + " is not dominant");
  BigInt num = 1, den = 1;
  Weight shifted = lambda + rs.rho();
  for (const auto& alpha : rs.positive_roots()) {
    num *= BigInt(rs.inner_scaled(shifted, alpha));
    den *= BigInt(rs.inner_scaled(rs.rho(), alpha));
  }
  if (num % den != 0) fail(ErrorCode::internal, "Weyl dimension is not an integer");
  return num / den;
}

Weight dual_weight(const RootSystem& rs, const Weight& lambda) { return make_dominant(rs, -lambda, false).dominant; }

Weight apply(const RootSystem& rs, const WeylElement& w, const Weight& mu) {
  Weight out = mu;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) rs.reflect(out, static_cast<std::size_t>(*it));
  return out;
}

Weight apply_inverse(const RootSystem& rs, const WeylElement& w, const Weight& mu) {
  Weight out = mu;
  for (int i : w.word) rs.reflect(out, static_cast<std::size_t>(i));
  return out;
}

RationalVector apply(const RootSystem& rs, const WeylElement& w, const RationalVector& x) {
  RationalVector out = x;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    const auto i = static_cast<std::size_t>(*it);
    Rational c = RootSystem::pair(rs.simple_root(i), out);
    out[i] -= c;
  }
  return out;
}

WeylElement reduce(const RootSystem& rs, const WeylElement& w) {
  for (int i : w.word)
    if (i < 0 || static_cast<std::size_t>(i) >= rs.rank() || !rs.has_simple_root(static_cast<std::size_t>(i)))
      fail(ErrorCode::invalid_argument, "Weyl word uses a non-simple index " + std::to_string(i));
  Weight mu = apply(rs, w, rs.rho());
  WeylElement out;
  while (true) {
    bool moved = false;
    for (std::size_t i : rs.simple_indices()) {
      if (mu[i] < 0) {
        rs.reflect(mu, i);
        out.word.push_back(static_cast<int>(i));
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return out;
}

std::vector<WeylElement> weyl_group_elements(const RootSystem& rs) {
  if (rs.weyl_order() > 1000000) fail(ErrorCode::invalid_argument, "Weyl group too large to enumerate");
  std::unordered_map<Weight, std::size_t, WeightHash> index;
  std::vector<WeylElement> elems{WeylElement{}};
  std::vector<Weight> images{rs.rho()};
  index.emplace(rs.rho(), 0);
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (std::size_t i : rs.simple_indices()) {
      Weight nxt = images[k];
      rs.reflect(nxt, i);
      if (index.count(nxt)) continue;
      WeylElement e;
      e.word.push_back(static_cast<int>(i));
      e.word.insert(e.word.end(), elems[k].word.begin(), elems[k].word.end());
      index.emplace(nxt, elems.size());
      images.push_back(nxt);
      elems.push_back(std::move(e));
    }
  }
  return elems;
}

Weight Centralizer::map(const Weight& w) const {
  Weight out(coordinate_map.size());
  for (std::size_t k = 0; k < coordinate_map.size(); ++k) {
    Int s = 0;
    for (std::size_t j = 0; j < w.size(); ++j) s += coordinate_map[k][j] * w[j];
    out[k] = s;
  }
  return out;
}

namespace {

// Finds sigma with c[sigma(i)][sigma(j)] == t[i][j]; empty when none exists.
std::vector<std::size_t> match_cartan(const std::vector<std::vector<Int>>& c, const std::vector<std::vector<Int>>& t) {
  const std::size_t n = c.size();
  std::vector<std::size_t> sigma;
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = c[v][sigma[j]] == t[i][j] && c[sigma[j]][v] == t[j][i];
      if (!ok) continue;
      used[v] = true;
      sigma.push_back(v);
      if (go(i + 1)) return true;
      sigma.pop_back();
      used[v] = false;
    }
    return false;
  };
  if (go(0)) return sigma;
  return {};
}

}  // namespace

Centralizer centralizer_root_subsystem(const RootSystem& rs, const std::vector<RationalVector>& subspace) {
  const std::size_t n = rs.rank();
  for (const auto& x : subspace)
    if (x.size() != n) fail(ErrorCode::invalid_argument, "subspace vector has wrong length");

  std::vector<std::size_t> sub_pos;
  for (std::size_t r = 0; r < rs.positive_roots().size(); ++r) {
    bool vanishes = true;
    for (const auto& x : subspace)
      if (RootSystem::pair(rs.positive_roots()[r], x) != 0) vanishes = false;
    if (vanishes) sub_pos.push_back(r);
  }
  std::unordered_set<std::vector<Int>, VecHash> pos_set;
  for (std::size_t r : sub_pos) pos_set.insert(rs.positive_roots_simple()[r]);
  std::vector<std::size_t> simple;
  for (std::size_t r : sub_pos) {
    const auto& b = rs.positive_roots_simple()[r];
    bool decomposable = false;
    for (std::size_t s : sub_pos) {
      const auto& a = rs.positive_roots_simple()[s];
      std::vector<Int> diff(n);
      bool nonneg = true;
      for (std::size_t j = 0; j < n; ++j) {
        diff[j] = b[j] - a[j];
        if (diff[j] < 0) nonneg = false;
      }
      if (nonneg && pos_set.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(r);
  }
  std::sort(simple.begin(), simple.end(), [&](std::size_t a, std::size_t b) {
    return rs.positive_roots_simple()[a] > rs.positive_roots_simple()[b];
  });

  const std::size_t s = simple.size();
  std::vector<std::vector<Int>> cm(s, std::vector<Int>(s));
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) {
      Int v = 0;
      for (std::size_t j = 0; j < n; ++j) v += rs.positive_roots()[simple[a]][j] * rs.positive_coroots()[simple[b]][j];
      cm[a][b] = v;
    }

  std::vector<bool> assigned(s, false);
  std::vector<CartanFactor> factors;
  Centralizer out;
  for (std::size_t start = 0; start < s; ++start) {
    if (assigned[start]) continue;
    std::vector<std::size_t> comp{start};
    assigned[start] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (std::size_t v = 0; v < s; ++v)
        if (!assigned[v] && cm[comp[k]][v] != 0) {
          assigned[v] = true;
          comp.push_back(v);
        }
    std::sort(comp.begin(), comp.end());
    std::vector<std::vector<Int>> c(comp.size(), std::vector<Int>(comp.size()));
    for (std::size_t a = 0; a < comp.size(); ++a)
      for (std::size_t b = 0; b < comp.size(); ++b) c[a][b] = cm[comp[a]][comp[b]];
    const int r = static_cast<int>(comp.size());
    bool found = false;
    for (Series series : {Series::A, Series::B, Series::C, Series::D, Series::E, Series::F, Series::G}) {
      try {
        validate_factor({series, r});
      } catch (const Error&) {
        continue;
      }
      RootSystem model(CartanSpec({{series, r}}));
      auto sigma = match_cartan(c, model.cartan());
      if (sigma.empty()) continue;
      factors.push_back({series, r});
      for (std::size_t node = 0; node < sigma.size(); ++node)
        out.coordinate_map.push_back(rs.positive_coroots()[simple[comp[sigma[node]]]]);
      found = true;
      break;
    }
    if (!found) fail(ErrorCode::internal, "unrecognized root subsystem");
  }

  IntMatrix rows;
  for (std::size_t r : simple) rows.push_back(rs.positive_roots()[r].coords());
  IntMatrix ker = integer_kernel(rows, n);
  if (!ker.empty()) factors.push_back({Series::T, static_cast<int>(ker.size())});
  for (auto& k : ker) out.coordinate_map.push_back(std::move(k));
  out.sub = build_root_system(CartanSpec(std::move(factors)));
  return out;
}

}  // namespace lierep
