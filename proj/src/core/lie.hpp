#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"
#include "weight.hpp"

namespace lierep {

enum class Series { A, B, C, D, E, F, G, T };

struct CartanFactor {
  Series series;
  int rank;
  friend bool operator==(const CartanFactor&, const CartanFactor&) = default;
};

// A product of simple Cartan types and torus factors, e.g. "A2xT1".
class CartanSpec {
 public:
  CartanSpec() = default;
  explicit CartanSpec(std::vector<CartanFactor> factors);

  // Factors separated by "x", "X" or U+00D7; case-insensitive.
  static CartanSpec parse(std::string_view text);
  std::string str() const;

  const std::vector<CartanFactor>& factors() const { return factors_; }
  int rank() const;

  friend bool operator==(const CartanSpec&, const CartanSpec&) = default;

 private:
  std::vector<CartanFactor> factors_;
};

// Product of the two specs, in order (used for K~ x K and diagonal embeddings).
CartanSpec product(const CartanSpec& a, const CartanSpec& b);

// Word in the simple reflections s_i (0-based coordinate indices), acting as
// s_{w[0]} s_{w[1]} ... s_{w[n-1]}.
struct WeylElement {
  std::vector<int> word;
  int parity() const { return word.size() % 2 == 0 ? 1 : -1; }
};

class RootSystem {
 public:
  explicit RootSystem(CartanSpec spec);

  const CartanSpec& spec() const { return spec_; }
  std::size_t rank() const { return rank_; }
  std::size_t semisimple_rank() const { return simple_.size(); }

  // Coordinate indices that carry a simple root (torus coordinates do not).
  const std::vector<std::size_t>& simple_indices() const { return simple_; }
  bool has_simple_root(std::size_t i) const { return is_simple_[i]; }

  // <alpha_i, alpha_j^vee>; zero rows and columns on torus coordinates.
  const std::vector<std::vector<Int>>& cartan() const { return cartan_; }
  Weight simple_root(std::size_t i) const;

  // Canonical order: by height, then lexicographic in simple-root coordinates.
  const std::vector<Weight>& positive_roots() const { return pos_roots_; }
  const std::vector<std::vector<Int>>& positive_roots_simple() const { return pos_roots_simple_; }
  // Coroot of each positive root, in simple-coroot coordinates.
  const std::vector<std::vector<Int>>& positive_coroots() const { return pos_coroots_; }

  const Weight& rho() const { return rho_; }
  std::uint64_t weyl_order() const { return weyl_order_; }

  // Weyl-invariant form on fundamental-weight coordinates, long roots of
  // every simple factor normalized to squared length 2, zero on torus
  // coordinates.
  const RationalMatrix& gram() const { return gram_; }
  Rational inner(const Weight& a, const Weight& b) const;
  // scale() * inner(a, b), an exact integer.
  Int inner_scaled(const Weight& a, const Weight& b) const;
  Int scale() const { return scale_; }
  // scale() * height(w), height = sum of simple-root coordinates (torus part ignored).
  Int height_scaled(const Weight& w) const;
  Rational height(const Weight& w) const { return Rational(height_scaled(w), scale_); }

  void reflect(Weight& w, std::size_t i) const;
  bool is_dominant(const Weight& w) const;
  // <w, X> for X in simple-coroot coordinates (dual lattice basis on torus factors).
  static Rational pair(const Weight& w, const RationalVector& x);

 private:
  CartanSpec spec_;
  std::size_t rank_ = 0;
  std::vector<std::size_t> simple_;
  std::vector<bool> is_simple_;
  std::vector<std::vector<Int>> cartan_;
  RationalMatrix root_gram_;  // (alpha_i, alpha_j)
  RationalMatrix gram_;
  std::vector<std::vector<Int>> gram_scaled_;
  std::vector<Int> height_scaled_;
  Int scale_ = 1;
  std::vector<Weight> pos_roots_;
  std::vector<std::vector<Int>> pos_roots_simple_;
  std::vector<std::vector<Int>> pos_coroots_;
  Weight rho_;
  std::uint64_t weyl_order_ = 1;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

RootSystemPtr build_root_system(const CartanSpec& spec);
RootSystemPtr build_root_system(std::string_view spec);

// Sorted, duplicate-free.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w);

struct Dominant {
  Weight dominant;
  int parity = 1;
  bool singular = false;
};

// shifted = true uses the dot action w.(mu) = w(mu + rho) - rho.
Dominant make_dominant(const RootSystem& rs, const Weight& w, bool shifted);

BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda);

// Highest weight of the dual representation, -w0(lambda).
Weight dual_weight(const RootSystem& rs, const Weight& lambda);

Weight apply(const RootSystem& rs, const WeylElement& w, const Weight& mu);
Weight apply_inverse(const RootSystem& rs, const WeylElement& w, const Weight& mu);
// Action on the Cartan subalgebra, X in simple-coroot coordinates.
RationalVector apply(const RootSystem& rs, const WeylElement& w, const RationalVector& x);
// Reduced word of the same group element (via the orbit of rho).
WeylElement reduce(const RootSystem& rs, const WeylElement& w);
// Every element of W, each with a reduced word. Throws above 10^6 elements.
std::vector<WeylElement> weyl_group_elements(const RootSystem& rs);

struct Centralizer {
  RootSystemPtr sub;
  // Rows are covectors in simple-coroot coordinates of the parent; row k
  // pairs a parent weight with sub coordinate k.
  std::vector<std::vector<Int>> coordinate_map;

  Weight map(const Weight& w) const;
};

// Roots vanishing on the span of `subspace` (vectors of the Cartan
// subalgebra in simple-coroot coordinates), as a product of simple types
// followed by a torus factor carrying the remaining rank.
Centralizer centralizer_root_subsystem(const RootSystem& rs, const std::vector<RationalVector>& subspace);

}  // namespace lierep
