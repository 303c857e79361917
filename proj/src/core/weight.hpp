#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lierep {

using Int = std::int64_t;

// Integer lattice vector. For a RootSystem these are fundamental-weight
// coordinates on simple factors and character-lattice coordinates on torus
// factors.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t n) : c_(n, 0) {}
  Weight(std::initializer_list<Int> il) : c_(il) {}
  explicit Weight(std::vector<Int> v) : c_(std::move(v)) {}

  std::size_t size() const { return c_.size(); }
  Int& operator[](std::size_t i) { return c_[i]; }
  Int operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Int>& coords() const { return c_; }
  std::span<const Int> span() const { return c_; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  bool is_zero() const {
    for (Int x : c_)
      if (x != 0) return false;
    return true;
  }

  Weight& operator+=(const Weight& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Weight operator*(Int k, Weight a) {
    for (auto& x : a.c_) x *= k;
    return a;
  }

  // Concatenation (weights of a product group).
  friend Weight concat(const Weight& a, const Weight& b) {
    std::vector<Int> v = a.c_;
    v.insert(v.end(), b.c_.begin(), b.c_.end());
    return Weight(std::move(v));
  }
  Weight slice(std::size_t from, std::size_t n) const {
    return Weight(std::vector<Int>(c_.begin() + from, c_.begin() + from + n));
  }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  // "[1,-2]"
  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c_[i]);
    }
    return s + "]";
  }

 private:
  std::vector<Int> c_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Int x : w) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Parses "1,-2,0" (brackets optional).
Weight parse_weight(const std::string& text);

}  // namespace lierep
