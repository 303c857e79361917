#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "error.hpp"
#include "integer_linear.hpp"
#include "rational.hpp"
#include "weight.hpp"

namespace lierep {

Weight parse_weight(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != '[' && ch != ']' && !std::isspace(static_cast<unsigned char>(ch))) s += ch;
  std::vector<Int> v;
  if (s.empty()) return Weight(v);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long x = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      v.push_back(x);
    } catch (const std::exception&) {
      fail(ErrorCode::invalid_argument, "bad weight '" + text + "'");
    }
  }
  return Weight(std::move(v));
}

RationalMatrix inverse(RationalMatrix m) {
  const std::size_t n = m.size();
  RationalMatrix inv(n, RationalVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) fail(ErrorCode::internal, "singular matrix");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Rational piv = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

std::size_t rank(RationalMatrix m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

Int gcd_of(const std::vector<Int>& v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

std::vector<Int> primitive(std::vector<Int> v) {
  Int g = gcd_of(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

namespace {

// Integer row reduction on the first `cols` columns; keeps every row.
// Returns the number of pivot rows (which come first).
std::size_t echelon(IntMatrix& a, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    while (true) {
      std::size_t best = a.size();
      for (std::size_t i = r; i < a.size(); ++i)
        if (a[i][c] != 0 && (best == a.size() || std::abs(a[i][c]) < std::abs(a[best][c]))) best = i;
      if (best == a.size()) break;
      std::swap(a[r], a[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][c] == 0) continue;
        Int q = a[i][c] / a[r][c];
        for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r < a.size() && a[r][c] != 0) {
      if (a[r][c] < 0)
        for (auto& x : a[r]) x = -x;
      for (std::size_t i = 0; i < r; ++i) {
        Int q = a[i][c] / a[r][c];
        if (a[i][c] - q * a[r][c] < 0) --q;
        if (q != 0)
          for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= q * a[r][j];
      }
      ++r;
    }
  }
  return r;
}

}  // namespace

IntMatrix hermite_basis(IntMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  std::size_t r = echelon(rows, cols);
  rows.resize(r);
  return rows;
}

IntMatrix integer_kernel(const IntMatrix& m, std::size_t n) {
  const std::size_t s = m.size();
  IntMatrix aug(n, std::vector<Int>(s + n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < s; ++i) aug[j][i] = m[i][j];
    aug[j][s + j] = 1;
  }
  std::size_t r = echelon(aug, s);
  IntMatrix ker;
  for (std::size_t j = r; j < n; ++j) ker.emplace_back(aug[j].begin() + static_cast<std::ptrdiff_t>(s), aug[j].end());
  return hermite_basis(std::move(ker));
}

}  // namespace lierep
