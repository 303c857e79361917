#include "polyhedra.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "error.hpp"

namespace lierep {

namespace {

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  if (s > INT64_MAX || s < INT64_MIN) fail(ErrorCode::internal, "integer overflow in cone arithmetic");
  return static_cast<Int>(s);
}

// p * x - q * y, made primitive.
std::vector<Int> combine(Int p, const std::vector<Int>& x, Int q, const std::vector<Int>& y) {
  std::vector<Int> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    __int128 v = static_cast<__int128>(p) * x[i] - static_cast<__int128>(q) * y[i];
    if (v > INT64_MAX || v < INT64_MIN) fail(ErrorCode::internal, "integer overflow in cone arithmetic");
    out[i] = static_cast<Int>(v);
  }
  return primitive(std::move(out));
}

using Bits = std::vector<std::uint64_t>;

void set_bit(Bits& b, std::size_t i) {
  if (b.size() <= i / 64) b.resize(i / 64 + 1, 0);
  b[i / 64] |= std::uint64_t{1} << (i % 64);
}

// (a & b) is a subset of c
bool subset_of_intersection(const Bits& a, const Bits& b, const Bits& c) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t ab = a[i] & b[i];
    std::uint64_t cc = i < c.size() ? c[i] : 0;
    if (ab & ~cc) return false;
  }
  return true;
}

struct Ray {
  std::vector<Int> v;
  Bits tight;
};

// Canonical representative of v modulo span(basis): orthogonal projection,
// scaled to a primitive integer vector.
std::vector<Int> reduce_modulo(const std::vector<Int>& v, const IntMatrix& basis) {
  if (basis.empty()) return primitive(v);
  // Solve the normal equations for the projection onto span(basis).
  const std::size_t k = basis.size(), n = v.size();
  RationalMatrix g(k, RationalVector(k));
  RationalVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) g[i][j] = dot(basis[i], basis[j]);
    rhs[i] = dot(basis[i], v);
  }
  RationalMatrix ginv = inverse(g);
  RationalVector r(n);
  for (std::size_t j = 0; j < n; ++j) r[j] = v[j];
  for (std::size_t i = 0; i < k; ++i) {
    Rational c = 0;
    for (std::size_t j = 0; j < k; ++j) c += ginv[i][j] * rhs[j];
    for (std::size_t j = 0; j < n; ++j) r[j] -= c * basis[i][j];
  }
  BigInt lcm = 1;
  for (const auto& x : r) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Int> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational s = r[j] * lcm;
    if (!s.get_num().fits_slong_p()) fail(ErrorCode::internal, "overflow in canonical form");
    out[j] = s.get_num().get_si();
  }
  return primitive(std::move(out));
}

IntMatrix canonical_set(const IntMatrix& vs, const IntMatrix& modulo) {
  std::set<std::vector<Int>> s;
  for (const auto& v : vs) {
    auto r = reduce_modulo(v, modulo);
    if (gcd_of(r) != 0) s.insert(std::move(r));
  }
  return IntMatrix(s.begin(), s.end());
}

}  // namespace

ConeGenerators double_description(const IntMatrix& inequalities, const IntMatrix& equations, std::size_t dim) {
  IntMatrix lin;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<Int> e(dim, 0);
    e[i] = 1;
    lin.push_back(e);
  }
  std::vector<Ray> rays;

  for (const auto& eq : equations) {
    if (eq.size() != dim) fail(ErrorCode::invalid_argument, "equation has wrong dimension");
    std::size_t pivot = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(eq, lin[i]) != 0) {
        pivot = i;
        break;
      }
    if (pivot == lin.size()) continue;
    std::vector<Int> l0 = lin[pivot];
    Int a0 = dot(eq, l0);
    if (a0 < 0) {
      for (auto& x : l0) x = -x;
      a0 = -a0;
    }
    IntMatrix next;
    for (std::size_t i = 0; i < lin.size(); ++i) {
      if (i == pivot) continue;
      next.push_back(combine(a0, lin[i], dot(eq, lin[i]), l0));
    }
    lin = std::move(next);
  }

  std::size_t index = 0;
  for (const auto& a : inequalities) {
    if (a.size() != dim) fail(ErrorCode::invalid_argument, "inequality has wrong dimension");
    const std::size_t me = index++;
    std::size_t pivot = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) {
        pivot = i;
        break;
      }
    if (pivot != lin.size()) {
      std::vector<Int> l0 = lin[pivot];
      Int a0 = dot(a, l0);
      if (a0 < 0) {
        for (auto& x : l0) x = -x;
        a0 = -a0;
      }
      IntMatrix next;
      for (std::size_t i = 0; i < lin.size(); ++i)
        if (i != pivot) next.push_back(combine(a0, lin[i], dot(a, lin[i]), l0));
      lin = std::move(next);
      for (auto& r : rays) {
        r.v = combine(a0, r.v, dot(a, r.v), l0);
        set_bit(r.tight, me);
      }
      // l0 is tight on every earlier constraint, but not on this one.
      Ray fresh{l0, {}};
      for (std::size_t j = 0; j < me; ++j) set_bit(fresh.tight, j);
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<std::size_t> pos, neg;
    std::vector<Int> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      if (val[i] > 0)
        pos.push_back(i);
      else if (val[i] < 0)
        neg.push_back(i);
    }
    std::vector<Ray> next;
    for (std::size_t p : pos)
      for (std::size_t n : neg) {
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          if (subset_of_intersection(rays[p].tight, rays[n].tight, rays[r].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray c{combine(val[p], rays[n].v, val[n], rays[p].v), {}};
        const std::size_t words = std::min(rays[p].tight.size(), rays[n].tight.size());
        c.tight.resize(words);
        for (std::size_t w = 0; w < words; ++w) c.tight[w] = rays[p].tight[w] & rays[n].tight[w];
        set_bit(c.tight, me);
        next.push_back(std::move(c));
      }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] < 0) continue;
      if (val[i] == 0) set_bit(rays[i].tight, me);
      next.push_back(std::move(rays[i]));
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  out.lineality = hermite_basis(lin);
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

Cone cone_from_generators(const IntMatrix& rays, const IntMatrix& lineality, std::size_t dim) {
  IntMatrix ineq = rays;
  for (const auto& l : lineality) {
    ineq.push_back(l);
    std::vector<Int> m = l;
    for (auto& x : m) x = -x;
    ineq.push_back(std::move(m));
  }
  ConeGenerators dual = double_description(ineq, {}, dim);
  Cone c;
  c.ambient_dim = dim;
  c.equations = hermite_basis(dual.lineality);
  c.facets = canonical_set(dual.rays, c.equations);
  ConeGenerators primal = double_description(c.facets, c.equations, dim);
  c.lineality = hermite_basis(primal.lineality);
  c.rays = canonical_set(primal.rays, c.lineality);
  return c;
}

Cone cone_from_inequalities(const IntMatrix& facets, const IntMatrix& equations, std::size_t dim) {
  ConeGenerators primal = double_description(facets, equations, dim);
  Cone c = cone_from_generators(primal.rays, primal.lineality, dim);
  return c;
}

Cone convex_hull_cone(const IntMatrix& points) {
  if (points.empty()) fail(ErrorCode::invalid_argument, "convex hull of an empty point set");
  const std::size_t dim = points[0].size();
  std::set<std::vector<Int>> dirs;
  for (const auto& p : points) {
    if (p.size() != dim) fail(ErrorCode::invalid_argument, "points of different dimensions");
    auto q = primitive(p);
    if (gcd_of(q) != 0) dirs.insert(std::move(q));
  }
  Cone c = cone_from_generators(IntMatrix(dirs.begin(), dirs.end()), {}, dim);
  c.lattice = hermite_basis(points);
  return c;
}

Containment cone_contains(const Cone& cone, const std::vector<Int>& point) {
  if (point.size() != cone.ambient_dim) fail(ErrorCode::invalid_argument, "point has wrong dimension");
  for (const auto& e : cone.equations)
    if (dot(e, point) != 0) return Containment::outside;
  bool tight = false;
  for (const auto& f : cone.facets) {
    Int v = dot(f, point);
    if (v < 0) return Containment::outside;
    if (v == 0) tight = true;
  }
  return tight ? Containment::boundary : Containment::interior;
}

std::size_t cone_dimension(const Cone& cone) { return cone.ambient_dim - cone.equations.size(); }

SupportCone support_cone(const Embedding& emb, int bound) {
  if (bound < 0) fail(ErrorCode::invalid_argument, "bound must be nonnegative");
  SupportCone out;
  out.table = branching_table(emb, bound);
  if (out.table.entries.empty()) fail(ErrorCode::invalid_embedding, "empty support");

  auto max_coord = [](const Weight& w) {
    Int m = 0;
    for (Int x : w) m = std::max(m, x < 0 ? -x : x);
    return m;
  };
  std::vector<IntMatrix> by_bound(static_cast<std::size_t>(bound) + 1);
  for (const auto& [key, m] : out.table.entries) {
    auto b = static_cast<std::size_t>(max_coord(key.first));
    by_bound[b].push_back(concat(key.first, key.second).coords());
  }
  IntMatrix acc;
  std::vector<std::pair<IntMatrix, IntMatrix>> h_at;
  for (int b = 0; b <= bound; ++b) {
    const auto& more = by_bound[static_cast<std::size_t>(b)];
    acc.insert(acc.end(), more.begin(), more.end());
    Cone c = convex_hull_cone(acc);
    out.report.facet_counts.push_back(c.facets.size());
    h_at.emplace_back(c.facets, c.equations);
    if (b == bound) out.cone = std::move(c);
  }
  out.report.bound = bound;
  out.report.stable_from = bound;
  while (out.report.stable_from > 0 && h_at[static_cast<std::size_t>(out.report.stable_from - 1)] == h_at.back())
    --out.report.stable_from;

  // Saturation gaps: dominant lattice points of the cone inside the sampled box with m = 0.
  const std::size_t sr = emb.small()->rank();
  std::vector<Int> lo(sr, 0), hi(sr, 0);
  bool first = true;
  for (const auto& [key, m] : out.table.entries)
    for (std::size_t i = 0; i < sr; ++i) {
      lo[i] = first ? key.second[i] : std::min(lo[i], key.second[i]);
      hi[i] = first ? key.second[i] : std::max(hi[i], key.second[i]);
      if (i + 1 == sr) first = false;
    }
  for (const auto& big : dominant_box(*emb.big(), bound)) {
    Weight small(sr);
    for (std::size_t i = 0; i < sr; ++i) small[i] = lo[i];
    while (true) {
      if (emb.small()->is_dominant(small)) {
        auto pt = concat(big, small).coords();
        if (cone_contains(out.cone, pt) != Containment::outside && !out.table.entries.count({big, small}))
          out.report.gaps.push_back(pt);
      }
      std::size_t i = sr;
      bool advanced = false;
      while (i-- > 0) {
        if (small[i] < hi[i]) {
          ++small[i];
          for (std::size_t j = i + 1; j < sr; ++j) small[j] = lo[j];
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
  std::sort(out.report.gaps.begin(), out.report.gaps.end());
  return out;
}

}  // namespace lierep
