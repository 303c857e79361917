#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <set>

#include "error.hpp"
#include "polyhedra.hpp"
#include "serialize.hpp"

namespace lierep {

void VerificationReport::check(bool ok, Json input, Json expected, Json got) {
  ++checks;
  if (!ok) failures.push_back({std::move(input), std::move(expected), std::move(got)});
}

Json to_json(const VerificationReport& r, bool with_timing) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(Json{{"input", f.input}, {"expected", f.expected}, {"got", f.got}});
  Json out{{"suite", r.suite},   {"status", r.pass() ? "pass" : "fail"}, {"checks", r.checks},
           {"params", r.params}, {"failures", failures},                 {"details", r.details}};
  if (with_timing) out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

namespace {

class Timer {
 public:
  explicit Timer(VerificationReport& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    r_.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  VerificationReport& r_;
  std::chrono::steady_clock::time_point start_;
};

Json pair_json(const Weight& big, const Weight& small) { return Json{{"big", weight_json(big)}, {"small", weight_json(small)}}; }

// Calls f on every dominant small weight with simple coordinates in [0, hi]
// and torus coordinates in [lo, hi].
template <class F>
void for_small_box(const RootSystem& rs, Int lo, Int hi, F&& f) {
  const std::size_t n = rs.rank();
  auto low = [&](std::size_t i) { return rs.has_simple_root(i) ? std::max<Int>(lo, 0) : lo; };
  Weight w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = low(i);
  while (true) {
    f(static_cast<const Weight&>(w));
    std::size_t i = n;
    bool advanced = false;
    while (i-- > 0) {
      if (w[i] < hi) {
        ++w[i];
        for (std::size_t j = i + 1; j < n; ++j) w[j] = low(j);
        advanced = true;
        break;
      }
    }
    if (!advanced) return;
  }
}

Int max_row_sum(const IntMatrix& m) {
  Int best = 0;
  for (const auto& row : m) {
    Int s = 0;
    for (Int x : row) s += x < 0 ? -x : x;
    best = std::max(best, s);
  }
  return best;
}

Cone table_hull(const BranchingTable& t) {
  IntMatrix pts;
  for (const auto& [key, m] : t.entries) pts.push_back(concat(key.first, key.second).coords());
  return convex_hull_cone(pts);
}

}  // namespace

VerificationReport verify_cone_vanishing(const Embedding& emb, int bound, const std::vector<TableOverride>& corrupt) {
  if (bound < 1) fail(ErrorCode::invalid_argument, "cone suite needs bound >= 1");
  VerificationReport r;
  Timer timer(r);
  r.suite = "cone";
  r.params = {{"embedding", emb.label()}, {"bound", bound}};
  BranchingTable table = branching_table(emb, bound);
  for (const auto& c : corrupt) {
    if (c.value == 0)
      table.entries.erase({c.big, c.small});
    else
      table.entries[{c.big, c.small}] = c.value;
  }
  if (!corrupt.empty()) r.params["corrupted_entries"] = corrupt.size();
  Cone cone = table_hull(table);
  r.details["facets"] = cone.facets;
  r.details["equations"] = cone.equations;

  Int lo = 0, hi = 0;
  for (const auto& [key, m] : table.entries)
    for (Int x : key.second) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  --lo;
  ++hi;
  Int positive = 0;
  for (const auto& big : dominant_box(*emb.big(), bound)) {
    BranchingRow row(emb, big);
    for_small_box(*emb.small(), lo, hi, [&](const Weight& small) {
      const Int m = row.multiplicity(small);
      auto it = table.entries.find({big, small});
      const Int tv = it == table.entries.end() ? 0 : it->second;
      Json in = pair_json(big, small);
      in["check"] = "table";
      r.check(tv == m, in, m, tv);
      if (m > 0) {
        ++positive;
        const bool inside = cone_contains(cone, concat(big, small).coords()) != Containment::outside;
        in["check"] = "cone";
        r.check(inside, in, "inside", "outside");
      }
    });
  }
  r.details["positive_pairs"] = positive;
  return r;
}

std::vector<StretchPair> seeded_stretch_pairs(const Embedding& emb, int count, int max_coord, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Int> simple(0, max_coord), torus(-max_coord, max_coord);
  std::vector<StretchPair> out;
  std::set<std::pair<Weight, Weight>> seen;
  for (int attempt = 0; attempt < 1000 && static_cast<int>(out.size()) < count; ++attempt) {
    Weight big(emb.big()->rank());
    for (std::size_t i = 0; i < big.size(); ++i) big[i] = emb.big()->has_simple_root(i) ? simple(rng) : torus(rng);
    if (big.is_zero()) continue;
    // Largest multiplicities sit away from the boundary, where stretching is most informative.
    Int top = 0;
    std::vector<Weight> best;
    for (const auto& [w, m] : branch(emb, big)) {
      if (m > top) best.clear();
      if (m >= top) {
        top = m;
        best.push_back(w);
      }
    }
    std::uniform_int_distribution<std::size_t> pick(0, best.size() - 1);
    const Weight small = best[pick(rng)];
    if (seen.insert({big, small}).second) out.push_back({big, small, std::nullopt});
  }
  return out;
}

VerificationReport verify_stretch_quasipoly(const Embedding& emb, const std::vector<StretchPair>& pairs, int kfit,
                                            int khold, int max_degree, int max_period) {
  if (kfit < 0 || khold < kfit) fail(ErrorCode::invalid_argument, "need 0 <= kfit <= khold");
  VerificationReport r;
  Timer timer(r);
  r.suite = "stretch";
  // The fit needs (degree + 1) * period samples; with k = 0..kfit the period
  // bound shrinks to what the samples support.
  const int period_cap = std::max(1, std::min(max_period, (kfit + 1) / (max_degree + 1)));
  r.params = {{"embedding", emb.label()}, {"kfit", kfit},       {"khold", khold},
              {"max_degree", max_degree}, {"max_period", max_period}, {"effective_max_period", period_cap}};
  Json fits = Json::array();
  for (const auto& p : pairs) {
    const std::vector<Int> seq = stretch_function(emb, p.big, p.small, khold);
    std::map<Int, Rational> samples;
    for (int k = 0; k <= kfit; ++k) samples[k] = seq[static_cast<std::size_t>(k)];
    Json in = pair_json(p.big, p.small);
    auto qp = fit_quasi_polynomial(samples, max_degree, period_cap);
    Json fit{{"big", weight_json(p.big)}, {"small", weight_json(p.small)}, {"sequence", seq}};
    r.check(qp.has_value(), in, "quasi-polynomial fit", "no fit");
    if (qp) {
      fit["quasi_polynomial"] = quasi_polynomial_json(*qp);
      for (int k = kfit + 1; k <= khold; ++k) {
        const Rational pred = evaluate_quasi_polynomial(*qp, k);
        Json kin = in;
        kin["k"] = k;
        r.check(pred == seq[static_cast<std::size_t>(k)], kin, seq[static_cast<std::size_t>(k)], to_string(pred));
      }
      if (p.expect_period) {
        Json pin = in;
        pin["check"] = "period";
        r.check(qp->period == *p.expect_period, pin, *p.expect_period, qp->period);
      }
    }
    fits.push_back(fit);
  }
  r.details["fits"] = fits;
  return r;
}

// ---------------------------------------------------------------- faces

namespace {

struct FaceContext {
  const FaceData* face;
  // Integer multiples of the t_F basis, and w~ i(X) for each.
  std::vector<std::vector<Int>> x_small, y_big;
  Centralizer big_c, small_c;
  // Weights of the big centralizer to weights of the small one.
  RationalMatrix p_f;
};

std::vector<Int> integral_multiple(const RationalVector& v) {
  BigInt l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Int> out;
  for (const auto& q : v) out.push_back(Rational(q * l).get_num().get_si());
  return out;
}

Int dot(const Weight& w, const std::vector<Int>& x) {
  Int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * x[i];
  return s;
}

std::vector<RationalVector> lifted_t_F(const FaceData& face) {
  std::vector<RationalVector> out;
  for (const auto& x : face.t_F) out.push_back(face.emb.lift(x));
  return out;
}

FaceContext make_context(const FaceData& face) {
  FaceContext ctx{&face, {}, {}, {}, {}, {}};
  const RootSystem& big = *face.emb.big();
  for (const auto& x : face.t_F) {
    auto xi = integral_multiple(x);
    RationalVector xq(xi.begin(), xi.end());
    RationalVector y = apply(big, face.w_tilde, face.emb.lift(xq));
    ctx.x_small.push_back(xi);
    std::vector<Int> yi;
    for (const auto& q : y) {
      if (!is_integer(q) || !q.get_num().fits_slong_p()) fail(ErrorCode::internal, "non-integral face direction");
      yi.push_back(q.get_num().get_si());
    }
    ctx.y_big.push_back(std::move(yi));
  }
  ctx.big_c = centralizer_root_subsystem(big, lifted_t_F(face));
  ctx.small_c = centralizer_root_subsystem(*face.emb.small(), face.t_F);

  const std::size_t nb = big.rank(), ns = face.emb.small()->rank();
  RationalMatrix mb(nb, RationalVector(nb));
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) mb[i][j] = ctx.big_c.coordinate_map[i][j];
  RationalMatrix mb_inv = inverse(mb);
  const IntMatrix& pi = face.emb.restriction();
  // M_small * pi * M_big^-1
  RationalMatrix tmp(ns, RationalVector(nb, 0));
  for (std::size_t i = 0; i < ns; ++i)
    for (std::size_t k = 0; k < ns; ++k) {
      const Int a = ctx.small_c.coordinate_map[i][k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < nb; ++j) tmp[i][j] += a * pi[k][j];
    }
  ctx.p_f.assign(ns, RationalVector(nb, 0));
  for (std::size_t i = 0; i < ns; ++i)
    for (std::size_t k = 0; k < nb; ++k) {
      if (tmp[i][k] == 0) continue;
      for (std::size_t j = 0; j < nb; ++j) ctx.p_f[i][j] += tmp[i][k] * mb_inv[k][j];
    }
  return ctx;
}

bool vanishes(const FaceContext& ctx, const Weight& big, const Weight& small) {
  for (std::size_t k = 0; k < ctx.x_small.size(); ++k)
    if (dot(big, ctx.y_big[k]) + dot(small, ctx.x_small[k]) != 0) return false;
  return true;
}

Int face_side(const FaceContext& ctx, const Weight& big, const Weight& small) {
  const FaceData& face = *ctx.face;
  const Weight hat = apply_inverse(*face.emb.big(), face.w_tilde, big);
  const RootSystemPtr& bsub = ctx.big_c.sub;
  const RootSystemPtr& ssub = ctx.small_c.sub;
  FormalCharacter pushed(ssub);
  for (const auto& [nu, m] : irreducible(bsub, ctx.big_c.map(hat))->support()) {
    Weight image(ssub->rank());
    for (std::size_t i = 0; i < image.size(); ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < nu.size(); ++j)
        if (nu[j] != 0) s += ctx.p_f[i][j] * nu[j];
      if (!is_integer(s)) fail(ErrorCode::internal, "face restriction is not integral at " + nu.str());
      image[i] = s.get_num().get_si();
    }
    pushed.add(image, m);
  }
  return invariant_multiplicity(multiply_characters(pushed, *irreducible(ssub, ctx.small_c.map(small))));
}

void validate_with(const FaceContext& ctx) {
  const FaceData& face = *ctx.face;
  const RootSystem& big = *face.emb.big();
  if (face.t_F.empty()) fail(ErrorCode::invalid_face, "t_F basis is empty");
  for (const auto& x : face.t_F)
    if (x.size() != face.emb.small()->rank()) fail(ErrorCode::invalid_face, "t_F vector has wrong length");
  for (int i : face.w_tilde.word)
    if (i < 0 || static_cast<std::size_t>(i) >= big.rank() || !big.has_simple_root(static_cast<std::size_t>(i)))
      fail(ErrorCode::invalid_face, "w_tilde uses an invalid simple reflection " + std::to_string(i));
  std::set<Weight> positive(big.positive_roots().begin(), big.positive_roots().end());
  const auto lifted = lifted_t_F(face);
  for (const auto& a : big.positive_roots()) {
    bool central = true;
    for (const auto& y : lifted)
      if (RootSystem::pair(a, y) != 0) central = false;
    if (!central) continue;
    if (!positive.count(apply(big, face.w_tilde, a)))
      fail(ErrorCode::invalid_face, "positivity normalization fails: w_tilde sends the root " + a.str() +
                                        " of the centralizer to a negative root");
  }
  for (const auto& [b, s] : face.samples) {
    if (b.size() != big.rank() || s.size() != face.emb.small()->rank())
      fail(ErrorCode::invalid_face, "face sample has wrong length");
    if (!vanishes(ctx, b, s))
      fail(ErrorCode::invalid_face, "vanishing condition fails at sample " + b.str() + " " + s.str());
  }
}

}  // namespace

void validate_face(const FaceData& face) { validate_with(make_context(face)); }

bool on_face(const FaceData& face, const Weight& big, const Weight& small) {
  return vanishes(make_context(face), big, small);
}

Int face_multiplicity(const FaceData& face, const Weight& big, const Weight& small) {
  FaceContext ctx = make_context(face);
  validate_with(ctx);
  if (!face.emb.big()->is_dominant(big) || !face.emb.small()->is_dominant(small))
    fail(ErrorCode::not_dominant, "face point must be dominant");
  if (!vanishes(ctx, big, small)) fail(ErrorCode::invalid_face, "point " + big.str() + " " + small.str() + " is off the face");
  return face_side(ctx, big, small);
}

VerificationReport verify_face_reduction(const FaceData& face, int bound) {
  if (bound < 0) fail(ErrorCode::invalid_argument, "bound must be nonnegative");
  FaceContext ctx = make_context(face);
  validate_with(ctx);
  VerificationReport r;
  Timer timer(r);
  r.suite = "face";
  r.params = {{"face", face.name.empty() ? Json(face_to_json(face)) : Json(face.name)}, {"bound", bound}};
  r.details["big_centralizer"] = ctx.big_c.sub->spec().str();
  r.details["small_centralizer"] = ctx.small_c.sub->spec().str();

  Cone cone = table_hull(branching_table(face.emb, face.cone_bound));
  const Int hi = bound * std::max<Int>(1, max_row_sum(face.emb.restriction()));
  Int points = 0;
  for (const auto& big : dominant_box(*face.emb.big(), bound)) {
    std::optional<BranchingRow> row;
    for_small_box(*face.emb.small(), -hi, hi, [&](const Weight& small) {
      if (!vanishes(ctx, big, small)) return;
      if (cone_contains(cone, concat(big, small).coords()) == Containment::outside) return;
      ++points;
      if (!row) row.emplace(face.emb, big);
      const Int lhs = row->multiplicity(small);
      const Int rhs = face_side(ctx, big, small);
      r.check(lhs == rhs, pair_json(big, small), lhs, rhs);
    });
  }
  r.details["face_points"] = points;
  r.check(points > 0, Json{{"check", "face points"}}, "at least one", 0);
  return r;
}

FaceData face_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("embedding") || !j.contains("w_tilde") || !j.contains("t_F"))
    fail(ErrorCode::invalid_face, "face JSON needs \"embedding\", \"w_tilde\" and \"t_F\"");
  Embedding emb = j.at("embedding").is_string() ? load_embedding(j.at("embedding").get<std::string>())
                                                : embedding_from_json(j.at("embedding"));
  FaceData f{std::move(emb), {}, {}, j.value("cone_bound", 4), {}, j.value("name", std::string())};
  for (const auto& i : j.at("w_tilde")) f.w_tilde.word.push_back(i.get<int>());
  for (const auto& x : j.at("t_F")) f.t_F.push_back(rational_vector_from_json(x));
  if (j.contains("samples"))
    for (const auto& s : j.at("samples")) f.samples.emplace_back(weight_from_json(s.at(0)), weight_from_json(s.at(1)));
  return f;
}

Json face_to_json(const FaceData& f) {
  Json tf = Json::array();
  for (const auto& x : f.t_F) tf.push_back(rational_vector_json(x));
  Json samples = Json::array();
  for (const auto& [b, s] : f.samples) samples.push_back(Json::array({weight_json(b), weight_json(s)}));
  Json out;
  if (!f.name.empty()) out["name"] = f.name;
  out["embedding"] = f.emb.label();
  out["w_tilde"] = f.w_tilde.word;
  out["t_F"] = tf;
  out["cone_bound"] = f.cone_bound;
  out["samples"] = samples;
  return out;
}

namespace {

// Cartan component face c = a + b of V_a (x) V_b: t_F is the whole Cartan
// of the small A1 and w~ is the longest element of A1 x A1.
const char* kFaceA1 = R"({
  "name": "diagonal-a1-cartan",
  "embedding": "diagonal:A1",
  "w_tilde": [0, 1],
  "t_F": [["1"]],
  "cone_bound": 3,
  "samples": [[[1, 1], [2]], [[3, 0], [3]], [[2, 5], [7]]]
})";

// Facet of the A2 tensor cone with inward normal (1,2,1,2,-2,-1) on
// (lambda, mu, nu), m = dim [V_lambda (x) V_mu (x) V_nu]^K.
const char* kFaceA2 = R"({
  "name": "diagonal-a2-horn",
  "embedding": "diagonal:A2",
  "w_tilde": [3, 2, 1, 0],
  "t_F": [["-2", "-1"]],
  "cone_bound": 4,
  "samples": [[[1, 0, 1, 0], [1, 0]], [[0, 1, 0, 1], [2, 0]], [[1, 1, 0, 0], [1, 1]], [[2, 0, 0, 1], [1, 2]]]
})";

}  // namespace

std::vector<std::string> builtin_face_names() { return {"diagonal-a1-cartan", "diagonal-a2-horn"}; }

FaceData builtin_face(const std::string& name) {
  if (name == "diagonal-a1-cartan") return face_from_json(Json::parse(kFaceA1));
  if (name == "diagonal-a2-horn") return face_from_json(Json::parse(kFaceA2));
  fail(ErrorCode::invalid_argument, "unknown builtin face '" + name + "'");
}

// ---------------------------------------------------------------- localization

VerificationReport verify_localization(const RootSystemPtr& rs, int lambda_max, int n_points, std::uint64_t seed) {
  if (rs->semisimple_rank() == 0) fail(ErrorCode::invalid_argument, "localization needs a simple factor");
  VerificationReport r;
  Timer timer(r);
  r.suite = "localization";
  r.params = {{"type", rs->spec().str()}, {"lambda_max", lambda_max}, {"points", n_points}, {"seed", seed}};
  std::mt19937_64 rng(seed);
  std::size_t rejected = 0;
  std::vector<TorusPoint> pts;
  for (int i = 0; i < n_points; ++i) pts.push_back(sample_regular_point(*rs, rng, &rejected));
  r.details["resampled_singular_points"] = rejected;
  for (const auto& lambda : dominant_box(*rs, lambda_max)) {
    const auto ch = irreducible(rs, lambda);
    for (const auto& t : pts) {
      const Rational a = fixed_point_character_value(rs, lambda, t);
      const Rational b = character_value(*ch, t);
      r.check(a == b, Json{{"lambda", weight_json(lambda)}, {"t", rational_vector_json(t.values)}}, to_string(b),
              to_string(a));
    }
  }
  TorusPoint ones{RationalVector(rs->rank(), 1)};
  std::string got = "value";
  try {
    fixed_point_character_value(rs, Weight(rs->rank()), ones);
  } catch (const Error& e) {
    got = e.code() == ErrorCode::singular_point ? "singular evaluation point" : e.what();
  }
  r.check(got == "singular evaluation point", Json{{"t", rational_vector_json(ones.values)}},
          "singular evaluation point", got);
  return r;
}

// ---------------------------------------------------------------- Sym invariants

std::vector<SymFixture> default_sym_fixtures() {
  auto t1 = build_root_system("T1");
  auto t2 = build_root_system("T2");
  auto t3 = build_root_system("T3");
  auto rep = [](RootSystemPtr rs, std::vector<Weight> w) { return LinearRep{std::move(rs), std::move(w)}; };
  return {
      {rep(t1, {{1}}), "T1 {1}"},
      {rep(t1, {{1}, {1}, {2}}), "T1 {1,1,2}"},
      {rep(t1, {{1}, {2}, {3}}), "T1 {1,2,3}"},
      {rep(t1, {{2}, {3}}), "T1 {2,3}"},
      {rep(t1, {{1}, {1}, {1}, {1}}), "T1 {1,1,1,1}"},
      {rep(t1, {{3}, {5}, {7}}), "T1 {3,5,7}"},
      {rep(t2, {{1, 0}, {0, 1}}), "T2 {(1,0),(0,1)}"},
      {rep(t2, {{1, 0}, {1, 1}, {1, -1}}), "T2 {(1,0),(1,1),(1,-1)}"},
      {rep(t2, {{2, 1}, {1, 2}, {1, -1}}), "T2 {(2,1),(1,2),(1,-1)}"},
      {rep(t3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}}), "T3 {e1,e2,e3,e1+e2-e3}"},
      {rep(t1, {{1}, {-1}}), "T1 {1,-1}"},
      {rep(t2, {{1, 0}, {-1, 1}, {0, -1}}), "T2 {(1,0),(-1,1),(0,-1)}"},
      {rep(t1, {}), "T1 {}"},
  };
}

VerificationReport verify_sym_invariants(const std::vector<SymFixture>& fixtures, int max_degree) {
  VerificationReport r;
  Timer timer(r);
  r.suite = "sym";
  r.params = {{"max_degree", max_degree}, {"fixtures", fixtures.size()}};
  Json rows = Json::array();
  for (const auto& f : fixtures) {
    const MomentZeroResult mz = moment_zero_is_origin(f.rep);
    Json in{{"fixture", f.name}};
    r.check(check_certificate(f.rep, mz), in, "verifying certificate", "certificate fails");
    const std::vector<Int> dims = sym_invariant_dimensions(f.rep, max_degree);
    r.check(dims[0] == 1, Json{{"fixture", f.name}, {"d", 0}}, 1, dims[0]);
    Json row{{"fixture", f.name}, {"origin_only", mz.origin_only}};
    if (mz.origin_only) {
      row["witness"] = mz.witness;
      for (int d = 1; d <= max_degree; ++d)
        r.check(dims[static_cast<std::size_t>(d)] == 0, Json{{"fixture", f.name}, {"d", d}}, 0,
                dims[static_cast<std::size_t>(d)]);
    } else {
      row["combination"] = mz.combination;
      int first = 0;
      for (int d = 1; d <= max_degree && !first; ++d)
        if (dims[static_cast<std::size_t>(d)] > 0) first = d;
      row["first_invariant_degree"] = first;
      if (max_degree >= 1) r.check(first > 0, in, "an invariant in some degree", "none up to max_degree");
    }
    rows.push_back(row);
  }
  r.details["fixtures"] = rows;
  return r;
}

// ---------------------------------------------------------------- Peter-Weyl

VerificationReport verify_peter_weyl_consistency(const Embedding& emb, int bound) {
  if (bound < 0) fail(ErrorCode::invalid_argument, "bound must be nonnegative");
  VerificationReport r;
  Timer timer(r);
  r.suite = "peter-weyl";
  r.params = {{"embedding", emb.label()}, {"bound", bound}};
  const RootSystem& big = *emb.big();
  auto prod = build_root_system(product(big.spec(), emb.small()->spec()));
  FormalCharacter total(prod);
  const auto box = dominant_box(big, bound);
  for (const auto& nu : box) {
    const auto dual = irreducible(emb.big(), dual_weight(big, nu));
    const FormalCharacter res = restricted_irreducible(emb, nu);
    for (const auto& [x, m] : dual->support())
      for (const auto& [y, n] : res.support()) total.add(concat(x, y), m * n);
  }
  const DecompositionMap dec = decompose_into_irreducibles(total, DecompositionMethod::subtraction);
  const DecompositionMap alt = decompose_into_irreducibles(total, DecompositionMethod::alternating);
  r.check(dec == alt, Json{{"check", "decomposition oracles"}}, "agree", "disagree");
  for (const auto& mu : box) {
    const Weight mu_star = dual_weight(big, mu);
    const DecompositionMap b = branch(emb, mu_star, BranchConvention::dual);
    std::set<Weight> smalls;
    for (const auto& [l, m] : b) smalls.insert(l);
    for (const auto& [key, m] : dec)
      if (key.slice(0, big.rank()) == mu_star) smalls.insert(key.slice(big.rank(), emb.small()->rank()));
    for (const auto& l : smalls) {
      auto it = dec.find(concat(mu_star, l));
      const Int pw = it == dec.end() ? 0 : it->second;
      auto jt = b.find(l);
      const Int br = jt == b.end() ? 0 : jt->second;
      r.check(pw == br, Json{{"mu", weight_json(mu)}, {"lambda", weight_json(l)}}, br, pw);
    }
  }
  return r;
}

// ---------------------------------------------------------------- runner

bool SuiteResult::pass() const {
  return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.pass(); });
}

Json to_json(const SuiteResult& s, bool with_timing) {
  Json reports = Json::array();
  Int checks = 0, failures = 0;
  for (const auto& r : s.reports) {
    reports.push_back(to_json(r, with_timing));
    checks += r.checks;
    failures += static_cast<Int>(r.failures.size());
  }
  return Json{{"status", s.pass() ? "pass" : "fail"}, {"checks", checks}, {"failures", failures}, {"reports", reports}};
}

Json default_suite_config(std::uint64_t seed) {
  Json c;
  c["seed"] = seed;
  c["runs"] = Json::parse(R"([
    {"suite": "cone", "embedding": "diagonal:A1", "bound": 20},
    {"suite": "cone", "embedding": "torus:A2", "bound": 6},
    {"suite": "stretch", "embedding": "diagonal:A2", "seeded": {"count": 5, "max_coord": 2}, "pairs": [
      {"big": [1, 1, 1, 1], "small": [1, 1]},
      {"big": [2, 1, 1, 2], "small": [2, 2]}], "kfit": 12, "khold": 20},
    {"suite": "stretch", "embedding": "diagonal:A1", "pairs": [
      {"big": [1, 1], "small": [1], "period": 2},
      {"big": [0, 0], "small": [0], "period": 1}], "kfit": 12, "khold": 20},
    {"suite": "face", "face": "diagonal-a1-cartan", "bound": 30},
    {"suite": "face", "face": "diagonal-a2-horn", "bound": 8},
    {"suite": "localization", "type": "A1", "lambda_max": 3, "points": 20},
    {"suite": "localization", "type": "A2", "lambda_max": 3, "points": 20},
    {"suite": "sym", "max_degree": 40},
    {"suite": "peter-weyl", "embedding": "diagonal:A1", "bound": 3},
    {"suite": "peter-weyl", "embedding": "torus:A2", "bound": 2}
  ])");
  return c;
}

Json select_suite(const Json& config, const std::string& suite) {
  static const std::set<std::string> known{"cone", "stretch", "face", "localization", "sym", "peter-weyl"};
  if (suite != "all" && !known.count(suite)) fail(ErrorCode::invalid_argument, "unknown suite '" + suite + "'");
  Json out = config;
  if (suite == "all") return out;
  out["runs"] = Json::array();
  for (const auto& run : config.at("runs"))
    if (run.value("suite", std::string()) == suite) out["runs"].push_back(run);
  return out;
}

namespace {

VerificationReport run_one(const Json& run, std::uint64_t seed) {
  const std::string suite = run.at("suite").get<std::string>();
  const std::uint64_t s = run.value("seed", seed);
  if (suite == "cone") {
    std::vector<TableOverride> corrupt;
    if (run.contains("corrupt"))
      for (const auto& c : run.at("corrupt"))
        corrupt.push_back({weight_from_json(c.at(0)), weight_from_json(c.at(1)), c.at(2).get<Int>()});
    return verify_cone_vanishing(load_embedding(run.at("embedding")), run.at("bound").get<int>(), corrupt);
  }
  if (suite == "stretch") {
    Embedding emb = load_embedding(run.at("embedding"));
    std::vector<StretchPair> pairs;
    if (run.contains("seeded")) {
      const auto& sd = run.at("seeded");
      pairs = seeded_stretch_pairs(emb, sd.value("count", 5), sd.value("max_coord", 2), s);
    }
    if (run.contains("pairs"))
      for (const auto& p : run.at("pairs")) {
        StretchPair sp{weight_from_json(p.at("big")), weight_from_json(p.at("small")), std::nullopt};
        if (p.contains("period")) sp.expect_period = p.at("period").get<int>();
        pairs.push_back(std::move(sp));
      }
    return verify_stretch_quasipoly(emb, pairs, run.value("kfit", 12), run.value("khold", 20),
                                    run.value("max_degree", 2), run.value("max_period", 6));
  }
  if (suite == "face") {
    const Json& f = run.at("face");
    return verify_face_reduction(f.is_string() ? builtin_face(f.get<std::string>()) : face_from_json(f),
                                 run.value("bound", 8));
  }
  if (suite == "localization")
    return verify_localization(build_root_system(run.at("type").get<std::string>()), run.value("lambda_max", 3),
                               run.value("points", 20), s);
  if (suite == "sym") return verify_sym_invariants(default_sym_fixtures(), run.value("max_degree", 40));
  if (suite == "peter-weyl")
    return verify_peter_weyl_consistency(load_embedding(run.at("embedding")), run.value("bound", 2));
  fail(ErrorCode::invalid_argument, "unknown suite '" + suite + "'");
}

}  // namespace

SuiteResult run_suite(const Json& config) {
  if (!config.is_object() || !config.contains("runs") || !config.at("runs").is_array())
    fail(ErrorCode::invalid_argument, "suite config needs a \"runs\" array");
  const std::uint64_t seed = config.value("seed", std::uint64_t{7});
  std::vector<std::future<VerificationReport>> jobs;
  for (const auto& run : config.at("runs")) {
    if (!run.is_object() || !run.contains("suite")) fail(ErrorCode::invalid_argument, "each run needs a \"suite\"");
    jobs.push_back(std::async(std::launch::async, [run, seed] { return run_one(run, seed); }));
  }
  SuiteResult out;
  for (auto& j : jobs) out.reports.push_back(j.get());
  return out;
}

}  // namespace lierep
