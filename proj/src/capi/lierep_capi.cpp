#include "lierep/lierep.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "cache.hpp"
#include "error.hpp"
#include "localization.hpp"
#include "polyhedra.hpp"
#include "quasipoly.hpp"
#include "serialize.hpp"
#include "verify.hpp"

using namespace lierep;

struct lierep_context {
  lierep_format format = LIEREP_FORMAT_JSON;
  bool cache = true;
  std::string cache_dir;
  std::shared_ptr<DiskCharacterStore> store;
};

namespace {

thread_local std::string last_error;

struct Output {
  Json json;
  std::string csv;
};

class StoreGuard {
 public:
  explicit StoreGuard(lierep_context* ctx) {
    if (!ctx->cache) return;
    if (!ctx->store)
      ctx->store = std::make_shared<DiskCharacterStore>(ctx->cache_dir.empty() ? default_cache_dir()
                                                                                : std::filesystem::path(ctx->cache_dir));
    set_character_store(ctx->store);
  }
  ~StoreGuard() { set_character_store(nullptr); }
};

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::string str_arg(const char* s, const char* what) {
  if (!s) fail(ErrorCode::invalid_argument, std::string("missing ") + what);
  return s;
}

Weight weight_arg(const RootSystem& rs, const char* s, const char* what) {
  Weight w = parse_weight(str_arg(s, what));
  if (w.size() != rs.rank())
    fail(ErrorCode::invalid_argument, std::string(what) + " " + w.str() + " has length " + std::to_string(w.size()) +
                                          ", expected " + std::to_string(rs.rank()));
  return w;
}

std::string csv_weight(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
  return s;
}

std::string csv_decomposition(const DecompositionMap& d) {
  std::string out = "weight,multiplicity\n";
  for (const auto& [w, m] : d) out += csv_weight(w) + "," + std::to_string(m) + "\n";
  return out;
}

template <class F>
lierep_status run(lierep_context* ctx, char** out, F&& body) {
  last_error.clear();
  if (!out) {
    last_error = "output pointer is null";
    return LIEREP_INVALID_ARGUMENT;
  }
  *out = nullptr;
  if (!ctx) {
    last_error = "context is null";
    return LIEREP_INVALID_ARGUMENT;
  }
  try {
    StoreGuard guard(ctx);
    Output o = body();
    std::string text = ctx->format == LIEREP_FORMAT_CSV && !o.csv.empty() ? o.csv : dump(o.json) + "\n";
    *out = dup(text);
    return LIEREP_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<lierep_status>(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("bad JSON: ") + e.what();
    return LIEREP_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return LIEREP_INTERNAL;
  }
}

std::map<Int, Rational> parse_samples(const std::string& text) {
  std::map<Int, Rational> out;
  std::stringstream ss(text);
  std::string item;
  Int next = 0;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) fail(ErrorCode::invalid_argument, "empty sample in '" + text + "'");
    const auto colon = item.find(':');
    Int k = next;
    std::string v = item;
    if (colon != std::string::npos) {
      try {
        k = std::stoll(item.substr(0, colon));
      } catch (const std::exception&) {
        fail(ErrorCode::invalid_argument, "bad sample index in '" + item + "'");
      }
      v = item.substr(colon + 1);
    }
    if (out.count(k)) fail(ErrorCode::invalid_argument, "sample " + std::to_string(k) + " given twice");
    out[k] = parse_rational(v);
    next = k + 1;
  }
  return out;
}

std::vector<Weight> parse_weight_list(const RootSystem& rs, const std::string& text) {
  std::vector<Weight> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(weight_arg(rs, item.c_str(), "weight"));
  return out;
}

std::string report_csv(const std::vector<VerificationReport>& reports) {
  std::string csv = "suite,status,checks,failures\n";
  for (const auto& r : reports)
    csv += r.suite + "," + (r.pass() ? "pass" : "fail") + "," + std::to_string(r.checks) + "," +
           std::to_string(r.failures.size()) + "\n";
  return csv;
}

lierep_status verification_status(lierep_status st, bool passed) {
  if (st != LIEREP_OK || passed) return st;
  last_error = "verification failed";
  return LIEREP_VERIFICATION_FAILED;
}

}  // namespace

extern "C" {

const char* lierep_version(void) { return "1.0.0"; }

const char* lierep_status_name(lierep_status s) {
  switch (s) {
    case LIEREP_OK: return "ok";
    case LIEREP_INVALID_ARGUMENT: return "invalid argument";
    case LIEREP_INVALID_SPEC: return "invalid Cartan type";
    case LIEREP_NOT_DOMINANT: return "weight not dominant";
    case LIEREP_NOT_A_CHARACTER: return "not a character";
    case LIEREP_INVALID_EMBEDDING: return "not a valid embedding datum";
    case LIEREP_SINGULAR_POINT: return "singular evaluation point";
    case LIEREP_NOT_LOCALLY_FINITE: return "index not locally finite";
    case LIEREP_INSUFFICIENT_SAMPLES: return "insufficient samples";
    case LIEREP_INVALID_FACE: return "invalid face data";
    case LIEREP_IO_ERROR: return "i/o error";
    case LIEREP_INTERNAL: return "internal error";
    case LIEREP_VERIFICATION_FAILED: return "verification failed";
  }
  return "unknown status";
}

const char* lierep_last_error(void) { return last_error.c_str(); }

void lierep_string_free(char* s) { std::free(s); }

lierep_status lierep_context_new(lierep_context** out) {
  if (!out) return LIEREP_INVALID_ARGUMENT;
  *out = new (std::nothrow) lierep_context();
  return *out ? LIEREP_OK : LIEREP_INTERNAL;
}

void lierep_context_free(lierep_context* ctx) { delete ctx; }

lierep_status lierep_context_set_format(lierep_context* ctx, lierep_format format) {
  if (!ctx || (format != LIEREP_FORMAT_JSON && format != LIEREP_FORMAT_CSV)) return LIEREP_INVALID_ARGUMENT;
  ctx->format = format;
  return LIEREP_OK;
}

lierep_status lierep_context_set_cache(lierep_context* ctx, int enabled, const char* dir) {
  if (!ctx) return LIEREP_INVALID_ARGUMENT;
  ctx->cache = enabled != 0;
  ctx->cache_dir = dir ? dir : "";
  ctx->store.reset();
  return LIEREP_OK;
}

lierep_status lierep_roots(lierep_context* ctx, const char* type, char** out) {
  return run(ctx, out, [&] {
    auto rs = build_root_system(str_arg(type, "type"));
    Json roots = Json::array();
    std::string csv = "root\n";
    for (const auto& a : rs->positive_roots()) {
      roots.push_back(weight_json(a));
      csv += csv_weight(a) + "\n";
    }
    Json j{{"type", rs->spec().str()},
           {"rank", rs->rank()},
           {"positive_roots", roots.size()},
           {"weyl_order", rs->weyl_order()},
           {"cartan", rs->cartan()},
           {"rho", weight_json(rs->rho())},
           {"roots", roots}};
    return Output{j, csv};
  });
}

lierep_status lierep_dim(lierep_context* ctx, const char* type, const char* weight, char** out) {
  return run(ctx, out, [&] {
    auto rs = build_root_system(str_arg(type, "type"));
    const std::string d = weyl_dimension(*rs, weight_arg(*rs, weight, "weight")).get_str();
    return Output{Json::parse(d), d + "\n"};
  });
}

lierep_status lierep_weights(lierep_context* ctx, const char* type, const char* weight, char** out) {
  return run(ctx, out, [&] {
    auto rs = build_root_system(str_arg(type, "type"));
    FormalCharacter ch = irreducible_character(rs, weight_arg(*rs, weight, "weight"));
    std::string csv = "weight,multiplicity\n";
    for (const auto& [w, m] : ch.sorted()) csv += csv_weight(w) + "," + std::to_string(m) + "\n";
    return Output{character_json(ch), csv};
  });
}

lierep_status lierep_tensor(lierep_context* ctx, const char* type, const char* lhs, const char* rhs, char** out) {
  return run(ctx, out, [&] {
    auto rs = build_root_system(str_arg(type, "type"));
    auto d = tensor_decompose(rs, weight_arg(*rs, lhs, "lhs"), weight_arg(*rs, rhs, "rhs"));
    return Output{decomposition_json(d), csv_decomposition(d)};
  });
}

lierep_status lierep_branch(lierep_context* ctx, const char* embedding, const char* weight, int plain, char** out) {
  return run(ctx, out, [&] {
    Embedding emb = load_embedding(str_arg(embedding, "embedding"));
    auto d = branch(emb, weight_arg(*emb.big(), weight, "weight"),
                    plain ? BranchConvention::plain : BranchConvention::dual);
    return Output{decomposition_json(d), csv_decomposition(d)};
  });
}

lierep_status lierep_table(lierep_context* ctx, const char* embedding, int bound, char** out) {
  return run(ctx, out, [&] {
    Embedding emb = load_embedding(str_arg(embedding, "embedding"));
    BranchingTable t = branching_table(emb, bound);
    return Output{table_json(t), table_csv(t)};
  });
}

lierep_status lierep_cone(lierep_context* ctx, const char* embedding, int bound, char** out) {
  return run(ctx, out, [&] {
    Embedding emb = load_embedding(str_arg(embedding, "embedding"));
    SupportCone sc = support_cone(emb, bound);
    Json j = cone_json(sc.cone);
    j["saturation"] = {{"bound", sc.report.bound},
                       {"facet_counts", sc.report.facet_counts},
                       {"stable_from", sc.report.stable_from},
                       {"gap_count", sc.report.gaps.size()},
                       {"gaps", sc.report.gaps}};
    std::string csv = "kind,vector\n";
    for (const auto& f : sc.cone.facets) csv += "facet," + csv_weight(Weight(f)) + "\n";
    for (const auto& e : sc.cone.equations) csv += "equation," + csv_weight(Weight(e)) + "\n";
    for (const auto& r : sc.cone.rays) csv += "ray," + csv_weight(Weight(r)) + "\n";
    for (const auto& l : sc.cone.lineality) csv += "lineality," + csv_weight(Weight(l)) + "\n";
    return Output{j, csv};
  });
}

lierep_status lierep_stretch(lierep_context* ctx, const char* embedding, const char* big, const char* small, int kmax,
                             char** out) {
  return run(ctx, out, [&] {
    Embedding emb = load_embedding(str_arg(embedding, "embedding"));
    const Weight b = weight_arg(*emb.big(), big, "big weight");
    const Weight s = weight_arg(*emb.small(), small, "small weight");
    const auto seq = stretch_function(emb, b, s, kmax);
    std::string csv = "k,multiplicity\n";
    for (std::size_t k = 0; k < seq.size(); ++k) csv += std::to_string(k) + "," + std::to_string(seq[k]) + "\n";
    return Output{Json{{"big", weight_json(b)}, {"small", weight_json(s)}, {"sequence", seq}}, csv};
  });
}

lierep_status lierep_stretch_fit(lierep_context* ctx, const char* embedding, const char* big, const char* small,
                                 int kfit, int khold, int max_degree, int max_period, char** out) {
  bool passed = true;
  lierep_status st = run(ctx, out, [&] {
    Embedding emb = load_embedding(str_arg(embedding, "embedding"));
    StretchPair p{weight_arg(*emb.big(), big, "big weight"), weight_arg(*emb.small(), small, "small weight"),
                  std::nullopt};
    VerificationReport r = verify_stretch_quasipoly(emb, {p}, kfit, khold, max_degree, max_period);
    passed = r.pass();
    return Output{to_json(r), report_csv({r})};
  });
  return verification_status(st, passed);
}

lierep_status lierep_fit(lierep_context* ctx, const char* samples, int max_degree, int max_period, char** out) {
  return run(ctx, out, [&] {
    auto qp = fit_quasi_polynomial(parse_samples(str_arg(samples, "samples")), max_degree, max_period);
    if (!qp)
      return Output{Json{{"no_fit", true}, {"max_degree", max_degree}, {"max_period", max_period}}, "no_fit\n"};
    std::string csv = "residue,coefficients\n";
    for (std::size_t r = 0; r < qp->pieces.size(); ++r) {
      csv += std::to_string(r) + ",";
      for (std::size_t i = 0; i < qp->pieces[r].size(); ++i) csv += (i ? " " : "") + to_string(qp->pieces[r][i]);
      csv += "\n";
    }
    return Output{quasi_polynomial_json(*qp), csv};
  });
}

lierep_status lierep_face_check(lierep_context* ctx, const char* face, int bound, char** out) {
  bool passed = true;
  lierep_status st = run(ctx, out, [&] {
    const std::string name = str_arg(face, "face");
    FaceData f = [&] {
      for (const auto& b : builtin_face_names())
        if (b == name) return builtin_face(name);
      std::ifstream in(name);
      if (!in) fail(ErrorCode::io_error, "cannot open face file '" + name + "'");
      return face_from_json(Json::parse(in));
    }();
    VerificationReport r = verify_face_reduction(f, bound);
    passed = r.pass();
    return Output{to_json(r), report_csv({r})};
  });
  return verification_status(st, passed);
}

lierep_status lierep_sym_invariants(lierep_context* ctx, const char* type, const char* weights, int max_degree,
                                    char** out) {
  return run(ctx, out, [&] {
    auto rs = build_root_system(str_arg(type, "type"));
    LinearRep rep{rs, parse_weight_list(*rs, str_arg(weights, "weights"))};
    MomentZeroResult mz = moment_zero_is_origin(rep);
    const auto dims = sym_invariant_dimensions(rep, max_degree);
    Json ws = Json::array();
    for (const auto& w : rep.weights) ws.push_back(weight_json(w));
    Json j{{"type", rs->spec().str()}, {"weights", ws}, {"moment_zero_is_origin", mz.origin_only}};
    if (mz.origin_only)
      j["witness"] = mz.witness;
    else
      j["combination"] = mz.combination;
    j["dimensions"] = dims;
    std::string csv = "degree,invariants\n";
    for (std::size_t d = 0; d < dims.size(); ++d) csv += std::to_string(d) + "," + std::to_string(dims[d]) + "\n";
    return Output{j, csv};
  });
}

lierep_status lierep_localize(lierep_context* ctx, const char* type, const char* weight, const char* point,
                              char** out) {
  return run(ctx, out, [&] {
    auto rs = build_root_system(str_arg(type, "type"));
    const Weight lambda = weight_arg(*rs, weight, "weight");
    TorusPoint t;
    std::stringstream ss(str_arg(point, "point"));
    std::string item;
    while (std::getline(ss, item, ',')) t.values.push_back(parse_rational(item));
    const Rational fp = fixed_point_character_value(rs, lambda, t);
    const Rational cv = character_value(*irreducible(rs, lambda), t);
    Json j{{"type", rs->spec().str()},  {"weight", weight_json(lambda)}, {"point", rational_vector_json(t.values)},
           {"fixed_point", to_string(fp)}, {"character", to_string(cv)},  {"equal", fp == cv}};
    return Output{j, "fixed_point,character,equal\n" + to_string(fp) + "," + to_string(cv) + "," +
                         (fp == cv ? "true" : "false") + "\n"};
  });
}

lierep_status lierep_verify(lierep_context* ctx, const char* suite, uint64_t seed, const char* config_path,
                            char** out) {
  bool passed = true;
  lierep_status st = run(ctx, out, [&] {
    Json config;
    if (config_path) {
      std::ifstream in(config_path);
      if (!in) fail(ErrorCode::io_error, std::string("cannot open config '") + config_path + "'");
      config = Json::parse(in);
      if (!config.contains("seed")) config["seed"] = seed;
    } else {
      config = default_suite_config(seed);
    }
    SuiteResult res = run_suite(select_suite(config, suite ? suite : "all"));
    passed = res.pass();
    return Output{to_json(res), report_csv(res.reports)};
  });
  return verification_status(st, passed);
}

}  // extern "C"
