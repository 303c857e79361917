// Command-line front end over the C API.
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>

#include "CLI11.hpp"
#include "lierep/lierep.h"

namespace {

struct Options {
  std::string type, lhs, rhs, weight, embedding, small, samples, face, weights, point, suite = "all", config;
  std::string format = "json", cache_dir;
  int bound = 4, kmax = 12, kfit = -1, khold = 20, degree = 2, period = 6, max_degree = 10;
  std::uint64_t seed = 7;
  bool no_cache = false, plain = false;
};

int finish(lierep_status st, char* out) {
  if (out) {
    std::fputs(out, stdout);
    lierep_string_free(out);
  }
  if (st == LIEREP_OK) return 0;
  if (st != LIEREP_VERIFICATION_FAILED || !*lierep_last_error())
    std::fprintf(stderr, "lierep: %s: %s\n", lierep_status_name(st), lierep_last_error());
  if (st == LIEREP_INVALID_ARGUMENT || st == LIEREP_INVALID_SPEC) return 2;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact branching, tensor and multiplicity computations for compact Lie groups"};
  app.set_version_flag("--version", std::string(lierep_version()));
  app.require_subcommand(1);
  Options o;

  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--no-cache", o.no_cache, "Do not read or write the on-disk character cache");
  app.add_option("--cache-dir", o.cache_dir, "Cache root (default: $LIEREP_CACHE_DIR or the user data directory)");

  std::function<lierep_status(lierep_context*, char**)> action;
  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  auto type_opt = [&](CLI::App* s) { s->add_option("--type", o.type, "Cartan type, e.g. A2, B3xT1")->required(); };
  auto weight_opt = [&](CLI::App* s) {
    s->add_option("--weight", o.weight, "Weight in fundamental coordinates, e.g. 1,0,2")->required();
  };
  auto emb_opt = [&](CLI::App* s) {
    s->add_option("--embedding", o.embedding, "Builtin (diagonal:A2, torus:A2, levi:B3) or embedding JSON file")
        ->required();
  };

  auto* roots = sub("roots", "Root system data");
  type_opt(roots);
  roots->callback([&] { action = [&](auto* c, auto** out) { return lierep_roots(c, o.type.c_str(), out); }; });

  auto* dim = sub("dim", "Dimension of an irreducible representation");
  type_opt(dim);
  weight_opt(dim);
  dim->callback([&] {
    action = [&](auto* c, auto** out) { return lierep_dim(c, o.type.c_str(), o.weight.c_str(), out); };
  });

  auto* weights = sub("weights", "Weight multiplicities of an irreducible representation");
  type_opt(weights);
  weight_opt(weights);
  weights->callback([&] {
    action = [&](auto* c, auto** out) { return lierep_weights(c, o.type.c_str(), o.weight.c_str(), out); };
  });

  auto* tensor = sub("tensor", "Decompose a tensor product of two irreducibles");
  type_opt(tensor);
  tensor->add_option("--lhs", o.lhs, "First highest weight")->required();
  tensor->add_option("--rhs", o.rhs, "Second highest weight")->required();
  tensor->callback([&] {
    action = [&](auto* c, auto** out) {
      return lierep_tensor(c, o.type.c_str(), o.lhs.c_str(), o.rhs.c_str(), out);
    };
  });

  auto* br = sub("branch", "Branching multiplicities m(big, small) for one big weight");
  emb_opt(br);
  weight_opt(br);
  br->add_flag("--plain", o.plain, "Restrict V itself instead of its dual");
  br->callback([&] {
    action = [&](auto* c, auto** out) {
      return lierep_branch(c, o.embedding.c_str(), o.weight.c_str(), o.plain, out);
    };
  });

  auto* table = sub("table", "Branching table over a box of big weights");
  emb_opt(table);
  table->add_option("--bound", o.bound, "Coordinate bound on big weights")->check(CLI::NonNegativeNumber);
  table->callback([&] {
    action = [&](auto* c, auto** out) { return lierep_table(c, o.embedding.c_str(), o.bound, out); };
  });

  auto* cone = sub("cone", "Support cone of the branching multiplicities");
  emb_opt(cone);
  cone->add_option("--bound", o.bound, "Coordinate bound on big weights")->check(CLI::NonNegativeNumber);
  cone->callback([&] {
    action = [&](auto* c, auto** out) { return lierep_cone(c, o.embedding.c_str(), o.bound, out); };
  });

  auto* stretch = sub("stretch", "Stretched multiplicities m(k big, k small) for k = 0..kmax");
  emb_opt(stretch);
  stretch->add_option("--weight,--big", o.weight, "Big weight")->required();
  stretch->add_option("--small", o.small, "Small weight")->required();
  stretch->add_option("--kmax", o.kmax, "Largest stretch factor")->check(CLI::NonNegativeNumber);
  stretch->add_option("--kfit", o.kfit, "Fit a quasi-polynomial on k <= kfit and test it up to --khold")
      ->check(CLI::NonNegativeNumber);
  stretch->add_option("--khold", o.khold, "Largest hold-out k")->check(CLI::NonNegativeNumber);
  stretch->add_option("--degree", o.degree, "Maximal degree of the fit")->check(CLI::NonNegativeNumber);
  stretch->add_option("--period", o.period, "Maximal period of the fit")->check(CLI::PositiveNumber);
  stretch->callback([&] {
    action = [&](auto* c, auto** out) {
      if (o.kfit >= 0)
        return lierep_stretch_fit(c, o.embedding.c_str(), o.weight.c_str(), o.small.c_str(), o.kfit, o.khold,
                                  o.degree, o.period, out);
      return lierep_stretch(c, o.embedding.c_str(), o.weight.c_str(), o.small.c_str(), o.kmax, out);
    };
  });

  auto* fit = sub("fit", "Fit a quasi-polynomial to integer samples");
  fit->add_option("--samples", o.samples, "Values v0,v1,... or pairs k:v,...")->required();
  fit->add_option("--degree", o.degree, "Maximal degree")->check(CLI::NonNegativeNumber);
  fit->add_option("--period", o.period, "Maximal period")->check(CLI::PositiveNumber);
  fit->callback([&] {
    action = [&](auto* c, auto** out) { return lierep_fit(c, o.samples.c_str(), o.degree, o.period, out); };
  });

  auto* face = sub("face-check", "Check face reduction on a face fixture");
  face->add_option("--face", o.face, "Builtin face name or face JSON file")->required();
  face->add_option("--bound", o.bound, "Coordinate bound on big weights")->check(CLI::NonNegativeNumber);
  face->callback([&] {
    action = [&](auto* c, auto** out) { return lierep_face_check(c, o.face.c_str(), o.bound, out); };
  });

  auto* sym = sub("sym-invariants", "Invariant dimensions of Sym^d of a torus representation");
  type_opt(sym);
  sym->add_option("--weights", o.weights, "Weights separated by ';', e.g. '1,0;0,1' (use --weights=... for negatives)")
      ->required();
  sym->add_option("--degree", o.max_degree, "Largest degree")->check(CLI::NonNegativeNumber);
  sym->callback([&] {
    action = [&](auto* c, auto** out) {
      return lierep_sym_invariants(c, o.type.c_str(), o.weights.c_str(), o.max_degree, out);
    };
  });

  auto* loc = sub("localize", "Compare the fixed-point sum with the character at a torus point");
  type_opt(loc);
  weight_opt(loc);
  loc->add_option("--point", o.point, "Rational torus point t_1,...,t_r, e.g. 2,1/3")->required();
  loc->callback([&] {
    action = [&](auto* c, auto** out) {
      return lierep_localize(c, o.type.c_str(), o.weight.c_str(), o.point.c_str(), out);
    };
  });

  auto* ver = sub("verify", "Run verification suites");
  ver->add_option("--suite", o.suite, "cone, stretch, face, localization, sym, peter-weyl or all");
  ver->add_option("--config", o.config, "Suite configuration JSON");
  ver->add_option("--seed", o.seed, "Random seed");
  ver->callback([&] {
    action = [&](auto* c, auto** out) {
      return lierep_verify(c, o.suite.c_str(), o.seed, o.config.empty() ? nullptr : o.config.c_str(), out);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  lierep_context* ctx = nullptr;
  if (lierep_context_new(&ctx) != LIEREP_OK) {
    std::fputs("lierep: out of memory\n", stderr);
    return 1;
  }
  lierep_context_set_format(ctx, o.format == "csv" ? LIEREP_FORMAT_CSV : LIEREP_FORMAT_JSON);
  lierep_context_set_cache(ctx, !o.no_cache, o.cache_dir.empty() ? nullptr : o.cache_dir.c_str());
  char* out = nullptr;
  const lierep_status st = action(ctx, &out);
  lierep_context_free(ctx);
  return finish(st, out);
}
