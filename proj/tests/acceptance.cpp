// Acceptance criteria, one PASS/FAIL line each.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "polyhedra.hpp"
#include "serialize.hpp"
#include "verify.hpp"

using namespace lierep;
namespace fs = std::filesystem;

namespace {

// Collects the first few mismatches of a criterion.
struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  long checks = 0;
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (cond) return;
    ok = false;
    if (notes.size() < 5) notes.push_back(what);
  }
};

std::string cli_path;

int run_criterion(int id, const char* name, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.notes.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > budget_s) {
    o.ok = false;
    o.notes.push_back("took " + std::to_string(secs) + " s, budget " + std::to_string(budget_s) + " s");
  }
  std::printf("%s criterion %2d: %s (%ld checks, %.2f s)\n", o.ok ? "PASS" : "FAIL", id, name, o.checks, secs);
  for (const auto& n : o.notes) std::printf("      %s\n", n.c_str());
  std::fflush(stdout);
  return o.ok ? 0 : 1;
}

std::string str(const DecompositionMap& d) { return dump(decomposition_json(d)); }

// Weights of V_a listed directly, no Freudenthal.
std::map<Int, Int> sl2_string(Int a) {
  std::map<Int, Int> w;
  for (Int k = -a; k <= a; k += 2) w[k] = 1;
  return w;
}

// V_a (x) V_b by convolving weight strings and peeling top weights.
DecompositionMap brute_cg(Int a, Int b) {
  std::map<Int, Int> prod;
  for (auto [x, m] : sl2_string(a))
    for (auto [y, n] : sl2_string(b)) prod[x + y] += m * n;
  DecompositionMap out;
  while (!prod.empty()) {
    const Int top = prod.rbegin()->first;
    const Int m = prod.rbegin()->second;
    if (m == 0) {
      prod.erase(top);
      continue;
    }
    out[Weight{top}] += m;
    for (auto [k, one] : sl2_string(top)) {
      (void)one;
      if ((prod[k] -= m) == 0) prod.erase(k);
    }
  }
  return out;
}

DecompositionMap closed_form_cg(Int a, Int b) {
  DecompositionMap out;
  for (Int c = std::abs(a - b); c <= a + b; c += 2) out[Weight{c}] = 1;
  return out;
}

std::string run_cli(const std::vector<std::string>& args, int& status) {
  int fds[2];
  if (pipe(fds) != 0) throw std::runtime_error("pipe failed");
  const pid_t pid = fork();
  if (pid == 0) {
    dup2(fds[1], STDOUT_FILENO);
    close(fds[0]);
    close(fds[1]);
    std::vector<char*> argv;
    argv.push_back(const_cast<char*>(cli_path.c_str()));
    for (const auto& a : args) argv.push_back(const_cast<char*>(a.c_str()));
    argv.push_back(nullptr);
    execv(cli_path.c_str(), argv.data());
    _exit(127);
  }
  close(fds[1]);
  std::string out;
  char buf[4096];
  ssize_t n;
  while ((n = read(fds[0], buf, sizeof buf)) > 0) out.append(buf, static_cast<std::size_t>(n));
  close(fds[0]);
  int ws = 0;
  waitpid(pid, &ws, 0);
  status = WIFEXITED(ws) ? WEXITSTATUS(ws) : -1;
  return out;
}

bool report_ok(Outcome& o, const VerificationReport& r, const std::string& label) {
  std::string first;
  if (!r.failures.empty())
    first = ": " + r.failures[0].input.dump() + " expected " + r.failures[0].expected.dump() + " got " +
            r.failures[0].got.dump();
  o.expect(r.pass(), label + " reported " + std::to_string(r.failures.size()) + " failures" + first);
  o.checks += r.checks;
  return r.pass();
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];
  int failed = 0;

  failed += run_criterion(1, "A1 Clebsch-Gordan exhaustive to 20", 5, [](Outcome& o) {
    auto a1 = build_root_system("A1");
    for (Int a = 0; a <= 20; ++a)
      for (Int b = 0; b <= 20; ++b) {
        const DecompositionMap got = tensor_decompose(a1, Weight{a}, Weight{b});
        const DecompositionMap brute = brute_cg(a, b);
        const std::string at = "a=" + std::to_string(a) + " b=" + std::to_string(b) + ": ";
        o.expect(brute == closed_form_cg(a, b), at + "brute force " + str(brute) + " disagrees with closed form");
        o.expect(got == brute, at + "tensor_decompose gave " + str(got) + ", expected " + str(brute));
      }
  });

  failed += run_criterion(2, "subtraction and alternating decompositions agree", 60, [](Outcome& o) {
    for (const char* spec : {"A1", "A2", "B2", "G2"}) {
      auto rs = build_root_system(spec);
      const auto box = dominant_box(*rs, 3);
      for (std::size_t i = 0; i < box.size(); ++i) {
        const FormalCharacter li = irreducible_character(rs, box[i]);
        for (auto method : {DecompositionMethod::subtraction, DecompositionMethod::alternating})
          o.expect(decompose_into_irreducibles(li, method) == DecompositionMap{{box[i], 1}},
                   std::string(spec) + " decompose(ch " + box[i].str() + ") is not {" + box[i].str() + ":1}");
        for (std::size_t j = i; j < box.size(); ++j) {
          const FormalCharacter p = multiply_characters(li, irreducible_character(rs, box[j]));
          const auto s = decompose_into_irreducibles(p, DecompositionMethod::subtraction);
          const auto a = decompose_into_irreducibles(p, DecompositionMethod::alternating);
          o.expect(s == a, std::string(spec) + " " + box[i].str() + "x" + box[j].str() + ": " + str(s) + " vs " + str(a));
        }
      }
    }
  });

  failed += run_criterion(3, "branching tables conserve dimension at bound 4", 60, [](Outcome& o) {
    for (const char* name : {"diagonal:A1", "diagonal:A2", "torus:A2"}) {
      Embedding emb = builtin_embedding(name);
      BranchingTable t = branching_table(emb, 4);
      for (const auto& w : dimension_violations(emb, t)) o.expect(false, std::string(name) + " row " + w.str());
      o.expect(!t.entries.empty(), std::string(name) + " table is empty");
      o.checks += static_cast<long>(dominant_box(*emb.big(), 4).size());
    }
  });

  failed += run_criterion(4, "diagonal A1 cone vanishing to 30", 30, [](Outcome& o) {
    Embedding emb = builtin_embedding("diagonal:A1");
    SupportCone sc = support_cone(emb, 30);
    for (Int a = 0; a <= 30; ++a)
      for (Int b = 0; b <= 30; ++b)
        for (Int c = 0; c <= 61; ++c) {
          const bool rule = c <= a + b && a <= b + c && b <= a + c && (a + b + c) % 2 == 0;
          auto it = sc.table.entries.find({Weight{a, b}, Weight{c}});
          const Int m = it == sc.table.entries.end() ? 0 : it->second;
          o.expect((m > 0) == rule, "m(" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) +
                                        ") = " + std::to_string(m));
        }
    const IntMatrix triangle = cone_from_inequalities({{1, 1, -1}, {1, -1, 1}, {-1, 1, 1}}, {}, 3).facets;
    o.expect(sc.cone.facets == triangle, "support cone facets " + Json(sc.cone.facets).dump());
    o.expect(sc.cone.equations.empty(), "support cone is not full-dimensional");
    o.expect(sc.report.stable_from <= 6, "facets stable only from " + std::to_string(sc.report.stable_from));
    for (std::size_t b = 6; b < sc.report.facet_counts.size(); ++b)
      o.expect(sc.report.facet_counts[b] == 3, "sub-bound " + std::to_string(b) + " has " +
                                                   std::to_string(sc.report.facet_counts[b]) + " facets");
    for (const auto& g : sc.report.gaps) o.expect((g[0] + g[1] + g[2]) % 2 == 1, "even gap " + Json(g).dump());
  });

  Json config = default_suite_config(7);

  failed += run_criterion(5, "stretched multiplicities are quasi-polynomial", 120, [&](Outcome& o) {
    Json runs = select_suite(config, "stretch");
    std::size_t a2_pairs = 0, a1_period2 = 0;
    for (const auto& run : runs["runs"]) {
      if (run["embedding"] == "diagonal:A2") a2_pairs += run.value("seeded", Json::object()).value("count", 0);
      if (run["embedding"] == "diagonal:A1")
        for (const auto& p : run.value("pairs", Json::array())) a1_period2 += p.value("period", 0) == 2;
      o.expect(run.value("kfit", 0) == 12 && run.value("khold", 0) == 20, "run " + run.dump() + " is not 12/20");
    }
    o.expect(a2_pairs >= 5, "only " + std::to_string(a2_pairs) + " seeded diagonal(A2) pairs");
    o.expect(a1_period2 >= 1, "no diagonal(A1) parity pair");
    SuiteResult r = run_suite(runs);
    for (const auto& rep : r.reports) {
      report_ok(o, rep, "stretch " + rep.params.value("embedding", std::string()));
      for (const auto& f : rep.details["fits"]) {
        if (!f.contains("quasi_polynomial")) continue;
        const auto& qp = f["quasi_polynomial"];
        o.expect(qp["degree"].get<int>() <= 2 && qp["period"].get<int>() <= 6, "fit out of range " + qp.dump());
        if (rep.params["embedding"] == "diagonal:A2")
          o.expect(qp["degree"].get<int>() <= 1, "A2 fit of degree " + qp["degree"].dump());
      }
    }
  });

  failed += run_criterion(6, "face reduction", 120, [](Outcome& o) {
    FaceData a1 = builtin_face("diagonal-a1-cartan");
    const Embedding& emb = a1.emb;
    VerificationReport r1 = verify_face_reduction(a1, 30);
    report_ok(o, r1, "diagonal(A1) Cartan face");
    o.expect(r1.details["face_points"].get<Int>() == 31 * 31, "A1 face points " + r1.details["face_points"].dump());
    for (Int a = 0; a <= 30; a += 5)
      for (Int b = 0; b <= 30; b += 3) {
        const Weight big{a, b}, small{a + b};
        o.expect(face_multiplicity(a1, big, small) == 1 && branching_multiplicity(emb, big, small) == 1,
                 "A1 face point " + big.str() + small.str() + " is not 1 = 1");
      }
    std::ifstream in(LIEREP_FIXTURE_DIR "/face_a2_diagonal.json");
    o.expect(static_cast<bool>(in), "cannot open the shipped A2 face fixture");
    if (!in) return;
    FaceData a2 = face_from_json(Json::parse(in));
    VerificationReport r2 = verify_face_reduction(a2, 8);
    report_ok(o, r2, "diagonal(A2) face fixture");
    o.expect(r2.details["face_points"].get<Int>() > 0, "A2 fixture has no face points");
  });

  failed += run_criterion(7, "fixed-point localization", 30, [](Outcome& o) {
    for (const char* spec : {"A1", "A2"}) {
      auto rs = build_root_system(spec);
      report_ok(o, verify_localization(rs, 3, 20, 7), std::string("localization ") + spec);
      TorusPoint ones{RationalVector(rs->rank(), Rational(1))};
      bool rejected = false;
      try {
        fixed_point_character_value(rs, Weight(rs->rank()), ones);
      } catch (const Error& e) {
        rejected = e.code() == ErrorCode::singular_point;
      }
      o.expect(rejected, std::string(spec) + " singular point accepted");
    }
  });

  failed += run_criterion(8, "Atiyah truncation of Sym", 5, [](Outcome& o) {
    auto t1 = build_root_system("T1");
    GradedCharacter one = atiyah_index_truncation(LinearRep{t1, {Weight{1}}}, 50);
    o.expect(one.size() == 51, "wrong number of degrees");
    for (std::size_t k = 0; k < one.size(); ++k)
      o.expect(one[k].dimension() == 1 && one[k].at(Weight{static_cast<Int>(k)}) == 1,
               "{1} degree " + std::to_string(k));
    GradedCharacter two = atiyah_index_truncation(LinearRep{t1, {Weight{1}, Weight{2}}}, 50);
    for (Int k = 0; k <= 50; ++k) {
      Int brute = 0;
      for (Int a = 0; a <= k; ++a)
        for (Int b = 0; 2 * b <= k; ++b) brute += a + 2 * b == k;
      o.expect(two[static_cast<std::size_t>(k)].dimension() == brute && brute == k / 2 + 1,
               "{1,2} degree " + std::to_string(k));
    }
  });

  failed += run_criterion(9, "Sym invariants vanish for half-space weights", 60, [](Outcome& o) {
    std::size_t half_space = 0;
    for (const auto& f : default_sym_fixtures()) {
      if (f.rep.weights.empty()) continue;
      MomentZeroResult mz = moment_zero_is_origin(f.rep);
      o.expect(check_certificate(f.rep, mz), f.name + " certificate does not verify");
      const auto dims = sym_invariant_dimensions(f.rep, 40);
      if (mz.origin_only) {
        ++half_space;
        for (int d = 1; d <= 40; ++d) o.expect(dims[d] == 0, f.name + " has invariants in degree " + std::to_string(d));
      } else {
        Int total = 0;
        for (int d = 1; d <= 40; ++d) total += dims[d];
        o.expect(total > 0, f.name + " has a zero combination but no invariants");
      }
    }
    o.expect(half_space >= 10, "only " + std::to_string(half_space) + " half-space fixtures");
    LinearRep opp{build_root_system("T1"), {Weight{1}, Weight{-1}}};
    MomentZeroResult mz = moment_zero_is_origin(opp);
    o.expect(!mz.origin_only && mz.combination == std::vector<Int>{1, 1} && check_certificate(opp, mz),
             "{1,-1} certificate");
    o.expect(sym_invariant_dimension(opp, 1) == 0 && sym_invariant_dimension(opp, 2) == 1, "{1,-1} dimensions");
  });

  failed += run_criterion(10, "Peter-Weyl consistency", 30, [](Outcome& o) {
    report_ok(o, verify_peter_weyl_consistency(builtin_embedding("diagonal:A1"), 3), "diagonal(A1)");
    report_ok(o, verify_peter_weyl_consistency(builtin_embedding("torus:A2"), 2), "torus(A2)");
  });

  failed += run_criterion(11, "CLI determinism and cache transparency", 5, [](Outcome& o) {
    o.expect(!cli_path.empty() && fs::exists(cli_path), "CLI binary not found (pass --cli PATH)");
    if (cli_path.empty()) return;
    const fs::path cache = fs::temp_directory_path() / ("lierep-acceptance-" + std::to_string(getpid()));
    fs::remove_all(cache);
    const std::vector<std::vector<std::string>> commands = {
        {"tensor", "--type", "G2", "--lhs", "1,1", "--rhs", "2,0"},
        {"weights", "--type", "B2", "--weight", "2,1"},
        {"dim", "--type", "E6", "--weight", "1,0,0,0,0,1"},
        {"branch", "--embedding", "levi:B3", "--weight", "1,1,1"},
        {"--format", "csv", "table", "--embedding", "diagonal:A2", "--bound", "1"},
        {"cone", "--embedding", "torus:A2", "--bound", "3"},
        {"stretch", "--embedding", "diagonal:A1", "--weight", "1,1", "--small", "1", "--kfit", "12"},
        {"fit", "--samples", "1,1,2,2,3,3,4,4,5,5", "--degree", "1", "--period", "2"},
        {"localize", "--type", "A2", "--weight", "2,1", "--point", "2,1/3"},
        {"sym-invariants", "--type", "T2", "--weights=1,0;-1,1;0,-1", "--degree", "6"},
        {"face-check", "--face", "diagonal-a1-cartan", "--bound", "6"},
        {"verify", "--suite", "localization", "--seed", "7"},
    };
    for (const auto& cmd : commands) {
      std::string label;
      for (const auto& a : cmd) label += a + " ";
      std::vector<std::string> outs;
      std::vector<std::vector<std::string>> variants = {{"--no-cache"}, {"--no-cache"}, {"--cache-dir", cache.string()},
                                                        {"--cache-dir", cache.string()}};
      for (auto v : variants) {
        v.insert(v.end(), cmd.begin(), cmd.end());
        int status = -1;
        outs.push_back(run_cli(v, status));
        o.expect(status == 0, label + "exited with " + std::to_string(status));
      }
      o.expect(!outs[0].empty(), label + "printed nothing");
      o.expect(outs[0] == outs[1], label + "differs between uncached runs");
      o.expect(outs[0] == outs[2], label + "differs with a cold cache");
      o.expect(outs[0] == outs[3], label + "differs with a warm cache");
    }
    std::size_t entries = 0;
    if (fs::exists(cache))
      for (const auto& e : fs::recursive_directory_iterator(cache)) entries += e.is_regular_file();
    o.expect(entries > 0, "cache directory holds no entries");
    fs::remove_all(cache);
  });

  std::printf("%s: %d of 11 criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}
