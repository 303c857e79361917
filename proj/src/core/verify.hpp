#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "branching.hpp"
#include "localization.hpp"
#include "quasipoly.hpp"

namespace lierep {

using Json = nlohmann::ordered_json;

struct Failure {
  Json input;
  Json expected;
  Json got;
};

struct VerificationReport {
  std::string suite;
  Json params = Json::object();
  Int checks = 0;
  std::vector<Failure> failures;
  Json details = Json::object();
  double elapsed_ms = 0;

  bool pass() const { return failures.empty(); }
  void check(bool ok, Json input, Json expected, Json got);
};

Json to_json(const VerificationReport& r, bool with_timing = false);

// Every dominant pair within bound: the table produced by branch() agrees
// with branching_multiplicity(), and pairs with m > 0 lie in the hull of the
// table support. `corrupt` overrides table entries before the hull is taken.
struct TableOverride {
  Weight big, small;
  Int value = 0;
};
VerificationReport verify_cone_vanishing(const Embedding& emb, int bound,
                                         const std::vector<TableOverride>& corrupt = {});

struct StretchPair {
  Weight big, small;
  // Period the fit has to find, when known in advance.
  std::optional<int> expect_period;
};
VerificationReport verify_stretch_quasipoly(const Embedding& emb, const std::vector<StretchPair>& pairs, int kfit,
                                            int khold, int max_degree = 2, int max_period = 6);
// Seeded pairs: big weights with coordinates <= max_coord, small weights
// drawn among the most frequent constituents of the branching.
std::vector<StretchPair> seeded_stretch_pairs(const Embedding& emb, int count, int max_coord, std::uint64_t seed);

struct FaceData {
  Embedding emb;
  WeylElement w_tilde;
  // Basis of t_F in simple-coroot coordinates of the small group.
  std::vector<RationalVector> t_F;
  // Bound of the branching table whose hull stands in for the cone.
  int cone_bound = 4;
  std::vector<std::pair<Weight, Weight>> samples;
  std::string name;
};

FaceData face_from_json(const Json& j);
Json face_to_json(const FaceData& f);
// "diagonal-a1-cartan", "diagonal-a2-horn"
FaceData builtin_face(const std::string& name);
std::vector<std::string> builtin_face_names();

// Throws invalid_face when a sample violates the vanishing condition or the
// positivity normalization fails.
void validate_face(const FaceData& face);
bool on_face(const FaceData& face, const Weight& big, const Weight& small);
// dim [V~^F_{w~^-1 big}|_{K_F} (x) V^F_small]^{K_F}, computed in the centralizers.
Int face_multiplicity(const FaceData& face, const Weight& big, const Weight& small);
VerificationReport verify_face_reduction(const FaceData& face, int bound);

VerificationReport verify_localization(const RootSystemPtr& rs, int lambda_max, int n_points, std::uint64_t seed);

struct SymFixture {
  LinearRep rep;
  std::string name;
};
std::vector<SymFixture> default_sym_fixtures();
VerificationReport verify_sym_invariants(const std::vector<SymFixture>& fixtures, int max_degree);

VerificationReport verify_peter_weyl_consistency(const Embedding& emb, int bound);

struct SuiteResult {
  std::vector<VerificationReport> reports;
  bool pass() const;
};

// Config: {"seed": n, "runs": [{"suite": "cone", ...}, ...]}; see default_suite_config().
Json default_suite_config(std::uint64_t seed);
// Keeps only the runs of one suite ("all" keeps everything).
Json select_suite(const Json& config, const std::string& suite);
SuiteResult run_suite(const Json& config);
Json to_json(const SuiteResult& r, bool with_timing = false);

}  // namespace lierep
