#include <cstring>
#include <string>

#include "doctest.h"
#include "lierep/lierep.h"

namespace {

struct Context {
  lierep_context* ctx = nullptr;
  Context() {
    REQUIRE(lierep_context_new(&ctx) == LIEREP_OK);
    lierep_context_set_cache(ctx, 0, nullptr);
  }
  ~Context() { lierep_context_free(ctx); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  lierep_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("basic calls") {
  Context c;
  char* out = nullptr;
  REQUIRE(lierep_tensor(c.ctx, "A1", "1", "1", &out) == LIEREP_OK);
  CHECK(take(out) == "{\"[0]\":1,\"[2]\":1}\n");
  REQUIRE(lierep_dim(c.ctx, "A2", "1,1", &out) == LIEREP_OK);
  CHECK(take(out) == "8\n");
  REQUIRE(lierep_dim(c.ctx, "E8", "0,0,0,0,0,0,0,1", &out) == LIEREP_OK);
  CHECK(take(out) == "248\n");
  REQUIRE(lierep_branch(c.ctx, "diagonal:A1", "1,1", 0, &out) == LIEREP_OK);
  CHECK(take(out) == "{\"[0]\":1,\"[2]\":1}\n");
  REQUIRE(lierep_fit(c.ctx, "1,1,2,2,3,3,4,4,5,5", 1, 2, &out) == LIEREP_OK);
  CHECK(take(out) == "{\"period\":2,\"degree\":1,\"pieces\":[[\"1\",\"1/2\"],[\"1/2\",\"1/2\"]]}\n");
  REQUIRE(lierep_fit(c.ctx, "0:1,1:2,2:4,3:8", 2, 1, &out) == LIEREP_OK);
  CHECK(take(out).find("\"no_fit\":true") != std::string::npos);
  REQUIRE(lierep_localize(c.ctx, "A1", "1", "2", &out) == LIEREP_OK);
  CHECK(take(out).find("\"fixed_point\":\"5/2\"") != std::string::npos);
  REQUIRE(lierep_sym_invariants(c.ctx, "T1", "1;-1", 4, &out) == LIEREP_OK);
  CHECK(take(out).find("\"dimensions\": [1,0,1,0,1]") != std::string::npos);
  REQUIRE(lierep_stretch(c.ctx, "diagonal:A1", "1,1", "0", 6, &out) == LIEREP_OK);
  CHECK(take(out).find("[1,1,1,1,1,1,1]") != std::string::npos);
}

TEST_CASE("csv output") {
  Context c;
  REQUIRE(lierep_context_set_format(c.ctx, LIEREP_FORMAT_CSV) == LIEREP_OK);
  char* out = nullptr;
  REQUIRE(lierep_tensor(c.ctx, "A1", "2", "3", &out) == LIEREP_OK);
  CHECK(take(out) == "weight,multiplicity\n1,1\n3,1\n5,1\n");
  CHECK(lierep_context_set_format(c.ctx, static_cast<lierep_format>(9)) == LIEREP_INVALID_ARGUMENT);
}

TEST_CASE("error codes") {
  Context c;
  char* out = nullptr;
  CHECK(lierep_dim(c.ctx, "Q2", "1", &out) == LIEREP_INVALID_SPEC);
  CHECK(out == nullptr);
  CHECK(std::strlen(lierep_last_error()) > 0);
  CHECK(lierep_dim(c.ctx, "A2", "1", &out) == LIEREP_INVALID_ARGUMENT);
  CHECK(lierep_dim(c.ctx, "A2", "-1,0", &out) == LIEREP_NOT_DOMINANT);
  CHECK(lierep_localize(c.ctx, "A1", "1", "1", &out) == LIEREP_SINGULAR_POINT);
  CHECK(lierep_fit(c.ctx, "1,2", 2, 2, &out) == LIEREP_INSUFFICIENT_SAMPLES);
  CHECK(lierep_branch(c.ctx, "/nonexistent.json", "1", 0, &out) == LIEREP_IO_ERROR);
  CHECK(lierep_dim(c.ctx, nullptr, "1", &out) == LIEREP_INVALID_ARGUMENT);
  CHECK(lierep_dim(nullptr, "A1", "1", &out) == LIEREP_INVALID_ARGUMENT);
  CHECK(lierep_dim(c.ctx, "A1", "1", nullptr) == LIEREP_INVALID_ARGUMENT);
  CHECK(lierep_verify(c.ctx, "bogus", 7, nullptr, &out) == LIEREP_INVALID_ARGUMENT);
  CHECK(std::string(lierep_status_name(LIEREP_SINGULAR_POINT)) == "singular evaluation point");
  // A successful call clears the previous error.
  REQUIRE(lierep_dim(c.ctx, "A1", "1", &out) == LIEREP_OK);
  take(out);
  CHECK(std::string(lierep_last_error()).empty());
}

TEST_CASE("verification status") {
  Context c;
  char* out = nullptr;
  REQUIRE(lierep_verify(c.ctx, "sym", 7, nullptr, &out) == LIEREP_OK);
  CHECK(take(out).find("\"status\": \"pass\"") != std::string::npos);
  CHECK(lierep_verify(c.ctx, "all", 7, LIEREP_FIXTURE_DIR "/verify_corrupted.json", &out) ==
        LIEREP_VERIFICATION_FAILED);
  CHECK(take(out).find("\"status\": \"fail\"") != std::string::npos);
  REQUIRE(lierep_face_check(c.ctx, "diagonal-a1-cartan", 5, &out) == LIEREP_OK);
  take(out);
  REQUIRE(lierep_stretch_fit(c.ctx, "diagonal:A1", "1,1", "1", 12, 20, 2, 6, &out) == LIEREP_OK);
  CHECK(take(out).find("\"period\":2") != std::string::npos);
}
