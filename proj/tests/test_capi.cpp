#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <memory>
#include <string>

#include "json.hpp"

#include "hurwitz/hurwitz.h"

namespace {

using json = nlohmann::json;

struct Ctx {
  hz_context* p = hz_context_new();
  ~Ctx() { hz_context_free(p); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  hz_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("check reports are JSON lines with the report schema") {
  Ctx c;
  char* out = nullptr;
  int passed = 0;
  REQUIRE(hz_check(c.p, "bgw-orthogonal", R"({"x":["1","2"],"tmax":3})", &out, &passed) == HZ_OK);
  CHECK(passed == 1);
  const json r = json::parse(take(out));
  for (const char* key : {"identity", "anchor", "params", "status", "witness"}) CHECK(r.contains(key));
  CHECK(r["status"] == "pass");
  CHECK(r["witness"].is_null());
}

TEST_CASE("a failing identity reports a witness") {
  Ctx c;
  char* out = nullptr;
  int passed = 1;
  REQUIRE(hz_check(c.p, "onc", R"({"m":2,"as_printed":true})", &out, &passed) == HZ_OK);
  CHECK(passed == 0);
  const std::string s = take(out);
  CHECK(s.find("\"status\":\"fail\"") != std::string::npos);
  CHECK(s.find("\"witness\":{") != std::string::npos);
}

TEST_CASE("queries") {
  Ctx c;
  char* out = nullptr;
  REQUIRE(hz_query(c.p, "bgw-orthogonal", R"({"x":["1"],"tmax":3})", &out) == HZ_OK);
  const json d = json::parse(take(out));
  CHECK(d["series"][1]["coefficient"] == "1/2");
  CHECK(d["series"][3]["coefficient"] == "1/72");
  REQUIRE(hz_query(c.p, "oracle-counts", R"({"n":3,"r":2})", &out) == HZ_OK);
  CHECK(json::parse(take(out))["rows"].size() > 0);
}

TEST_CASE("error codes") {
  Ctx c;
  char* out = nullptr;
  int passed = 0;
  CHECK(hz_check(c.p, "no-such-check", "{}", &out, &passed) == HZ_UNKNOWN_NAME);
  CHECK(hz_query(c.p, "no-such-query", "{}", &out) == HZ_UNKNOWN_NAME);
  CHECK(hz_check(c.p, "bkp", R"({"mode":"sample","n":["7","8"]})", &out, &passed) == HZ_CONFIG_ERROR);
  CHECK(std::strlen(hz_last_error(c.p)) > 0);
  CHECK(hz_check(c.p, "jack-core", "{not json", &out, &passed) == HZ_CONFIG_ERROR);
  CHECK(hz_query(c.p, "bgw-orthogonal", R"({"x":["1","1"]})", &out) == HZ_DEGENERATE_SPECTRUM);
  CHECK(hz_check(nullptr, "jack-core", "{}", &out, &passed) == HZ_INVALID_ARGUMENT);
}

TEST_CASE("criteria listing") {
  CHECK(hz_criteria_count() == 12);
  CHECK(std::string(hz_criterion_title(12)) == "BGW integrals");
  CHECK(hz_criterion_title(13) == nullptr);
  CHECK(std::string(hz_check_names()).find("bkp\n") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  Ctx c;
  char* a = nullptr;
  char* b = nullptr;
  int passed = 0;
  const char* params = R"({"mode":"sample","seed":5,"count":2,"nmax":3})";
  REQUIRE(hz_check(c.p, "tau-evolution", params, &a, &passed) == HZ_OK);
  REQUIRE(hz_check(c.p, "tau-evolution", params, &b, &passed) == HZ_OK);
  CHECK(take(a) == take(b));
}
