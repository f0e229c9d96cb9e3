#include <catch_amalgamated.hpp>

#include <sstream>

#include "brauerdef/suite.hpp"

using namespace brauerdef;

namespace {

const Check& find(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks())
    if (c.name == name) return c;
  FAIL("no check named " << name);
  return r.checks().front();
}

}  // namespace

TEST_CASE("families report for k = 3") {
  SuiteConfig cfg;
  cfg.k = 3;
  const auto r = runFamilies(cfg);
  CHECK_FALSE(r.failed());
  const auto& d = find(r, "dimension");
  CHECK(d.status == CheckStatus::pass);
  CHECK(d.expected == 10);
  CHECK(d.actual == 10);
  for (const auto& c : r.checks()) CHECK_FALSE(c.claim.empty());
  CHECK_FALSE(r.toJson().contains("presentation"));
  cfg.emitPresentation = true;
  CHECK(runFamilies(cfg).toJson().contains("bhatPresentation"));
}

TEST_CASE("hochschild report for k = 2") {
  SuiteConfig cfg;
  cfg.k = 2;
  cfg.maxDegree = 3;
  const auto r = runHochschild(cfg);
  CHECK_FALSE(r.failed());
  CHECK(find(r, "hh-dimensions").actual == Json({3, 1, 1, 1}));
  cfg.k = 3;
  CHECK(find(runHochschild(cfg), "reduced-agrees-with-unreduced").status == CheckStatus::skipped);
}

TEST_CASE("user presentations") {
  // The path algebra of 1 -> 2 has HH^0 = k and nothing above.
  std::istringstream in(R"({"vertices": ["1", "2"],
                            "arrows": [{"name": "a", "source": "1", "target": "2"}]})");
  SuiteConfig cfg;
  cfg.presentation = readPresentation(in);
  cfg.maxDegree = 2;
  const auto r = runHochschild(cfg);
  const auto& c = find(r, "hh-dimensions");
  CHECK(c.status == CheckStatus::pass);
  CHECK(c.actual["hh"] == Json({1, 0, 0}));
  CHECK(c.actual["dim"] == 3);
}

TEST_CASE("presentation JSON round trip") {
  for (int k = 1; k <= 4; ++k) {
    const auto p = presentationA(k);
    const Json j = presentationToJson(p);
    const auto q = presentationFromJson(Json::parse(j.dump()));
    CHECK(presentationToJson(q) == j);
    CHECK(boundedQuotient(q, 4).algebra.dim() == static_cast<std::size_t>(4 * k - 2));
  }
  const auto b = presentationToJson(makeBhat(2));
  CHECK(presentationToJson(presentationFromJson(b)) == b);
  // Relations with non-integer coefficients survive exactly.
  Json j = presentationToJson(presentationA(2));
  j["relations"].push_back(Json::array({{{"coeff", "-3/7"}, {"path", {"a1", "b1", "a1"}}}}));
  CHECK(presentationToJson(presentationFromJson(j))["relations"].back()[0]["coeff"] == "-3/7");
  CHECK_THROWS(presentationFromJson(Json::parse(R"({"vertices": ["1"],
      "arrows": [{"name": "a", "source": "1", "target": "9"}]})")));
}

TEST_CASE("rationals are written as p/q") {
  CHECK(toJson(Rational(-6, 4)) == "-3/2");
  CHECK(toJson(Rational(5)) == "5");
  RatMatrix m(1, 2);
  m.set(0, 1, Rational(1, 3));
  CHECK(toJson(m) == Json::array({Json::array({"0", "1/3"})}));
  SuiteConfig cfg;
  cfg.n = 2;
  cfg.radius = 1;
  cfg.fiber = 1;
  const auto j = runSlnlab(cfg).toJson();
  REQUIRE(j["a"].is_array());
  for (const auto& a : j["a"]) CHECK(a.get<std::string>().find('/') != std::string::npos);
}

TEST_CASE("reports are byte-identical for the same seed") {
  SuiteConfig cfg;
  cfg.k = 2;
  cfg.order = 2;
  cfg.params = 2;
  cfg.seed = 5;
  CHECK(runDeform(cfg).dump() == runDeform(cfg).dump());
  cfg.n = 3;
  cfg.radius = 2;
  cfg.fiber = 2;
  CHECK(runSlnlab(cfg).dump() == runSlnlab(cfg).dump());
  SuiteConfig other = cfg;
  other.seed = 6;
  CHECK(runSlnlab(cfg).dump() != runSlnlab(other).dump());
}

TEST_CASE("check outcomes: errors fail, resource bounds skip") {
  VerificationReport r("test", {{"x", 1}});
  r.run("ok", "always", [] { return CheckOutcome{true, 1, 1}; });
  r.run("bound", "too big", []() -> CheckOutcome { throw CheckSkipped("over budget"); });
  r.run("error", "throws", []() -> CheckOutcome { throw std::runtime_error("boom"); });
  CHECK(r.count(CheckStatus::pass) == 1);
  CHECK(r.count(CheckStatus::skipped) == 1);
  CHECK(r.failed());
  const Json j = r.toJson();
  CHECK(j["summary"]["fail"] == 1);
  CHECK(j["checks"][2]["actual"] == "error: boom");
  CHECK(j["checks"][0]["elapsedMilliseconds"] == 0);

  VerificationReport outer("outer", Json::object());
  outer.merge(r, "inner/");
  CHECK(outer.checks()[1].name == "inner/bound");
}

TEST_CASE("koszul and deform suites") {
  SuiteConfig cfg;
  cfg.k = 2;
  cfg.order = 3;
  CHECK_FALSE(runKoszul(cfg).failed());
  CHECK_FALSE(runDeform(cfg).failed());
  cfg.k = 1;
  CHECK_FALSE(runKoszul(cfg).failed());
  SuiteConfig bad;
  bad.k = 0;
  CHECK_THROWS(runFamilies(bad));
}
