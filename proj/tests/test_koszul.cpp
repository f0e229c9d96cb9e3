#include <catch_amalgamated.hpp>

#include <set>

#include "brauerdef/families.hpp"
#include "brauerdef/koszul.hpp"

using namespace brauerdef;

namespace {

// Anick chains of a quadratic monomial algebra: paths a_j ... a_1 out of v
// with every consecutive pair a relation. For such algebras they index the
// generators of the minimal resolution of S_v in homological degree j.
std::size_t chainCount(const QuiverPresentation& p, std::size_t v, std::size_t j) {
  const Quiver& q = p.quiver();
  std::set<std::pair<std::size_t, std::size_t>> rel;  // (later, earlier)
  for (const auto& r : p.relations()) {
    const auto& w = r.front().path.arrows;  // product order
    if (r.size() == 1 && w.size() == 2) rel.insert({w[0], w[1]});
  }
  std::vector<std::size_t> ends;  // last arrow of each chain
  for (std::size_t a = 0; a < q.arrows().size(); ++a)
    if (q.arrow(a).source == v) ends.push_back(a);
  if (j == 0) return 1;
  for (std::size_t step = 1; step < j; ++step) {
    std::vector<std::size_t> next;
    for (auto a : ends)
      for (std::size_t b = 0; b < q.arrows().size(); ++b)
        if (q.arrow(b).source == q.arrow(a).target && rel.count({b, a})) next.push_back(b);
    ends = std::move(next);
  }
  return ends.size();
}

}  // namespace

TEST_CASE("resolutions of simples over B̂^k are linear and match the chain count") {
  for (int k = 2; k <= 4; ++k) {
    const auto p = makeBhat(k, BhatGrading::allArrowsDegreeOne);
    const auto c = koszulityCertificate(p, 3, 5, "allArrowsDegreeOne");
    CHECK(c.linear());
    CHECK(c.consistent());
    for (const auto& s : c.simples)
      for (std::size_t j = 0; j <= 3; ++j) {
        const auto it = s.degreeTable[j].find(static_cast<int>(j));
        const std::size_t n = it == s.degreeTable[j].end() ? 0 : it->second;
        CHECK(n == chainCount(p, s.vertex, j));
      }
  }
}

TEST_CASE("syzygy of the simple at vertex 1 over B̂^2") {
  const auto B = boundedQuotient(makeBhat(2), 6, BoundPolicy::allowTruncation).algebra;
  const auto R = minimalResolution(B, 0, 1, 5);
  // x1 in degree 1 and the loop y1 in degree 2 under the deformation grading.
  CHECK(R.degreeTable[1] == std::map<int, std::size_t>{{1, 1}, {2, 1}});
  CHECK_FALSE(R.linear());
}

TEST_CASE("A^k is not Koszul for k > 1") {
  const auto A2 = makeA(2);
  const auto R = minimalResolution(A2, 0, 2, 5);
  CHECK(R.degreeTable[1] == std::map<int, std::size_t>{{1, 1}});
  CHECK(R.degreeTable[2].count(3));
  REQUIRE(R.firstNonLinear());
  CHECK(R.firstNonLinear()->first == 2);
  CHECK(isMinimal(A2, R));
  CHECK(isComplex(A2, R));
  CHECK(eulerCharacteristicHolds(R));
  const auto c3 = koszulityCertificate(presentationA(3), 3, 6);
  CHECK_FALSE(c3.linear());
  CHECK(c3.consistent());
  for (const auto& s : c3.simples) {
    REQUIRE(s.firstNonLinear);
    CHECK(s.firstNonLinear->first <= 3);
  }
}

TEST_CASE("the dual numbers are Koszul") {
  const auto c = koszulityCertificate(presentationA(1), 4, 6);
  CHECK(c.linear());
  for (std::size_t j = 0; j <= 4; ++j)
    CHECK(c.simples[0].degreeTable[j] == std::map<int, std::size_t>{{static_cast<int>(j), 1}});
}

TEST_CASE("a free module has no syzygies") {
  const auto A = makeA(3);
  const GradedFreeModule F(A, {{0, 0}, {2, 1}});
  GradedMap id;
  for (std::size_t g = 0; g < F.rank(); ++g)
    id.generatorImages.push_back({{F.indexOf(g, A.idempotent(F.generators()[g].vertex)), 1}});
  const auto [gens, images] = syzygyGenerators(A, F, &F, &id, 6);
  CHECK(gens.empty());
}

TEST_CASE("budgets are enforced") {
  const auto p = makeBhat(2, BhatGrading::allArrowsDegreeOne);
  CHECK_THROWS_AS(koszulityCertificate(p, 3, 3), BudgetExceeded);
  const auto B = boundedQuotient(p, 4, BoundPolicy::allowTruncation).algebra;
  CHECK_THROWS_AS(minimalResolution(B, 0, 2, 5), BudgetExceeded);
  const auto Z = boundedQuotient(makeBhat(2, BhatGrading::rightOneLeftZero), 4,
                                 BoundPolicy::allowTruncation).algebra;
  CHECK_THROWS_AS(minimalResolution(Z, 0, 2, 4), std::invalid_argument);
}
