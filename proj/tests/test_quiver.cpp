#include <catch_amalgamated.hpp>

#include <algorithm>

#include "brauerdef/families.hpp"
#include "brauerdef/quiver.hpp"
#include "brauerdef/quotient.hpp"

using namespace brauerdef;

namespace {

std::vector<std::string> labels(const Quiver& q, const std::vector<Path>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(pathLabel(q, p));
  return out;
}

// Reference: every path of the given degree reduced by brute-force
// rewriting with the monomial relations only (valid for B̂^k, whose
// relations are all monomial).
std::size_t monomialOracle(const QuiverPresentation& p, unsigned d) {
  std::size_t count = 0;
  for (const auto& path : enumeratePaths(p.quiver(), d)) {
    if (path.degree(p.quiver()) != d) continue;
    bool zero = false;
    for (const auto& r : p.relations()) {
      const auto& m = r.front().path.arrows;
      for (std::size_t i = 0; i + m.size() <= path.arrows.size() && !zero; ++i)
        zero = std::equal(m.begin(), m.end(), path.arrows.begin() + static_cast<long>(i));
    }
    if (!zero) ++count;
  }
  return count;
}

QuiverPresentation reversedArrowOrder(const QuiverPresentation& p) {
  Quiver q(p.quiver().vertices());
  const auto& arrows = p.quiver().arrows();
  for (auto it = arrows.rbegin(); it != arrows.rend(); ++it)
    q.addArrow(it->name, it->source, it->target, it->degree);
  QuiverPresentation out(q);
  for (const auto& r : p.relations()) {
    std::vector<std::pair<Rational, std::vector<std::string>>> terms;
    for (const auto& t : r) {
      std::vector<std::string> word;
      for (auto a : t.path.arrows) word.push_back(p.quiver().arrow(a).name);
      terms.push_back({t.coeff, word});
    }
    out.addRelation(terms);
  }
  return out;
}

}  // namespace

TEST_CASE("path enumeration order") {
  const auto A2 = presentationA(2);
  CHECK(labels(A2.quiver(), enumeratePaths(A2.quiver(), 1)) ==
        std::vector<std::string>{"e1", "e2", "a1", "b1"});
  CHECK(labels(A2.quiver(), enumeratePaths(A2.quiver(), 2)) ==
        std::vector<std::string>{"e1", "e2", "a1", "b1", "b1a1", "a1b1"});

  const auto B2 = makeBhat(2);
  CHECK(labels(B2.quiver(), enumeratePaths(B2.quiver(), 2)) ==
        std::vector<std::string>{"e1", "e2", "x1", "x2", "x2x1", "x1x2", "y1", "y2"});
}

TEST_CASE("paths compose right to left") {
  const auto A2 = presentationA(2);
  const Quiver& q = A2.quiver();
  const Path a1 = Path::ofArrow(q, *q.findArrow("a1"));
  const Path b1 = Path::ofArrow(q, *q.findArrow("b1"));
  auto ba = compose(b1, a1);
  REQUIRE(ba);
  CHECK(ba->source == 0);
  CHECK(ba->target == 0);
  CHECK(pathLabel(q, *ba) == "b1a1");
  CHECK_FALSE(compose(a1, a1));
}

TEST_CASE("presentations are validated") {
  Quiver q({"1", "2"});
  q.addArrow("a", 0, 1);
  CHECK_THROWS(q.addArrow("a", 1, 0));
  CHECK_THROWS(q.addArrow("c", 0, 5));
  q.addArrow("b", 1, 0);
  QuiverPresentation p(q);
  CHECK_THROWS(p.addRelation({{1, {"a", "a"}}}));
  CHECK_THROWS(p.addRelation({{1, {"b", "a"}}, {1, {"a", "b"}}}));
  CHECK_NOTHROW(p.addRelation({{1, {"a", "b", "a"}}}));
}

TEST_CASE("bounded quotients of A^k") {
  auto A2 = boundedQuotient(presentationA(2), 3);
  CHECK(A2.complete);
  CHECK(A2.algebra.dim() == 6);
  std::vector<std::string> basis;
  for (const auto& b : A2.algebra.basisElements()) basis.push_back(b.label);
  CHECK(basis == std::vector<std::string>{"e1", "e2", "a1", "b1", "b1a1", "a1b1"});
  CHECK(boundedQuotient(presentationA(4), 3).algebra.dim() == 14);
  CHECK_THROWS_AS(boundedQuotient(presentationA(3), 2), BoundTooSmall);
}

TEST_CASE("B̂^k truncations are flagged instead of rejected") {
  auto B = boundedQuotient(makeBhat(2), 3, BoundPolicy::allowTruncation);
  CHECK_FALSE(B.complete);
  CHECK(B.algebra.truncationDegree() == 3);
  CHECK_THROWS_AS(boundedQuotient(makeBhat(2), 3), BoundTooSmall);
}

TEST_CASE("graded components of B̂^2") {
  const auto B2 = makeBhat(2);
  CHECK(gradedComponent(B2, 0).dimension() == 2);
  const auto c2 = gradedComponent(B2, 2);
  CHECK(c2.labels == std::vector<std::string>{"x2x1", "x1x2", "y1", "y2"});
  CHECK(gradedComponent(B2, 4).dimension() == 4);
  CHECK(gradedDimensions(B2, 4) == std::vector<std::size_t>{2, 2, 4, 2, 4});
  for (unsigned d = 0; d <= 7; ++d) CHECK(gradedComponent(B2, d).dimension() == monomialOracle(B2, d));
  CHECK(gradedComponent(makeBhat(3), 1).labels == std::vector<std::string>{"x1", "x2", "y2", "y3"});
}

TEST_CASE("inhomogeneous relations are rejected") {
  Quiver q({"1"});
  q.addArrow("x", 0, 0, 1);
  q.addArrow("y", 0, 0, 2);
  QuiverPresentation p(q);
  p.addRelation({{1, {"x", "x"}}, {-1, {"y", "y"}}});
  CHECK_THROWS_AS(gradedComponent(p, 2), std::invalid_argument);
}

TEST_CASE("zero-degree arrows fall back to path length") {
  auto B = boundedQuotient(makeBhat(3, BhatGrading::rightOneLeftZero), 4, BoundPolicy::allowTruncation);
  CHECK_FALSE(B.algebra.gradingWitness());
  const auto same = boundedQuotient(makeBhat(3, BhatGrading::allArrowsDegreeOne), 4,
                                    BoundPolicy::allowTruncation);
  CHECK(B.algebra.dim() == same.algebra.dim());
}

TEST_CASE("constructed algebras satisfy the algebra axioms") {
  std::vector<FiniteDimAlgebra> algebras;
  for (int k = 1; k <= 4; ++k) algebras.push_back(makeA(k));
  for (int k = 1; k <= 3; ++k) algebras.push_back(makeAtilde(k));
  algebras.push_back(boundedQuotient(makeBhat(3), 6, BoundPolicy::allowTruncation).algebra);
  for (const auto& A : algebras) {
    CHECK_FALSE(A.associativityWitness());
    CHECK(A.unitIsTwoSided());
    CHECK_FALSE(A.gradingWitness());
    CHECK(A.isVertexHomogeneous());
  }
}

TEST_CASE("quotient dimension does not depend on the arrow order") {
  for (int k = 2; k <= 5; ++k) {
    const auto p = presentationA(k);
    CHECK(boundedQuotient(reversedArrowOrder(p), 3).algebra.dim() ==
          boundedQuotient(p, 3).algebra.dim());
  }
  const auto b = makeBhat(4);
  CHECK(gradedDimensions(reversedArrowOrder(b), 6) == gradedDimensions(b, 6));
}
