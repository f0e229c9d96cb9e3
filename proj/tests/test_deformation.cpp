#include <catch_amalgamated.hpp>

#include <memory>
#include <random>

#include "brauerdef/deformation.hpp"
#include "brauerdef/families.hpp"
#include "brauerdef/psi.hpp"

using namespace brauerdef;

namespace {

AlgebraPtr ptr(FiniteDimAlgebra A) { return std::make_shared<const FiniteDimAlgebra>(std::move(A)); }

std::map<MultiIndex, Rational, GradedLexLess> randomCoefficients(std::size_t m, unsigned N,
                                                                 std::mt19937_64& rng) {
  std::map<MultiIndex, Rational, GradedLexLess> c;
  for (const auto& d : multiIndicesUpTo(m, N))
    if (totalDegree(d) > 0)
      c[d] = Rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1);
  return c;
}

// Independent route: the deformed algebra as a finite-dimensional algebra
// with its own triple loop over the full basis b_i u^d.
bool associativeViaDeformedAlgebra(const StarProduct& S) {
  return !deformedAlgebra(S).algebra.associativityWitness();
}

}  // namespace

TEST_CASE("star products of the dual numbers") {
  const auto A1 = ptr(makeA(1));
  const auto S = deformFromCocycle(A1, dualNumbersCocycle(*A1), {{{1}, 1}}, 3);
  const auto X = S.basisElement(A1->at("x"));
  const auto XX = starMultiply(S, X, X);
  CHECK(XX[A1->at("e1")] == TruncPoly::variable({"t"}, 3, 0));
  CHECK(XX[A1->at("x")].isZero());
  CHECK(checkAssociativity(S).associative);
}

TEST_CASE("a1 ⋆ b1 = a1b1 + e2 t on A^2") {
  const auto A = ptr(makeA(2));
  StarProduct S(A, {"t"}, 2);
  S.family[{1}] = muCocycle(*A, 2);
  const auto p = starMultiply(S, S.basisElement(A->at("a1")), S.basisElement(A->at("b1")));
  DeformedElement expected = S.embed(A->element("a1b1"));
  expected[A->at("e2")] = TruncPoly::variable({"t"}, 2, 0);
  CHECK(p == expected);
}

TEST_CASE("the unit is strict and u = 0 recovers the base product") {
  std::mt19937_64 rng(3);
  const auto A = ptr(makeA(3));
  const auto S = deformFromCocycle(A, muCocycle(*A, 3), randomCoefficients(2, 3, rng), 3);
  const auto one = S.embed(A->unit());
  std::uniform_int_distribution<std::size_t> pick(0, A->dim() - 1);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t i = pick(rng), j = pick(rng);
    const auto x = S.basisElement(i), y = S.basisElement(j);
    CHECK(starMultiply(S, x, one) == x);
    CHECK(starMultiply(S, one, x) == x);
    CHECK(S.atZero(starMultiply(S, x, y)) == A->multiply(A->basisVector(i), A->basisVector(j)));
  }
}

TEST_CASE("deformations generated by μ are associative") {
  std::mt19937_64 rng(11);
  for (int k = 2; k <= 4; ++k) {
    const auto A = ptr(makeA(k));
    const auto mu = muCocycle(*A, k);
    CHECK(checkAssociativity(deformFromCocycle(A, mu, {{{1}, 1}}, 4)).associative);
    for (std::size_t m = 1; m <= 3; ++m) {
      const unsigned N = m == 3 ? 3 : 4;
      const auto S = deformFromCocycle(A, mu, randomCoefficients(m, N, rng), N);
      CHECK(S.parameterCount() == m);
      CHECK(checkAssociativity(S).associative);
    }
  }
  const auto A = ptr(makeA(5));
  CHECK(checkAssociativity(deformFromCocycle(A, muCocycle(*A, 5), randomCoefficients(2, 2, rng), 2))
            .associative);
}

TEST_CASE("associativity failures carry the smallest multi-index") {
  const auto A = ptr(makeA(3));
  StarProduct S(A, {"t"}, 3);
  S.family[{1}] = muCocycle(*A, 3);
  // Vertex-consistent but not a cocycle.
  S.family[{2}] = muCocycle(*A, 3, false);
  const auto r = checkAssociativity(S);
  REQUIRE_FALSE(r.associative);
  CHECK(r.witness->degree == MultiIndex{2});
  CHECK_FALSE(associativeViaDeformedAlgebra(S));

  StarProduct bad(A, {"t"}, 2);
  bad.family[{1}] = muCocycle(*A, 3, false);
  CHECK(checkAssociativity(bad).witness->degree == MultiIndex{1});
  CHECK_THROWS_AS(deformFromCocycle(A, muCocycle(*A, 3, false), {{{1}, 1}}, 2),
                  PreconditionViolation);
}

TEST_CASE("the associativity check agrees with the deformed-algebra route") {
  std::mt19937_64 rng(5);
  const auto A = ptr(makeA(2));
  const auto mu = muCocycle(*A, 2);
  const auto S = deformFromCocycle(A, mu, randomCoefficients(2, 2, rng), 2);
  CHECK(associativeViaDeformedAlgebra(S));
  CHECK(deformedAlgebra(S).algebra.dim() == A->dim() * 6);
  StarProduct half(A, {"t"}, 2);
  half.family[{1}] = mu;
  half.family[{2}] = mu + coboundaryOf(*A, CochainComplex(*A, 1).cochain(1, [&] {
                       DenseVector x(CochainComplex(*A, 1).dimension(1));
                       x[0] = 1;
                       return x;
                     }()));
  CHECK(checkAssociativity(half).associative == associativeViaDeformedAlgebra(half));
}

TEST_CASE("the zero family") {
  const auto A = ptr(makeA(3));
  const auto S = deformFromCocycle(A, muCocycle(*A, 3), {{{1}, 0}, {{2}, 0}}, 2);
  CHECK(S.family.empty());
  CHECK(checkAssociativity(S).associative);
  CHECK(infinitesimalClass(S).trivial);
}

TEST_CASE("order-by-order extension of μ is unobstructed") {
  for (int k = 2; k <= 4; ++k) {
    const auto A = ptr(makeA(k));
    const auto r = extendOrderByOrder(A, muCocycle(*A, k), 4);
    REQUIRE(r.extended);
    CHECK_FALSE(r.obstructedAt);
    CHECK(r.steps.size() == 3);
    for (const auto& s : r.steps) {
      CHECK(s.rhsZero);
      CHECK(s.rhsIsCocycle);
    }
    CHECK(r.star.family.size() == 1);
    CHECK(checkAssociativity(r.star).associative);
    CHECK_FALSE(infinitesimalClass(r.star).trivial);
  }
  const auto A1 = ptr(makeA(1));
  const auto d = extendOrderByOrder(A1, dualNumbersCocycle(*A1), 4);
  CHECK(d.extended);
  CHECK(checkAssociativity(d.star).associative);
  const auto z = extendOrderByOrder(A1, HochschildCochain(2, A1->dim()), 3);
  CHECK(z.extended);
  CHECK(z.star.family.empty());
}

TEST_CASE("extension absorbs a coboundary perturbation under either complement") {
  std::mt19937_64 rng(29);
  for (int k = 2; k <= 3; ++k) {
    const auto A = ptr(makeA(k));
    CochainComplex C(*A, 1);
    DenseVector x(C.dimension(1));
    for (auto& v : x) v = static_cast<long>(rng() % 3) - 1;
    const auto mu1 = muCocycle(*A, k) + coboundaryOf(*A, C.cochain(1, x));
    REQUIRE(isCocycle(*A, mu1));
    const auto n = extendOrderByOrder(A, mu1, 4, ColumnOrder::natural);
    const auto r = extendOrderByOrder(A, mu1, 4, ColumnOrder::reversed);
    REQUIRE(n.extended);
    REQUIRE(r.extended);
    for (const auto& s : n.steps) CHECK(s.rhsIsCocycle);
    CHECK(checkAssociativity(n.star).associative == checkAssociativity(r.star).associative);
    CHECK(checkAssociativity(n.star).associative);
    CHECK(infinitesimalClass(n.star).trivial == infinitesimalClass(r.star).trivial);
    CHECK_FALSE(infinitesimalClass(n.star).trivial);
  }
}

TEST_CASE("infinitesimal classes") {
  const auto A = ptr(makeA(2));
  CochainComplex C(*A, 1);
  DenseVector x(C.dimension(1));
  x[1] = 2;
  x[2] = -1;
  StarProduct S(A, {"u1", "u2"}, 1);
  S.family[{1, 0}] = coboundaryOf(*A, C.cochain(1, x));
  S.family[{0, 1}] = muCocycle(*A, 2);
  const auto c = infinitesimalClass(S);
  CHECK_FALSE(c.trivial);
  REQUIRE(c.directions.size() == 2);
  CHECK(c.directions[0].trivial);
  REQUIRE(c.directions[0].primitive);
  CHECK(coboundaryOf(*A, *c.directions[0].primitive) == S.family[{1, 0}]);
  CHECK_FALSE(c.directions[1].trivial);
}

TEST_CASE("the identity map on the trivial deformation") {
  const auto A = ptr(makeA(2));
  const StarProduct S(A, {"t"}, 3);
  const auto D = deformedAlgebra(S);
  auto T = ptr(D.algebra);
  DeformationMap F;
  for (std::size_t i = 0; i < A->dim(); ++i) F.baseImages.push_back(T->basisVector(D.index(0, i)));
  Element t = T->zero();
  for (std::size_t v = 0; v < A->vertexCount(); ++v) t[D.index(1, A->idempotent(v))] = 1;
  F.parameterImages = {t};
  std::vector<Element> red;
  for (std::size_t m = 0; m < D.monomials.size(); ++m)
    for (std::size_t i = 0; i < A->dim(); ++i)
      red.push_back(m == 0 ? A->basisVector(i) : A->zero());
  const auto r = verifyDeformationMap(F, S, T, AlgebraMap(T, A, red));
  CHECK(r.ok());
  CHECK(r.rank == 24);
}

TEST_CASE("Ψ is an isomorphism of deformations") {
  for (int k = 2; k <= 3; ++k) {
    const auto s = psiSetup(k, 2);
    CHECK(s.target->dim() == static_cast<std::size_t>((4 * k - 2) * 3));
    const auto r = verifyPsi(s);
    CHECK(r.homomorphism);
    CHECK(r.unital);
    CHECK(r.parametersCentral);
    CHECK(r.bijective);
    CHECK(r.identityModM);
  }
}

TEST_CASE("Ψ with the parameter sent to 2t(k) is not a homomorphism") {
  const auto s = psiSetup(2, 2, 2);
  const auto r = verifyPsi(s);
  CHECK_FALSE(r.homomorphism);
  REQUIRE(r.witness);
  CHECK(r.identityModM);
  const auto& T = *s.target;
  const auto& A = *s.star.base;
  // Ψ(a1 ⋆ b1) − Ψ(a1)Ψ(b1) on the pair (a1, b1) is t(k) e2 ≠ 0.
  const auto D = deformedAlgebra(s.star);
  const Element lhs = T.multiply(s.map.baseImages[A.at("a1")], s.map.baseImages[A.at("b1")]);
  Element rhs = s.map.baseImages[A.at("a1b1")];
  const Element te2 = T.multiply(s.map.parameterImages[0], s.map.baseImages[A.at("e2")]);
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += te2[i];
  CHECK(lhs != rhs);
  CHECK(D.algebra.dim() == T.dim());
}
