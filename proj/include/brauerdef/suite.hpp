#pragma once

// The verification suites behind the command-line tool. Each suite builds
// its objects, runs named checks and returns a report; verify-all merges
// the suites at fixed parameters.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "brauerdef/deformation.hpp"
#include "brauerdef/families.hpp"
#include "brauerdef/hochschild.hpp"
#include "brauerdef/koszul.hpp"
#include "brauerdef/presentation_io.hpp"
#include "brauerdef/psi.hpp"
#include "brauerdef/report.hpp"
#include "brauerdef/sln.hpp"

namespace brauerdef {

struct SuiteConfig {
  int k = 3;
  std::size_t maxDegree = 3;
  unsigned order = 4;
  std::size_t params = 1;
  std::uint64_t seed = 1;
  std::size_t n = 3;
  int radius = 3;
  std::size_t fiber = 2;
  std::size_t homDegree = 3;
  std::optional<int> internalDegree;  // default homDegree + 2
  bool emitPresentation = false;
  bool dumpModule = false;
  bool extension = true;  // slnlab: also run the sl_{n-1} -> sl_n extension
  bool timings = false;
  std::optional<QuiverPresentation> presentation;
  unsigned presentationBound = 12;
};

namespace suite {

inline CheckOutcome equal(const Json& expected, const Json& actual) {
  return {expected == actual, expected, actual};
}

inline Json degreeTableJson(const std::vector<std::map<int, std::size_t>>& table) {
  Json j = Json::array();
  for (const auto& row : table) {
    Json r = Json::object();
    for (const auto& [d, n] : row) r[std::to_string(d)] = n;
    j.push_back(std::move(r));
  }
  return j;
}

inline Json moduleToJson(const LatticeModule& M) {
  Json j;
  j["n"] = M.n();
  j["radius"] = M.support().radius();
  j["fiber"] = M.fiberDim();
  j["parameters"] = toJson(DenseVector(M.parameters()));
  Json points = Json::object();
  for (std::size_t p = 0; p < M.support().size(); ++p) {
    Json gens = Json::object();
    for (std::size_t g = 0; g < M.generatorCount(); ++g)
      if (const auto& b = M.block(M.generator(g), p)) gens[generatorName(M.generator(g))] = toJson(*b);
    points[pointToString(M.support().points()[p])] = std::move(gens);
  }
  j["blocks"] = std::move(points);
  return j;
}

inline std::string multiIndexKey(const MultiIndex& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s;
}

/// Nonzero rational coefficients c_d for every 0 < |d| <= N.
inline std::map<MultiIndex, Rational, GradedLexLess> randomCoefficients(std::size_t m, unsigned N,
                                                                        std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 9), den(1, 5), sign(0, 1);
  std::map<MultiIndex, Rational, GradedLexLess> c;
  for (const auto& d : multiIndicesUpTo(m, N)) {
    if (totalDegree(d) == 0) continue;
    Rational x(num(rng) * (sign(rng) ? 1 : -1), den(rng));
    x.canonicalize();
    c[d] = x;
  }
  return c;
}

inline std::string tripleLabel(const FiniteDimAlgebra& A, std::size_t a, std::size_t b, std::size_t c) {
  return "(" + A.basis(a).label + ", " + A.basis(b).label + ", " + A.basis(c).label + ")";
}

inline HochschildCochain familyCocycle(const FiniteDimAlgebra& A, int k) {
  return k == 1 ? dualNumbersCocycle(A) : muCocycle(A, k);
}

inline Json mapReportJson(const DeformationMapReport& r) {
  Json j{{"homomorphism", r.homomorphism}, {"unital", r.unital},
         {"parametersCentral", r.parametersCentral}, {"bijective", r.bijective},
         {"identityModM", r.identityModM}, {"rank", r.rank},
         {"sourceDim", r.sourceDim}, {"targetDim", r.targetDim}};
  if (r.witness) j["witness"] = {r.witness->first, r.witness->second};
  return j;
}

/// Associativity of the m-parameter family μ_d = c_d ν up to order N.
inline void deformAssociativity(VerificationReport& rep, int k, unsigned N, std::size_t m,
                                std::mt19937_64& rng, const std::string& name) {
  auto A = std::make_shared<const FiniteDimAlgebra>(makeA(k));
  const auto coeffs = randomCoefficients(m, N, rng);
  rep.run(name, "the family with mu_d = c_d nu is associative to the given order", [&] {
    const auto S = deformFromCocycle(A, familyCocycle(*A, k), coeffs, N);
    const auto r = checkAssociativity(S);
    Json actual = r.associative ? Json("associative") : Json::object();
    if (r.witness)
      actual = {{"degree", multiIndexKey(r.witness->degree)},
                {"triple", tripleLabel(*A, r.witness->a, r.witness->b, r.witness->c)}};
    return CheckOutcome{r.associative, "associative", actual};
  });
}

}  // namespace suite

inline VerificationReport runFamilies(const SuiteConfig& cfg) {
  using namespace suite;
  const int k = cfg.k;
  if (k < 1) throw std::invalid_argument("k must be positive");
  VerificationReport rep("families", {{"k", k}}, cfg.timings);
  const auto A = makeA(k);
  const std::size_t kk = static_cast<std::size_t>(k);

  rep.run("dimension", "A^k has dimension 4k-2", [&] {
    return equal(4 * kk - 2, A.dim());
  });
  rep.run("algebra-axioms", "the multiplication table is associative with a two-sided unit", [&] {
    return CheckOutcome{!A.associativityWitness() && A.unitIsTwoSided(), true,
                        !A.associativityWitness() && A.unitIsTwoSided()};
  });
  rep.run("hom-table", "dim Hom(P_i, P_j) is 2 on the diagonal, 1 for neighbours, 0 otherwise", [&] {
    std::vector<std::vector<std::size_t>> expected(kk, std::vector<std::size_t>(kk));
    for (std::size_t i = 0; i < kk; ++i)
      for (std::size_t j = 0; j < kk; ++j)
        expected[i][j] = i == j ? 2 : (i + 1 == j || j + 1 == i ? 1 : 0);
    return equal(expected, homDimensions(A));
  });
  rep.run("symmetric-form", "A^k carries a nondegenerate symmetric trace form", [&] {
    const auto s = symmetricForm(A);
    Json actual = s.symmetric ? Json(toJson(s.tau)) : Json("no nondegenerate symmetric form");
    return CheckOutcome{s.symmetric, "nondegenerate", actual};
  });
  const auto profile = projectiveProfile(A);
  rep.run("socles", "soc(P_i) is the simple S_i", [&] {
    Json expected = Json::array(), actual = Json::array();
    for (const auto& p : profile) {
      std::vector<std::size_t> e(kk);
      e[p.vertex] = 1;
      expected.push_back(e);
      actual.push_back(p.socle);
    }
    return equal(expected, actual);
  });
  rep.run("projective-lengths", "composition lengths of the projectives and their Loewy length", [&] {
    std::vector<std::size_t> lengths(kk, 4), loewy(kk, k == 1 ? 2 : 3);
    if (k == 1) lengths = {2};
    else lengths.front() = lengths.back() = 3;
    Json actualLengths = Json::array(), actualLoewy = Json::array();
    for (const auto& p : profile) {
      actualLengths.push_back(p.length);
      actualLoewy.push_back(p.loewyLength);
    }
    return equal({{"lengths", lengths}, {"loewy", loewy}},
                 {{"lengths", actualLengths}, {"loewy", actualLoewy}});
  });
  rep.run("center-dimension", "the center has dimension k+1", [&] {
    return equal(kk + 1, centerBasis(A).size());
  });
  rep.run("atilde-corner", "e(A~^k)e is isomorphic to A^k", [&] {
    const auto iso = atildeCornerMap(k);
    const bool ok = iso.isHomomorphism() && iso.isUnital() && iso.isBijective();
    return CheckOutcome{ok, "isomorphism", ok ? Json("isomorphism") : Json("not an isomorphism")};
  });

  if (k >= 2) {
    const int bound = 6;
    auto B = std::make_shared<const FiniteDimAlgebra>(bhatTruncation(k, bound).algebra);
    rep.run("t-central", "t(k) commutes with every arrow and vertex of B^k below degree 6", [&] {
      const auto w = centralityWitness(*B, k);
      return CheckOutcome{!w, "central", w ? Json("fails at " + *w) : Json("central")};
    });
    rep.run("phi-surjection", "phi: B^k -> A^k is a unital surjective homomorphism", [&] {
      const auto phi = phiMap(k, B);
      Json actual{{"homomorphism", phi.isHomomorphism()}, {"unital", phi.isUnital()},
                  {"rank", phi.rank()}};
      return equal({{"homomorphism", true}, {"unital", true}, {"rank", 4 * kk - 2}}, actual);
    });
    rep.run("phi-kills-t", "phi(t(k)) = 0", [&] {
      const auto phi = phiMap(k, B);
      const bool zero = phi.apply(centralT(*B, k)) == phi.target().zero();
      return CheckOutcome{zero, "zero", zero ? Json("zero") : Json(toJson(phi.apply(centralT(*B, k))))};
    });
    rep.run("bhat-mod-t", "B^k/(t) has the graded dimensions of A^k", [&] {
      return equal(std::vector<std::size_t>{kk, 2 * (kk - 1), kk, 0, 0},
                   bhatModTDimensions(*B, k, 4));
    });
    rep.run("graded-flatness", "dim B^k_d = sum over j of dim A^k_{d-2j}, for d <= 6", [&] {
      const std::vector<std::size_t> a{kk, 2 * (kk - 1), kk};
      std::vector<std::size_t> expected;
      for (int d = 0; d <= bound; ++d) {
        std::size_t e = 0;
        for (int j = d; j >= 0; j -= 2)
          if (j <= 2) e += a[static_cast<std::size_t>(j)];
        expected.push_back(e);
      }
      return equal(expected, gradedDimensions(makeBhat(k), bound));
    });
  }
  if (cfg.emitPresentation) {
    rep.attach("presentation", presentationToJson(presentationA(k)));
    if (k >= 2) rep.attach("bhatPresentation", presentationToJson(makeBhat(k)));
  }
  return rep;
}

inline VerificationReport runHochschild(const SuiteConfig& cfg) {
  using namespace suite;
  const std::size_t I = cfg.maxDegree;
  if (cfg.presentation) {
    VerificationReport rep("hochschild", {{"maxDegree", I}, {"presentation", presentationToJson(*cfg.presentation)}},
                           cfg.timings);
    rep.run("hh-dimensions", "dim HH^i of the given algebra", [&] {
      const auto A = boundedQuotient(*cfg.presentation, cfg.presentationBound).algebra;
      const auto d = hochschildDimensions(A, I);
      return CheckOutcome{true, nullptr, {{"dim", A.dim()}, {"hh", d.hh}, {"cochains", d.cochains}}};
    });
    return rep;
  }
  const int k = cfg.k;
  if (k < 1) throw std::invalid_argument("k must be positive");
  VerificationReport rep("hochschild", {{"k", k}, {"maxDegree", I}}, cfg.timings);
  const auto A = makeA(k);
  const auto dims = hochschildDimensions(A, I);
  rep.run("hh-dimensions", "dim HH^0 = k+1 and dim HH^i = 1 for 1 <= i", [&] {
    std::vector<std::size_t> expected(I + 1, 1);
    expected[0] = static_cast<std::size_t>(k) + 1;
    return equal(expected, dims.hh);
  });
  rep.run("reduced-agrees-with-unreduced", "the reduced and unreduced complexes give the same HH", [&] {
    if (k > 2) throw CheckSkipped("the unreduced complex is only computed for k <= 2");
    const std::size_t top = std::min<std::size_t>(I, 2);
    const auto u = hochschildDimensions(A, top, ComplexKind::unreduced);
    const std::vector<std::size_t> reduced(dims.hh.begin(), dims.hh.begin() + static_cast<long>(top) + 1);
    return equal(reduced, u.hh);
  });
  const auto mu = familyCocycle(A, k);
  rep.run("mu-cocycle", "mu is a Hochschild 2-cocycle", [&] {
    const auto w = cocycleWitness(A, mu);
    return CheckOutcome{!w, "cocycle", w ? Json(tripleLabel(A, w->a, w->b, w->c)) : Json("cocycle")};
  });
  rep.run("mu-associative", "mu(mu(a,b),c) = mu(a,mu(b,c))", [&] {
    const auto w = associativityWitness(A, mu);
    return CheckOutcome{!w, "associative", w ? Json(tripleLabel(A, w->a, w->b, w->c)) : Json("associative")};
  });
  rep.run("mu-not-coboundary", "mu represents a nonzero class in HH^2", [&] {
    const auto r = isCoboundary(A, mu);
    return CheckOutcome{!r.coboundary, "not a coboundary",
                        r.coboundary ? Json("coboundary") : Json("not a coboundary")};
  });
  if (k >= 2) {
    rep.run("mu-degree", "mu is homogeneous of degree -2 in the path grading", [&] {
      const auto g = gradedCocycleDegree(A, mu);
      return equal({{"homogeneous", true}, {"degree", -2}}, {{"homogeneous", g.homogeneous}, {"degree", g.degree}});
    });
    rep.run("mu-degree-a-grading", "mu has degree -1 when deg a = 1 and deg b = 0", [&] {
      const auto A1 = makeA(k, AGrading::aOneBZero);
      const auto g = gradedCocycleDegree(A1, muCocycle(A1, k));
      return equal({{"homogeneous", true}, {"degree", -1}}, {{"homogeneous", g.homogeneous}, {"degree", g.degree}});
    });
  }
  rep.attach("cochainDimensions", dims.cochains);
  return rep;
}

inline VerificationReport runDeform(const SuiteConfig& cfg) {
  using namespace suite;
  const int k = cfg.k;
  const unsigned N = cfg.order;
  const std::size_t m = cfg.params;
  if (k < 1 || m < 1) throw std::invalid_argument("k and the parameter count must be positive");
  VerificationReport rep("deform", {{"k", k}, {"order", N}, {"params", m}, {"seed", cfg.seed}}, cfg.timings);
  std::mt19937_64 rng(cfg.seed);
  auto A = std::make_shared<const FiniteDimAlgebra>(makeA(k));
  const auto nu = familyCocycle(*A, k);
  const auto coeffs = randomCoefficients(m, N, rng);
  Json c = Json::object();
  for (const auto& [d, x] : coeffs) c[multiIndexKey(d)] = toString(x);
  rep.attach("coefficients", c);

  const auto S = deformFromCocycle(A, nu, coeffs, N);
  rep.run("associative", "the family with mu_d = c_d nu is associative to the given order", [&] {
    const auto r = checkAssociativity(S);
    Json actual = "associative";
    if (r.witness)
      actual = {{"degree", multiIndexKey(r.witness->degree)},
                {"triple", tripleLabel(*A, r.witness->a, r.witness->b, r.witness->c)}};
    return CheckOutcome{r.associative, "associative", actual};
  });
  rep.run("associative-deformed-algebra", "the deformed algebra, as a finite-dimensional algebra, is associative", [&] {
    const auto D = deformedAlgebra(S);
    if (D.algebra.dim() > 120) throw CheckSkipped("deformed algebra of dimension " + std::to_string(D.algebra.dim()));
    const auto w = D.algebra.associativityWitness();
    return CheckOutcome{!w, "associative",
                        w ? Json(tripleLabel(D.algebra, (*w)[0], (*w)[1], (*w)[2])) : Json("associative")};
  });
  rep.run("unit-and-reduction", "1 is a unit for the star product and u = 0 recovers A^k", [&] {
    const StarTable T(S);
    bool ok = true;
    const std::size_t n = A->dim();
    const auto one = S.embed(A->unit());
    for (std::size_t i = 0; i < n && ok; ++i) {
      const auto bi = S.basisElement(i);
      ok = T.multiply(one, bi) == bi && T.multiply(bi, one) == bi;
      for (std::size_t j = 0; j < n && ok; ++j)
        ok = S.atZero(T.multiply(bi, S.basisElement(j))) == sparse::toDense(A->product(i, j), n);
    }
    return CheckOutcome{ok, true, ok};
  });
  rep.run("infinitesimal-class", "each first-order term is a nonzero class in HH^2", [&] {
    const auto r = infinitesimalClass(S);
    Json actual = Json::array();
    for (const auto& d : r.directions) actual.push_back(d.trivial ? "trivial" : "nontrivial");
    return equal(Json(std::vector<std::string>(m, "nontrivial")), actual);
  });
  rep.run("extension-unobstructed", "nu extends order by order to the given order", [&] {
    const auto r = extendOrderByOrder(A, nu, N);
    Json steps = Json::array();
    for (const auto& s : r.steps)
      steps.push_back({{"order", s.order}, {"rhsIsCocycle", s.rhsIsCocycle}, {"rhsZero", s.rhsZero}});
    Json actual{{"extended", r.extended}, {"steps", steps}};
    if (r.obstructedAt) actual["obstructedAt"] = *r.obstructedAt;
    bool cocycles = true;
    for (const auto& s : r.steps) cocycles = cocycles && s.rhsIsCocycle;
    return CheckOutcome{r.extended && cocycles, {{"extended", true}}, actual};
  });
  rep.run("extension-complement", "the extension does not depend on the chosen complement", [&] {
    const auto a = extendOrderByOrder(A, nu, N, ColumnOrder::natural);
    const auto b = extendOrderByOrder(A, nu, N, ColumnOrder::reversed);
    const bool ok = a.extended == b.extended && (!a.extended || (checkAssociativity(a.star).associative &&
                                                                 checkAssociativity(b.star).associative));
    return CheckOutcome{ok, {{"natural", true}, {"reversed", true}},
                        {{"natural", a.extended}, {"reversed", b.extended}}};
  });
  if (k >= 2) {
    rep.run("psi-isomorphism", "Psi is an isomorphism A^k[[t]]/(t^{N+1}) -> B^k/(t^{N+1}) reducing to the identity", [&] {
      const auto r = verifyPsi(psiSetup(k, N));
      const std::size_t dim = (4 * static_cast<std::size_t>(k) - 2) * (N + 1);
      Json expected{{"homomorphism", true}, {"unital", true}, {"parametersCentral", true},
                    {"bijective", true}, {"identityModM", true}, {"rank", dim},
                    {"sourceDim", dim}, {"targetDim", dim}};
      return equal(expected, mapReportJson(r));
    });
    rep.run("psi-rescaled-parameter", "sending t to 2t(k) is not a homomorphism", [&] {
      const auto r = verifyPsi(psiSetup(k, N, 2));
      return CheckOutcome{!r.homomorphism && r.identityModM, {{"homomorphism", false}},
                          {{"homomorphism", r.homomorphism}}};
    });
  }
  return rep;
}

inline VerificationReport runKoszul(const SuiteConfig& cfg) {
  using namespace suite;
  const int k = cfg.k;
  const std::size_t p = cfg.homDegree;
  if (k < 1) throw std::invalid_argument("k must be positive");
  const int D = cfg.internalDegree.value_or(static_cast<int>(p) + 2);
  VerificationReport rep("koszul", {{"k", k}, {"homDegree", p}, {"internalDegree", D}}, cfg.timings);
  auto tables = [](const KoszulCertificate& c) {
    Json j = Json::array();
    for (const auto& s : c.simples)
      j.push_back({{"vertex", s.vertex}, {"linear", s.linear}, {"degrees", degreeTableJson(s.degreeTable)}});
    return j;
  };
  auto verdict = [](const KoszulCertificate& c) {
    return Json{{"linear", c.linear()}, {"consistent", c.consistent()}};
  };
  if (k >= 2) {
    rep.run("bhat-linear", "simples over B^k (all arrows in degree 1) have linear resolutions", [&] {
      const auto c = koszulityCertificate(makeBhat(k, BhatGrading::allArrowsDegreeOne), p, D, "allArrowsDegreeOne");
      rep.attach("bhatResolutions", tables(c));
      return equal({{"linear", true}, {"consistent", true}}, verdict(c));
    });
  }
  rep.run(k == 1 ? "dual-numbers-linear" : "a-not-linear",
          k == 1 ? "the dual numbers are Koszul" : "A^k is not Koszul under the path grading", [&] {
    // The first nonlinear syzygy of A^k sits in homological degree k.
    const std::size_t pa = std::max(p, static_cast<std::size_t>(k));
    const int Da = std::max(D, static_cast<int>(pa) + 2);
    rep.attach("aBounds", {{"homDegree", pa}, {"internalDegree", Da}});
    const auto c = koszulityCertificate(presentationA(k), pa, Da);
    rep.attach("aResolutions", tables(c));
    return equal({{"linear", k == 1}, {"consistent", true}}, verdict(c));
  });
  return rep;
}

inline VerificationReport runSlnlab(const SuiteConfig& cfg) {
  using namespace suite;
  const std::size_t n = cfg.n, D = cfg.fiber;
  const int R = cfg.radius;
  if (n < 2 || D < 1 || R < 1) throw std::invalid_argument("need n >= 2, fiber >= 1, radius >= 1");
  std::mt19937_64 rng(cfg.seed);
  const auto a = genericParameters(n, rng);
  const auto X = randomCommutingNilpotents(n, D, rng);
  VerificationReport rep("slnlab", {{"n", n}, {"radius", R}, {"fiber", D}, {"seed", cfg.seed}}, cfg.timings);
  Json xs = Json::array();
  for (const auto& x : X) xs.push_back(toJson(x));
  rep.attach("a", toJson(DenseVector(a)));
  rep.attach("X", xs);

  auto relations = [](const LatticeModule& M) {
    const auto r = verifyRelations(M);
    Json actual{{"checked", r.checked}, {"skipped", r.skipped}};
    if (r.witness) actual["witness"] = {r.witness->first, pointToString(r.witness->second)};
    return CheckOutcome{r.ok && r.checked > 0, "all relations hold", actual};
  };
  const auto F = buildF(n, a, X, R);
  rep.run("relations-N", "N(a) satisfies the sl_n relations on the truncated support", [&] {
    return relations(buildN(n, a, R));
  });
  rep.run("relations-F", "F(V) satisfies the sl_n relations on the truncated support", [&] {
    return relations(F);
  });
  rep.run("recover-x", "X_1..X_n are recovered from h_1 and the Casimir on V_0", [&] {
    const auto r = recoverX(F, a);
    Json actual = Json::array();
    for (const auto& x : r.X) actual.push_back(toJson(x));
    return CheckOutcome{r.nilpotent && r.X == X, xs, actual};
  });
  rep.run("square-root-branch", "the other square root does not give a nilpotent X_1", [&] {
    const auto good = recoverX(F, a);
    const auto bad = recoverX(F, a, good.root > 0 ? -1 : 1);
    return CheckOutcome{!bad.nilpotent, {{"nilpotent", false}}, {{"nilpotent", bad.nilpotent}}};
  });
  rep.run("weight-criterion", "F(V) is a weight module exactly when X_1 = ... = X_n", [&] {
    bool allEqual = true;
    for (const auto& x : X) allEqual = allEqual && x == X.front();
    const bool equalCase = isWeightModule(buildF(n, a, std::vector<RatMatrix>(n, X.front()), R));
    const bool given = isWeightModule(F);
    std::vector<RatMatrix> split(n, RatMatrix(std::max<std::size_t>(D, 2), std::max<std::size_t>(D, 2)));
    split.front().set(0, 1, 1);
    const bool distinct = isWeightModule(buildF(n, a, split, R));
    return equal({{"equal", true}, {"given", allEqual}, {"distinct", false}},
                 {{"equal", equalCase}, {"given", given}, {"distinct", distinct}});
  });
  rep.run("extension", "extending F(V') from sl_{n-1} with X_n reproduces F(V)", [&] {
    if (n < 3) throw CheckSkipped("the extension starts from sl_2 and needs n >= 3");
    if (!cfg.extension) throw CheckSkipped("extension not requested");
    const std::vector<Rational> ap(a.begin(), a.end() - 1);
    const std::vector<RatMatrix> Xp(X.begin(), X.end() - 1);
    const auto ext = reconstructExtension(n, a, buildF(n - 1, ap, Xp, 2 * R + 4), X.back(), R);
    const auto& s = ext.state;
    rep.attach("extensionState", {{"upwardSolves", s.upwardSolves},
                                  {"upwardYEqualsB", s.upwardYEqualsB},
                                  {"downwardSolves", s.downwardSolves},
                                  {"downwardXEqualsBMinusOne", s.downwardXEqualsBMinusOne},
                                  {"lowerSolves", s.lowerSolves},
                                  {"lowerXEqualsB", s.lowerXEqualsB}});
    const bool states = s.upwardYEqualsB == s.upwardSolves &&
                        s.downwardXEqualsBMinusOne == s.downwardSolves && s.lowerXEqualsB == s.lowerSolves;
    return equal({{"equalsF", true}, {"intermediateStates", true}},
                 {{"equalsF", ext.module == F}, {"intermediateStates", states}});
  });
  if (cfg.dumpModule) rep.attach("module", moduleToJson(F));
  return rep;
}

/// Every suite at fixed parameters, plus a check that a report is
/// reproduced byte for byte from the same seed.
inline VerificationReport runVerifyAll(const SuiteConfig& cfg) {
  using namespace suite;
  VerificationReport rep("verify-all", {{"seed", cfg.seed}}, cfg.timings);
  auto with = [&](auto f) {
    SuiteConfig c;
    c.seed = cfg.seed;
    c.timings = cfg.timings;
    f(c);
    return c;
  };
  for (int k = 1; k <= 6; ++k)
    rep.merge(runFamilies(with([&](SuiteConfig& c) { c.k = k; })), "families[k=" + std::to_string(k) + "]/");
  for (int k = 1; k <= 4; ++k)
    rep.merge(runHochschild(with([&](SuiteConfig& c) {
                c.k = k;
                c.maxDegree = k <= 3 ? 3 : 2;
              })),
              "hochschild[k=" + std::to_string(k) + "]/");
  for (int k = 1; k <= 4; ++k) {
    const std::string prefix = "deform[k=" + std::to_string(k) + "]/";
    rep.merge(runDeform(with([&](SuiteConfig& c) {
                c.k = k;
                c.order = 4;
                c.params = 1;
              })),
              prefix);
    std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(k));
    for (std::size_t m = 2; m <= 3; ++m)
      deformAssociativity(rep, k, m == 3 ? 3 : 4, m, rng, prefix + "associative[m=" + std::to_string(m) + "]");
  }
  for (int k = 1; k <= 4; ++k)
    rep.merge(runKoszul(with([&](SuiteConfig& c) {
                c.k = k;
                c.homDegree = 3;
              })),
              "koszul[k=" + std::to_string(k) + "]/");
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t D = 1; D <= 3; ++D)
      for (std::uint64_t s = 0; s < 5; ++s)
        rep.merge(runSlnlab(with([&](SuiteConfig& c) {
                    c.n = n;
                    c.fiber = D;
                    c.radius = 3;
                    c.seed = cfg.seed + 100 * n + 10 * D + s;
                    c.extension = D <= 2;
                  })),
                  "slnlab[n=" + std::to_string(n) + ",D=" + std::to_string(D) + ",s=" + std::to_string(s) + "]/");
  rep.run("determinism", "the same seed gives byte-identical reports", [&] {
    auto twice = [&](auto f) { return f() == f(); };
    const bool deform = twice([&] {
      return runDeform(with([](SuiteConfig& c) {
               c.timings = false;
               c.k = 2;
               c.order = 2;
               c.params = 2;
             })).dump();
    });
    const bool sln = twice([&] {
      return runSlnlab(with([](SuiteConfig& c) {
               c.timings = false;
               c.n = 3;
               c.radius = 2;
               c.fiber = 2;
             })).dump();
    });
    return equal({{"deform", true}, {"slnlab", true}}, {{"deform", deform}, {"slnlab", sln}});
  });
  return rep;
}

}  // namespace brauerdef
