#pragma once

// The explicit isomorphism between the one-parameter deformation of A^k by
// μ and B̂^k modulo t^{N+1}.

#include <memory>
#include <optional>

#include "brauerdef/deformation.hpp"
#include "brauerdef/families.hpp"

namespace brauerdef {

struct PsiSetup {
  int k = 0;
  unsigned order = 0;
  StarProduct star;
  AlgebraPtr target;  // B̂^k / (t^{N+1})
  DeformationMap map;
  std::optional<AlgebraMap> reduction;  // φ: target -> A^k
};

inline Element power(const FiniteDimAlgebra& B, const Element& x, unsigned n) {
  Element p = B.unit();
  for (unsigned i = 0; i < n; ++i) p = B.multiply(p, x);
  return p;
}

/// `tScale` multiplies the image of the parameter; only 1 gives a
/// homomorphism.
inline PsiSetup psiSetup(int k, unsigned N, const Rational& tScale = 1) {
  auto A = std::make_shared<const FiniteDimAlgebra>(makeA(k));
  PsiSetup s;
  s.k = k;
  s.order = N;
  s.star = StarProduct(A, {"t"}, N);
  s.star.family[{1}] = muCocycle(*A, k);
  const auto B = bhatTruncation(k, static_cast<int>(2 * N + 2)).algebra;
  auto T = std::make_shared<const FiniteDimAlgebra>(
      quotientByIdeal(B, {power(B, centralT(B, k), N + 1)}).algebra);
  s.target = T;
  s.map.baseImages = psiBaseImages(k, *A, *T);
  Element tau = centralT(*T, k);
  for (auto& c : tau) c *= tScale;
  s.map.parameterImages = {tau};
  s.reduction = phiMap(k, T);
  return s;
}

inline DeformationMapReport verifyPsi(const PsiSetup& s) {
  return verifyDeformationMap(s.map, s.star, s.target, s.reduction);
}

}  // namespace brauerdef
