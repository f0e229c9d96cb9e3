#pragma once

// Truncated multi-parameter star products a ⋆ b = ab + Σ_{d≠0} μ_d(a,b) u^d
// over a finite-dimensional algebra, with associativity checks, the
// order-by-order extension of an infinitesimal deformation, and
// verification of explicit deformation maps.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brauerdef/algebra.hpp"
#include "brauerdef/hochschild.hpp"
#include "brauerdef/linalg.hpp"
#include "brauerdef/maps.hpp"
#include "brauerdef/scalar.hpp"

namespace brauerdef {

using DeformedElement = std::vector<TruncPoly>;

struct StarProduct {
  AlgebraPtr base;
  std::vector<std::string> parameters;
  unsigned order = 0;
  // μ_d for 0 < |d| <= order; μ_0 is the base multiplication.
  std::map<MultiIndex, HochschildCochain, GradedLexLess> family;

  StarProduct() = default;
  StarProduct(AlgebraPtr A, std::vector<std::string> params, unsigned N)
      : base(std::move(A)), parameters(std::move(params)), order(N) {}

  std::size_t parameterCount() const { return parameters.size(); }

  TruncPoly zeroPoly() const { return TruncPoly(parameters, order); }

  DeformedElement embed(const Element& x) const {
    DeformedElement out(base->dim(), zeroPoly());
    for (std::size_t i = 0; i < x.size(); ++i)
      if (sgn(x[i]) != 0) out[i] = TruncPoly::constant(parameters, order, x[i]);
    return out;
  }
  DeformedElement basisElement(std::size_t i) const { return embed(base->basisVector(i)); }

  /// Coefficient-wise specialisation u = 0.
  Element atZero(const DeformedElement& x) const {
    Element out(x.size());
    const MultiIndex zero(parameters.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i].coefficient(zero);
    return out;
  }
};

/// b_i ⋆ b_j as sparse (basis index, polynomial) terms.
class StarTable {
 public:
  using Terms = std::vector<std::pair<std::size_t, TruncPoly>>;

  explicit StarTable(const StarProduct& S) : S_(S), n_(S.base->dim()), table_(n_ * n_) {
    const MultiIndex zero(S.parameterCount(), 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        std::map<std::size_t, TruncPoly> acc;
        for (const auto& e : S.base->product(i, j))
          acc.emplace(e.index, S.zeroPoly()).first->second.addTerm(zero, e.value);
        for (const auto& [d, mu] : S.family) {
          const Element v = evaluate(*S.base, mu, {i, j});
          for (std::size_t l = 0; l < n_; ++l)
            if (sgn(v[l]) != 0) acc.emplace(l, S.zeroPoly()).first->second.addTerm(d, v[l]);
        }
        Terms& t = table_[i * n_ + j];
        for (auto& [l, p] : acc)
          if (!p.isZero()) t.emplace_back(l, std::move(p));
      }
  }

  const Terms& at(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }

  /// Σ_l p_l b_l ⋆ b_c, for sparse terms.
  Terms rightMultiply(const Terms& x, std::size_t c) const {
    std::map<std::size_t, TruncPoly> acc;
    for (const auto& [l, p] : x)
      for (const auto& [m, q] : at(l, c)) {
        auto it = acc.emplace(m, S_.zeroPoly()).first;
        it->second += p * q;
      }
    return collect(acc);
  }
  Terms leftMultiply(std::size_t a, const Terms& x) const {
    std::map<std::size_t, TruncPoly> acc;
    for (const auto& [l, p] : x)
      for (const auto& [m, q] : at(a, l)) {
        auto it = acc.emplace(m, S_.zeroPoly()).first;
        it->second += p * q;
      }
    return collect(acc);
  }

  DeformedElement multiply(const DeformedElement& x, const DeformedElement& y) const {
    DeformedElement out(n_, S_.zeroPoly());
    for (std::size_t i = 0; i < n_; ++i) {
      if (x[i].isZero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (y[j].isZero()) continue;
        const TruncPoly c = x[i] * y[j];
        if (c.isZero()) continue;
        for (const auto& [l, p] : at(i, j)) out[l] += c * p;
      }
    }
    return out;
  }

 private:
  static Terms collect(std::map<std::size_t, TruncPoly>& acc) {
    Terms t;
    for (auto& [l, p] : acc)
      if (!p.isZero()) t.emplace_back(l, std::move(p));
    return t;
  }

  const StarProduct& S_;
  std::size_t n_;
  std::vector<Terms> table_;
};

inline DeformedElement starMultiply(const StarProduct& S, const DeformedElement& x,
                                    const DeformedElement& y) {
  return StarTable(S).multiply(x, y);
}

struct AssociativityWitness {
  MultiIndex degree;
  std::size_t a, b, c;
};

struct AssociativityResult {
  bool associative = true;
  std::optional<AssociativityWitness> witness;  // smallest failing multi-index
};

/// Compares (a⋆b)⋆c with a⋆(b⋆c) on every basis triple. Equality of all
/// coefficients up to the order is exactly the system of associativity
/// equations for every multi-index |d| <= N.
inline AssociativityResult checkAssociativity(const StarProduct& S) {
  const StarTable T(S);
  const std::size_t n = S.base->dim();
  AssociativityResult out;
  GradedLexLess less;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& ab = T.at(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        const auto& bc = T.at(b, c);
        if (ab.empty() && bc.empty()) continue;
        auto left = T.rightMultiply(ab, c);
        auto right = T.leftMultiply(a, bc);
        std::map<std::size_t, TruncPoly> diff;
        for (auto& [l, p] : left) diff.emplace(l, S.zeroPoly()).first->second += p;
        for (auto& [l, p] : right) diff.emplace(l, S.zeroPoly()).first->second -= p;
        for (const auto& [l, p] : diff) {
          if (p.isZero()) continue;
          const MultiIndex& d = p.terms().begin()->first;  // smallest in graded-lex order
          if (!out.witness || less(d, out.witness->degree)) out.witness = AssociativityWitness{d, a, b, c};
        }
      }
    }
  out.associative = !out.witness;
  return out;
}

class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// μ_d = c_d ν for the given coefficients (missing multi-indices are zero).
inline StarProduct deformFromCocycle(AlgebraPtr A, const HochschildCochain& nu,
                                     const std::map<MultiIndex, Rational, GradedLexLess>& coeffs,
                                     unsigned order, std::vector<std::string> params = {}) {
  std::size_t m = coeffs.empty() ? 1 : coeffs.begin()->first.size();
  if (params.empty()) params = defaultParameterNames(m, m == 1 ? "t" : "u");
  m = params.size();
  if (auto w = cocycleWitness(*A, nu))
    throw PreconditionViolation("not a cocycle at (" + A->basis(w->a).label + ", " +
                                A->basis(w->b).label + ", " + A->basis(w->c).label + ")");
  if (auto w = associativityWitness(*A, nu))
    throw PreconditionViolation("not associative at (" + A->basis(w->a).label + ", " +
                                A->basis(w->b).label + ", " + A->basis(w->c).label + ")");
  StarProduct S(std::move(A), std::move(params), order);
  for (const auto& [d, c] : coeffs) {
    if (d.size() != m) throw std::invalid_argument("multi-index arity mismatch");
    const unsigned deg = totalDegree(d);
    if (deg == 0 || deg > order || sgn(c) == 0) continue;
    S.family[d] = c * nu;
  }
  return S;
}

struct OrderStep {
  unsigned order = 0;
  bool rhsIsCocycle = true;
  bool rhsZero = true;
  std::size_t rhsSupport = 0;  // nonzero coordinates of the right-hand side
};

struct ExtensionResult {
  bool extended = false;
  std::optional<unsigned> obstructedAt;
  DenseVector obstruction;  // right-hand side coordinates when obstructed
  StarProduct star;
  std::vector<OrderStep> steps;
};

/// One-parameter extension of μ1 to order N. At order j the new cochain
/// solves δμ_j = ω_j with
///   ω_j(a,b,c) = Σ_{i=1}^{j−1} [μ_i(μ_{j−i}(a,b),c) − μ_i(a,μ_{j−i}(b,c))],
/// which is the associativity equation at t^j. The solution keeps the free
/// coordinates at zero; `order` chooses which coordinates are free.
inline ExtensionResult extendOrderByOrder(AlgebraPtr A, const HochschildCochain& mu1,
                                          unsigned targetOrder,
                                          ColumnOrder complement = ColumnOrder::natural) {
  if (!isCocycle(*A, mu1)) throw PreconditionViolation("μ1 is not a 2-cocycle");
  ExtensionResult out;
  out.star = StarProduct(A, {"t"}, targetOrder);
  std::vector<HochschildCochain> mu(targetOrder + 1, HochschildCochain(2, A->dim()));
  mu[1] = mu1;
  if (targetOrder >= 1 && !mu1.isZero()) out.star.family[{1}] = mu1;
  if (targetOrder >= 2) {
    CochainComplex C(*A, 3);
    const RatMatrix d2 = C.differential(2);
    const RatMatrix d3 = C.differential(3);
    const auto& triples = C.tuples(3);
    for (unsigned j = 2; j <= targetOrder; ++j) {
      HochschildCochain omega(3, A->dim());
      for (const auto& T : triples) {
        Element v = A->zero();
        for (unsigned i = 1; i < j; ++i) {
          if (mu[i].isZero() || mu[j - i].isZero()) continue;
          const Element l = evaluate2(*A, mu[i], evaluate(*A, mu[j - i], {T[0], T[1]}),
                                      A->basisVector(T[2]));
          const Element r = evaluate2(*A, mu[i], A->basisVector(T[0]),
                                      evaluate(*A, mu[j - i], {T[1], T[2]}));
          for (std::size_t p = 0; p < v.size(); ++p) v[p] += l[p] - r[p];
        }
        omega.set(T, std::move(v));
      }
      auto x = C.coordinates(omega);
      if (!x) throw std::logic_error("obstruction cochain left its vertex slots");
      OrderStep step;
      step.order = j;
      for (const auto& c : *x) step.rhsSupport += sgn(c) != 0;
      step.rhsZero = step.rhsSupport == 0;
      step.rhsIsCocycle = d3.apply(*x) == DenseVector(d3.rows());
      auto s = solve(d2, *x, complement);
      out.steps.push_back(step);
      if (!s) {
        out.obstructedAt = j;
        out.obstruction = *x;
        return out;
      }
      mu[j] = C.cochain(2, s->x);
      if (!mu[j].isZero()) out.star.family[{j}] = mu[j];
    }
  }
  out.extended = true;
  return out;
}

struct DirectionClass {
  std::size_t parameter = 0;
  bool trivial = true;
  std::optional<HochschildCochain> primitive;
};

struct InfinitesimalClass {
  bool trivial = true;
  std::vector<DirectionClass> directions;
};

/// Tests each first-order term μ_{ε_i} for being a coboundary.
inline InfinitesimalClass infinitesimalClass(const StarProduct& S) {
  InfinitesimalClass out;
  for (std::size_t i = 0; i < S.parameterCount(); ++i) {
    MultiIndex e(S.parameterCount(), 0);
    e[i] = 1;
    DirectionClass dc;
    dc.parameter = i;
    auto it = S.family.find(e);
    if (it != S.family.end() && !it->second.isZero()) {
      auto r = isCoboundary(*S.base, it->second);
      dc.trivial = r.coboundary;
      dc.primitive = r.primitive;
    }
    out.trivial = out.trivial && dc.trivial;
    out.directions.push_back(std::move(dc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// The deformed algebra as a finite-dimensional algebra
// ---------------------------------------------------------------------------

inline std::string monomialLabel(const std::vector<std::string>& vars, const MultiIndex& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (d[i] > 1) s += "^" + std::to_string(d[i]);
  }
  return s;
}

/// A ⊗ Q[u]/(u)^{N+1} with the star product, basis b_i u^d ordered by
/// monomial (graded-lex) and then by base index.
struct DeformedAlgebra {
  FiniteDimAlgebra algebra;
  std::vector<MultiIndex> monomials;
  std::size_t baseDim = 0;
  std::size_t index(std::size_t monomial, std::size_t i) const { return monomial * baseDim + i; }
};

inline DeformedAlgebra deformedAlgebra(const StarProduct& S) {
  const FiniteDimAlgebra& A = *S.base;
  const std::size_t n = A.dim();
  const auto monos = multiIndicesUpTo(S.parameterCount(), S.order);
  std::map<MultiIndex, std::size_t> mpos;
  for (std::size_t i = 0; i < monos.size(); ++i) mpos[monos[i]] = i;
  std::vector<BasisElement> basis;
  for (const auto& d : monos)
    for (std::size_t i = 0; i < n; ++i) {
      BasisElement b = A.basis(i);
      b.path.reset();
      if (totalDegree(d) > 0) b.label += "*" + monomialLabel(S.parameters, d);
      basis.push_back(std::move(b));
    }
  const StarTable T(S);
  FiniteDimAlgebra::Table table(basis.size(), std::vector<SparseVector>(basis.size()));
  for (std::size_t p = 0; p < monos.size(); ++p)
    for (std::size_t q = 0; q < monos.size(); ++q) {
      MultiIndex pq(monos[p].size());
      for (std::size_t v = 0; v < pq.size(); ++v) pq[v] = monos[p][v] + monos[q][v];
      if (totalDegree(pq) > S.order) continue;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          std::vector<Entry> raw;
          for (const auto& [l, poly] : T.at(i, j))
            for (const auto& [f, c] : poly.terms()) {
              MultiIndex g(pq.size());
              for (std::size_t v = 0; v < g.size(); ++v) g[v] = pq[v] + f[v];
              if (totalDegree(g) > S.order) continue;
              raw.push_back({mpos.at(g) * n + l, c});
            }
          table[p * n + i][q * n + j] = sparse::normalize(std::move(raw));
        }
    }
  return {FiniteDimAlgebra(A.vertexLabels(), std::move(basis), std::move(table)), monos, n};
}

/// A candidate isomorphism of deformations: images of the base basis and of
/// the parameters in a finite-dimensional target.
struct DeformationMap {
  std::vector<Element> baseImages;
  std::vector<Element> parameterImages;
};

struct DeformationMapReport {
  bool homomorphism = false;
  bool unital = false;
  bool parametersCentral = false;
  bool bijective = false;
  bool identityModM = false;
  std::size_t rank = 0;
  std::size_t sourceDim = 0;
  std::size_t targetDim = 0;
  std::optional<std::pair<std::string, std::string>> witness;  // failing pair
  bool ok() const {
    return homomorphism && unital && parametersCentral && bijective && identityModM;
  }
};

/// Checks that F(b_i u^d) = F(b_i) Π τ_j^{d_j} is a unital algebra
/// isomorphism from the deformed algebra onto `target`, and that composing
/// with `reduction` (target -> base, killing the parameters) gives the
/// identity.
inline DeformationMapReport verifyDeformationMap(const DeformationMap& F, const StarProduct& S,
                                                 AlgebraPtr target,
                                                 const std::optional<AlgebraMap>& reduction) {
  const FiniteDimAlgebra& T = *target;
  auto D = std::make_shared<const FiniteDimAlgebra>(deformedAlgebra(S).algebra);
  const auto monos = multiIndicesUpTo(S.parameterCount(), S.order);
  const std::size_t n = S.base->dim();
  std::vector<Element> images;
  for (const auto& d : monos) {
    Element mono = T.unit();
    for (std::size_t v = 0; v < d.size(); ++v)
      for (unsigned e = 0; e < d[v]; ++e) mono = T.multiply(mono, F.parameterImages.at(v));
    for (std::size_t i = 0; i < n; ++i) images.push_back(T.multiply(F.baseImages.at(i), mono));
  }
  const AlgebraMap map(D, target, std::move(images));
  DeformationMapReport r;
  r.sourceDim = D->dim();
  r.targetDim = T.dim();
  if (auto w = map.homomorphismWitness()) {
    r.witness = std::make_pair(D->basis(w->first).label, D->basis(w->second).label);
  } else {
    r.homomorphism = true;
  }
  r.unital = map.isUnital();
  r.parametersCentral = true;
  for (const auto& tau : F.parameterImages)
    for (std::size_t j = 0; j < T.dim(); ++j)
      if (T.multiply(tau, j) != T.multiply(j, tau)) r.parametersCentral = false;
  r.rank = map.rank();
  r.bijective = r.rank == D->dim() && D->dim() == T.dim();
  if (reduction) {
    r.identityModM = reduction->isHomomorphism();
    for (std::size_t i = 0; i < n && r.identityModM; ++i)
      r.identityModM = reduction->apply(F.baseImages[i]) == S.base->basisVector(i);
    for (const auto& tau : F.parameterImages)
      r.identityModM = r.identityModM && reduction->apply(tau) == S.base->zero();
  }
  return r;
}

}  // namespace brauerdef
