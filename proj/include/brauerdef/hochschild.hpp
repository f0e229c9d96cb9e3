#pragma once

// Hochschild cochains and complexes.
//
// The reduced complex works relative to the span E of the vertex
// idempotents: C^n consists of E-bimodule maps r^{⊗_E n} -> A, where r is
// the span of the non-idempotent basis elements. A basis of C^n is given
// by pairs (composable radical tuple, basis element in the matching
// e_u A e_v slot). The unreduced bar complex, with C^n = Hom(A^{⊗n}, A),
// is kept as an independent oracle for small algebras.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brauerdef/algebra.hpp"
#include "brauerdef/linalg.hpp"

namespace brauerdef {

using Tuple = std::vector<std::size_t>;

/// Multilinear map given on basis tuples. Tuples absent from `values` map
/// to zero, and so does any tuple with an idempotent entry (normalized
/// cochains).
struct HochschildCochain {
  std::size_t degree = 2;
  std::size_t dim = 0;  // dimension of the algebra the values live in
  std::map<Tuple, Element> values;

  HochschildCochain() = default;
  HochschildCochain(std::size_t n, std::size_t algebraDim) : degree(n), dim(algebraDim) {}

  void set(Tuple t, Element v) {
    if (t.size() != degree) throw std::invalid_argument("cochain arity mismatch");
    bool zero = true;
    for (const auto& c : v) zero = zero && sgn(c) == 0;
    if (zero)
      values.erase(t);
    else
      values[std::move(t)] = std::move(v);
  }
  bool isZero() const { return values.empty(); }

  friend HochschildCochain operator*(const Rational& s, HochschildCochain c) {
    if (sgn(s) == 0) return HochschildCochain(c.degree, c.dim);
    for (auto& [t, v] : c.values)
      for (auto& x : v) x *= s;
    return c;
  }
  friend HochschildCochain operator+(HochschildCochain a, const HochschildCochain& b) {
    for (const auto& [t, v] : b.values) {
      Element sum = a.values.count(t) ? a.values[t] : Element(a.dim);
      for (std::size_t i = 0; i < v.size(); ++i) sum[i] += v[i];
      a.set(t, std::move(sum));
    }
    return a;
  }
  friend bool operator==(const HochschildCochain& a, const HochschildCochain& b) {
    return a.degree == b.degree && a.values == b.values;
  }
};

/// f on a basis tuple.
inline Element evaluate(const FiniteDimAlgebra& A, const HochschildCochain& f, const Tuple& t) {
  for (auto i : t)
    if (A.isIdempotentIndex(i)) return A.zero();
  auto it = f.values.find(t);
  return it == f.values.end() ? A.zero() : it->second;
}

/// f(x, y) for a 2-cochain, by bilinearity.
inline Element evaluate2(const FiniteDimAlgebra& A, const HochschildCochain& f, const Element& x,
                         const Element& y) {
  Element out = A.zero();
  for (const auto& [t, v] : f.values) {
    const Rational c = x[t[0]] * y[t[1]];
    if (sgn(c) == 0) continue;
    for (std::size_t i = 0; i < v.size(); ++i) out[i] += c * v[i];
  }
  return out;
}

/// Values lie in the idempotent slot e_target(first) A e_source(last) and
/// tuples are composable.
inline bool isVertexConsistent(const FiniteDimAlgebra& A, const HochschildCochain& f) {
  for (const auto& [t, v] : f.values) {
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
      if (A.basis(t[i]).source != A.basis(t[i + 1]).target) return false;
    const std::size_t u = A.basis(t.front()).target, w = A.basis(t.back()).source;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sgn(v[i]) != 0 && (A.basis(i).target != u || A.basis(i).source != w)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Complexes
// ---------------------------------------------------------------------------

enum class ComplexKind { reduced, unreduced };

class CochainComplex {
 public:
  CochainComplex(const FiniteDimAlgebra& A, std::size_t maxDegree,
                 ComplexKind kind = ComplexKind::reduced)
      : A_(A), kind_(kind), maxDegree_(maxDegree) {
    letters_ = kind == ComplexKind::reduced ? A.radicalBasis() : allBasis();
    slots_.assign(A.vertexCount(), std::vector<std::vector<std::size_t>>(A.vertexCount()));
    slotPos_.assign(A.dim(), 0);
    for (std::size_t i = 0; i < A.dim(); ++i) {
      auto& s = slots_[A.basis(i).target][A.basis(i).source];
      slotPos_[i] = s.size();
      s.push_back(i);
    }
    tuples_.resize(maxDegree + 2);
    index_.resize(maxDegree + 2);
    offsets_.resize(maxDegree + 2);
    dims_.resize(maxDegree + 2);
    // Degree 0: one empty tuple per vertex (reduced) or a single one.
    const std::size_t empties = kind == ComplexKind::reduced ? A.vertexCount() : 1;
    for (std::size_t v = 0; v < empties; ++v) appendTuple(0, {}, v);
    for (auto r : letters_) appendTuple(1, {r}, 0);
    for (std::size_t n = 2; n <= maxDegree + 1; ++n)
      for (const auto& t : tuples_[n - 1])
        for (auto r : letters_) {
          if (kind == ComplexKind::reduced && A.basis(r).target != A.basis(t.back()).source)
            continue;
          Tuple nt = t;
          nt.push_back(r);
          appendTuple(n, std::move(nt), 0);
        }
  }

  const FiniteDimAlgebra& algebra() const { return A_; }
  ComplexKind kind() const { return kind_; }
  std::size_t maxDegree() const { return maxDegree_; }
  std::size_t dimension(std::size_t n) const { return dims_.at(n); }
  const std::vector<Tuple>& tuples(std::size_t n) const { return tuples_.at(n); }

  /// Basis elements allowed as values on tuple t of C^n.
  const std::vector<std::size_t>& slot(std::size_t n, std::size_t t) const {
    if (kind_ == ComplexKind::unreduced) return allBasisRef();
    const auto [u, v] = endpoints(n, t);
    return slots_[u][v];
  }

  /// Matrix of d: C^n -> C^{n+1}.
  RatMatrix differential(std::size_t n) const {
    if (n > maxDegree_) throw std::out_of_range("differential beyond the built degree");
    std::vector<std::vector<Entry>> rows(dims_[n + 1]);
    auto add = [&](std::size_t row, std::size_t col, const Rational& c) {
      if (sgn(c) != 0) rows[row].push_back({col, c});
    };
    for (std::size_t t = 0; t < tuples_[n + 1].size(); ++t) {
      const Tuple& T = tuples_[n + 1][t];
      const std::size_t last = T.size() - 1;
      // r_1 · f(r_2, ..., r_{n+1})
      {
        const std::size_t t2 = lookup(n, Tuple(T.begin() + 1, T.end()), A_.basis(T.front()).source);
        for (auto b : slot(n, t2))
          for (const auto& e : A_.product(T.front(), b))
            add(row(n + 1, t, e.index), col(n, t2, b), e.value);
      }
      // (−1)^i f(..., r_i r_{i+1}, ...)
      for (std::size_t i = 0; i + 1 < T.size(); ++i) {
        const Rational sign = (i % 2 == 0) ? -1 : 1;
        for (const auto& e : A_.product(T[i], T[i + 1])) {
          if (kind_ == ComplexKind::reduced && A_.isIdempotentIndex(e.index))
            throw std::logic_error("radical basis does not span an ideal");
          Tuple M(T.begin(), T.begin() + static_cast<long>(i));
          M.push_back(e.index);
          M.insert(M.end(), T.begin() + static_cast<long>(i) + 2, T.end());
          const std::size_t tm = lookup(n, M, 0);
          for (auto b : slot(n, tm)) add(row(n + 1, t, b), col(n, tm, b), sign * e.value);
        }
      }
      // (−1)^{n+1} f(r_1, ..., r_n) · r_{n+1}
      {
        const Rational sign = (n % 2 == 0) ? -1 : 1;
        const std::size_t t1 =
            lookup(n, Tuple(T.begin(), T.begin() + static_cast<long>(last)), A_.basis(T[last]).target);
        for (auto b : slot(n, t1))
          for (const auto& e : A_.product(b, T[last]))
            add(row(n + 1, t, e.index), col(n, t1, b), sign * e.value);
      }
    }
    RatMatrix d(dims_[n + 1], dims_[n]);
    for (std::size_t r = 0; r < rows.size(); ++r) d.setRow(r, sparse::normalize(std::move(rows[r])));
    return d;
  }

  /// Coordinates of a cochain; std::nullopt when it is not an element of
  /// this complex (value outside its slot, or a non-composable tuple).
  std::optional<DenseVector> coordinates(const HochschildCochain& f) const {
    const std::size_t n = f.degree;
    DenseVector x(dims_.at(n));
    for (const auto& [T, v] : f.values) {
      bool hasIdem = false;
      for (auto i : T) hasIdem = hasIdem || A_.isIdempotentIndex(i);
      if (hasIdem && kind_ == ComplexKind::reduced) continue;  // normalized: ignored
      auto it = index_[n].find(T);
      if (it == index_[n].end()) return std::nullopt;
      const auto& s = slot(n, it->second);
      for (std::size_t b = 0; b < v.size(); ++b) {
        if (sgn(v[b]) == 0) continue;
        if (std::find(s.begin(), s.end(), b) == s.end()) return std::nullopt;
        x[col(n, it->second, b)] = v[b];
      }
    }
    return x;
  }

  HochschildCochain cochain(std::size_t n, const DenseVector& x) const {
    HochschildCochain f(n, A_.dim());
    for (std::size_t t = 0; t < tuples_[n].size(); ++t) {
      Element v = A_.zero();
      bool any = false;
      for (auto b : slot(n, t)) {
        const Rational& c = x.at(col(n, t, b));
        if (sgn(c) != 0) {
          v[b] = c;
          any = true;
        }
      }
      if (any && n > 0) f.set(tuples_[n][t], std::move(v));
    }
    return f;
  }

  /// Degree-0 cochains are elements of A (the sum over vertices).
  Element zeroCochainValue(const DenseVector& x) const {
    Element v = A_.zero();
    for (std::size_t t = 0; t < tuples_[0].size(); ++t)
      for (auto b : slot(0, t)) v[b] += x.at(col(0, t, b));
    return v;
  }

 private:
  std::vector<std::size_t> allBasis() const {
    std::vector<std::size_t> v(A_.dim());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
    return v;
  }
  const std::vector<std::size_t>& allBasisRef() const { return letters_; }

  std::pair<std::size_t, std::size_t> endpoints(std::size_t n, std::size_t t) const {
    if (n == 0) return {emptyVertex_.at(t), emptyVertex_.at(t)};
    const Tuple& T = tuples_[n][t];
    return {A_.basis(T.front()).target, A_.basis(T.back()).source};
  }

  void appendTuple(std::size_t n, Tuple t, std::size_t vertex) {
    const std::size_t id = tuples_[n].size();
    if (n == 0) emptyVertex_.push_back(vertex);
    else index_[n][t] = id;
    tuples_[n].push_back(std::move(t));
    offsets_[n].push_back(dims_[n]);
    dims_[n] += slot(n, id).size();
  }

  std::size_t lookup(std::size_t n, const Tuple& t, std::size_t vertex) const {
    if (n == 0) return kind_ == ComplexKind::reduced ? vertex : 0;
    return index_[n].at(t);
  }

  std::size_t col(std::size_t n, std::size_t t, std::size_t b) const {
    return offsets_[n][t] + (kind_ == ComplexKind::reduced ? slotPos_[b] : b);
  }
  std::size_t row(std::size_t n, std::size_t t, std::size_t b) const { return col(n, t, b); }

  const FiniteDimAlgebra& A_;
  ComplexKind kind_;
  std::size_t maxDegree_;
  std::vector<std::size_t> letters_;
  std::vector<std::vector<std::vector<std::size_t>>> slots_;
  std::vector<std::size_t> slotPos_;
  std::vector<std::vector<Tuple>> tuples_;
  std::vector<std::map<Tuple, std::size_t>> index_;
  std::vector<std::vector<std::size_t>> offsets_;
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> emptyVertex_;
};

struct HochschildDimensions {
  std::vector<std::size_t> hh;         // dim HH^0 .. HH^maxDegree
  std::vector<std::size_t> cochains;   // dim C^0 .. C^{maxDegree+1}
  std::vector<std::size_t> ranks;      // rank d_0 .. d_maxDegree
};

/// dim HH^i = dim C^i − rank d_i − rank d_{i−1}, for i = 0..maxDegree.
inline HochschildDimensions hochschildDimensions(const FiniteDimAlgebra& A, std::size_t maxDegree,
                                                 ComplexKind kind = ComplexKind::reduced) {
  CochainComplex C(A, maxDegree, kind);
  HochschildDimensions out;
  for (std::size_t n = 0; n <= maxDegree + 1; ++n) out.cochains.push_back(C.dimension(n));
  for (std::size_t n = 0; n <= maxDegree; ++n) out.ranks.push_back(rank(C.differential(n)));
  for (std::size_t i = 0; i <= maxDegree; ++i)
    out.hh.push_back(out.cochains[i] - out.ranks[i] - (i ? out.ranks[i - 1] : 0));
  return out;
}

inline std::size_t hhDim(const FiniteDimAlgebra& A, std::size_t i,
                         ComplexKind kind = ComplexKind::reduced) {
  return hochschildDimensions(A, i, kind).hh.at(i);
}

// ---------------------------------------------------------------------------
// Cocycle identities
// ---------------------------------------------------------------------------

/// δf(a,b,c) = a f(b,c) − f(ab,c) + f(a,bc) − f(a,b) c on basis elements.
inline Element cocycleDefect(const FiniteDimAlgebra& A, const HochschildCochain& f, std::size_t a,
                             std::size_t b, std::size_t c) {
  const Element fa_b = evaluate(A, f, {a, b});
  const Element fb_c = evaluate(A, f, {b, c});
  Element out = A.multiply(a, fb_c);
  const Element ab = sparse::toDense(A.product(a, b), A.dim());
  const Element bc = sparse::toDense(A.product(b, c), A.dim());
  const Element t2 = evaluate2(A, f, ab, A.basisVector(c));
  const Element t3 = evaluate2(A, f, A.basisVector(a), bc);
  const Element t4 = A.multiply(fa_b, c);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += -t2[i] + t3[i] - t4[i];
  return out;
}

struct TripleWitness {
  std::size_t a, b, c;
};

inline std::optional<TripleWitness> cocycleWitness(const FiniteDimAlgebra& A,
                                                   const HochschildCochain& f) {
  const Element zero = A.zero();
  for (std::size_t a = 0; a < A.dim(); ++a)
    for (std::size_t b = 0; b < A.dim(); ++b)
      for (std::size_t c = 0; c < A.dim(); ++c)
        if (cocycleDefect(A, f, a, b, c) != zero) return TripleWitness{a, b, c};
  return std::nullopt;
}
inline bool isCocycle(const FiniteDimAlgebra& A, const HochschildCochain& f) {
  return !cocycleWitness(A, f);
}

/// First triple with f(f(a,b),c) != f(a,f(b,c)).
inline std::optional<TripleWitness> associativityWitness(const FiniteDimAlgebra& A,
                                                         const HochschildCochain& f) {
  for (std::size_t a = 0; a < A.dim(); ++a)
    for (std::size_t b = 0; b < A.dim(); ++b)
      for (std::size_t c = 0; c < A.dim(); ++c) {
        const Element l = evaluate2(A, f, evaluate(A, f, {a, b}), A.basisVector(c));
        const Element r = evaluate2(A, f, A.basisVector(a), evaluate(A, f, {b, c}));
        if (l != r) return TripleWitness{a, b, c};
      }
  return std::nullopt;
}
inline bool isAssociative(const FiniteDimAlgebra& A, const HochschildCochain& f) {
  return !associativityWitness(A, f);
}

struct CoboundaryResult {
  bool coboundary = false;
  std::optional<HochschildCochain> primitive;  // g with δg = c
  std::string reason;
};

/// Solves δg = c over reduced 1-cochains.
inline CoboundaryResult isCoboundary(const FiniteDimAlgebra& A, const HochschildCochain& c) {
  if (c.degree != 2) throw std::invalid_argument("coboundary test is for 2-cochains");
  CochainComplex C(A, 1);
  auto x = C.coordinates(c);
  if (!x) return {false, std::nullopt, "not a reduced cochain"};
  auto s = solve(C.differential(1), *x);
  if (!s) return {false, std::nullopt, "inconsistent"};
  return {true, C.cochain(1, s->x), ""};
}

/// The coboundary δg of a 1-cochain, as a 2-cochain on all basis pairs.
inline HochschildCochain coboundaryOf(const FiniteDimAlgebra& A, const HochschildCochain& g) {
  HochschildCochain out(2, A.dim());
  for (std::size_t a = 0; a < A.dim(); ++a)
    for (std::size_t b = 0; b < A.dim(); ++b) {
      if (A.isIdempotentIndex(a) || A.isIdempotentIndex(b)) continue;
      const Element ga = evaluate(A, g, {a}), gb = evaluate(A, g, {b});
      Element v = A.multiply(a, gb);
      const Element mid = [&] {
        Element m = A.zero();
        for (const auto& e : A.product(a, b)) {
          const Element ge = evaluate(A, g, {e.index});
          for (std::size_t i = 0; i < m.size(); ++i) m[i] += e.value * ge[i];
        }
        return m;
      }();
      const Element right = A.multiply(ga, b);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += -mid[i] + right[i];
      out.set({a, b}, std::move(v));
    }
  return out;
}

struct GradedDegree {
  bool homogeneous = true;
  int degree = 0;  // 0 by convention for the zero cochain
  std::optional<std::pair<Tuple, std::size_t>> witness;  // tuple and offending value index
};

/// The d with deg f(x,y) = deg x + deg y + d on every nonzero value.
inline GradedDegree gradedCocycleDegree(const FiniteDimAlgebra& A, const HochschildCochain& f) {
  GradedDegree out;
  bool seen = false;
  for (const auto& [t, v] : f.values) {
    int in = 0;
    for (auto i : t) in += A.basis(i).degree;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(v[i]) == 0) continue;
      const int d = A.basis(i).degree - in;
      if (!seen) {
        out.degree = d;
        seen = true;
      } else if (d != out.degree) {
        out.homogeneous = false;
        out.witness = std::make_pair(t, i);
        return out;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// The cocycle μ on A^k
// ---------------------------------------------------------------------------

/// μ on A^k (k >= 2), on the basis {e_j, a_i, b_i, a_ib_i, b1a1}:
///   a_s ⊗ b_s ↦ (−1)^{s+1} e_{s+1},      b1 ⊗ a1 ↦ e1,
///   a_sb_s ⊗ a_sb_s ↦ (−1)^s a_sb_s,      b1a1 ⊗ b1a1 ↦ −b1a1,
///   a_s ⊗ a_{s−1}b_{s−1} ↦ (−1)^{s−1} a_s, a_{s−1}b_{s−1} ⊗ b_s ↦ (−1)^{s−1} b_s.
/// The b1a1 ⊗ b1a1 entry is needed for the cocycle identity at
/// (b1, a1, b1a1); `withLoopEntry = false` drops it.
inline HochschildCochain muCocycle(const FiniteDimAlgebra& A, int k, bool withLoopEntry = true) {
  if (k < 2) throw std::invalid_argument("μ is defined for k >= 2");
  HochschildCochain mu(2, A.dim());
  auto sgnOf = [](int e) { return Rational(e % 2 == 0 ? 1 : -1); };
  auto put = [&](const std::string& x, const std::string& y, const Rational& c,
                 const std::string& value) {
    Element v = A.zero();
    v[A.at(value)] = c;
    mu.set({A.at(x), A.at(y)}, std::move(v));
  };
  for (int s = 1; s < k; ++s) {
    const std::string a = "a" + std::to_string(s), b = "b" + std::to_string(s);
    put(a, b, sgnOf(s + 1), "e" + std::to_string(s + 1));
    put(a + b, a + b, sgnOf(s), a + b);
    if (s >= 2) {
      const std::string prev = "a" + std::to_string(s - 1) + "b" + std::to_string(s - 1);
      put(a, prev, sgnOf(s - 1), a);
      put(prev, b, sgnOf(s - 1), b);
    }
  }
  put("b1", "a1", 1, "e1");
  if (withLoopEntry) put("b1a1", "b1a1", -1, "b1a1");
  return mu;
}

/// μ1 on A^1 = Q[x]/(x^2): μ1(x, x) = 1.
inline HochschildCochain dualNumbersCocycle(const FiniteDimAlgebra& A1) {
  HochschildCochain mu(2, A1.dim());
  Element v = A1.zero();
  v[A1.at("e1")] = 1;
  mu.set({A1.at("x"), A1.at("x")}, std::move(v));
  return mu;
}

}  // namespace brauerdef
