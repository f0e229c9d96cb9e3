#pragma once

// The algebra families A^k, Ã^k and B̂^k, the central element t(k), the maps
// φ and Ψ, and structural checks (Hom dimensions, symmetric forms, center,
// projective profiles).
//
// Conventions. A^k has vertices 1..k with a_i: i -> i+1 and b_i: i+1 -> i.
// In B̂^k the pair of arrows between s and s+1 carries the letter x for odd
// s and y for even s; its right arrow s -> s+1 is named <letter>s and its
// left arrow s+1 -> s is named <letter>(s+1). Vertex 1 carries the loop y1
// and vertex k the loop yk (k even) or xk (k odd).

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brauerdef/algebra.hpp"
#include "brauerdef/linalg.hpp"
#include "brauerdef/maps.hpp"
#include "brauerdef/quiver.hpp"
#include "brauerdef/quotient.hpp"

namespace brauerdef {

enum class AGrading { allArrowsDegreeOne, aOneBZero };
enum class BhatGrading { nonLoopOneLoopTwo, allArrowsDegreeOne, rightOneLeftZero };

inline std::string idx(int i) { return std::to_string(i); }

// ---------------------------------------------------------------------------
// A^k and Ã^k
// ---------------------------------------------------------------------------

inline QuiverPresentation presentationA(int k) {
  if (k < 1) throw std::invalid_argument("A^k needs k >= 1");
  Quiver q;
  for (int v = 1; v <= k; ++v) q.addVertex(idx(v));
  if (k == 1) {
    q.addArrow("x", 0, 0);
    QuiverPresentation p(std::move(q));
    p.addRelation({{1, {"x", "x"}}});
    return p;
  }
  for (int i = 1; i < k; ++i) {
    q.addArrow("a" + idx(i), i - 1, i);
    q.addArrow("b" + idx(i), i, i - 1);
  }
  QuiverPresentation p(std::move(q));
  if (k == 2) {
    p.addRelation({{1, {"a1", "b1", "a1"}}});
    p.addRelation({{1, {"b1", "a1", "b1"}}});
    return p;
  }
  for (int i = 1; i + 1 < k; ++i) {
    p.addRelation({{1, {"a" + idx(i + 1), "a" + idx(i)}}});
    p.addRelation({{1, {"b" + idx(i), "b" + idx(i + 1)}}});
  }
  for (int i = 2; i < k; ++i)
    p.addRelation({{1, {"b" + idx(i), "a" + idx(i)}}, {-1, {"a" + idx(i - 1), "b" + idx(i - 1)}}});
  return p;
}

inline std::map<std::string, int> aGradingDegrees(int k, AGrading g) {
  std::map<std::string, int> d;
  if (k == 1) {
    d["x"] = 1;
    return d;
  }
  for (int i = 1; i < k; ++i) {
    d["a" + idx(i)] = 1;
    d["b" + idx(i)] = g == AGrading::allArrowsDegreeOne ? 1 : 0;
  }
  return d;
}

inline FiniteDimAlgebra makeA(int k, AGrading g = AGrading::allArrowsDegreeOne) {
  FiniteDimAlgebra A = boundedQuotient(presentationA(k), 3).algebra;
  if (g == AGrading::allArrowsDegreeOne) return A;
  return regrade(A, aGradingDegrees(k, g));
}

inline QuiverPresentation presentationAtilde(int k) {
  if (k < 1) throw std::invalid_argument("Ã^k needs k >= 1");
  Quiver q;
  for (int v = 0; v <= k; ++v) q.addVertex(idx(v));
  for (int i = 0; i < k; ++i) {
    q.addArrow("a" + idx(i), i, i + 1);
    q.addArrow("b" + idx(i), i + 1, i);
  }
  QuiverPresentation p(std::move(q));
  for (int i = 0; i + 1 < k; ++i) {
    p.addRelation({{1, {"a" + idx(i + 1), "a" + idx(i)}}});
    p.addRelation({{1, {"b" + idx(i), "b" + idx(i + 1)}}});
  }
  for (int i = 1; i < k; ++i)
    p.addRelation({{1, {"b" + idx(i), "a" + idx(i)}}, {-1, {"a" + idx(i - 1), "b" + idx(i - 1)}}});
  p.addRelation({{1, {"b0", "a0"}}});
  return p;
}

inline FiniteDimAlgebra makeAtilde(int k) {
  return boundedQuotient(presentationAtilde(k), 4).algebra;
}

/// The corner e Ã^k e for e = e_1 + ... + e_k.
inline FiniteDimAlgebra atildeCorner(const FiniteDimAlgebra& At, int k) {
  std::vector<std::size_t> vs;
  for (int v = 1; v <= k; ++v) vs.push_back(static_cast<std::size_t>(v));
  return idempotentCut(At, vs);
}

/// A^k -> e Ã^k e sending generators to the arrows of the same name (and x
/// to a0b0 when k = 1).
inline AlgebraMap atildeCornerMap(int k) {
  auto A = std::make_shared<const FiniteDimAlgebra>(makeA(k));
  auto C = std::make_shared<const FiniteDimAlgebra>(atildeCorner(makeAtilde(k), k));
  std::map<std::string, Element> img;
  if (k == 1) {
    img["x"] = C->element("a0b0");
  } else {
    for (int i = 1; i < k; ++i) {
      img["a" + idx(i)] = C->element("a" + idx(i));
      img["b" + idx(i)] = C->element("b" + idx(i));
    }
  }
  std::vector<std::size_t> vimg;
  for (int v = 0; v < k; ++v) vimg.push_back(static_cast<std::size_t>(v));
  return AlgebraMap::fromGeneratorImages(A, C, img, vimg);
}

// ---------------------------------------------------------------------------
// B̂^k
// ---------------------------------------------------------------------------

inline char bhatLetter(int s) { return s % 2 == 1 ? 'x' : 'y'; }
inline std::string bhatRight(int s) { return std::string(1, bhatLetter(s)) + idx(s); }
inline std::string bhatLeft(int s) { return std::string(1, bhatLetter(s)) + idx(s + 1); }
inline char bhatEndLetter(int k) { return k % 2 == 0 ? 'y' : 'x'; }
inline std::string bhatEndLoop(int k) { return std::string(1, bhatEndLetter(k)) + idx(k); }

inline QuiverPresentation makeBhat(int k, BhatGrading g = BhatGrading::nonLoopOneLoopTwo) {
  if (k < 2) throw std::invalid_argument("B̂^k is defined for k >= 2");
  const unsigned loopDeg = g == BhatGrading::nonLoopOneLoopTwo ? 2 : 1;
  const unsigned rightDeg = 1;
  const unsigned leftDeg = g == BhatGrading::rightOneLeftZero ? 0 : 1;
  Quiver q;
  for (int v = 1; v <= k; ++v) q.addVertex(idx(v));
  std::vector<char> letter;
  for (int s = 1; s < k; ++s) {
    q.addArrow(bhatRight(s), s - 1, s, rightDeg);
    letter.push_back(bhatLetter(s));
    q.addArrow(bhatLeft(s), s, s - 1, leftDeg);
    letter.push_back(bhatLetter(s));
  }
  q.addArrow("y1", 0, 0, loopDeg);
  letter.push_back('y');
  q.addArrow(bhatEndLoop(k), k - 1, k - 1, loopDeg);
  letter.push_back(bhatEndLetter(k));
  QuiverPresentation p(q);
  // x_i y_j = 0 = y_j x_i whenever composable.
  for (std::size_t a = 0; a < q.arrows().size(); ++a)
    for (std::size_t b = 0; b < q.arrows().size(); ++b)
      if (letter[a] != letter[b] && q.arrow(a).source == q.arrow(b).target)
        p.addRelation({{1, {q.arrow(a).name, q.arrow(b).name}}});
  return p;
}

/// Arrow names of the shortest x-loop and y-loop at vertex i (1-based), in
/// product order.
inline std::pair<std::vector<std::string>, std::vector<std::string>> bhatLoops(int k, int i) {
  std::map<char, std::vector<std::string>> loop;
  if (i == 1) loop['y'] = {"y1"};
  if (i == k) loop[bhatEndLetter(k)] = {bhatEndLoop(k)};
  if (i < k) loop[bhatLetter(i)] = {bhatLeft(i), bhatRight(i)};
  if (i > 1) loop[bhatLetter(i - 1)] = {bhatRight(i - 1), bhatLeft(i - 1)};
  return {loop.at('x'), loop.at('y')};
}

inline Element wordElement(const FiniteDimAlgebra& B, const std::vector<std::string>& word) {
  Element e = B.element(word.front());
  for (std::size_t i = 1; i < word.size(); ++i) e = B.multiply(e, B.at(word[i]));
  return e;
}

/// t(k) = Σ_i (x(i) − y(i)) inside a degree-truncated B̂^k.
inline Element centralT(const FiniteDimAlgebra& B, int k) {
  Element t = B.zero();
  for (int i = 1; i <= k; ++i) {
    auto [x, y] = bhatLoops(k, i);
    const Element xe = wordElement(B, x), ye = wordElement(B, y);
    for (std::size_t j = 0; j < t.size(); ++j) t[j] += xe[j] - ye[j];
  }
  return t;
}

struct BhatTruncation {
  FiniteDimAlgebra algebra;
  int bound = 0;
};

inline BhatTruncation bhatTruncation(int k, int bound,
                                     BhatGrading g = BhatGrading::nonLoopOneLoopTwo) {
  return {boundedQuotient(makeBhat(k, g), static_cast<unsigned>(bound), BoundPolicy::allowTruncation)
              .algebra,
          bound};
}

/// First arrow whose commutator with t(k) is nonzero in the truncation.
inline std::optional<std::string> centralityWitness(const FiniteDimAlgebra& B, int k) {
  const Element t = centralT(B, k);
  const Quiver& q = *B.quiver();
  for (const auto& a : q.arrows()) {
    const std::size_t i = B.at(a.name);
    if (B.multiply(t, i) != B.multiply(i, t)) return a.name;
  }
  for (std::size_t v = 0; v < B.vertexCount(); ++v) {
    const std::size_t e = B.idempotent(v);
    if (B.multiply(t, e) != B.multiply(e, t)) return B.basis(e).label;
  }
  return std::nullopt;
}

/// Arrow images of φ: B̂^k -> A^k.
inline std::map<std::string, Element> phiArrowImages(int k, const FiniteDimAlgebra& A) {
  std::map<std::string, Element> img;
  for (int s = 1; s < k; ++s) {
    img[bhatRight(s)] = A.element("a" + idx(s));
    img[bhatLeft(s)] = A.element("b" + idx(s));
  }
  img["y1"] = A.element("b1a1");
  img[bhatEndLoop(k)] = A.element("a" + idx(k - 1) + "b" + idx(k - 1));
  return img;
}

inline std::vector<std::size_t> identityVertexMap(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

/// φ from a truncation of B̂^k (any grading) onto A^k.
inline AlgebraMap phiMap(int k, AlgebraPtr bhat) {
  auto A = std::make_shared<const FiniteDimAlgebra>(makeA(k));
  return AlgebraMap::fromGeneratorImages(bhat, A, phiArrowImages(k, *A),
                                         identityVertexMap(bhat->vertexCount()));
}

/// B̂^k/(t(k)) degree by degree, from a truncation at `bound`. Valid in
/// degrees <= bound.
inline std::vector<std::size_t> bhatModTDimensions(const FiniteDimAlgebra& B, int k, int bound) {
  auto q = quotientByIdeal(B, {centralT(B, k)});
  std::vector<std::size_t> d(static_cast<std::size_t>(bound) + 1);
  for (const auto& b : q.algebra.basisElements())
    if (b.degree <= bound) ++d[static_cast<std::size_t>(b.degree)];
  return d;
}

/// Ψ images of the basis of A^k in a B̂^k quotient T, given t(k)'s image
/// tau = t(k) in T. Resolved table:
///   e_i -> e_i, a_s -> right_s, b_s -> left_s, b1a1 -> y1,
///   a_s b_s (loop at s+1) -> the loop at s+1 in the letter not used by pair s.
inline std::vector<Element> psiBaseImages(int k, const FiniteDimAlgebra& A,
                                          const FiniteDimAlgebra& T) {
  std::vector<Element> images;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    const std::string& label = A.basis(i).label;
    if (A.isIdempotentIndex(i)) {
      images.push_back(T.basisVector(T.idempotent(A.basis(i).source)));
      continue;
    }
    std::optional<Element> img;
    for (int s = 1; s < k && !img; ++s) {
      const std::string a = "a" + idx(s), b = "b" + idx(s);
      if (label == a) img = T.element(bhatRight(s));
      else if (label == b) img = T.element(bhatLeft(s));
      else if (label == a + b) {
        if (s + 1 <= k - 1)
          img = wordElement(T, {bhatLeft(s + 1), bhatRight(s + 1)});
        else
          img = T.element(bhatEndLoop(k));
      }
    }
    if (label == "b1a1") img = T.element("y1");
    if (!img) throw std::logic_error("no Ψ image for basis element " + label);
    images.push_back(*img);
  }
  return images;
}

// ---------------------------------------------------------------------------
// Structural checks
// ---------------------------------------------------------------------------

/// dim Hom(A e_i, A e_j) = dim e_i A e_j.
inline std::vector<std::vector<std::size_t>> homDimensions(const FiniteDimAlgebra& A) {
  return A.pieceDimensions();
}

struct SymmetricFormResult {
  bool symmetric = false;
  Element tau;                          // the functional, when symmetric
  std::optional<Element> certificate;   // nonzero x with x·A inside [A,A]
  std::size_t symmetricFunctionals = 0; // dim of {τ : τ(ab) = τ(ba)}
};

/// Searches for a nondegenerate trace functional. A pseudo-random
/// combination of the symmetric functionals is nondegenerate with high
/// probability when one exists; a negative answer is backed by a
/// certificate whenever the degeneracy is witnessed by a single element.
inline SymmetricFormResult symmetricForm(const FiniteDimAlgebra& A, std::uint64_t seed = 1) {
  const std::size_t n = A.dim();
  // Rows: one condition τ(b_i b_j − b_j b_i) = 0 per pair i < j.
  std::vector<SparseVector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      SparseVector c = sparse::axpy(A.product(i, j), -1, A.product(j, i));
      if (!c.empty()) rows.push_back(std::move(c));
    }
  RatMatrix M(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r) M.setRow(r, rows[r]);
  const auto space = nullspace(M);
  SymmetricFormResult out;
  out.symmetricFunctionals = space.size();
  auto gram = [&](const Element& tau) {
    RatMatrix G(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (const auto& e : A.product(i, j)) s += e.value * tau[e.index];
        if (sgn(s) != 0) G.set(i, j, s);
      }
    return G;
  };
  std::mt19937_64 rng(seed);
  std::vector<Element> candidates = space;
  for (int attempt = 0; attempt < 24 && !space.empty(); ++attempt) {
    Element tau(n);
    for (const auto& v : space) {
      const long c = static_cast<long>(rng() % 2001) - 1000;
      for (std::size_t i = 0; i < n; ++i) tau[i] += c * v[i];
    }
    candidates.push_back(std::move(tau));
  }
  for (const auto& tau : candidates)
    if (isInvertible(gram(tau))) {
      out.symmetric = true;
      out.tau = tau;
      return out;
    }
  // Certificate: x ≠ 0 with x·b_j in [A,A] for every j.
  RowEchelon comm(n);
  for (const auto& r : rows) comm.insert(r);
  RatMatrix X(n * n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVector red = comm.reduce(A.product(x, j));
      for (const auto& e : red) X.add(j * n + e.index, x, e.value);
    }
  const auto ker = nullspace(X);
  if (!ker.empty()) out.certificate = ker.front();
  return out;
}

inline std::vector<Element> centerBasis(const FiniteDimAlgebra& A) {
  const std::size_t n = A.dim();
  RatMatrix M(n * n, n);
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVector c = sparse::axpy(A.product(z, j), -1, A.product(j, z));
      for (const auto& e : c) M.add(j * n + e.index, z, e.value);
    }
  return nullspace(M);
}

struct ProjectiveProfile {
  std::size_t vertex = 0;
  std::size_t length = 0;
  std::size_t loewyLength = 0;
  std::vector<std::size_t> socle;  // multiplicity of each simple in soc(P)
  std::size_t socleDimension() const {
    std::size_t s = 0;
    for (auto m : socle) s += m;
    return s;
  }
};

/// For P_i = A e_i: composition length (= dim for a basic algebra), Loewy
/// length from the radical filtration, and the socle (annihilator of the
/// radical) by vertex.
inline std::vector<ProjectiveProfile> projectiveProfile(const FiniteDimAlgebra& A) {
  const std::size_t n = A.dim();
  const auto rad = A.radicalBasis();
  std::vector<ProjectiveProfile> out;
  for (std::size_t v = 0; v < A.vertexCount(); ++v) {
    ProjectiveProfile pr;
    pr.vertex = v;
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < n; ++i)
      if (A.basis(i).source == v) cols.push_back(i);
    pr.length = cols.size();
    // rad^m P = rad · rad^{m-1} P, starting from P itself.
    RowEchelon layer(n);
    for (auto i : cols) layer.insert(sparse::fromDense(A.basisVector(i)));
    std::size_t m = 0;
    while (layer.rank() > 0) {
      ++m;
      RowEchelon next(n);
      for (const auto& row : layer.rows()) {
        const Element x = sparse::toDense(row, n);
        for (auto r : rad) next.insert(sparse::fromDense(A.multiply(r, x)));
      }
      layer = std::move(next);
      if (m > n + 1) throw std::logic_error("radical is not nilpotent");
    }
    pr.loewyLength = m;
    // Socle: x in P with r·x = 0 for every radical basis element r. It is
    // an E-submodule, so it splits by target vertex.
    pr.socle.assign(A.vertexCount(), 0);
    for (std::size_t t = 0; t < A.vertexCount(); ++t) {
      std::vector<std::size_t> sub;
      for (auto c : cols)
        if (A.basis(c).target == t) sub.push_back(c);
      if (sub.empty()) continue;
      RatMatrix S(rad.size() * n, sub.size());
      for (std::size_t c = 0; c < sub.size(); ++c)
        for (std::size_t r = 0; r < rad.size(); ++r)
          for (const auto& e : A.product(rad[r], sub[c])) S.add(r * n + e.index, c, e.value);
      pr.socle[t] = sub.size() - rank(S);
    }
    out.push_back(std::move(pr));
  }
  return out;
}

}  // namespace brauerdef
