#pragma once

// Minimal graded projective resolutions of the simple modules over a
// positively graded finite-dimensional algebra (possibly a degree
// truncation), and the linearity test behind Koszulity.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brauerdef/algebra.hpp"
#include "brauerdef/linalg.hpp"
#include "brauerdef/quotient.hpp"

namespace brauerdef {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Generator {
  std::size_t vertex = 0;
  int degree = 0;
  bool operator==(const Generator&) const = default;
};

/// ⊕_g A e_{v_g} ⟨deg_g⟩ as a left module. Basis: pairs (g, b) with
/// source(b) = v_g, of internal degree deg_g + deg(b).
class GradedFreeModule {
 public:
  GradedFreeModule() = default;
  GradedFreeModule(const FiniteDimAlgebra& A, std::vector<Generator> gens) : gens_(std::move(gens)) {
    index_.assign(gens_.size(), std::vector<std::size_t>(A.dim(), npos));
    for (std::size_t g = 0; g < gens_.size(); ++g)
      for (std::size_t b = 0; b < A.dim(); ++b)
        if (A.basis(b).source == gens_[g].vertex) {
          index_[g][b] = pairs_.size();
          pairs_.push_back({g, b});
          degree_.push_back(gens_[g].degree + A.basis(b).degree);
          target_.push_back(A.basis(b).target);
        }
  }

  const std::vector<Generator>& generators() const { return gens_; }
  std::size_t rank() const { return gens_.size(); }
  std::size_t dim() const { return pairs_.size(); }
  const std::pair<std::size_t, std::size_t>& pair(std::size_t i) const { return pairs_[i]; }
  int degree(std::size_t i) const { return degree_[i]; }
  std::size_t vertex(std::size_t i) const { return target_[i]; }
  std::size_t indexOf(std::size_t g, std::size_t b) const { return index_[g][b]; }

  /// Basis indices of the (degree d, vertex v) block e_v F_d.
  std::vector<std::size_t> block(int d, std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim(); ++i)
      if (degree_[i] == d && target_[i] == v) out.push_back(i);
    return out;
  }
  std::size_t graded(int d) const {
    std::size_t n = 0;
    for (auto x : degree_) n += x == d;
    return n;
  }

  /// Left multiplication by the basis element a.
  SparseVector leftMultiply(const FiniteDimAlgebra& A, std::size_t a, const SparseVector& x) const {
    std::vector<Entry> raw;
    for (const auto& e : x) {
      const auto [g, b] = pairs_[e.index];
      for (const auto& p : A.product(a, b)) raw.push_back({index_[g][p.index], e.value * p.value});
    }
    return sparse::normalize(std::move(raw));
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<Generator> gens_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<int> degree_;
  std::vector<std::size_t> target_;
  std::vector<std::vector<std::size_t>> index_;
};

/// A degree-0 map F -> G fixed by the images of the generators of F.
struct GradedMap {
  std::vector<SparseVector> generatorImages;  // in the basis of G

  SparseVector apply(const FiniteDimAlgebra& A, const GradedFreeModule& F, const GradedFreeModule& G,
                     std::size_t i) const {
    const auto [g, b] = F.pair(i);
    return G.leftMultiply(A, b, generatorImages[g]);
  }
};

struct ResolutionStep {
  GradedFreeModule module;  // F_j
  GradedMap map;            // F_j -> F_{j-1}; empty for j = 0
};

struct Resolution {
  std::size_t vertex = 0;
  std::size_t maxHomDegree = 0;
  int internalBudget = 0;
  std::vector<ResolutionStep> steps;
  // degreeTable[j][d] = number of generators of F_j in internal degree d
  std::vector<std::map<int, std::size_t>> degreeTable;

  bool linear() const { return !firstNonLinear(); }
  std::optional<std::pair<std::size_t, int>> firstNonLinear() const {
    for (std::size_t j = 0; j < degreeTable.size(); ++j)
      for (const auto& [d, n] : degreeTable[j])
        if (n > 0 && d != static_cast<int>(j)) return std::make_pair(j, d);
    return std::nullopt;
  }
};

namespace detail {

inline void requirePositiveGrading(const FiniteDimAlgebra& A) {
  for (auto r : A.radicalBasis())
    if (A.basis(r).degree < 1) throw std::invalid_argument("resolutions need a positive grading");
}

/// Kernel of the (d, v) block of a map, as vectors in F.
inline std::vector<SparseVector> blockKernel(const FiniteDimAlgebra& A, const GradedFreeModule& F,
                                             const GradedFreeModule* G, const GradedMap* f, int d,
                                             std::size_t v) {
  const auto cols = F.block(d, v);
  std::vector<SparseVector> out;
  if (cols.empty()) return out;
  if (!G) {  // augmentation F_0 -> simple: the kernel is the radical part
    for (auto c : cols)
      if (!A.isIdempotentIndex(F.pair(c).second)) out.push_back({{c, 1}});
    return out;
  }
  const auto rows = G->block(d, v);
  std::map<std::size_t, std::size_t> rowPos;
  for (std::size_t i = 0; i < rows.size(); ++i) rowPos[rows[i]] = i;
  RatMatrix M(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& e : f->apply(A, F, *G, cols[j])) M.set(rowPos.at(e.index), j, e.value);
  for (const auto& z : nullspace(M)) {
    std::vector<Entry> raw;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (sgn(z[j]) != 0) raw.push_back({cols[j], z[j]});
    out.push_back(sparse::normalize(std::move(raw)));
  }
  return out;
}

}  // namespace detail

/// Minimal generators of ker(F -> G) in internal degrees <= budget. The
/// generators in degree d at vertex v complement (A_+ K)_d inside e_v K_d.
inline std::pair<std::vector<Generator>, std::vector<SparseVector>> syzygyGenerators(
    const FiniteDimAlgebra& A, const GradedFreeModule& F, const GradedFreeModule* G,
    const GradedMap* f, int budget) {
  std::vector<Generator> gens;
  std::vector<SparseVector> images;
  int lo = budget + 1;
  for (std::size_t i = 0; i < F.dim(); ++i) lo = std::min(lo, F.degree(i));
  std::map<std::pair<int, std::size_t>, std::vector<SparseVector>> kernel;
  for (int d = lo; d <= budget; ++d)
    for (std::size_t v = 0; v < A.vertexCount(); ++v) {
      auto K = detail::blockKernel(A, F, G, f, d, v);
      RowEchelon decomposable(F.dim());
      for (auto r : A.radicalBasis()) {
        const auto& b = A.basis(r);
        if (b.target != v) continue;
        auto it = kernel.find({d - b.degree, b.source});
        if (it == kernel.end()) continue;
        for (const auto& w : it->second) decomposable.insert(F.leftMultiply(A, r, w));
      }
      for (const auto& w : K)
        if (decomposable.insert(w)) {
          gens.push_back({v, d});
          images.push_back(w);
        }
      kernel[{d, v}] = std::move(K);
    }
  return {gens, images};
}

/// Minimal resolution F_p -> ... -> F_0 -> S_vertex, exact in internal
/// degrees <= internalBudget.
inline Resolution minimalResolution(const FiniteDimAlgebra& A, std::size_t vertex,
                                    std::size_t maxHomDegree, int internalBudget) {
  detail::requirePositiveGrading(A);
  if (auto t = A.truncationDegree(); t && internalBudget > *t)
    throw BudgetExceeded("internal degree " + std::to_string(internalBudget) +
                         " exceeds the truncation at " + std::to_string(*t));
  Resolution R;
  R.vertex = vertex;
  R.maxHomDegree = maxHomDegree;
  R.internalBudget = internalBudget;
  R.steps.push_back({GradedFreeModule(A, {{vertex, 0}}), {}});
  for (std::size_t j = 1; j <= maxHomDegree; ++j) {
    const auto& prev = R.steps.back();
    const GradedFreeModule* G = j == 1 ? nullptr : &R.steps[j - 2].module;
    auto [gens, images] = syzygyGenerators(A, prev.module, G, j == 1 ? nullptr : &prev.map,
                                           internalBudget);
    R.steps.push_back({GradedFreeModule(A, std::move(gens)), GradedMap{std::move(images)}});
  }
  for (const auto& s : R.steps) {
    std::map<int, std::size_t> row;
    for (const auto& g : s.module.generators()) ++row[g.degree];
    R.degreeTable.push_back(std::move(row));
  }
  return R;
}

/// Every generator image lies in the radical of the previous term.
inline bool isMinimal(const FiniteDimAlgebra& A, const Resolution& R) {
  for (std::size_t j = 1; j < R.steps.size(); ++j)
    for (const auto& img : R.steps[j].map.generatorImages)
      for (const auto& e : img)
        if (A.isIdempotentIndex(R.steps[j - 1].module.pair(e.index).second)) return false;
  return true;
}

/// Consecutive maps compose to zero and the first map lands in the radical.
inline bool isComplex(const FiniteDimAlgebra& A, const Resolution& R) {
  for (std::size_t j = 2; j < R.steps.size(); ++j) {
    const auto& F = R.steps[j].module;
    const auto& G = R.steps[j - 1].module;
    const auto& H = R.steps[j - 2].module;
    for (std::size_t g = 0; g < F.rank(); ++g) {
      std::map<std::size_t, Rational> acc;
      for (const auto& e : R.steps[j].map.generatorImages[g])
        for (const auto& h : R.steps[j - 1].map.apply(A, G, H, e.index)) acc[h.index] += e.value * h.value;
      for (const auto& [i, c] : acc)
        if (sgn(c) != 0) return false;
    }
  }
  return true;
}

/// Σ_j (−1)^j dim (F_j)_d = dim (S_v)_d for d <= p, where the truncated
/// tail cannot contribute.
inline bool eulerCharacteristicHolds(const Resolution& R) {
  for (int d = 0; d <= static_cast<int>(R.maxHomDegree) && d <= R.internalBudget; ++d) {
    long sum = 0;
    for (std::size_t j = 0; j < R.steps.size(); ++j)
      sum += (j % 2 == 0 ? 1 : -1) * static_cast<long>(R.steps[j].module.graded(d));
    if (sum != (d == 0 ? 1 : 0)) return false;
  }
  return true;
}

struct SimpleVerdict {
  std::size_t vertex = 0;
  bool linear = false;
  bool minimal = false;
  bool complex = false;
  bool euler = false;
  std::optional<std::pair<std::size_t, int>> firstNonLinear;
  std::vector<std::map<int, std::size_t>> degreeTable;
};

struct KoszulCertificate {
  std::string grading;
  std::size_t maxHomDegree = 0;
  int internalBudget = 0;
  std::vector<SimpleVerdict> simples;
  bool linear() const {
    for (const auto& s : simples)
      if (!s.linear) return false;
    return !simples.empty();
  }
  bool consistent() const {
    for (const auto& s : simples)
      if (!s.minimal || !s.complex || !s.euler) return false;
    return true;
  }
};

inline KoszulCertificate koszulityCertificate(const FiniteDimAlgebra& A, std::size_t maxHomDegree,
                                              int internalBudget, std::string grading = {}) {
  KoszulCertificate c{std::move(grading), maxHomDegree, internalBudget, {}};
  for (std::size_t v = 0; v < A.vertexCount(); ++v) {
    const auto R = minimalResolution(A, v, maxHomDegree, internalBudget);
    c.simples.push_back({v, R.linear(), isMinimal(A, R), isComplex(A, R), eulerCharacteristicHolds(R),
                         R.firstNonLinear(), R.degreeTable});
  }
  return c;
}

/// The presentation is truncated at the internal budget; the budget must
/// exceed maxHomDegree times the largest arrow degree.
inline KoszulCertificate koszulityCertificate(const QuiverPresentation& p, std::size_t maxHomDegree,
                                              int internalBudget, std::string grading = {}) {
  const int need = static_cast<int>(maxHomDegree) * static_cast<int>(p.quiver().maxArrowDegree());
  if (internalBudget <= need)
    throw BudgetExceeded("internal budget " + std::to_string(internalBudget) + " must exceed " +
                         std::to_string(need));
  const auto A = boundedQuotient(p, static_cast<unsigned>(internalBudget), BoundPolicy::allowTruncation);
  return koszulityCertificate(A.algebra, maxHomDegree, internalBudget, std::move(grading));
}

}  // namespace brauerdef
