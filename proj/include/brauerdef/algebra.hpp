#pragma once

// Finite-dimensional algebras given by structure constants on a basis of
// vertex-homogeneous elements (each basis element b satisfies
// b = e_target · b · e_source for a unique pair of vertices).

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brauerdef/linalg.hpp"
#include "brauerdef/quiver.hpp"

namespace brauerdef {

struct BasisElement {
  std::string label;
  std::size_t source = 0;
  std::size_t target = 0;
  int degree = 0;
  std::optional<Path> path;  // normal-form path when the algebra comes from a quiver
};

using Element = DenseVector;

class FiniteDimAlgebra {
 public:
  using Table = std::vector<std::vector<SparseVector>>;

  FiniteDimAlgebra() = default;
  FiniteDimAlgebra(std::vector<std::string> vertexLabels, std::vector<BasisElement> basis,
                   Table table, std::optional<Quiver> quiver = std::nullopt)
      : vertices_(std::move(vertexLabels)),
        basis_(std::move(basis)),
        table_(std::move(table)),
        quiver_(std::move(quiver)) {
    if (table_.size() != basis_.size()) throw std::invalid_argument("structure table size");
    for (const auto& row : table_)
      if (row.size() != basis_.size()) throw std::invalid_argument("structure table size");
    idempotents_.assign(vertices_.size(), npos);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const auto& b = basis_[i];
      if (b.source >= vertices_.size() || b.target >= vertices_.size())
        throw std::invalid_argument("basis element at an unknown vertex");
      if (b.path && b.path->isTrivial()) idempotents_[b.source] = i;
    }
    // Fall back to labels "e<vertex>" for algebras without paths.
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (idempotents_[v] == npos)
        if (auto i = indexOf("e" + vertices_[v])) idempotents_[v] = *i;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (idempotents_[v] == npos)
        throw std::invalid_argument("no idempotent basis element for vertex " + vertices_[v]);
  }

  std::size_t dim() const { return basis_.size(); }
  std::size_t vertexCount() const { return vertices_.size(); }
  const std::vector<std::string>& vertexLabels() const { return vertices_; }
  const BasisElement& basis(std::size_t i) const { return basis_.at(i); }
  const std::vector<BasisElement>& basisElements() const { return basis_; }
  const std::optional<Quiver>& quiver() const { return quiver_; }

  /// Non-empty when the algebra is a truncation: every product of total
  /// degree above this bound was discarded.
  std::optional<int> truncationDegree() const { return truncation_; }
  void setTruncationDegree(std::optional<int> d) { truncation_ = d; }

  std::size_t idempotent(std::size_t vertex) const { return idempotents_.at(vertex); }
  bool isIdempotentIndex(std::size_t i) const {
    return std::find(idempotents_.begin(), idempotents_.end(), i) != idempotents_.end();
  }
  /// Every basis element other than the vertex idempotents.
  std::vector<std::size_t> radicalBasis() const {
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < dim(); ++i)
      if (!isIdempotentIndex(i)) r.push_back(i);
    return r;
  }

  std::optional<std::size_t> indexOf(const std::string& label) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i].label == label) return i;
    return std::nullopt;
  }
  std::size_t at(const std::string& label) const {
    auto i = indexOf(label);
    if (!i) throw std::out_of_range("no basis element " + label);
    return *i;
  }

  const SparseVector& product(std::size_t i, std::size_t j) const { return table_[i][j]; }
  const Table& table() const { return table_; }

  Element zero() const { return Element(dim()); }
  Element basisVector(std::size_t i) const {
    Element e(dim());
    e.at(i) = 1;
    return e;
  }
  Element element(const std::string& label) const { return basisVector(at(label)); }
  Element unit() const {
    Element e(dim());
    for (auto i : idempotents_) e[i] += 1;
    return e;
  }

  Element multiply(const Element& x, const Element& y) const {
    Element z(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (sgn(y[j]) == 0) continue;
        const Rational c = x[i] * y[j];
        for (const auto& e : table_[i][j]) z[e.index] += c * e.value;
      }
    }
    return z;
  }
  Element multiply(std::size_t i, const Element& y) const {
    Element z(dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      if (sgn(y[j]) == 0) continue;
      for (const auto& e : table_[i][j]) z[e.index] += y[j] * e.value;
    }
    return z;
  }
  Element multiply(const Element& x, std::size_t j) const {
    Element z(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (sgn(x[i]) == 0) continue;
      for (const auto& e : table_[i][j]) z[e.index] += x[i] * e.value;
    }
    return z;
  }

  std::string toString(const Element& x) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (sgn(x[i]) == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (x[i] != 1) os << x[i].get_str() << "*";
      os << basis_[i].label;
    }
    return first ? "0" : os.str();
  }

  // -- structural checks ----------------------------------------------------

  /// First basis triple with (b_i b_j) b_l != b_i (b_j b_l).
  std::optional<std::array<std::size_t, 3>> associativityWitness() const {
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) {
        const Element ij = sparse::toDense(table_[i][j], dim());
        for (std::size_t l = 0; l < dim(); ++l) {
          const Element left = multiply(ij, l);
          const Element right = multiply(i, sparse::toDense(table_[j][l], dim()));
          if (left != right) return std::array<std::size_t, 3>{i, j, l};
        }
      }
    return std::nullopt;
  }

  bool unitIsTwoSided() const {
    const Element one = unit();
    for (std::size_t i = 0; i < dim(); ++i) {
      const Element b = basisVector(i);
      if (multiply(one, b) != b || multiply(b, one) != b) return false;
    }
    return true;
  }

  /// First basis pair whose product has a term outside deg(b_i)+deg(b_j).
  std::optional<std::pair<std::size_t, std::size_t>> gradingWitness() const {
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        for (const auto& e : table_[i][j])
          if (basis_[e.index].degree != basis_[i].degree + basis_[j].degree)
            return std::make_pair(i, j);
    return std::nullopt;
  }

  /// Each product of basis elements lies in the expected vertex slot.
  bool isVertexHomogeneous() const {
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) {
        const bool composable = basis_[i].source == basis_[j].target;
        for (const auto& e : table_[i][j]) {
          if (!composable) return false;
          if (basis_[e.index].source != basis_[j].source ||
              basis_[e.index].target != basis_[i].target)
            return false;
        }
      }
    return true;
  }

  /// dim e_target A e_source for every vertex pair.
  std::vector<std::vector<std::size_t>> pieceDimensions() const {
    std::vector<std::vector<std::size_t>> d(vertexCount(), std::vector<std::size_t>(vertexCount()));
    for (const auto& b : basis_) ++d[b.target][b.source];
    return d;
  }

  std::map<int, std::size_t> gradedDimensions() const {
    std::map<int, std::size_t> d;
    for (const auto& b : basis_) ++d[b.degree];
    return d;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::string> vertices_;
  std::vector<BasisElement> basis_;
  Table table_;
  std::optional<Quiver> quiver_;
  std::vector<std::size_t> idempotents_;
  std::optional<int> truncation_;
};

using AlgebraPtr = std::shared_ptr<const FiniteDimAlgebra>;

/// Left multiplication by x as a dim x dim matrix (column j is x·b_j).
inline RatMatrix leftMultiplicationMatrix(const FiniteDimAlgebra& A, const Element& x) {
  RatMatrix m(A.dim(), A.dim());
  for (std::size_t j = 0; j < A.dim(); ++j) {
    const Element col = A.multiply(x, j);
    for (std::size_t i = 0; i < A.dim(); ++i)
      if (sgn(col[i]) != 0) m.set(i, j, col[i]);
  }
  return m;
}

/// The corner algebra e A e for e the sum of the idempotents at `vertices`.
/// Basis elements are those with both endpoints in the chosen set.
inline FiniteDimAlgebra idempotentCut(const FiniteDimAlgebra& A,
                                      const std::vector<std::size_t>& vertices) {
  std::map<std::size_t, std::size_t> vmap;
  std::vector<std::string> labels;
  for (auto v : vertices) {
    if (vmap.count(v)) continue;
    vmap[v] = labels.size();
    labels.push_back(A.vertexLabels().at(v));
  }
  std::vector<std::size_t> keep;
  std::vector<std::size_t> newIndex(A.dim(), static_cast<std::size_t>(-1));
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    const auto& b = A.basis(i);
    if (!vmap.count(b.source) || !vmap.count(b.target)) continue;
    newIndex[i] = keep.size();
    keep.push_back(i);
    BasisElement nb = b;
    nb.source = vmap[b.source];
    nb.target = vmap[b.target];
    nb.path.reset();
    basis.push_back(std::move(nb));
  }
  FiniteDimAlgebra::Table table(keep.size(), std::vector<SparseVector>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) {
      std::vector<Entry> raw;
      for (const auto& e : A.product(keep[i], keep[j])) {
        if (newIndex[e.index] == static_cast<std::size_t>(-1))
          throw std::logic_error("corner algebra is not closed; basis is not vertex-homogeneous");
        raw.push_back({newIndex[e.index], e.value});
      }
      table[i][j] = sparse::normalize(std::move(raw));
    }
  // Paths are dropped, so idempotents are found again by their "e<v>" label.
  for (std::size_t i = 0; i < keep.size(); ++i)
    if (A.isIdempotentIndex(keep[i])) basis[i].label = "e" + labels[basis[i].source];
  return FiniteDimAlgebra(std::move(labels), std::move(basis), std::move(table));
}

struct IdealQuotient {
  FiniteDimAlgebra algebra;
  std::vector<std::size_t> keptBasis;  // indices in the parent algebra
  RowEchelon ideal{0};                 // echelon basis of the ideal, reversed columns
};

/// A / (two-sided ideal generated by `generators`). Basis of the quotient:
/// parent basis elements that are not pivots when eliminating largest
/// indices first, so normal forms use the earliest basis elements.
inline IdealQuotient quotientByIdeal(const FiniteDimAlgebra& A,
                                     const std::vector<Element>& generators) {
  const std::size_t n = A.dim();
  auto col = [n](std::size_t i) { return n - 1 - i; };
  auto toReversed = [&](const Element& x) {
    std::vector<Entry> raw;
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(x[i]) != 0) raw.push_back({col(i), x[i]});
    return sparse::normalize(std::move(raw));
  };
  RowEchelon ideal(n);
  for (const auto& g : generators)
    for (std::size_t i = 0; i < n; ++i) {
      const Element ig = A.multiply(i, g);
      for (std::size_t j = 0; j < n; ++j) ideal.insert(toReversed(A.multiply(ig, j)));
    }
  std::vector<std::size_t> keep;
  std::vector<std::size_t> newIndex(n, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < n; ++i)
    if (!ideal.isPivot(col(i))) {
      newIndex[i] = keep.size();
      keep.push_back(i);
    }
  std::vector<BasisElement> basis;
  for (auto i : keep) basis.push_back(A.basis(i));
  FiniteDimAlgebra::Table table(keep.size(), std::vector<SparseVector>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) {
      std::vector<Entry> raw;
      for (const auto& e : A.product(keep[a], keep[b])) raw.push_back({col(e.index), e.value});
      const SparseVector red = ideal.reduce(sparse::normalize(std::move(raw)));
      std::vector<Entry> out;
      for (const auto& e : red) out.push_back({newIndex[n - 1 - e.index], e.value});
      table[a][b] = sparse::normalize(std::move(out));
    }
  IdealQuotient q{FiniteDimAlgebra(A.vertexLabels(), std::move(basis), std::move(table), A.quiver()),
                  std::move(keep), std::move(ideal)};
  q.algebra.setTruncationDegree(A.truncationDegree());
  return q;
}

/// Same algebra with basis degrees recomputed from paths under new arrow
/// degrees (arrow name -> degree). Arrows omitted keep their degree.
inline FiniteDimAlgebra regrade(const FiniteDimAlgebra& A,
                                const std::map<std::string, int>& arrowDegrees) {
  if (!A.quiver()) throw std::invalid_argument("regrading needs an algebra built from a quiver");
  const Quiver& q = *A.quiver();
  std::vector<BasisElement> basis = A.basisElements();
  for (auto& b : basis) {
    if (!b.path) throw std::invalid_argument("regrading needs a path for every basis element");
    int d = 0;
    for (auto a : b.path->arrows) {
      auto it = arrowDegrees.find(q.arrow(a).name);
      d += it == arrowDegrees.end() ? static_cast<int>(q.arrow(a).degree) : it->second;
    }
    b.degree = d;
  }
  Quiver nq = q;
  for (std::size_t a = 0; a < nq.arrows().size(); ++a) {
    auto it = arrowDegrees.find(nq.arrow(a).name);
    if (it != arrowDegrees.end()) nq.setDegree(a, static_cast<unsigned>(std::max(0, it->second)));
  }
  FiniteDimAlgebra out(A.vertexLabels(), std::move(basis), A.table(), std::move(nq));
  out.setTruncationDegree(A.truncationDegree());
  return out;
}

}  // namespace brauerdef
