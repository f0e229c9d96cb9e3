#pragma once

// Graded quotients of path algebras, computed degree by degree with linear
// algebra instead of a noncommutative Groebner engine.
//
// With J the ideal generated by the relations, J_d is spanned by the
// degree-d relations together with a·J_{d-deg a} and J_{d-deg a}·a over all
// arrows a. Monomial relations are handled combinatorially: paths that
// contain one as a subword are never generated.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brauerdef/algebra.hpp"
#include "brauerdef/linalg.hpp"
#include "brauerdef/quiver.hpp"

namespace brauerdef {

class BoundTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GradedQuotient {
 public:
  /// Computes every component up to maxDegree. When some arrow has degree
  /// zero the components are taken with respect to path length instead,
  /// which requires length-homogeneous relations.
  GradedQuotient(const QuiverPresentation& p, unsigned maxDegree)
      : pres_(p), maxDegree_(maxDegree), byLength_(!p.quiver().allDegreesPositive()) {
    p.validate();
    if (byLength_ ? !p.isLengthHomogeneous() : !p.isHomogeneous())
      throw std::invalid_argument("graded quotient needs homogeneous relations");
    const Quiver& q = pres_.quiver();
    for (const auto& r : pres_.relations()) {
      if (r.front().path.isTrivial())
        throw std::invalid_argument("relations must not involve trivial paths");
      if (r.size() == 1) monomials_.push_back(r.front().path.arrows);
    }
    survivors_.resize(maxDegree + 1);
    index_.resize(maxDegree + 1);
    ideal_.reserve(maxDegree + 1);
    for (std::size_t v = 0; v < q.vertexCount(); ++v) survivors_[0].push_back(Path::trivial(v));
    for (unsigned d = 0; d <= maxDegree; ++d) {
      if (d > 0) extendSurvivors(d);
      std::stable_sort(survivors_[d].begin(), survivors_[d].end(), PathOrder{&q});
      for (std::size_t i = 0; i < survivors_[d].size(); ++i) index_[d][key(survivors_[d][i])] = i;
      buildIdeal(d);
    }
  }

  const QuiverPresentation& presentation() const { return pres_; }
  unsigned maxDegree() const { return maxDegree_; }
  bool gradedByLength() const { return byLength_; }

  unsigned degreeOf(const Path& p) const {
    return byLength_ ? static_cast<unsigned>(p.length()) : p.degree(pres_.quiver());
  }
  unsigned arrowDegree(std::size_t a) const {
    return byLength_ ? 1u : pres_.quiver().arrow(a).degree;
  }

  /// Paths of degree d avoiding every monomial relation.
  const std::vector<Path>& survivors(unsigned d) const { return survivors_.at(d); }

  /// Basis of the degree-d component: surviving paths that are not leading
  /// terms (leading = largest in path order) of elements of J_d.
  std::vector<Path> standardPaths(unsigned d) const {
    std::vector<Path> out;
    const auto& s = survivors_.at(d);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (!ideal_[d].isPivot(column(d, i))) out.push_back(s[i]);
    return out;
  }

  std::size_t componentDimension(unsigned d) const {
    return survivors_.at(d).size() - ideal_.at(d).rank();
  }

  /// Normal form of a path as (coefficient, standard path) pairs; empty
  /// when the path lies in the ideal.
  std::vector<PathTerm> normalForm(const Path& p) const {
    const unsigned d = degreeOf(p);
    if (d > maxDegree_) throw std::out_of_range("path beyond the computed degree");
    auto it = index_[d].find(key(p));
    if (it == index_[d].end()) return {};
    SparseVector v{{column(d, it->second), Rational(1)}};
    v = ideal_[d].reduce(std::move(v));
    std::vector<PathTerm> out;
    for (const auto& e : v) out.push_back({e.value, survivors_[d][column(d, e.index)]});
    return out;
  }

 private:
  using Key = std::pair<std::size_t, std::vector<std::size_t>>;
  static Key key(const Path& p) { return {p.source, p.arrows}; }

  // Columns run in reverse path order so the echelon pivots on the largest
  // path of each ideal element.
  std::size_t column(unsigned d, std::size_t i) const { return survivors_[d].size() - 1 - i; }

  void extendSurvivors(unsigned d) {
    const Quiver& q = pres_.quiver();
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      const unsigned da = arrowDegree(a);
      if (da == 0 || da > d) continue;
      for (const auto& p : survivors_[d - da]) {
        if (q.arrow(a).source != p.target) continue;
        Path w{p.source, q.arrow(a).target, {a}};
        w.arrows.insert(w.arrows.end(), p.arrows.begin(), p.arrows.end());
        if (!hasMonomialPrefix(w)) survivors_[d].push_back(std::move(w));
      }
    }
  }

  bool hasMonomialPrefix(const Path& w) const {
    for (const auto& m : monomials_)
      if (m.size() <= w.arrows.size() && std::equal(m.begin(), m.end(), w.arrows.begin()))
        return true;
    return false;
  }

  std::optional<std::size_t> columnOf(unsigned d, const Path& p) const {
    auto it = index_[d].find(key(p));
    if (it == index_[d].end()) return std::nullopt;
    return column(d, it->second);
  }

  void buildIdeal(unsigned d) {
    const Quiver& q = pres_.quiver();
    RowEchelon ech(survivors_[d].size());
    for (const auto& r : pres_.relations()) {
      if (r.size() == 1 || degreeOf(r.front().path) != d) continue;
      std::vector<Entry> raw;
      for (const auto& t : r)
        if (auto c = columnOf(d, t.path)) raw.push_back({*c, t.coeff});
      ech.insert(sparse::normalize(std::move(raw)));
    }
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      const unsigned da = arrowDegree(a);
      if (da == 0 || da > d) continue;
      const unsigned lower = d - da;
      const Path arrow = Path::ofArrow(q, a);
      for (const auto& row : ideal_[lower].rows()) {
        std::vector<Entry> left, right;
        for (const auto& e : row) {
          const Path& p = survivors_[lower][column(lower, e.index)];
          if (auto w = compose(arrow, p))
            if (auto c = columnOf(d, *w)) left.push_back({*c, e.value});
          if (auto w = compose(p, arrow))
            if (auto c = columnOf(d, *w)) right.push_back({*c, e.value});
        }
        ech.insert(sparse::normalize(std::move(left)));
        ech.insert(sparse::normalize(std::move(right)));
      }
    }
    ideal_.push_back(std::move(ech));
  }

  QuiverPresentation pres_;
  unsigned maxDegree_;
  bool byLength_;
  std::vector<std::vector<std::size_t>> monomials_;
  std::vector<std::vector<Path>> survivors_;
  std::vector<std::map<Key, std::size_t>> index_;
  std::vector<RowEchelon> ideal_;
};

enum class BoundPolicy { requireComplete, allowTruncation };

struct BoundedQuotientResult {
  FiniteDimAlgebra algebra;
  bool complete = false;  // false: a graded truncation of an algebra that continues past the bound
};

/// Quotient algebra of paths of degree <= bound. Products landing above the
/// bound are dropped. The result is complete when every component in the
/// last max-arrow-degree window below the bound vanishes, since then every
/// longer path factors through one of those components.
inline BoundedQuotientResult boundedQuotient(const QuiverPresentation& p, unsigned bound,
                                             BoundPolicy policy = BoundPolicy::requireComplete) {
  GradedQuotient gq(p, bound);
  const Quiver& q = p.quiver();
  unsigned window = 0;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) window = std::max(window, gq.arrowDegree(a));
  bool complete = true;
  for (unsigned d = bound + 1 - std::min(window, bound + 1); d <= bound; ++d)
    if (gq.componentDimension(d) != 0) complete = false;
  if (q.arrows().empty()) complete = true;
  if (!complete && policy == BoundPolicy::requireComplete)
    throw BoundTooSmall("bound too small: degree " + std::to_string(bound) +
                        " paths do not all reduce to zero");

  std::vector<BasisElement> basis;
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> where;
  std::vector<unsigned> cdeg;
  for (unsigned d = 0; d <= bound; ++d)
    for (const auto& path : gq.standardPaths(d)) {
      where[{path.source, path.arrows}] = basis.size();
      basis.push_back({pathLabel(q, path), path.source, path.target,
                       static_cast<int>(path.degree(q)), path});
      cdeg.push_back(d);
    }
  const std::size_t n = basis.size();
  FiniteDimAlgebra::Table table(n, std::vector<SparseVector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (cdeg[i] + cdeg[j] > bound) continue;
      auto w = compose(*basis[i].path, *basis[j].path);
      if (!w) continue;
      std::vector<Entry> raw;
      for (const auto& t : gq.normalForm(*w)) raw.push_back({where.at({t.path.source, t.path.arrows}), t.coeff});
      table[i][j] = sparse::normalize(std::move(raw));
    }
  BoundedQuotientResult out{FiniteDimAlgebra(q.vertices(), std::move(basis), std::move(table), q),
                            complete};
  if (!complete) out.algebra.setTruncationDegree(static_cast<int>(bound));
  return out;
}

struct GradedComponent {
  unsigned degree = 0;
  std::vector<Path> basis;
  std::vector<std::string> labels;
  std::size_t dimension() const { return basis.size(); }
};

/// Degree-d piece of the untruncated graded quotient.
inline GradedComponent gradedComponent(const QuiverPresentation& p, unsigned d) {
  if (!p.quiver().allDegreesPositive())
    throw std::invalid_argument("graded components need positive arrow degrees");
  if (!p.isHomogeneous()) throw std::invalid_argument("inhomogeneous relations");
  GradedQuotient gq(p, d);
  GradedComponent c{d, gq.standardPaths(d), {}};
  for (const auto& path : c.basis) c.labels.push_back(pathLabel(p.quiver(), path));
  return c;
}

/// dim of the components 0..maxDegree.
inline std::vector<std::size_t> gradedDimensions(const QuiverPresentation& p, unsigned maxDegree) {
  GradedQuotient gq(p, maxDegree);
  std::vector<std::size_t> out;
  for (unsigned d = 0; d <= maxDegree; ++d) out.push_back(gq.componentDimension(d));
  return out;
}

}  // namespace brauerdef
