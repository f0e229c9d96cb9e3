#pragma once

// Quivers, paths and presentations by relations.
//
// Composition is right-to-left: the path "b1a1" first follows a1 and then
// b1. A Path stores its arrows in product order, so arrows.back() is the
// one applied first.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brauerdef/scalar.hpp"

namespace brauerdef {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
  unsigned degree = 1;
};

class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(std::vector<std::string> vertices) : vertices_(std::move(vertices)) {}

  std::size_t addVertex(std::string label) {
    vertices_.push_back(std::move(label));
    return vertices_.size() - 1;
  }

  std::size_t addArrow(std::string name, std::size_t source, std::size_t target,
                       unsigned degree = 1) {
    if (source >= vertices_.size() || target >= vertices_.size())
      throw std::invalid_argument("arrow " + name + " uses an undeclared vertex");
    if (findArrow(name)) throw std::invalid_argument("duplicate arrow name " + name);
    arrows_.push_back({std::move(name), source, target, degree});
    return arrows_.size() - 1;
  }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t vertexCount() const { return vertices_.size(); }
  const Arrow& arrow(std::size_t i) const { return arrows_.at(i); }

  std::optional<std::size_t> findArrow(const std::string& name) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
      if (arrows_[i].name == name) return i;
    return std::nullopt;
  }
  std::optional<std::size_t> findVertex(const std::string& label) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (vertices_[i] == label) return i;
    return std::nullopt;
  }

  bool allDegreesPositive() const {
    return std::all_of(arrows_.begin(), arrows_.end(),
                       [](const Arrow& a) { return a.degree > 0; });
  }
  unsigned maxArrowDegree() const {
    unsigned m = 0;
    for (const auto& a : arrows_) m = std::max(m, a.degree);
    return m;
  }

  void setDegree(std::size_t arrow, unsigned degree) { arrows_.at(arrow).degree = degree; }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;  // product order

  static Path trivial(std::size_t v) { return {v, v, {}}; }
  static Path ofArrow(const Quiver& q, std::size_t a) {
    return {q.arrow(a).source, q.arrow(a).target, {a}};
  }

  bool isTrivial() const { return arrows.empty(); }
  std::size_t length() const { return arrows.size(); }

  unsigned degree(const Quiver& q) const {
    unsigned d = 0;
    for (auto a : arrows) d += q.arrow(a).degree;
    return d;
  }

  friend bool operator==(const Path&, const Path&) = default;
};

/// p·q, i.e. q first; std::nullopt when q does not end where p starts.
inline std::optional<Path> compose(const Path& p, const Path& q) {
  if (q.target != p.source) return std::nullopt;
  Path r{q.source, p.target, p.arrows};
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

inline bool isComposable(const Quiver& q, const std::vector<std::size_t>& arrows) {
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i)
    if (q.arrow(arrows[i + 1]).target != q.arrow(arrows[i]).source) return false;
  return true;
}

inline std::optional<Path> pathFromArrows(const Quiver& q, std::vector<std::size_t> arrows) {
  if (arrows.empty()) throw std::invalid_argument("trivial paths need a vertex");
  if (!isComposable(q, arrows)) return std::nullopt;
  Path p{q.arrow(arrows.back()).source, q.arrow(arrows.front()).target, std::move(arrows)};
  return p;
}

inline std::string pathLabel(const Quiver& q, const Path& p) {
  if (p.isTrivial()) return "e" + q.vertices()[p.source];
  std::string s;
  for (auto a : p.arrows) s += q.arrow(a).name;
  return s;
}

/// Deterministic order: degree, trivial paths by vertex, then lexicographic
/// in the declared arrow indices read in application order. For the
/// quiver with arrows x1, x2, y1, y2 this puts x2x1 before x1x2 before y1.
struct PathOrder {
  const Quiver* quiver;
  bool operator()(const Path& a, const Path& b) const {
    const unsigned da = a.degree(*quiver), db = b.degree(*quiver);
    if (da != db) return da < db;
    if (a.isTrivial() != b.isTrivial()) return a.isTrivial();
    if (a.isTrivial()) return a.source < b.source;
    return std::lexicographical_compare(a.arrows.rbegin(), a.arrows.rend(), b.arrows.rbegin(),
                                        b.arrows.rend());
  }
};

/// All paths of degree <= maxDegree, in PathOrder.
///
/// Arrows of degree zero would make this infinite whenever they form a
/// cycle, so paths are additionally capped at maxLength arrows.
inline std::vector<Path> enumeratePaths(const Quiver& q, unsigned maxDegree,
                                        std::size_t maxLength = 64) {
  std::vector<Path> out;
  std::vector<Path> frontier;
  for (std::size_t v = 0; v < q.vertexCount(); ++v) frontier.push_back(Path::trivial(v));
  out = frontier;
  for (std::size_t len = 1; len <= maxLength && !frontier.empty(); ++len) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const Arrow& ar = q.arrow(a);
        if (ar.source != p.target) continue;
        if (p.degree(q) + ar.degree > maxDegree) continue;
        Path r{p.source, ar.target, {a}};
        r.arrows.insert(r.arrows.end(), p.arrows.begin(), p.arrows.end());
        next.push_back(std::move(r));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::stable_sort(out.begin(), out.end(), PathOrder{&q});
  return out;
}

// ---------------------------------------------------------------------------
// Presentations
// ---------------------------------------------------------------------------

struct PathTerm {
  Rational coeff;
  Path path;
};

/// A formal linear combination of paths with common endpoints.
using Relation = std::vector<PathTerm>;

class QuiverPresentation {
 public:
  QuiverPresentation() = default;
  explicit QuiverPresentation(Quiver q) : quiver_(std::move(q)) {}

  const Quiver& quiver() const { return quiver_; }
  Quiver& quiver() { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }

  void addRelation(Relation r) {
    validateRelation(r);
    relations_.push_back(std::move(r));
  }

  /// Relation from arrow-name words, e.g. {{1, {"b2","a2"}}, {-1, {"a1","b1"}}}.
  void addRelation(const std::vector<std::pair<Rational, std::vector<std::string>>>& terms) {
    Relation r;
    for (const auto& [c, word] : terms) {
      std::vector<std::size_t> idx;
      for (const auto& name : word) {
        auto a = quiver_.findArrow(name);
        if (!a) throw std::invalid_argument("unknown arrow " + name);
        idx.push_back(*a);
      }
      auto p = pathFromArrows(quiver_, idx);
      if (!p) throw std::invalid_argument("relation term is not a composable path");
      r.push_back({c, *p});
    }
    addRelation(std::move(r));
  }

  void validate() const {
    for (const auto& r : relations_) validateRelation(r);
  }

  bool isMonomial(const Relation& r) const { return r.size() == 1; }

  /// Every relation has all terms of a single degree.
  bool isHomogeneous() const {
    for (const auto& r : relations_)
      for (const auto& t : r)
        if (t.path.degree(quiver_) != r.front().path.degree(quiver_)) return false;
    return true;
  }
  bool isLengthHomogeneous() const {
    for (const auto& r : relations_)
      for (const auto& t : r)
        if (t.path.length() != r.front().path.length()) return false;
    return true;
  }

 private:
  void validateRelation(const Relation& r) const {
    if (r.empty()) throw std::invalid_argument("empty relation");
    for (const auto& t : r) {
      if (!t.path.isTrivial()) {
        if (!isComposable(quiver_, t.path.arrows))
          throw std::invalid_argument("relation contains a non-composable path");
        if (t.path.source != quiver_.arrow(t.path.arrows.back()).source ||
            t.path.target != quiver_.arrow(t.path.arrows.front()).target)
          throw std::invalid_argument("relation path has inconsistent endpoints");
      }
      if (t.path.source != r.front().path.source || t.path.target != r.front().path.target)
        throw std::invalid_argument("relation terms have different endpoints");
    }
  }

  Quiver quiver_;
  std::vector<Relation> relations_;
};

}  // namespace brauerdef
