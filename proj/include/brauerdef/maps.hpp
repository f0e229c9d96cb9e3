#pragma once

// Linear maps between finite-dimensional algebras, specified on a basis,
// with homomorphism checks.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brauerdef/algebra.hpp"
#include "brauerdef/linalg.hpp"

namespace brauerdef {

class AlgebraMap {
 public:
  AlgebraMap(AlgebraPtr source, AlgebraPtr target, std::vector<Element> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_->dim()) throw std::invalid_argument("one image per basis element");
    for (const auto& im : images_)
      if (im.size() != target_->dim()) throw std::invalid_argument("image outside the target");
  }

  /// Extends an assignment on vertices and arrows multiplicatively along
  /// the normal-form paths of the source basis.
  static AlgebraMap fromGeneratorImages(AlgebraPtr source, AlgebraPtr target,
                                        const std::map<std::string, Element>& arrowImages,
                                        const std::vector<std::size_t>& vertexImage) {
    if (!source->quiver()) throw std::invalid_argument("source needs a quiver");
    const Quiver& q = *source->quiver();
    std::vector<Element> images;
    for (std::size_t i = 0; i < source->dim(); ++i) {
      const auto& b = source->basis(i);
      if (!b.path) throw std::invalid_argument("source basis element without a path");
      if (b.path->isTrivial()) {
        images.push_back(target->basisVector(target->idempotent(vertexImage.at(b.source))));
        continue;
      }
      Element img;
      for (std::size_t pos = 0; pos < b.path->arrows.size(); ++pos) {
        const std::string& name = q.arrow(b.path->arrows[pos]).name;
        auto it = arrowImages.find(name);
        if (it == arrowImages.end()) throw std::invalid_argument("no image for arrow " + name);
        img = pos == 0 ? it->second : target->multiply(img, it->second);
      }
      images.push_back(std::move(img));
    }
    return AlgebraMap(std::move(source), std::move(target), std::move(images));
  }

  const FiniteDimAlgebra& source() const { return *source_; }
  const FiniteDimAlgebra& target() const { return *target_; }
  AlgebraPtr sourcePtr() const { return source_; }
  AlgebraPtr targetPtr() const { return target_; }
  const Element& image(std::size_t i) const { return images_.at(i); }
  const std::vector<Element>& images() const { return images_; }

  Element apply(const Element& x) const {
    Element y(target_->dim());
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < y.size(); ++j) y[j] += x[i] * images_[i][j];
    }
    return y;
  }

  /// First basis pair (i, j) with f(b_i b_j) != f(b_i) f(b_j).
  std::optional<std::pair<std::size_t, std::size_t>> homomorphismWitness() const {
    const std::size_t n = source_->dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Element lhs = apply(sparse::toDense(source_->product(i, j), n));
        const Element rhs = target_->multiply(images_[i], images_[j]);
        if (lhs != rhs) return std::make_pair(i, j);
      }
    return std::nullopt;
  }
  bool isHomomorphism() const { return !homomorphismWitness(); }
  bool isUnital() const { return apply(source_->unit()) == target_->unit(); }

  RatMatrix matrix() const {
    RatMatrix m(target_->dim(), source_->dim());
    for (std::size_t j = 0; j < source_->dim(); ++j)
      for (std::size_t i = 0; i < target_->dim(); ++i)
        if (sgn(images_[j][i]) != 0) m.set(i, j, images_[j][i]);
    return m;
  }
  std::size_t rank() const { return brauerdef::rank(matrix()); }
  std::size_t kernelDimension() const { return source_->dim() - rank(); }
  bool isBijective() const { return source_->dim() == target_->dim() && rank() == source_->dim(); }

 private:
  AlgebraPtr source_;
  AlgebraPtr target_;
  std::vector<Element> images_;
};

}  // namespace brauerdef
