#pragma once

// Truncated weight-lattice modules over sl_n: the modules N(a), the
// modules FV built from commuting nilpotent operators X_1..X_n, relation
// checks on the truncation, recovery of the X_i from the actions of h_1
// and the sl_2 Casimir, and the extension of an sl_{n-1} module to sl_n.
//
// Generators are indexed 0-based: e_i = e_{i+1,i+2}, f_i = e_{i+2,i+1},
// h_i = e_{i+1,i+1} - e_{i+2,i+2} for i = 0..n-2.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brauerdef/linalg.hpp"
#include "brauerdef/scalar.hpp"

namespace brauerdef {

using LatticePoint = std::vector<int>;

inline LatticePoint unitVector(std::size_t n, std::size_t i) {
  LatticePoint e(n, 0);
  e[i] = 1;
  return e;
}

inline LatticePoint operator+(LatticePoint a, const LatticePoint& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline LatticePoint operator-(LatticePoint a, const LatticePoint& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline std::string pointToString(const LatticePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

/// All b in Z^n with Σb = 0 and max|b_i| <= R, in lexicographic order.
class LatticeSupport {
 public:
  LatticeSupport() = default;
  LatticeSupport(std::size_t n, int radius) : n_(n), radius_(radius) {
    if (n < 2) throw std::invalid_argument("sl_n needs n >= 2");
    LatticePoint p(n, -radius);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int sum) {
      if (i + 1 == n) {
        const int last = -sum;
        if (last < -radius || last > radius) return;
        p[i] = last;
        index_[p] = points_.size();
        points_.push_back(p);
        return;
      }
      for (int v = -radius; v <= radius; ++v) {
        p[i] = v;
        rec(i + 1, sum + v);
      }
    };
    rec(0, 0);
  }

  std::size_t n() const { return n_; }
  int radius() const { return radius_; }
  const std::vector<LatticePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(const LatticePoint& p) const { return index_.count(p) != 0; }
  std::optional<std::size_t> indexOf(const LatticePoint& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  /// Every b ± (ε_i − ε_j) lies in the support.
  bool isInterior(const LatticePoint& p) const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j && !contains(p + unitVector(n_, i) - unitVector(n_, j))) return false;
    return true;
  }

 private:
  std::size_t n_ = 0;
  int radius_ = 0;
  std::vector<LatticePoint> points_;
  std::map<LatticePoint, std::size_t> index_;
};

enum class GenKind { raise, lower, cartan };

struct SlGenerator {
  GenKind kind;
  std::size_t i;
};

inline std::string generatorName(const SlGenerator& g) {
  const std::string a = std::to_string(g.i + 1), b = std::to_string(g.i + 2);
  switch (g.kind) {
    case GenKind::raise: return "e" + a + b;
    case GenKind::lower: return "e" + b + a;
    case GenKind::cartan: return "h" + a;
  }
  return {};
}

/// A module with one fiber V_b per support point. blocks[g][p] is the
/// matrix V_b -> V_{b+shift(g)}, absent when the target leaves the support.
class LatticeModule {
 public:
  LatticeModule() = default;
  LatticeModule(LatticeSupport support, std::size_t fiberDim, std::vector<Rational> a)
      : support_(std::move(support)), fiberDim_(fiberDim), a_(std::move(a)) {
    blocks_.assign(generatorCount(), std::vector<std::optional<RatMatrix>>(support_.size()));
  }

  std::size_t n() const { return support_.n(); }
  const LatticeSupport& support() const { return support_; }
  std::size_t fiberDim() const { return fiberDim_; }
  const std::vector<Rational>& parameters() const { return a_; }
  std::size_t generatorCount() const { return 3 * (n() - 1); }

  std::size_t generatorIndex(const SlGenerator& g) const {
    return static_cast<std::size_t>(g.kind) * (n() - 1) + g.i;
  }
  SlGenerator generator(std::size_t k) const {
    return {static_cast<GenKind>(k / (n() - 1)), k % (n() - 1)};
  }
  LatticePoint shift(const SlGenerator& g) const {
    const LatticePoint ei = unitVector(n(), g.i), ej = unitVector(n(), g.i + 1);
    switch (g.kind) {
      case GenKind::raise: return ei - ej;
      case GenKind::lower: return ej - ei;
      case GenKind::cartan: return LatticePoint(n(), 0);
    }
    return {};
  }

  const std::optional<RatMatrix>& block(const SlGenerator& g, std::size_t point) const {
    return blocks_[generatorIndex(g)][point];
  }
  const std::optional<RatMatrix>& block(const SlGenerator& g, const LatticePoint& p) const {
    static const std::optional<RatMatrix> none;
    auto i = support_.indexOf(p);
    return i ? block(g, *i) : none;
  }
  void setBlock(const SlGenerator& g, std::size_t point, RatMatrix m) {
    blocks_[generatorIndex(g)][point] = std::move(m);
  }

  /// Applies word[0] (...) word[last] to V_p, rightmost first; nullopt when
  /// a block is unavailable.
  std::optional<std::pair<RatMatrix, LatticePoint>> evaluate(const std::vector<SlGenerator>& word,
                                                             const LatticePoint& p) const {
    RatMatrix m = RatMatrix::identity(fiberDim_);
    LatticePoint at = p;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      const auto& b = block(*it, at);
      if (!b) return std::nullopt;
      m = *b * m;
      at = at + shift(*it);
    }
    return std::make_pair(std::move(m), std::move(at));
  }

  friend bool operator==(const LatticeModule& x, const LatticeModule& y) {
    return x.n() == y.n() && x.support_.radius() == y.support_.radius() &&
           x.fiberDim_ == y.fiberDim_ && x.blocks_ == y.blocks_;
  }

 private:
  LatticeSupport support_;
  std::size_t fiberDim_ = 0;
  std::vector<Rational> a_;
  std::vector<std::vector<std::optional<RatMatrix>>> blocks_;
};

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void requireNonIntegral(const std::vector<Rational>& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (isInteger(a[i])) throw InvalidInput("a_" + std::to_string(i + 1) + " is an integer");
}

/// FV: e_{i,j} acts V_b -> V_{b+ε_i−ε_j} by X_j + (a_j + b_j) Id and h_i by
/// X_i − X_{i+1} + (a_i + b_i − a_{i+1} − b_{i+1}) Id.
inline LatticeModule buildF(std::size_t n, const std::vector<Rational>& a,
                            const std::vector<RatMatrix>& X, int radius, bool checkInputs = true) {
  if (a.size() != n || X.size() != n) throw InvalidInput("need n parameters and n operators");
  const std::size_t D = X.front().rows();
  if (checkInputs) {
    requireNonIntegral(a);
    for (std::size_t i = 0; i < n; ++i) {
      if (!isNilpotent(X[i])) throw InvalidInput("X_" + std::to_string(i + 1) + " is not nilpotent");
      for (std::size_t j = i + 1; j < n; ++j)
        if (!commute(X[i], X[j]))
          throw InvalidInput("X_" + std::to_string(i + 1) + " and X_" + std::to_string(j + 1) +
                             " do not commute");
    }
  }
  LatticeModule M(LatticeSupport(n, radius), D, a);
  const auto& S = M.support();
  auto coeff = [&](std::size_t j, const LatticePoint& b) {
    return X[j] + RatMatrix::scalar(D, a[j] + b[j]);
  };
  for (std::size_t p = 0; p < S.size(); ++p) {
    const LatticePoint& b = S.points()[p];
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (S.contains(b + M.shift({GenKind::raise, i}))) M.setBlock({GenKind::raise, i}, p, coeff(i + 1, b));
      if (S.contains(b + M.shift({GenKind::lower, i}))) M.setBlock({GenKind::lower, i}, p, coeff(i, b));
      M.setBlock({GenKind::cartan, i}, p, coeff(i, b) - coeff(i + 1, b));
    }
  }
  return M;
}

inline LatticeModule buildN(std::size_t n, const std::vector<Rational>& a, int radius) {
  return buildF(n, a, std::vector<RatMatrix>(n, RatMatrix(1, 1)), radius);
}

// ---------------------------------------------------------------------------
// Relations
// ---------------------------------------------------------------------------

struct LieRelation {
  std::string name;
  std::vector<std::pair<Rational, std::vector<SlGenerator>>> terms;
};

inline int cartanEntry(std::size_t i, std::size_t j) {
  if (i == j) return 2;
  return (i + 1 == j || j + 1 == i) ? -1 : 0;
}

/// Chevalley–Serre relations of sl_n in the generators e_i, f_i, h_i.
inline std::vector<LieRelation> slRelations(std::size_t n) {
  std::vector<LieRelation> out;
  const std::size_t r = n - 1;
  auto E = [](std::size_t i) { return SlGenerator{GenKind::raise, i}; };
  auto F = [](std::size_t i) { return SlGenerator{GenKind::lower, i}; };
  auto H = [](std::size_t i) { return SlGenerator{GenKind::cartan, i}; };
  auto name = [](const std::string& s, std::size_t i, std::size_t j) {
    return s + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      LieRelation ef{name("[e,f]", i, j), {{1, {E(i), F(j)}}, {-1, {F(j), E(i)}}}};
      if (i == j) ef.terms.push_back({-1, {H(i)}});
      out.push_back(ef);
      const int c = cartanEntry(i, j);
      LieRelation he{name("[h,e]", i, j), {{1, {H(i), E(j)}}, {-1, {E(j), H(i)}}}};
      LieRelation hf{name("[h,f]", i, j), {{1, {H(i), F(j)}}, {-1, {F(j), H(i)}}}};
      if (c != 0) {
        he.terms.push_back({-c, {E(j)}});
        hf.terms.push_back({c, {F(j)}});
      }
      out.push_back(he);
      out.push_back(hf);
      if (i < j) out.push_back({name("[h,h]", i, j), {{1, {H(i), H(j)}}, {-1, {H(j), H(i)}}}});
      if (i == j) continue;
      if (c == 0) {
        if (i < j) {
          out.push_back({name("[e,e]", i, j), {{1, {E(i), E(j)}}, {-1, {E(j), E(i)}}}});
          out.push_back({name("[f,f]", i, j), {{1, {F(i), F(j)}}, {-1, {F(j), F(i)}}}});
        }
      } else {
        out.push_back({name("serre-e", i, j),
                       {{1, {E(i), E(i), E(j)}}, {-2, {E(i), E(j), E(i)}}, {1, {E(j), E(i), E(i)}}}});
        out.push_back({name("serre-f", i, j),
                       {{1, {F(i), F(i), F(j)}}, {-2, {F(i), F(j), F(i)}}, {1, {F(j), F(i), F(i)}}}});
      }
    }
  return out;
}

struct RelationReport {
  bool ok = true;
  std::size_t checked = 0;
  std::size_t skipped = 0;  // needs a block outside the truncation
  std::optional<std::pair<std::string, LatticePoint>> witness;
};

inline RelationReport verifyRelations(const LatticeModule& M) {
  RelationReport r;
  const auto rels = slRelations(M.n());
  for (const auto& p : M.support().points())
    for (const auto& rel : rels) {
      std::optional<RatMatrix> sum = RatMatrix(M.fiberDim(), M.fiberDim());
      for (const auto& [c, word] : rel.terms) {
        auto w = M.evaluate(word, p);
        if (!w) {
          sum.reset();
          break;
        }
        *sum = *sum + c * w->first;
      }
      if (!sum) {
        ++r.skipped;
        continue;
      }
      ++r.checked;
      if (!sum->isZero() && !r.witness) r.witness = std::make_pair(rel.name, p);
    }
  r.ok = !r.witness;
  return r;
}

// ---------------------------------------------------------------------------
// Recovery of X_1..X_n and the weight criterion
// ---------------------------------------------------------------------------

struct RecoveredX {
  std::vector<RatMatrix> X;
  Rational lambda;  // eigenvalue of the Casimir on V_0
  Rational root;    // eigenvalue of the chosen square root
  bool nilpotent = false;
};

/// The only eigenvalue of an operator of the form λ Id + nilpotent.
inline std::optional<Rational> singleEigenvalue(const RatMatrix& m) {
  const std::size_t d = m.rows();
  Rational tr = 0;
  for (std::size_t i = 0; i < d; ++i) tr += m.at(i, i);
  const Rational l = tr / static_cast<long>(d);
  if (!isNilpotent(m - RatMatrix::scalar(d, l))) return std::nullopt;
  return l;
}

/// Square root of Y = λ(Id + N/λ) with the given sign of √λ, as the
/// binomial series, which terminates since N is nilpotent.
inline RatMatrix squareRoot(const RatMatrix& Y, const Rational& lambda, const Rational& root) {
  const std::size_t d = Y.rows();
  const RatMatrix Nl = (Rational(1) / lambda) * (Y - RatMatrix::scalar(d, lambda));
  RatMatrix sum = RatMatrix::identity(d), power = RatMatrix::identity(d);
  Rational binom = 1;  // binom(1/2, k)
  for (std::size_t k = 1; k <= d; ++k) {
    binom *= (Rational(1, 2) - static_cast<long>(k - 1)) / static_cast<long>(k);
    power = power * Nl;
    if (power.isZero()) break;
    sum = sum + binom * power;
  }
  return root * sum;
}

/// X_1, X_2 from h_1 and C = (h_1 + 1)^2 + 4 e_21 e_12 on V_0, then
/// X_{i+1} = X_i − Y_i + (a_i − a_{i+1}) Id. Picks the branch of √Y that
/// makes X_1 nilpotent unless `sign` forces one.
inline RecoveredX recoverX(const LatticeModule& M, const std::vector<Rational>& a,
                           std::optional<int> sign = std::nullopt) {
  const std::size_t n = M.n(), D = M.fiberDim();
  const LatticePoint zero(n, 0);
  std::vector<RatMatrix> Y;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto& h = M.block({GenKind::cartan, i}, zero);
    if (!h) throw std::domain_error("h blocks at the origin are missing");
    Y.push_back(*h);
  }
  const auto ef = M.evaluate({{GenKind::lower, 0}, {GenKind::raise, 0}}, zero);
  if (!ef) throw std::domain_error("the support must contain the origin's neighbours");
  const RatMatrix h1 = Y[0] + RatMatrix::identity(D);
  const RatMatrix C = h1 * h1 + Rational(4) * ef->first;
  const auto lambda = singleEigenvalue(C);
  if (!lambda) throw std::domain_error("the Casimir has more than one eigenvalue");
  if (sgn(*lambda) == 0) throw std::domain_error("singular case: the Casimir eigenvalue is zero");
  Rational s;
  if (!rationalSqrt(*lambda, s)) throw std::domain_error("the Casimir eigenvalue is not a rational square");
  auto attempt = [&](const Rational& root) {
    RecoveredX r;
    r.lambda = *lambda;
    r.root = root;
    const RatMatrix Yp = squareRoot(C, *lambda, root);
    const RatMatrix I = RatMatrix::identity(D);
    r.X.push_back(Rational(1, 2) * (Y[0] + Yp - I) - RatMatrix::scalar(D, a[0]));
    r.X.push_back(Rational(1, 2) * (Yp - Y[0] - I) - RatMatrix::scalar(D, a[1]));
    for (std::size_t i = 1; i + 1 < n; ++i)
      r.X.push_back(r.X[i] - Y[i] + RatMatrix::scalar(D, a[i] - a[i + 1]));
    r.nilpotent = isNilpotent(r.X[0]);
    return r;
  };
  if (sign) return attempt(*sign >= 0 ? s : Rational(-s));
  auto r = attempt(s);
  if (r.nilpotent) return r;
  r = attempt(-s);
  if (!r.nilpotent) throw std::domain_error("no square-root branch gives a nilpotent X_1");
  return r;
}

/// Every h_i block is a scalar matrix.
inline bool isWeightModule(const LatticeModule& M) {
  const std::size_t D = M.fiberDim();
  for (std::size_t p = 0; p < M.support().size(); ++p)
    for (std::size_t i = 0; i + 1 < M.n(); ++i) {
      const auto& h = M.block({GenKind::cartan, i}, p);
      if (h && *h != RatMatrix::scalar(D, h->at(0, 0))) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Random inputs
// ---------------------------------------------------------------------------

/// Rationals with a_i ∉ Z and a_i + a_j ∉ Z for all i, j.
inline std::vector<Rational> genericParameters(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20), den(2, 7);
  for (;;) {
    std::vector<Rational> a;
    for (std::size_t i = 0; i < n; ++i) {
      Rational x(num(rng), den(rng));
      x.canonicalize();
      a.push_back(x);
    }
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i; j < n && ok; ++j) ok = !isInteger(i == j ? a[i] : a[i] + a[j]);
    if (ok) return a;
  }
}

/// X_i = p_i(N) for a random strictly upper-triangular N and random
/// polynomials p_i without constant term, so the X_i commute and are
/// nilpotent.
inline std::vector<RatMatrix> randomCommutingNilpotents(std::size_t n, std::size_t D,
                                                        std::mt19937_64& rng) {
  std::uniform_int_distribution<long> c(-3, 3);
  RatMatrix N(D, D);
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = i + 1; j < D; ++j) N.set(i, j, c(rng));
  std::vector<RatMatrix> X;
  for (std::size_t k = 0; k < n; ++k) {
    RatMatrix x(D, D), p = RatMatrix::identity(D);
    for (std::size_t e = 1; e < std::max<std::size_t>(D, 2); ++e) {
      p = p * N;
      x = x + Rational(c(rng)) * p;
    }
    X.push_back(std::move(x));
  }
  return X;
}

// ---------------------------------------------------------------------------
// Extension from sl_{n-1} to sl_n
// ---------------------------------------------------------------------------

class NoUniqueExtension : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExtensionState {
  std::vector<RatMatrix> X;    // X_1..X_n used for the extension
  std::size_t upwardSolves = 0;     // e_{n-2,n-1} above N' (quadratic)
  std::size_t upwardYEqualsB = 0;   // solutions equal to the block below-left
  std::size_t downwardSolves = 0;   // e_{n-2,n-1} below N' (Serre recursion)
  std::size_t downwardXEqualsBMinusOne = 0;
  std::size_t lowerSolves = 0;      // e_{n,n-1} (linear system)
  std::size_t lowerXEqualsB = 0;
};

struct LatticeExtension {
  LatticeModule module;
  ExtensionState state;
};

namespace detail {

/// The extension solver. Points are in Z^n with Σ = 0; layer of b is b_n.
/// N' sits in layer 0 as the points (b', 0). E = e_{n-1,n} acts by
/// X_n + (a_n + b_n) Id, which also fixes the identification of fibers.
class Extender {
 public:
  Extender(std::size_t n, std::vector<Rational> a, const LatticeModule& prime, RatMatrix Xn)
      : n_(n), a_(std::move(a)), prime_(prime), D_(prime.fiberDim()) {
    if (n < 3) throw std::invalid_argument("extension needs n >= 3");
    if (prime.n() + 1 != n) throw std::invalid_argument("N' must be an sl_{n-1} module");
    requireNonIntegral(a_);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (isInteger(a_[i] + a_[j]))
          throw NoUniqueExtension("a_" + std::to_string(i + 1) + " + a_" + std::to_string(j + 1) +
                                  " is an integer");
    const std::vector<Rational> aPrime(a_.begin(), a_.end() - 1);
    auto rec = recoverX(prime, aPrime);
    state.X = rec.X;
    state.X.push_back(std::move(Xn));
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (!commute(state.X.back(), state.X[i])) throw InvalidInput("X_n must commute with N'");
    alpha_ = unitVector(n, n - 2) - unitVector(n, n - 1);
    beta_ = unitVector(n, n - 3) - unitVector(n, n - 2);
  }

  ExtensionState state;

  LatticePoint shift(const SlGenerator& g) const {
    const LatticePoint ei = unitVector(n_, g.i), ej = unitVector(n_, g.i + 1);
    switch (g.kind) {
      case GenKind::raise: return ei - ej;
      case GenKind::lower: return ej - ei;
      case GenKind::cartan: return LatticePoint(n_, 0);
    }
    return {};
  }

  const RatMatrix& block(const SlGenerator& g, const LatticePoint& p) {
    const auto key = std::make_pair(static_cast<int>(g.kind) * 100 + static_cast<int>(g.i), p);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    RatMatrix m = compute(g, p);
    return memo_.emplace(key, std::move(m)).first->second;
  }

 private:
  RatMatrix I() const { return RatMatrix::identity(D_); }
  RatMatrix inv(const RatMatrix& m, const char* what) const {
    auto r = inverse(m);
    if (!r) throw NoUniqueExtension(std::string("not invertible: ") + what);
    return *r;
  }

  // e_{n-1,n} at p
  RatMatrix E(const LatticePoint& p) const {
    return state.X[n_ - 1] + RatMatrix::scalar(D_, a_[n_ - 1] + p[n_ - 1]);
  }

  RatMatrix fromPrime(const SlGenerator& g, const LatticePoint& p) const {
    const LatticePoint q(p.begin(), p.end() - 1);
    const auto& b = prime_.block(g, q);
    if (!b) throw std::out_of_range("N' is too small: no " + generatorName(g) + " at " + pointToString(q));
    return *b;
  }

  RatMatrix compute(const SlGenerator& g, const LatticePoint& p) {
    const int layer = p[n_ - 1];
    const std::size_t top = n_ - 2;  // index of e_{n-1,n}, f = e_{n,n-1}, h_{n-1}
    if (g.i == top) {
      if (g.kind == GenKind::raise) return E(p);
      if (g.kind == GenKind::cartan)  // e_{n-1,n-1} − e_{n,n}
        return state.X[n_ - 2] - state.X[n_ - 1] +
               RatMatrix::scalar(D_, a_[n_ - 2] + p[n_ - 2] - a_[n_ - 1] - p[n_ - 1]);
      return lowerSquare(p);
    }
    if (layer == 0) return fromPrime(g, p);
    if (g.i + 1 == top && g.kind == GenKind::raise)
      return layer < 0 ? upward(p) : downward(p);
    // Everything else commutes with E, or (h_i) shifts by α(h_i).
    if (g.kind == GenKind::cartan) {
      const Rational s = g.i + 1 == top ? -1 : 0;
      if (layer < 0) {
        const LatticePoint q = p - alpha_;
        return E(q) * block(g, q) * inv(E(q), "E") + RatMatrix::scalar(D_, s);
      }
      const LatticePoint q = p + alpha_;
      return inv(E(p), "E") * (block(g, q) - RatMatrix::scalar(D_, s)) * E(p);
    }
    const LatticePoint w = shift(g);
    if (layer < 0) {
      const LatticePoint q = p - alpha_;
      return E(q + w) * block(g, q) * inv(E(q), "E");
    }
    return inv(E(p + w), "E") * block(g, p + alpha_) * E(p);
  }

  // e_{n-2,n-1} at q in a layer above N'. Commutation with e_{n-1,n-2} at
  // q gives x f(q) − f(q+β) y = h_{n-2}(q) for the block x at q−β, and the
  // Serre relation for (e_{n-2,n-1}, e_{n-1,n}) at p = q − β − α gives a
  // quadratic equation in y. All blocks are polynomials in the X's, so the
  // equation is solved in that commutative local ring: the two scalar roots
  // are lifted by Newton iteration and the one matching N(a) is kept.
  RatMatrix upward(const LatticePoint& q) {
    const SlGenerator e{GenKind::raise, n_ - 3}, f{GenKind::lower, n_ - 3}, h{GenKind::cartan, n_ - 3};
    const LatticePoint pm = q - alpha_, p = pm - beta_, pmp = pm + beta_;
    const RatMatrix A1inv = inv(block(f, q), "e_{n-1,n-2}");
    const RatMatrix& A2 = block(f, q + beta_);
    const RatMatrix& H = block(h, q);
    const RatMatrix& bL = block(e, p);
    const RatMatrix& bM = block(e, pm);
    const RatMatrix Kinv = inv(A2 * A1inv * E(p), "leading coefficient");
    const RatMatrix P = Kinv * (H * A1inv * E(p) - Rational(2) * E(pm) * bL);
    const RatMatrix Q = Kinv * (E(pmp) * bM * bL);
    const auto p0 = singleEigenvalue(P), q0 = singleEigenvalue(Q);
    if (!p0 || !q0) throw NoUniqueExtension("coefficients outside the local ring");
    const Rational disc = *p0 * *p0 - 4 * *q0;
    Rational s;
    if (sgn(disc) <= 0 || !rationalSqrt(disc, s)) throw NoUniqueExtension("no pair of distinct rational roots");
    // The simple module N(a) acts by a_{n-1} + q_{n-1} here.
    const Rational simple = a_[n_ - 2] + q[n_ - 2];
    std::optional<RatMatrix> chosen;
    for (const Rational& rho : {Rational((-*p0 + s) / 2), Rational((-*p0 - s) / 2)}) {
      if (rho != simple) continue;
      RatMatrix y = RatMatrix::scalar(D_, rho);
      for (std::size_t it = 0; it <= D_ + 1; ++it) {
        const RatMatrix res = y * y + P * y + Q;
        if (res.isZero()) break;
        y = y - res * inv(Rational(2) * y + P, "Newton step");
      }
      if (!(y * y + P * y + Q).isZero()) throw NoUniqueExtension("Newton lift did not converge");
      chosen = y;
    }
    if (!chosen) throw NoUniqueExtension("no root matches the simple module");
    ++state.upwardSolves;
    if (*chosen == bL) ++state.upwardYEqualsB;
    return *chosen;
  }

  // e_{n-2,n-1} at s in a layer below N', from the Serre relation
  // E²e − 2EeE + eE² = 0 at s, with E invertible.
  RatMatrix downward(const LatticePoint& s) {
    const SlGenerator e{GenKind::raise, n_ - 3};
    const LatticePoint sp = s + beta_;
    const RatMatrix& bm = block(e, s + alpha_);
    const RatMatrix& bt = block(e, s + alpha_ + alpha_);
    const RatMatrix lead = E(sp + alpha_) * E(sp);
    const RatMatrix x = inv(lead, "E^2") * (Rational(2) * E(sp + alpha_) * bm * E(s) -
                                            bt * E(s + alpha_) * E(s));
    ++state.downwardSolves;
    if (x == bm - I()) ++state.downwardXEqualsBMinusOne;
    return x;
  }

  // e_{n,n-1} at p: with x its block at p, y at p+β, u at p+α, v at p+α+β,
  // commuting with e_{n-2,n-1} in both squares and [E, F] = h_{n-1} give a
  // linear equation for x.
  RatMatrix lowerSquare(const LatticePoint& p) {
    const SlGenerator e{GenKind::raise, n_ - 3}, h{GenKind::cartan, n_ - 2};
    const LatticePoint bl = p - alpha_, br = bl + beta_, mr = p + beta_, tl = p + alpha_;
    const RatMatrix& b = block(e, p);
    const RatMatrix& bB = block(e, bl);
    const RatMatrix& bT = block(e, tl);
    const RatMatrix& hp = block(h, p);
    const RatMatrix& hm = block(h, mr);
    const RatMatrix Ep = inv(E(p), "E"), Emr = inv(E(mr), "E");
    const RatMatrix coeff = E(br) * bB * inv(b, "e_{n-2,n-1}") * Emr * bT - b * E(bl) * Ep;
    const RatMatrix rhs = hm * Emr * bT - b * hp * Ep;
    const RatMatrix x = inv(coeff, "coefficient of x") * rhs;
    ++state.lowerSolves;
    if (x == b) ++state.lowerXEqualsB;
    return x;
  }

  std::size_t n_;
  std::vector<Rational> a_;
  const LatticeModule& prime_;
  std::size_t D_;
  LatticePoint alpha_, beta_;
  std::map<std::pair<int, LatticePoint>, RatMatrix> memo_;
};

}  // namespace detail

/// Extends (N', X_n) to an sl_n module on the radius-R support. N' must be
/// given on a larger radius (about 2R + 4) since blocks in layer b_n = m
/// are transported from layer 0 along e_{n-1,n}.
inline LatticeExtension reconstructExtension(std::size_t n, const std::vector<Rational>& a,
                                            const LatticeModule& prime, const RatMatrix& Xn, int radius) {
  detail::Extender ex(n, a, prime, Xn);
  LatticeModule M(LatticeSupport(n, radius), prime.fiberDim(), a);
  const auto& S = M.support();
  for (std::size_t p = 0; p < S.size(); ++p)
    for (std::size_t k = 0; k < M.generatorCount(); ++k) {
      const SlGenerator g = M.generator(k);
      if (S.contains(S.points()[p] + M.shift(g))) M.setBlock(g, p, ex.block(g, S.points()[p]));
    }
  return {std::move(M), ex.state};
}

}  // namespace brauerdef
