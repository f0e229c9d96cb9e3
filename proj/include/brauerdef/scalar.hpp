#pragma once

// Exact coefficient arithmetic: GMP-backed rationals and truncated
// multivariate power series over them.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace brauerdef {

/// Arbitrary precision rational; GMP keeps every value in lowest terms.
using Rational = mpq_class;

inline Rational makeRational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// "p/q", or "p" when the denominator is one.
inline std::string toString(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

inline Rational parseRational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline bool isInteger(const Rational& r) { return r.get_den() == 1; }

/// Exact square root when r is the square of a rational.
inline bool rationalSqrt(const Rational& r, Rational& out) {
  if (sgn(r) < 0) return false;
  mpz_class num = r.get_num();
  mpz_class den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  out = Rational(sn, sd);
  out.canonicalize();
  return true;
}

// ---------------------------------------------------------------------------
// Multi-indices and truncated power series
// ---------------------------------------------------------------------------

using MultiIndex = std::vector<unsigned>;

inline unsigned totalDegree(const MultiIndex& d) {
  return std::accumulate(d.begin(), d.end(), 0u);
}

/// Total degree first, then lexicographic (larger exponent of u1 first,
/// so that u1 < u2 < ... within a degree reads naturally as u1, u2, ...).
struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    const unsigned da = totalDegree(a), db = totalDegree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

/// All multi-indices in m variables with 0 <= |d| <= order, in graded-lex order.
inline std::vector<MultiIndex> multiIndicesUpTo(std::size_t m, unsigned order) {
  std::vector<MultiIndex> out;
  MultiIndex cur(m, 0);
  // Recursive fill of compositions of each total degree.
  auto fill = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
    if (pos + 1 == m) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (unsigned v = remaining + 1; v-- > 0;) {
      cur[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  if (m == 0) {
    out.push_back({});
    return out;
  }
  for (unsigned deg = 0; deg <= order; ++deg) fill(fill, 0, deg);
  return out;
}

inline std::string multiIndexToString(const MultiIndex& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + ")";
}

/// Element of Q[[u_1..u_m]] / m^{N+1}: terms of total degree > N are discarded.
class TruncPoly {
 public:
  using Terms = std::map<MultiIndex, Rational, GradedLexLess>;

  TruncPoly() = default;
  TruncPoly(std::vector<std::string> variables, unsigned order)
      : vars_(std::move(variables)), order_(order) {}

  static TruncPoly constant(std::vector<std::string> variables, unsigned order,
                            const Rational& c) {
    TruncPoly p(std::move(variables), order);
    p.addTerm(MultiIndex(p.vars_.size(), 0), c);
    return p;
  }

  static TruncPoly variable(std::vector<std::string> variables, unsigned order, std::size_t i) {
    TruncPoly p(std::move(variables), order);
    if (i >= p.vars_.size()) throw std::out_of_range("variable index");
    MultiIndex d(p.vars_.size(), 0);
    d[i] = 1;
    p.addTerm(d, 1);
    return p;
  }

  static TruncPoly monomial(std::vector<std::string> variables, unsigned order,
                            const MultiIndex& d, const Rational& c = 1) {
    TruncPoly p(std::move(variables), order);
    p.addTerm(d, c);
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  unsigned order() const { return order_; }
  const Terms& terms() const { return coeffs_; }
  bool isZero() const { return coeffs_.empty(); }

  Rational coefficient(const MultiIndex& d) const {
    auto it = coeffs_.find(d);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  /// Adds c * u^d; silently dropped when |d| exceeds the order.
  void addTerm(const MultiIndex& d, const Rational& c) {
    if (d.size() != vars_.size()) throw std::invalid_argument("multi-index arity mismatch");
    if (totalDegree(d) > order_ || sgn(c) == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) coeffs_.erase(it);
    }
  }

  TruncPoly& operator+=(const TruncPoly& o) {
    requireCompatible(o);
    for (const auto& [d, c] : o.coeffs_) addTerm(d, c);
    return *this;
  }
  TruncPoly& operator-=(const TruncPoly& o) {
    requireCompatible(o);
    for (const auto& [d, c] : o.coeffs_) addTerm(d, -c);
    return *this;
  }
  TruncPoly& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [d, c] : coeffs_) c *= s;
    return *this;
  }

  friend TruncPoly operator+(TruncPoly a, const TruncPoly& b) { return a += b; }
  friend TruncPoly operator-(TruncPoly a, const TruncPoly& b) { return a -= b; }
  friend TruncPoly operator*(TruncPoly a, const Rational& s) { return a *= s; }
  friend TruncPoly operator*(const Rational& s, TruncPoly a) { return a *= s; }

  friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) {
    a.requireCompatible(b);
    TruncPoly out(a.vars_, a.order_);
    MultiIndex sum(a.vars_.size());
    for (const auto& [da, ca] : a.coeffs_) {
      const unsigned dega = totalDegree(da);
      for (const auto& [db, cb] : b.coeffs_) {
        // Terms are sorted by total degree, so the rest of b overflows too.
        if (dega + totalDegree(db) > a.order_) break;
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = da[i] + db[i];
        out.addTerm(sum, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const TruncPoly& a, const TruncPoly& b) {
    return a.vars_ == b.vars_ && a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  std::string toString() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : coeffs_) {
      if (!first) os << " + ";
      first = false;
      os << c.get_str();
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0) continue;
        os << "*" << vars_[i];
        if (d[i] > 1) os << "^" << d[i];
      }
    }
    return os.str();
  }

 private:
  void requireCompatible(const TruncPoly& o) const {
    if (vars_ != o.vars_ || order_ != o.order_)
      throw std::invalid_argument("truncated polynomials over different parameters");
  }

  std::vector<std::string> vars_;
  unsigned order_ = 0;
  Terms coeffs_;
};

inline std::vector<std::string> defaultParameterNames(std::size_t m, std::string_view stem = "u") {
  std::vector<std::string> names;
  if (m == 1) {
    names.emplace_back(stem);
    return names;
  }
  for (std::size_t i = 1; i <= m; ++i) names.push_back(std::string(stem) + std::to_string(i));
  return names;
}

}  // namespace brauerdef
