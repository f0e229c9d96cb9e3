#pragma once

// Exact linear algebra over Q: sparse vectors, a sparse-row matrix type,
// rank, nullspace and linear solving. Small systems go through dense
// Gauss-Jordan; larger ones through sparse row elimination.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brauerdef/scalar.hpp"

namespace brauerdef {

struct Entry {
  std::size_t index;
  Rational value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Strictly increasing indices, no stored zeros.
using SparseVector = std::vector<Entry>;
using DenseVector = std::vector<Rational>;

namespace sparse {

inline Rational get(const SparseVector& v, std::size_t i) {
  auto it = std::lower_bound(v.begin(), v.end(), i,
                             [](const Entry& e, std::size_t k) { return e.index < k; });
  return (it != v.end() && it->index == i) ? it->value : Rational(0);
}

/// y + a*x
inline SparseVector axpy(const SparseVector& y, const Rational& a, const SparseVector& x) {
  if (sgn(a) == 0) return y;
  SparseVector out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin(), ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->index < ix->index)) {
      out.push_back(*iy++);
    } else if (iy == y.end() || ix->index < iy->index) {
      out.push_back({ix->index, a * ix->value});
      ++ix;
    } else {
      Rational s = iy->value + a * ix->value;
      if (sgn(s) != 0) out.push_back({iy->index, std::move(s)});
      ++iy;
      ++ix;
    }
  }
  return out;
}

inline void scale(SparseVector& v, const Rational& a) {
  if (sgn(a) == 0) {
    v.clear();
    return;
  }
  for (auto& e : v) e.value *= a;
}

inline SparseVector fromDense(const DenseVector& d) {
  SparseVector v;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (sgn(d[i]) != 0) v.push_back({i, d[i]});
  return v;
}

inline DenseVector toDense(const SparseVector& v, std::size_t n) {
  DenseVector d(n);
  for (const auto& e : v) d.at(e.index) = e.value;
  return d;
}

/// Builds a canonical sparse vector from unsorted (index, value) pairs.
inline SparseVector normalize(std::vector<Entry> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  SparseVector out;
  for (auto& e : raw) {
    if (!out.empty() && out.back().index == e.index) {
      out.back().value += e.value;
    } else {
      out.push_back(std::move(e));
    }
    if (sgn(out.back().value) == 0) out.pop_back();
  }
  return out;
}

}  // namespace sparse

/// Incremental row echelon form with respect to a fixed column order
/// (column 0 first). Each stored row is normalized to a leading 1.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols), rowOfPivot_(cols, npos) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool isPivot(std::size_t col) const { return rowOfPivot_[col] != npos; }
  std::size_t rowOfPivot(std::size_t col) const { return rowOfPivot_[col]; }

  /// Residual of v after eliminating every pivot column.
  SparseVector reduce(SparseVector v) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
      const std::size_t c = v[pos].index;
      const std::size_t r = rowOfPivot_[c];
      if (r == npos) {
        ++pos;
        continue;
      }
      const Rational f = -v[pos].value;
      v = sparse::axpy(v, f, rows_[r]);
      // Entries before pos are untouched: pivot rows have nothing left of c.
    }
    return v;
  }

  /// Returns true when v was independent of the rows already present.
  bool insert(SparseVector v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const Rational inv = 1 / v.front().value;
    sparse::scale(v, inv);
    const std::size_t p = v.front().index;
    rowOfPivot_[p] = rows_.size();
    pivots_.push_back(p);
    rows_.push_back(std::move(v));
    return true;
  }

  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  /// Back-substitutes so every pivot column is zero in all other rows.
  void makeReduced() {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots_[a] > pivots_[b]; });
    for (std::size_t r : order) {
      SparseVector& row = rows_[r];
      // Eliminate every non-leading pivot column; rows with a larger pivot
      // are already fully reduced.
      std::size_t pos = 1;
      while (pos < row.size()) {
        const std::size_t c = row[pos].index;
        const std::size_t s = rowOfPivot_[c];
        if (s == npos) {
          ++pos;
          continue;
        }
        const Rational f = -row[pos].value;
        row = sparse::axpy(row, f, rows_[s]);
      }
    }
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t cols_;
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> rowOfPivot_;
};

/// Rational matrix with sparse row storage.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, Rational(1)});
    return m;
  }
  static RatMatrix scalar(std::size_t n, const Rational& s) {
    RatMatrix m(n, n);
    if (sgn(s) == 0) return m;
    for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, s});
    return m;
  }
  static RatMatrix fromRows(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    RatMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
      m.data_[i] = sparse::fromDense(rows[i]);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational at(std::size_t i, std::size_t j) const {
    check(i, j);
    return sparse::get(data_[i], j);
  }
  void set(std::size_t i, std::size_t j, const Rational& v) {
    check(i, j);
    SparseVector& row = data_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const Entry& e, std::size_t k) { return e.index < k; });
    if (it != row.end() && it->index == j) {
      if (sgn(v) == 0)
        row.erase(it);
      else
        it->value = v;
    } else if (sgn(v) != 0) {
      row.insert(it, {j, v});
    }
  }
  void add(std::size_t i, std::size_t j, const Rational& v) { set(i, j, at(i, j) + v); }

  const SparseVector& row(std::size_t i) const { return data_.at(i); }
  void setRow(std::size_t i, SparseVector v) {
    if (!v.empty() && v.back().index >= cols_) throw std::out_of_range("row entry past cols");
    data_.at(i) = std::move(v);
  }

  std::size_t nonZeros() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
  }
  bool isZero() const { return nonZeros() == 0; }

  std::vector<std::vector<Rational>> toDense() const {
    std::vector<std::vector<Rational>> d(rows_, std::vector<Rational>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (const auto& e : data_[i]) d[i][e.index] = e.value;
    return d;
  }

  RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (const auto& e : data_[i]) t.data_[e.index].push_back({i, e.value});
    return t;
  }

  DenseVector apply(const DenseVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
    DenseVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (const auto& e : data_[i]) y[i] += e.value * x[e.index];
    return y;
  }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
    RatMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      SparseVector acc;
      for (const auto& e : a.data_[i]) acc = sparse::axpy(acc, e.value, b.data_[e.index]);
      c.data_[i] = std::move(acc);
    }
    return c;
  }
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    a.requireSameShape(b);
    RatMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) c.data_[i] = sparse::axpy(a.data_[i], 1, b.data_[i]);
    return c;
  }
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    a.requireSameShape(b);
    RatMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      c.data_[i] = sparse::axpy(a.data_[i], -1, b.data_[i]);
    return c;
  }
  friend RatMatrix operator*(const Rational& s, RatMatrix m) {
    for (auto& r : m.data_) sparse::scale(r, s);
    return m;
  }
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string toString() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
    }
    os << "]";
    return os.str();
  }

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
  }
  void requireSameShape(const RatMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector> data_;
};

// ---------------------------------------------------------------------------
// Elimination
// ---------------------------------------------------------------------------

/// Matrices with both dimensions below this go through dense elimination.
inline constexpr std::size_t kDenseLimit = 200;

struct Rref {
  std::vector<SparseVector> rows;      // reduced, leading entry 1
  std::vector<std::size_t> pivots;     // pivot column of each row, increasing
};

namespace detail {

inline Rref denseRref(const RatMatrix& m) {
  auto a = m.toDense();
  const std::size_t rows = m.rows(), cols = m.cols();
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(a[r][j]) != 0) a[i][j] -= f * a[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = 0; i < r; ++i) out.rows.push_back(sparse::fromDense(a[i]));
  return out;
}

inline Rref sparseRref(const RatMatrix& m) {
  // Sparsest rows first keeps fill-in low (a cheap Markowitz-style order).
  std::vector<std::size_t> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.row(a).size() < m.row(b).size();
  });
  RowEchelon ech(m.cols());
  for (std::size_t i : order)
    if (!m.row(i).empty()) ech.insert(m.row(i));
  ech.makeReduced();
  std::vector<std::size_t> idx(ech.rank());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return ech.pivots()[a] < ech.pivots()[b]; });
  Rref out;
  for (std::size_t i : idx) {
    out.rows.push_back(ech.rows()[i]);
    out.pivots.push_back(ech.pivots()[i]);
  }
  return out;
}

}  // namespace detail

enum class EliminationMethod { automatic, dense, sparse };

inline Rref rref(const RatMatrix& m, EliminationMethod method = EliminationMethod::automatic) {
  if (method == EliminationMethod::automatic)
    method = (m.rows() < kDenseLimit && m.cols() < kDenseLimit) ? EliminationMethod::dense
                                                                 : EliminationMethod::sparse;
  return method == EliminationMethod::dense ? detail::denseRref(m) : detail::sparseRref(m);
}

inline std::size_t rank(const RatMatrix& m,
                        EliminationMethod method = EliminationMethod::automatic) {
  if (method == EliminationMethod::automatic)
    method = (m.rows() < kDenseLimit && m.cols() < kDenseLimit) ? EliminationMethod::dense
                                                                 : EliminationMethod::sparse;
  if (method == EliminationMethod::dense) return detail::denseRref(m).pivots.size();
  // Rank only needs echelon form, not the reduced one.
  std::vector<std::size_t> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.row(a).size() < m.row(b).size();
  });
  RowEchelon ech(m.cols());
  for (std::size_t i : order)
    if (!m.row(i).empty()) ech.insert(m.row(i));
  return ech.rank();
}

/// Basis of ker(M), one vector per free column (value 1 there).
inline std::vector<DenseVector> nullspace(const RatMatrix& m,
                                          EliminationMethod method = EliminationMethod::automatic) {
  const Rref r = rref(m, method);
  std::vector<bool> isPivot(m.cols(), false);
  for (auto p : r.pivots) isPivot[p] = true;
  std::vector<DenseVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (isPivot[f]) continue;
    DenseVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < r.rows.size(); ++i) v[r.pivots[i]] = -sparse::get(r.rows[i], f);
    basis.push_back(std::move(v));
  }
  return basis;
}

struct LinearSolution {
  DenseVector x;                       // one solution, free variables zero
  std::vector<DenseVector> nullspace;  // basis of ker(M)
};

/// Which variables are left free (set to zero) in the returned particular
/// solution: the natural column order pivots on early columns, the reversed
/// order on late ones.
enum class ColumnOrder { natural, reversed };

/// Solves M x = b exactly; std::nullopt when b is not in the image of M.
inline std::optional<LinearSolution> solve(const RatMatrix& m, const DenseVector& b,
                                           ColumnOrder order = ColumnOrder::natural,
                                           EliminationMethod method = EliminationMethod::automatic) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side size mismatch");
  const std::size_t n = m.cols();
  auto colOf = [&](std::size_t j) { return order == ColumnOrder::natural ? j : n - 1 - j; };
  // Augmented system with b in the last column.
  RatMatrix aug(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Entry> raw;
    for (const auto& e : m.row(i)) raw.push_back({colOf(e.index), e.value});
    if (sgn(b[i]) != 0) raw.push_back({n, b[i]});
    aug.setRow(i, sparse::normalize(std::move(raw)));
  }
  const Rref r = rref(aug, method);
  if (!r.pivots.empty() && r.pivots.back() == n) return std::nullopt;
  std::vector<bool> isPivot(n, false);
  for (auto p : r.pivots) isPivot[p] = true;
  LinearSolution sol;
  DenseVector xp(n);
  for (std::size_t i = 0; i < r.rows.size(); ++i) xp[r.pivots[i]] = sparse::get(r.rows[i], n);
  sol.x.assign(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) sol.x[j] = xp[colOf(j)];
  for (std::size_t f = 0; f < n; ++f) {
    if (isPivot[f]) continue;
    DenseVector v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < r.rows.size(); ++i) v[r.pivots[i]] = -sparse::get(r.rows[i], f);
    DenseVector w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = v[colOf(j)];
    sol.nullspace.push_back(std::move(w));
  }
  return sol;
}

inline std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    SparseVector row = m.row(i);
    row.push_back({n + i, Rational(1)});
    aug.setRow(i, std::move(row));
  }
  const Rref r = rref(aug);
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    SparseVector row;
    for (const auto& e : r.rows[i])
      if (e.index >= n) row.push_back({e.index - n, e.value});
    inv.setRow(i, std::move(row));
  }
  return inv;
}

inline bool isInvertible(const RatMatrix& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

/// true when some power of m vanishes.
inline bool isNilpotent(const RatMatrix& m) {
  if (m.rows() != m.cols()) return false;
  RatMatrix p = m;
  for (std::size_t i = 1; i < m.rows(); ++i) p = p * m;
  return p.isZero();
}

inline bool commute(const RatMatrix& a, const RatMatrix& b) { return a * b == b * a; }

}  // namespace brauerdef
