#pragma once

// Exact dense linear algebra: echelon forms, rank, kernels, linear solves.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "splitgen/field.hpp"

namespace splitgen {

template <class K>
using Vec = std::vector<typename K::Element>;

/// Row-major dense matrix.
template <class K>
struct Matrix {
  using Elem = typename K::Element;
  std::size_t rows = 0, cols = 0;
  std::vector<Elem> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, const Elem& fill) : rows(r), cols(c), data(r * c, fill) {}

  Elem& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  bool operator==(const Matrix&) const = default;
};

template <class K>
class LinAlg {
 public:
  using Elem = typename K::Element;
  using Mat = Matrix<K>;
  using V = Vec<K>;

  explicit LinAlg(K field) : K_(std::move(field)) {}
  const K& field() const { return K_; }

  Mat zeros(std::size_t r, std::size_t c) const { return Mat(r, c, K_.zero()); }
  Mat identity(std::size_t n) const {
    Mat m = zeros(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K_.one();
    return m;
  }

  Mat mul(const Mat& a, const Mat& b) const {
    if (a.cols != b.rows) throw EngineError("matrix shape mismatch");
    Mat r = zeros(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
      for (std::size_t k = 0; k < a.cols; ++k) {
        const Elem& x = a(i, k);
        if (K_.is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols; ++j) r(i, j) = K_.add(r(i, j), K_.mul(x, b(k, j)));
      }
    return r;
  }
  V apply(const Mat& a, const V& v) const {
    V r(a.rows, K_.zero());
    for (std::size_t i = 0; i < a.rows; ++i)
      for (std::size_t j = 0; j < a.cols; ++j)
        if (!K_.is_zero(v[j])) r[i] = K_.add(r[i], K_.mul(a(i, j), v[j]));
    return r;
  }
  Mat sub(const Mat& a, const Mat& b) const {
    Mat r = a;
    for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] = K_.sub(a.data[i], b.data[i]);
    return r;
  }
  Mat transpose(const Mat& a) const {
    Mat r = zeros(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
      for (std::size_t j = 0; j < a.cols; ++j) r(j, i) = a(i, j);
    return r;
  }
  /// Matrix whose columns are the given vectors.
  Mat from_columns(const std::vector<V>& cols, std::size_t n) const {
    Mat m = zeros(n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
    return m;
  }
  bool is_zero(const Mat& a) const {
    for (const auto& x : a.data)
      if (!K_.is_zero(x)) return false;
    return true;
  }

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref(Mat& m) const {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
      std::size_t piv = r;
      while (piv < m.rows && K_.is_zero(m(piv, c))) ++piv;
      if (piv == m.rows) continue;
      if (piv != r)
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
      Elem inv = K_.inv(m(r, c));
      for (std::size_t j = c; j < m.cols; ++j) m(r, j) = K_.mul(m(r, j), inv);
      for (std::size_t i = 0; i < m.rows; ++i) {
        if (i == r || K_.is_zero(m(i, c))) continue;
        Elem f = m(i, c);
        for (std::size_t j = c; j < m.cols; ++j) m(i, j) = K_.sub(m(i, j), K_.mul(f, m(r, j)));
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank(Mat m) const { return rref(m).size(); }

  /// Basis of {v : m v = 0}.
  std::vector<V> kernel(Mat m) const {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<V> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
      if (is_pivot[free]) continue;
      V v(m.cols, K_.zero());
      v[free] = K_.one();
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = K_.neg(m(r, free));
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// Some x with m x = b, if one exists.
  std::optional<V> solve(const Mat& m, const V& b) const {
    Mat aug = zeros(m.rows, m.cols + 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
      for (std::size_t j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
      aug(i, m.cols) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
    V x(m.cols, K_.zero());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols);
    return x;
  }

 private:
  K K_;
};

/// Incrementally maintained echelon basis of a subspace of K^n.
template <class K>
class Span {
 public:
  using Elem = typename K::Element;
  using V = Vec<K>;

  Span(K field, std::size_t n) : K_(std::move(field)), n_(n) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }

  /// Reduces v against the basis; returns the residue.
  V reduce(V v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Elem& c = v[pivots_[r]];
      if (K_.is_zero(c)) continue;
      Elem f = c;
      for (std::size_t j = 0; j < n_; ++j)
        if (!K_.is_zero(rows_[r][j])) v[j] = K_.sub(v[j], K_.mul(f, rows_[r][j]));
    }
    return v;
  }

  bool contains(const V& v) const { return is_zero(reduce(v)); }

  /// Adds v if independent; returns whether the span grew.
  bool insert(const V& v) {
    V r = reduce(v);
    std::size_t piv = 0;
    while (piv < n_ && K_.is_zero(r[piv])) ++piv;
    if (piv == n_) return false;
    Elem inv = K_.inv(r[piv]);
    for (auto& x : r) x = K_.mul(x, inv);
    // keep every stored row reduced at the new pivot
    for (auto& row : rows_) {
      if (K_.is_zero(row[piv])) continue;
      Elem f = row[piv];
      for (std::size_t j = 0; j < n_; ++j) row[j] = K_.sub(row[j], K_.mul(f, r[j]));
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(piv);
    return true;
  }

  const std::vector<V>& rows() const { return rows_; }

 private:
  bool is_zero(const V& v) const {
    for (const auto& x : v)
      if (!K_.is_zero(x)) return false;
    return true;
  }
  K K_;
  std::size_t n_;
  std::vector<V> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace splitgen
