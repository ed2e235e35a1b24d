#include "sixv/linalg.hpp"

#include <algorithm>

namespace sixv {

ScalarMatrix ScalarMatrix::without(const std::vector<int>& rows,
                                   const std::vector<int>& cols) const {
  auto keep = [](int n, const std::vector<int>& drop) {
    std::vector<int> k;
    for (int i = 0; i < n; ++i)
      if (std::find(drop.begin(), drop.end(), i) == drop.end()) k.push_back(i);
    return k;
  };
  std::vector<int> kr = keep(rows_, rows), kc = keep(cols_, cols);
  if (kr.empty() || kc.empty()) throw numeric_error("ScalarMatrix::without: empty minor");
  ScalarMatrix m(static_cast<int>(kr.size()), static_cast<int>(kc.size()), e_[0].prec());
  for (std::size_t r = 0; r < kr.size(); ++r)
    for (std::size_t c = 0; c < kc.size(); ++c)
      m.at(static_cast<int>(r), static_cast<int>(c)) = at(kr[r], kc[c]);
  return m;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols_ != b.rows_) throw numeric_error("matrix product: shape mismatch");
  ScalarMatrix r(a.rows_, b.cols_, a.e_[0].prec());
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k)
      for (int j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
  return r;
}

Scalar determinant(ScalarMatrix m) {
  if (m.rows() != m.cols()) throw numeric_error("determinant: matrix not square");
  int n = m.rows();
  Precision p = m.at(0, 0).prec();
  Scalar det = Scalar::one(p);
  for (int k = 0; k < n; ++k) {
    int piv = k;
    Real best = m.at(k, k).abs2();
    for (int r = k + 1; r < n; ++r) {
      Real a = m.at(r, k).abs2();
      if (a > best) {
        best = a;
        piv = r;
      }
    }
    if (m.at(piv, k).is_zero()) return Scalar::zero(p);
    if (piv != k) {
      for (int c = 0; c < n; ++c) std::swap(m.at(piv, c), m.at(k, c));
      det = -det;
    }
    det *= m.at(k, k);
    Scalar inv = m.at(k, k).inverse();
    for (int r = k + 1; r < n; ++r) {
      if (m.at(r, k).is_zero()) continue;
      Scalar f = m.at(r, k) * inv;
      for (int c = k + 1; c < n; ++c) m.at(r, c) -= f * m.at(k, c);
    }
  }
  return det;
}

std::vector<Scalar> solve_linear(ScalarMatrix a, std::vector<Scalar> b) {
  if (a.rows() != a.cols() || static_cast<int>(b.size()) != a.rows())
    throw numeric_error("solve_linear: shape mismatch");
  int n = a.rows();
  for (int k = 0; k < n; ++k) {
    int piv = k;
    Real best = a.at(k, k).abs2();
    for (int r = k + 1; r < n; ++r) {
      Real m = a.at(r, k).abs2();
      if (m > best) {
        best = m;
        piv = r;
      }
    }
    if (a.at(piv, k).is_zero()) throw numeric_error("solve_linear: singular matrix");
    if (piv != k) {
      for (int c = 0; c < n; ++c) std::swap(a.at(piv, c), a.at(k, c));
      std::swap(b[piv], b[k]);
    }
    Scalar inv = a.at(k, k).inverse();
    for (int r = k + 1; r < n; ++r) {
      if (a.at(r, k).is_zero()) continue;
      Scalar f = a.at(r, k) * inv;
      for (int c = k; c < n; ++c) a.at(r, c) -= f * a.at(k, c);
      b[r] -= f * b[k];
    }
  }
  std::vector<Scalar> x(b);
  for (int k = n - 1; k >= 0; --k) {
    Scalar acc = b[k];
    for (int c = k + 1; c < n; ++c) acc -= a.at(k, c) * x[c];
    x[k] = acc * a.at(k, k).inverse();
  }
  return x;
}

namespace {

MultiSeries series_det_rec(const std::vector<std::vector<MultiSeries>>& m,
                           const std::vector<int>& rows, int col) {
  const int n = static_cast<int>(rows.size());
  if (n == 1) return m[rows[0]][col];
  MultiSeries acc(m[0][0].num_vars(), m[0][0].orders(), m[0][0].prec());
  for (int i = 0; i < n; ++i) {
    if (m[rows[i]][col].is_identically_zero()) continue;
    std::vector<int> sub;
    sub.reserve(rows.size() - 1);
    for (int j = 0; j < n; ++j)
      if (j != i) sub.push_back(rows[j]);
    MultiSeries term = m[rows[i]][col] * series_det_rec(m, sub, col + 1);
    if (i % 2 == 0)
      acc += term;
    else
      acc += -term;
  }
  return acc;
}

}  // namespace

MultiSeries series_determinant(const std::vector<std::vector<MultiSeries>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) throw numeric_error("series_determinant: empty matrix");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n || !row[0].same_shape(m[0][0]))
      throw numeric_error("series_determinant: shape mismatch");
  std::vector<int> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = i;
  return series_det_rec(m, rows, 0);
}

}  // namespace sixv
