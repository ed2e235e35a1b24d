#ifndef SIXV_SERIES_HPP
#define SIXV_SERIES_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "sixv/scalar.hpp"

namespace sixv {

// Truncated multivariate power series (jet) over Scalar, dense up to a
// per-variable inclusive truncation order.  The carrier for every
// derivative-column and residue-extraction computation.
class MultiSeries {
 public:
  MultiSeries(int num_vars, std::vector<int> orders, Precision p)
      : orders_(std::move(orders)), prec_(p) {
    if (num_vars != static_cast<int>(orders_.size()))
      throw numeric_error("MultiSeries: orders/num_vars mismatch");
    strides_.resize(orders_.size());
    std::size_t sz = 1;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      if (orders_[i] < 0) throw numeric_error("MultiSeries: negative order");
      strides_[i] = sz;
      sz *= static_cast<std::size_t>(orders_[i] + 1);
    }
    c_.assign(sz, Scalar::zero(p));
  }

  static MultiSeries constant(const Scalar& v, std::vector<int> orders) {
    int nv = static_cast<int>(orders.size());
    MultiSeries s(nv, std::move(orders), v.prec());
    s.c_[0] = v;
    return s;
  }
  static MultiSeries variable(int i, std::vector<int> orders, Precision p) {
    int nv = static_cast<int>(orders.size());
    MultiSeries s(nv, std::move(orders), p);
    if (i < 0 || i >= s.num_vars() || s.orders_[i] < 1)
      throw numeric_error("MultiSeries::variable: bad index or order");
    s.c_[s.strides_[i]] = Scalar::one(p);
    return s;
  }

  int num_vars() const { return static_cast<int>(orders_.size()); }
  const std::vector<int>& orders() const { return orders_; }
  Precision prec() const { return prec_; }
  std::size_t size() const { return c_.size(); }

  const Scalar& coeff(const std::vector<int>& e) const { return c_[rank(e)]; }
  void set_coeff(const std::vector<int>& e, const Scalar& v) { c_[rank(e)] = v; }
  const Scalar& constant_term() const { return c_[0]; }

  bool same_shape(const MultiSeries& o) const { return orders_ == o.orders_; }

  friend MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
    a.check_shape(b);
    MultiSeries r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
  }
  friend MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) {
    a.check_shape(b);
    MultiSeries r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
  }
  MultiSeries operator-() const {
    MultiSeries r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  MultiSeries& operator+=(const MultiSeries& o) {
    check_shape(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }

  friend MultiSeries operator*(const MultiSeries& a, const Scalar& s) {
    MultiSeries r = a;
    for (auto& v : r.c_) v *= s;
    return r;
  }
  friend MultiSeries operator*(const Scalar& s, const MultiSeries& a) { return a * s; }

  // Truncated product; exact at all retained multi-indices.  Zero
  // coefficients are skipped, so sparse (e.g. univariate) operands stay cheap.
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
    a.check_shape(b);
    MultiSeries r(a.num_vars(), a.orders_, max_prec(a.prec_, b.prec_));
    std::vector<int> ea(a.orders_.size()), eb(a.orders_.size());
    std::vector<std::size_t> bnz;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) bnz.push_back(j);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      a.unrank(i, ea);
      for (std::size_t j : bnz) {
        b.unrank(j, eb);
        bool fits = true;
        std::size_t idx = 0;
        for (std::size_t v = 0; v < ea.size(); ++v) {
          int e = ea[v] + eb[v];
          if (e > a.orders_[v]) {
            fits = false;
            break;
          }
          idx += static_cast<std::size_t>(e) * a.strides_[v];
        }
        if (fits) r.c_[idx] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }
  MultiSeries& operator*=(const MultiSeries& o) { *this = *this * o; return *this; }

  // Multiplicative inverse; requires a nonzero constant coefficient.
  MultiSeries reciprocal() const {
    if (constant_term().is_zero())
      throw numeric_error("MultiSeries::reciprocal: zero constant term");
    MultiSeries r(num_vars(), orders_, prec_);
    Scalar inv0 = constant_term().inverse();
    std::vector<std::size_t> idx = indices_by_total_degree();
    std::vector<int> em(orders_.size()), ek(orders_.size());
    for (std::size_t m : idx) {
      unrank(m, em);
      Scalar acc = (m == 0) ? Scalar::one(prec_) : Scalar::zero(prec_);
      // subtract a_k * r_{m-k} over all 0 < k <= m componentwise
      std::vector<int> k(em.size(), 0);
      while (true) {
        // advance multi-index k through the box [0, em]
        bool is0 = std::all_of(k.begin(), k.end(), [](int x) { return x == 0; });
        if (!is0) {
          std::size_t ik = 0, imk = 0;
          for (std::size_t v = 0; v < k.size(); ++v) {
            ik += static_cast<std::size_t>(k[v]) * strides_[v];
            imk += static_cast<std::size_t>(em[v] - k[v]) * strides_[v];
          }
          if (!c_[ik].is_zero() && !r.c_[imk].is_zero()) acc -= c_[ik] * r.c_[imk];
        }
        std::size_t v = 0;
        for (; v < k.size(); ++v) {
          if (k[v] < em[v]) {
            ++k[v];
            break;
          }
          k[v] = 0;
        }
        if (v == k.size()) break;
      }
      r.c_[m] = acc * inv0;
    }
    return r;
  }

  MultiSeries pow_int(long n) const {
    if (n < 0) return reciprocal().pow_int(-n);
    MultiSeries acc = constant(Scalar::one(prec_), orders_);
    MultiSeries base = *this;
    unsigned long e = static_cast<unsigned long>(n);
    while (e) {
      if (e & 1) acc *= base;
      if (e >>= 1) base *= base;
    }
    return acc;
  }

  // Coefficient of var^m, as a series of the same shape with var-degree 0.
  MultiSeries coeff_slice(int var, int m) const {
    MultiSeries r(num_vars(), orders_, prec_);
    std::vector<int> e(orders_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      unrank(i, e);
      if (e[var] != m) continue;
      r.c_[i - static_cast<std::size_t>(m) * strides_[var]] = c_[i];
    }
    return r;
  }

  // Multiply by var^m (terms overflowing the truncation order are dropped).
  MultiSeries shift_var(int var, int m) const {
    MultiSeries r(num_vars(), orders_, prec_);
    std::vector<int> e(orders_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      unrank(i, e);
      if (e[var] + m > orders_[var]) continue;
      r.c_[i + static_cast<std::size_t>(m) * strides_[var]] = c_[i];
    }
    return r;
  }

  int degree_in(int var) const {
    std::vector<int> e(orders_.size());
    int d = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      unrank(i, e);
      d = std::max(d, e[var]);
    }
    return d;
  }

  bool is_identically_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& v) { return v.is_zero(); });
  }

  Real max_coeff_abs() const {
    Real m(prec_);
    for (const auto& v : c_) {
      Real a = v.abs();
      if (a > m) m = a;
    }
    return m;
  }

  // Substitute scalar values for the formal variables (exact polynomial
  // evaluation when the stored series is a polynomial).
  Scalar eval(const std::vector<Scalar>& args) const {
    if (static_cast<int>(args.size()) != num_vars())
      throw numeric_error("MultiSeries::eval: arity mismatch");
    return eval_rec(num_vars() - 1, 0, args);
  }

  // Substitute series values (in an arbitrary target ring) for the variables.
  MultiSeries eval_series(const std::vector<MultiSeries>& args) const {
    if (static_cast<int>(args.size()) != num_vars())
      throw numeric_error("MultiSeries::eval_series: arity mismatch");
    return eval_series_rec(num_vars() - 1, 0, args);
  }

  template <typename Fn>
  void for_each_nonzero(Fn&& fn) const {
    std::vector<int> e(orders_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      unrank(i, e);
      fn(e, c_[i]);
    }
  }

 private:
  void check_shape(const MultiSeries& o) const {
    if (!same_shape(o)) throw numeric_error("MultiSeries: shape mismatch");
  }
  std::size_t rank(const std::vector<int>& e) const {
    if (e.size() != orders_.size()) throw numeric_error("MultiSeries: bad multi-index");
    std::size_t idx = 0;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] < 0 || e[v] > orders_[v]) throw numeric_error("MultiSeries: index out of range");
      idx += static_cast<std::size_t>(e[v]) * strides_[v];
    }
    return idx;
  }
  void unrank(std::size_t i, std::vector<int>& e) const {
    for (std::size_t v = 0; v < orders_.size(); ++v) {
      e[v] = static_cast<int>(i % static_cast<std::size_t>(orders_[v] + 1));
      i /= static_cast<std::size_t>(orders_[v] + 1);
    }
  }
  std::vector<std::size_t> indices_by_total_degree() const {
    std::vector<std::size_t> idx(c_.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> tot(c_.size());
    std::vector<int> e(orders_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      unrank(i, e);
      tot[i] = std::accumulate(e.begin(), e.end(), 0);
    }
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return tot[a] < tot[b]; });
    return idx;
  }
  // Horner over variable `var` of the sub-box with fixed higher variables.
  Scalar eval_rec(int var, std::size_t base, const std::vector<Scalar>& args) const {
    Scalar acc = Scalar::zero(prec_);
    for (int m = orders_[var]; m >= 0; --m) {
      std::size_t off = base + static_cast<std::size_t>(m) * strides_[var];
      Scalar term = (var == 0) ? c_[off] : eval_rec(var - 1, off, args);
      acc = acc * args[var] + term;
    }
    return acc;
  }
  MultiSeries eval_series_rec(int var, std::size_t base,
                              const std::vector<MultiSeries>& args) const {
    MultiSeries acc(args[0].num_vars(), args[0].orders(), prec_);
    for (int m = orders_[var]; m >= 0; --m) {
      std::size_t off = base + static_cast<std::size_t>(m) * strides_[var];
      if (var == 0) {
        acc = acc * args[var];
        acc.c_[0] += c_[off];
      } else {
        acc = acc * args[var] + eval_series_rec(var - 1, off, args);
      }
    }
    return acc;
  }

  std::vector<int> orders_;
  std::vector<std::size_t> strides_;
  std::vector<Scalar> c_;
  Precision prec_;
};

// sin/cos of a series, splitting off the constant term:
// sin(c + t) = sin c cos t + cos c sin t with t nilpotent up to truncation.
MultiSeries sin_series(const MultiSeries& a);
MultiSeries cos_series(const MultiSeries& a);

// Taylor expansion of sin(center + eps) in formal variable `var_index`.
MultiSeries sine_jet(const Scalar& center, int var_index, const std::vector<int>& orders);

}  // namespace sixv

#endif
