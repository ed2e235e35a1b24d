#ifndef SIXV_SCALAR_HPP
#define SIXV_SCALAR_HPP

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace sixv {

// Working precision of a computation context.  Carried explicitly by every
// value; binary operations produce results at the larger operand precision.
struct Precision {
  long bits;

  static Precision digits(long d) {
    // 3.3220 > log2(10); 64 guard bits on top of the requested digits.
    return Precision{static_cast<long>(d * 3.3220) + 64};
  }
  long decimal_digits() const {
    return static_cast<long>((bits - 64) / 3.3220);
  }
  bool operator==(const Precision&) const = default;
};

inline Precision max_prec(Precision a, Precision b) {
  return a.bits >= b.bits ? a : b;
}

class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pole of a trigonometric rational function hit (denominator below the
// singularity threshold).
class singularity_error : public numeric_error {
 public:
  using numeric_error::numeric_error;
};

// Arbitrary-precision real number (MPFR), value-semantic RAII wrapper.
class Real {
 public:
  explicit Real(Precision p) { mpfr_init2(v_, p.bits); mpfr_set_zero(v_, 1); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real of(double x, Precision p) {
    Real r(p);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real of_int(long x, Precision p) {
    Real r(p);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real of_str(const std::string& s, Precision p) {
    Real r(p);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw numeric_error("cannot parse decimal number: " + s);
    return r;
  }
  static Real pi(Precision p) {
    Real r(p);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  // 10^e at precision p (e may be negative); used for tolerances.
  static Real pow10(long e, Precision p) {
    Real r(p);
    mpfr_ui_pow_ui(r.v_, 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0) mpfr_ui_div(r.v_, 1, r.v_, MPFR_RNDN);
    return r;
  }
  static Real factorial(unsigned long n, Precision p) {
    Real r(p);
    mpfr_fac_ui(r.v_, n, MPFR_RNDN);
    return r;
  }

  Precision prec() const { return Precision{mpfr_get_prec(v_)}; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_); }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  std::string str(int sig_digits = 50) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", sig_digits - 1, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  friend Real operator+(const Real& a, const Real& b) { return binop(a, b, mpfr_add); }
  friend Real operator-(const Real& a, const Real& b) { return binop(a, b, mpfr_sub); }
  friend Real operator*(const Real& a, const Real& b) { return binop(a, b, mpfr_mul); }
  friend Real operator/(const Real& a, const Real& b) { return binop(a, b, mpfr_div); }
  Real operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }

  static Real sin(const Real& x) { return unop(x, mpfr_sin); }
  static Real cos(const Real& x) { return unop(x, mpfr_cos); }
  static Real sinh(const Real& x) { return unop(x, mpfr_sinh); }
  static Real cosh(const Real& x) { return unop(x, mpfr_cosh); }
  static Real tanh(const Real& x) { return unop(x, mpfr_tanh); }
  static Real exp(const Real& x) { return unop(x, mpfr_exp); }
  static Real log(const Real& x) { return unop(x, mpfr_log); }
  static Real sqrt(const Real& x) { return unop(x, mpfr_sqrt); }
  static Real abs(const Real& x) { return unop(x, mpfr_abs); }
  static Real hypot(const Real& a, const Real& b) { return binop(a, b, mpfr_hypot); }
  static Real atan2(const Real& y, const Real& x) { return binop(y, x, mpfr_atan2); }

 private:
  using mpfr_bin = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  using mpfr_un = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
  static Real binop(const Real& a, const Real& b, mpfr_bin f) {
    Real r(max_prec(a.prec(), b.prec()));
    f(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  static Real unop(const Real& x, mpfr_un f) {
    Real r(x.prec());
    f(r.v_, x.v_, MPFR_RNDN);
    return r;
  }
  mpfr_t v_;
};

// Arbitrary-precision complex number; the universal numeric carrier.
class Scalar {
 public:
  explicit Scalar(Precision p) : re_(p), im_(p) {}
  Scalar(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit Scalar(Real re) : re_(std::move(re)), im_(re_.prec()) {}

  static Scalar of(double x, Precision p) { return Scalar(Real::of(x, p)); }
  static Scalar of_int(long x, Precision p) { return Scalar(Real::of_int(x, p)); }
  static Scalar zero(Precision p) { return Scalar(p); }
  static Scalar one(Precision p) { return of_int(1, p); }

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Precision prec() const { return max_prec(re_.prec(), im_.prec()); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.im_.is_zero() && b.im_.is_zero()) {
      Scalar r(max_prec(a.prec(), b.prec()));
      r.re_ = a.re_ * b.re_;
      return r;
    }
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar operator-() const { return {-re_, -im_}; }
  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

  Scalar conj() const { return {re_, -im_}; }
  Real abs2() const { return re_ * re_ + im_ * im_; }
  Real abs() const { return Real::hypot(re_, im_); }

  Scalar inverse() const {
    Real d = abs2();
    if (d.is_zero()) throw numeric_error("division by zero Scalar");
    return {re_ / d, -im_ / d};
  }

  // sin(x+iy) = sin x cosh y + i cos x sinh y
  static Scalar sin(const Scalar& z) {
    if (z.im_.is_zero()) return Scalar(Real::sin(z.re_));
    return {Real::sin(z.re_) * Real::cosh(z.im_), Real::cos(z.re_) * Real::sinh(z.im_)};
  }
  static Scalar cos(const Scalar& z) {
    if (z.im_.is_zero()) return Scalar(Real::cos(z.re_));
    return {Real::cos(z.re_) * Real::cosh(z.im_), -(Real::sin(z.re_) * Real::sinh(z.im_))};
  }

  Scalar pow_int(long n) const {
    Precision p = prec();
    if (n < 0) return inverse().pow_int(-n);
    Scalar acc = Scalar::one(p);
    Scalar base = *this;
    unsigned long e = static_cast<unsigned long>(n);
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  std::string str(int sig_digits = 50) const {
    if (im_.is_zero()) return re_.str(sig_digits);
    return re_.str(sig_digits) + (im_.sign() < 0 ? "" : "+") + im_.str(sig_digits) + "i";
  }

 private:
  Real re_, im_;
};

// |x - y| / max(|y|, tiny) as a Real; the deviation measure used by every
// cross-method comparison in the repository.
inline Real rel_dev(const Scalar& x, const Scalar& y) {
  Real num = (x - y).abs();
  Real den = y.abs();
  if (den.is_zero()) return num;
  return num / den;
}

inline Real abs_dev(const Scalar& x, const Scalar& y) { return (x - y).abs(); }

}  // namespace sixv

#endif
