#ifndef CHNLAB_GAUSS_RATIONAL_HPP
#define CHNLAB_GAUSS_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace chnlab {

/// Thrown on division by an exact zero. Callers never see a poisoned value.
struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// Gaussian rational a + b*i with exact arbitrary-precision parts, i^2 = -1.
class GaussRational {
 public:
  GaussRational() : re_(0), im_(0) {}
  GaussRational(long v) : re_(v), im_(0) {}  // NOLINT: implicit on purpose
  GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit GaussRational(mpq_class re) : re_(std::move(re)), im_(0) {}

  static GaussRational imaginary_unit() { return GaussRational(mpq_class(0), mpq_class(1)); }
  static GaussRational rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    mpq_class v(num, den);
    v.canonicalize();
    return GaussRational(v);
  }

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussRational operator-() const { return GaussRational(-re_, -im_); }

  GaussRational& operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) {
    if (o.is_zero()) throw DivisionByZero();
    mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
    mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
  friend bool operator<(const GaussRational& a, const GaussRational& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  GaussRational inverse() const {
    GaussRational one(1);
    return one /= *this;
  }

  /// Integer power; negative exponents invert (throws DivisionByZero on 0).
  GaussRational pow(long e) const;

  std::string to_string() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

}  // namespace chnlab

#endif
