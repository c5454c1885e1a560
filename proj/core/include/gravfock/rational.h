#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gravfock {

/// Arbitrary-precision rational; every coefficient in the operator algebra is
/// built from these so that identities compare exactly.
using Rational = boost::multiprecision::cpp_rational;

using RVec3 = std::array<Rational, 3>;
using RVec4 = std::array<Rational, 4>;

std::string to_string(const Rational& q);

/// Parses "3", "-3/4", "0.125", "2.5e-3". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

/// Minkowski square of a contravariant vector, metric diag(1,-1,-1,-1).
Rational minkowski_square(const RVec4& v);

class ComplexRational {
 public:
  ComplexRational() = default;
  ComplexRational(Rational re) : re_(std::move(re)) {}  // NOLINT(implicit)
  ComplexRational(int re) : re_(re) {}                  // NOLINT(implicit)
  ComplexRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static ComplexRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  ComplexRational conj() const { return {re_, -im_}; }
  std::complex<double> to_complex() const { return {to_double(re_), to_double(im_)}; }

  ComplexRational& operator+=(const ComplexRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  /// Throws std::domain_error on division by zero.
  ComplexRational& operator/=(const ComplexRational& o);

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator<(const ComplexRational& a, const ComplexRational& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// "3", "-1/2", "3i", "(1/2+3i)". Parenthesised when both parts are non-zero.
std::string to_string(const ComplexRational& z);

}  // namespace gravfock
