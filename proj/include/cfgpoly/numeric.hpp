#pragma once

// Exact scalars: GMP integers and rationals, plus Gaussian (complex) pairs
// over either of them.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>

namespace cfgpoly {

using Integer = mpz_class;
using Rational = mpq_class;

template <class T>
struct Complex {
  T re{0};
  T im{0};

  Complex() = default;
  Complex(T real, T imag = T(0)) : re(std::move(real)), im(std::move(imag)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    T r = re * o.re - im * o.im;
    T i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Complex& operator*=(const T& s) {
    re *= s;
    im *= s;
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator*(Complex a, const T& s) { return a *= s; }
  friend Complex operator-(const Complex& a) { return Complex(T(-a.re), T(-a.im)); }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

using GaussianInteger = Complex<Integer>;
using GaussianRational = Complex<Rational>;

/// Throws std::domain_error when z is zero.
GaussianRational reciprocal(const GaussianRational& z);
GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);

GaussianRational to_rational(const GaussianInteger& z);

/// Always "num/den", including den == 1, so that output is uniform.
std::string fraction_string(const Rational& q);

/// Accepts "a", "-a", "a/b"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

Integer binomial(unsigned long n, unsigned long k);

}  // namespace cfgpoly
