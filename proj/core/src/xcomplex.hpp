#pragma once

// Minimal complex arithmetic and log-gamma over Extended. std::complex is only
// specified for the built-in floating types.

#include <array>
#include <cstdint>

#include <boost/math/constants/constants.hpp>

#include "risgg/extended.hpp"

namespace risgg::detail {

struct XComplex {
  Extended re = 0;
  Extended im = 0;
};

inline XComplex operator+(XComplex x, XComplex y) { return {x.re + y.re, x.im + y.im}; }
inline XComplex operator-(XComplex x, XComplex y) { return {x.re - y.re, x.im - y.im}; }
inline XComplex operator-(XComplex x) { return {-x.re, -x.im}; }
inline XComplex operator*(XComplex x, XComplex y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
inline XComplex operator*(const Extended& s, XComplex x) { return {s * x.re, s * x.im}; }
inline XComplex operator/(XComplex x, XComplex y) {
  // Smith's algorithm.
  if (abs(y.re) >= abs(y.im)) {
    Extended r = y.im / y.re;
    Extended d = y.re + y.im * r;
    return {(x.re + x.im * r) / d, (x.im - x.re * r) / d};
  }
  Extended r = y.re / y.im;
  Extended d = y.re * r + y.im;
  return {(x.re * r + x.im) / d, (x.im * r - x.re) / d};
}

inline Extended modulus(XComplex x) { return hypot(x.re, x.im); }

inline XComplex xexp(XComplex x) {
  Extended m = exp(x.re);
  return {m * cos(x.im), m * sin(x.im)};
}

inline XComplex xlog(XComplex x) { return {log(modulus(x)), atan2(x.im, x.re)}; }

/// log sin(w), any branch (callers exponentiate the result).
inline XComplex xlog_sin(XComplex w) {
  const Extended ln2 = boost::math::constants::ln_two<Extended>();
  const Extended half_pi = boost::math::constants::half_pi<Extended>();
  if (abs(w.im) < 30) {
    XComplex s{sin(w.re) * cosh(w.im), cos(w.re) * sinh(w.im)};
    return xlog(s);
  }
  const XComplex iw{-w.im, w.re};
  if (w.im > 0) {
    // sin w = (i/2) e^{-iw} (1 - e^{2iw})
    XComplex tail = xexp(Extended(2) * iw);
    XComplex one_minus{1 - tail.re, -tail.im};
    return -iw + xlog(one_minus) + XComplex{-ln2, half_pi};
  }
  // sin w = (-i/2) e^{iw} (1 - e^{-2iw})
  XComplex tail = xexp(Extended(-2) * iw);
  XComplex one_minus{1 - tail.re, -tail.im};
  return iw + xlog(one_minus) + XComplex{-ln2, -half_pi};
}

/// Principal-ish log Gamma(z) for complex z off the non-positive integers.
/// The imaginary part is correct modulo 2*pi.
inline XComplex xlgamma(XComplex z) {
  const Extended pi = boost::math::constants::pi<Extended>();
  if (z.re < Extended(0.5)) {
    XComplex one_minus{1 - z.re, -z.im};
    XComplex ls = xlog_sin(pi * z);
    return XComplex{log(pi), 0} - ls - xlgamma(one_minus);
  }
  // Shift until |z| >= 20 so fifteen Stirling terms reach ~1e-34.
  XComplex prod{1, 0};
  bool shifted = false;
  while (z.re * z.re + z.im * z.im < Extended(400)) {
    prod = prod * z;
    z.re += 1;
    shifted = true;
  }
  // B_{2k} / (2k (2k-1)) for k = 1..15.
  static const std::array<Extended, 15> coeff = [] {
    constexpr std::array<std::int64_t, 15> num{1,      -1,        1,          -1,
                                               1,      -691,      1,          -3617,
                                               43867,  -174611,   77683,      -236364091,
                                               657931, -3392780147, 1723168255201};
    constexpr std::array<std::int64_t, 15> den{12,     360,       1260,       1680,
                                               1188,   360360,    156,        122400,
                                               244188, 125400,    5796,       1506960,
                                               300,    93960,     2492028};
    std::array<Extended, 15> out{};
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = Extended(num[k]) / Extended(den[k]);
    return out;
  }();
  const XComplex log_z = xlog(z);
  const XComplex inv = XComplex{1, 0} / z;
  const XComplex inv2 = inv * inv;
  XComplex series{0, 0};
  XComplex power = inv;
  for (const auto& c : coeff) {
    series = series + c * power;
    power = power * inv2;
  }
  const Extended half_log_2pi = log(2 * pi) / 2;
  XComplex result = (z - XComplex{Extended(0.5), 0}) * log_z - z + XComplex{half_log_2pi, 0} + series;
  if (shifted) result = result - xlog(prod);
  return result;
}

}  // namespace risgg::detail
