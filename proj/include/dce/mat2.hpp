#pragma once

#include <algorithm>
#include <complex>

namespace dce {

using Complex = std::complex<double>;

// 2x2 complex matrix, row-major [[a, b], [c, d]].
struct Mat2 {
  Complex a{}, b{}, c{}, d{};

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  Mat2 operator*(Complex s) const { return {a * s, b * s, c * s, d * s}; }

  Mat2 adjoint() const {
    return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
  }
  Mat2 conjugate() const {
    return {std::conj(a), std::conj(b), std::conj(c), std::conj(d)};
  }
  Complex trace() const { return a + d; }

  double max_abs() const {
    return std::max(std::max(std::abs(a), std::abs(b)),
                    std::max(std::abs(c), std::abs(d)));
  }
};

inline Mat2 operator*(Complex s, const Mat2& m) { return m * s; }

}  // namespace dce
