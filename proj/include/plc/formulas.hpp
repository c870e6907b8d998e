#pragma once

// Closed-form principal-line kernels, generic over the scalar so the same
// expressions run in double precision and in exact rational arithmetic.

#include <array>

namespace plc::formulas {

template <class T>
struct LineCoeffs {
  T a;
  T b;
  T c;
};

// Homography route. h holds h1..h9 row-major; h7^2 + h8^2 must be nonzero.
template <class T>
LineCoeffs<T> principal_line_from_entries(const std::array<T, 9>& h) {
  const T& h1 = h[0];
  const T& h2 = h[1];
  const T& h4 = h[3];
  const T& h5 = h[4];
  const T& h7 = h[6];
  const T& h8 = h[7];
  T a = h2 * h7 - h1 * h8;
  T b = h5 * h7 - h4 * h8;
  T num = (h2 * h2 + h5 * h5 - h1 * h1 - h4 * h4) * h7 * h8 + (h1 * h2 + h4 * h5) * (h7 * h7 - h8 * h8);
  T c = -num / (h7 * h7 + h8 * h8);
  return {a, b, c};
}

// Dehomogenized coordinates of the four vanishing points, one axis at a time:
// values[i] is m_{i+1} (or n_{i+1}).
template <class T>
using QuadAxis = std::array<T, 4>;

// m1 + m2 - m3 - m4
template <class T>
T ovp_denominator(const QuadAxis<T>& v) {
  return v[0] + v[1] - v[2] - v[3];
}

// Orthogonal-vanishing-point route. Both denominators must be nonzero.
template <class T>
LineCoeffs<T> principal_line_from_ovps(const QuadAxis<T>& m, const QuadAxis<T>& n) {
  T a = m[1] - m[0];
  T b = n[1] - n[0];
  T fm = (m[0] * m[1] - m[2] * m[3]) / ovp_denominator(m);
  T fn = (n[0] * n[1] - n[2] * n[3]) / ovp_denominator(n);
  T c = -(a * fm + b * fn);
  return {a, b, c};
}

// Limit of the OVP route when Pv1 runs to infinity along (m1, n1); (m2, n2)
// is the finite Pv2. The line passes through Pv2 with normal (m1, n1).
template <class T>
LineCoeffs<T> principal_line_pv1_at_infinity(const T& m1, const T& n1, const T& m2, const T& n2) {
  return {-m1, -n1, m1 * m2 + n1 * n2};
}

// Limit of the OVP route when one member of the second pair runs to
// infinity: each fraction (x1 x2 - x3 x4) / (x1 + x2 - x3 - x4) tends to the
// remaining finite member's coordinate.
template <class T>
LineCoeffs<T> principal_line_second_pair_at_infinity(const T& m1, const T& n1, const T& m2, const T& n2,
                                                     const T& m_finite, const T& n_finite) {
  T a = m2 - m1;
  T b = n2 - n1;
  T c = -(a * m_finite + b * n_finite);
  return {a, b, c};
}

}  // namespace plc::formulas
