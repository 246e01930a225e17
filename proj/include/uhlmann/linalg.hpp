#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "uhlmann/error.hpp"

namespace uhlmann {

using complexd = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

// 2x2 complex matrix, row-major storage.
struct Mat2 {
  std::array<complexd, 4> m{};

  complexd& operator()(int r, int c) { return m[2 * r + c]; }
  const complexd& operator()(int r, int c) const { return m[2 * r + c]; }

  static Mat2 identity() { return Mat2{{complexd(1.0), complexd(0.0), complexd(0.0), complexd(1.0)}}; }
  static Mat2 zero() { return Mat2{}; }
};

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
  return Mat2{{a.m[0] + b.m[0], a.m[1] + b.m[1], a.m[2] + b.m[2], a.m[3] + b.m[3]}};
}
inline Mat2 operator-(const Mat2& a, const Mat2& b) {
  return Mat2{{a.m[0] - b.m[0], a.m[1] - b.m[1], a.m[2] - b.m[2], a.m[3] - b.m[3]}};
}
inline Mat2 operator*(const complexd& s, const Mat2& a) {
  return Mat2{{s * a.m[0], s * a.m[1], s * a.m[2], s * a.m[3]}};
}
inline Mat2 operator*(double s, const Mat2& a) { return complexd(s) * a; }
inline Mat2 operator*(const Mat2& a, const Mat2& b) {
  return Mat2{{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
               a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
}

inline Mat2 adjoint(const Mat2& a) {
  return Mat2{{std::conj(a.m[0]), std::conj(a.m[2]), std::conj(a.m[1]), std::conj(a.m[3])}};
}
inline complexd trace(const Mat2& a) { return a.m[0] + a.m[3]; }
inline complexd det(const Mat2& a) { return a.m[0] * a.m[3] - a.m[1] * a.m[2]; }

inline double frobenius_norm(const Mat2& a) {
  return std::sqrt(std::norm(a.m[0]) + std::norm(a.m[1]) + std::norm(a.m[2]) + std::norm(a.m[3]));
}
inline double max_abs_diff(const Mat2& a, const Mat2& b) {
  double d = 0.0;
  for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(a.m[i] - b.m[i]));
  return d;
}

inline Mat2 pauli_x() { return Mat2{{complexd(0.0), complexd(1.0), complexd(1.0), complexd(0.0)}}; }
inline Mat2 pauli_y() {
  return Mat2{{complexd(0.0), complexd(0.0, -1.0), complexd(0.0, 1.0), complexd(0.0)}};
}
inline Mat2 pauli_z() { return Mat2{{complexd(1.0), complexd(0.0), complexd(0.0), complexd(-1.0)}}; }

// v·σ for real v.
inline Mat2 pauli_dot(const Vec3& v) {
  return Mat2{{complexd(v.z), complexd(v.x, -v.y), complexd(v.x, v.y), complexd(-v.z)}};
}

// Hermitian decomposition M = c0·I + c·σ (assumes M Hermitian).
struct PauliParts {
  double c0;
  Vec3 c;
};
inline PauliParts pauli_parts(const Mat2& h) {
  return {0.5 * std::real(h.m[0] + h.m[3]),
          {std::real(h.m[1]), -std::imag(h.m[1]), 0.5 * std::real(h.m[0] - h.m[3])}};
}

// exp(-i angle u·σ) = cos(angle) I - i sin(angle) u·σ, u a unit vector.
inline Mat2 axis_rotation(const Vec3& u, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return c * Mat2::identity() + complexd(0.0, -s) * pauli_dot(u);
}

// Square root of a Hermitian positive semidefinite matrix, closed form.
inline Mat2 psd_sqrt(const Mat2& h) {
  const auto [c0, c] = pauli_parts(h);
  const double cn = norm(c);
  const double lp = std::max(0.0, c0 + cn);
  const double lm = std::max(0.0, c0 - cn);
  const double s0 = 0.5 * (std::sqrt(lp) + std::sqrt(lm));
  const double s1 = 0.5 * (std::sqrt(lp) - std::sqrt(lm));
  if (cn < 1e-300) return s0 * Mat2::identity();
  return s0 * Mat2::identity() + (s1 / cn) * pauli_dot(c);
}

// Inverse square root of a Hermitian positive definite matrix.
inline Mat2 psd_inv_sqrt(const Mat2& h) {
  const auto [c0, c] = pauli_parts(h);
  const double cn = norm(c);
  const double lp = c0 + cn;
  const double lm = c0 - cn;
  if (lm <= 0.0) raise(Errc::singular_state, "psd_inv_sqrt: matrix not positive definite");
  const double s0 = 0.5 * (1.0 / std::sqrt(lp) + 1.0 / std::sqrt(lm));
  const double s1 = 0.5 * (1.0 / std::sqrt(lp) - 1.0 / std::sqrt(lm));
  if (cn < 1e-300) return s0 * Mat2::identity();
  return s0 * Mat2::identity() + (s1 / cn) * pauli_dot(c);
}

// Unitary polar factor M (M†M)^(-1/2); projects a near-unitary matrix back onto U(2).
inline Mat2 polar_unitary(const Mat2& m) { return m * psd_inv_sqrt(adjoint(m) * m); }

inline bool is_unitary(const Mat2& m, double tol) {
  return frobenius_norm(adjoint(m) * m - Mat2::identity()) <= tol;
}

// Map an angle to the principal branch (-pi, pi].
inline double principal_angle(double a) {
  double r = std::remainder(a, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

}  // namespace uhlmann
