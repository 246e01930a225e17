#pragma once

#include "uhlmann/linalg.hpp"

namespace uhlmann {

// Tolerance for state invariant checks.
inline constexpr double kStateTol = 1e-12;

// Bloch vector r with |r| <= 1 (pure states on the sphere, mixed inside).
class BlochVector {
 public:
  explicit BlochVector(Vec3 r);
  BlochVector(double x, double y, double z) : BlochVector(Vec3{x, y, z}) {}

  const Vec3& vec() const { return r_; }
  double length() const { return norm(r_); }

 private:
  Vec3 r_;
};

// Validated qubit density operator: Hermitian, unit trace, PSD.
// Traces within 1e-9 of unity are renormalized on construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Mat2& m);

  const Mat2& mat() const { return m_; }
  Vec3 bloch() const;

 private:
  Mat2 m_;
};

// sqrt(rho) = a0 + a n·σ in Pauli form; a0² + a² = 1/2 and 2 a0 a = r/2.
struct SqrtDensity {
  double a0 = 0.0;
  double a = 0.0;
  Vec3 n{0.0, 0.0, 1.0};

  Vec3 pauli_vec() const { return a * n; }
  Mat2 mat() const { return a0 * Mat2::identity() + pauli_dot(pauli_vec()); }
};

// Hilbert-Schmidt lift W = sqrt(rho) V; WW† must be a valid density operator.
class HSOperator {
 public:
  explicit HSOperator(const Mat2& w);
  static HSOperator from_parts(const DensityMatrix& rho, const Mat2& v);

  const Mat2& mat() const { return w_; }

 private:
  Mat2 w_;
};

DensityMatrix density_from_bloch(const BlochVector& r);
BlochVector bloch_from_density(const DensityMatrix& rho);

SqrtDensity sqrt_density(const DensityMatrix& rho);

// Tr[W1† W2].
complexd hs_inner(const Mat2& w1, const Mat2& w2);
inline complexd hs_inner(const HSOperator& w1, const HSOperator& w2) {
  return hs_inner(w1.mat(), w2.mat());
}

// Tr sqrt( sqrt(rho2) rho1 sqrt(rho2) ), in [0, 1]; symmetric in its arguments.
double fidelity_sqrt(const DensityMatrix& rho1, const DensityMatrix& rho2);

// ds² = dr²/(1-r²) + r² dn·dn on the Bloch ball, 0 <= r < 1.
double bures_line_element(double r, double dr, double dn_sq);

}  // namespace uhlmann
