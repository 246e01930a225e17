#include "uhlmann/qubit.hpp"

#include <algorithm>
#include <cmath>

namespace uhlmann {

BlochVector::BlochVector(Vec3 r) : r_(r) {
  if (!(norm(r) <= 1.0 + kStateTol))
    raise(Errc::invalid_argument, "BlochVector: |r| exceeds the Bloch ball");
}

DensityMatrix::DensityMatrix(const Mat2& m) : m_(m) {
  if (std::abs(m.m[1] - std::conj(m.m[2])) > kStateTol || std::abs(std::imag(m.m[0])) > kStateTol ||
      std::abs(std::imag(m.m[3])) > kStateTol)
    raise(Errc::invalid_argument, "DensityMatrix: not Hermitian");
  const double tr = std::real(m.m[0] + m.m[3]);
  if (std::abs(tr - 1.0) >= 1e-9) raise(Errc::invalid_argument, "DensityMatrix: trace far from 1");
  m_ = (1.0 / tr) * m_;
  // Eigenvalues (1 ± |r|)/2 must lie in [-tol, 1+tol].
  if (norm(bloch()) > 1.0 + 2.0 * kStateTol)
    raise(Errc::invalid_argument, "DensityMatrix: negative eigenvalue");
}

Vec3 DensityMatrix::bloch() const { return 2.0 * pauli_parts(m_).c; }

HSOperator::HSOperator(const Mat2& w) : w_(w) {
  DensityMatrix check(w * adjoint(w));  // throws unless WW† is a valid state
  (void)check;
}

HSOperator HSOperator::from_parts(const DensityMatrix& rho, const Mat2& v) {
  if (!is_unitary(v, 1e-10)) raise(Errc::invalid_argument, "HSOperator: V not unitary");
  return HSOperator(psd_sqrt(rho.mat()) * v);
}

DensityMatrix density_from_bloch(const BlochVector& r) {
  return DensityMatrix(0.5 * (Mat2::identity() + pauli_dot(r.vec())));
}

BlochVector bloch_from_density(const DensityMatrix& rho) { return BlochVector(rho.bloch()); }

SqrtDensity sqrt_density(const DensityMatrix& rho) {
  const Vec3 r = rho.bloch();
  const double rn = std::min(1.0, norm(r));
  const double u = std::sqrt(std::max(0.0, 1.0 - rn * rn));
  SqrtDensity s;
  s.a0 = 0.5 * std::sqrt(1.0 + u);
  s.a = 0.5 * rn / std::sqrt(1.0 + u);  // = sqrt((1-u)/4) without cancellation
  s.n = rn > 1e-15 ? (1.0 / rn) * r : Vec3{0.0, 0.0, 1.0};
  return s;
}

complexd hs_inner(const Mat2& w1, const Mat2& w2) {
  complexd acc = 0.0;
  for (int i = 0; i < 4; ++i) acc += std::conj(w1.m[i]) * w2.m[i];
  return acc;
}

double fidelity_sqrt(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  const Vec3 r1 = rho1.bloch();
  const Vec3 r2 = rho2.bloch();
  const double q1 = std::max(0.0, 1.0 - dot(r1, r1));
  const double q2 = std::max(0.0, 1.0 - dot(r2, r2));
  const double f2 = 0.5 * (1.0 + dot(r1, r2) + std::sqrt(q1 * q2));
  return std::clamp(std::sqrt(std::max(0.0, f2)), 0.0, 1.0);
}

double bures_line_element(double r, double dr, double dn_sq) {
  if (!(r >= 0.0 && r < 1.0))
    raise(Errc::out_of_range, "bures_line_element: r must lie in [0, 1)");
  return dr * dr / (1.0 - r * r) + r * r * dn_sq;
}

}  // namespace uhlmann
