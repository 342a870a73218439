#pragma once

#include <array>
#include <cmath>
#include <random>

#include <Eigen/QR>

#include "xebspoof/common.hpp"
#include "xebspoof/random.hpp"

namespace xeb {

enum class Pauli : int { I = 0, X = 1, Y = 2, Z = 3 };

inline constexpr std::array<Pauli, 4> all_paulis{Pauli::I, Pauli::X, Pauli::Y,
                                                 Pauli::Z};

char pauli_char(Pauli p);

/// 2x2 matrix of a Pauli label, with Y = [[0, i], [-i, 0]].
Matrix2cd pauli_matrix(Pauli p);

/// Two-qubit gate on a wire pair, basis |00>,|01>,|10>,|11> with the first
/// wire of the pair on the high bit.
using Unitary2Q = Matrix4cd;

/// Max-entry deviation of U^dagger U from the identity allowed for Unitary2Q.
inline constexpr double kUnitarityTolerance = 1e-12;

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived> &u,
                double tol = kUnitarityTolerance) {
  using Plain = typename Derived::PlainObject;
  Plain gram = u.adjoint() * u;
  return (gram - Plain::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <=
         tol;
}

/// Haar-random 4x4 unitary. A complex Ginibre matrix is QR-factored and the
/// phases of R's diagonal are folded back into Q, which makes the result
/// exactly Haar distributed rather than biased by the QR sign convention.
template <typename Scalar = double>
typename math_types<Scalar>::Matrix4c haar_unitary(Rng &rng) {
  using T = math_types<Scalar>;
  std::normal_distribution<Scalar> gauss(Scalar(0), std::sqrt(Scalar(0.5)));
  for (;;) {
    typename T::Matrix4c g;
    for (int c = 0; c < 4; ++c)
      for (int r = 0; r < 4; ++r) {
        Scalar re = gauss(rng);
        Scalar im = gauss(rng);
        g(r, c) = typename T::Complex(re, im);
      }
    Eigen::HouseholderQR<typename T::Matrix4c> qr(g);
    typename T::Matrix4c q = qr.householderQ();
    const auto &r = qr.matrixQR();
    bool degenerate = false;
    for (int k = 0; k < 4; ++k) {
      Scalar mag = std::abs(r(k, k));
      if (!(mag > Scalar(1e-10))) {
        degenerate = true;
        break;
      }
      q.col(k) *= r(k, k) / mag;
    }
    if (!degenerate)
      return q;
  }
}

/// I (x) I, H (x) H and similar fixed gates used by tests and the CLI.
Unitary2Q identity_gate();
Unitary2Q hadamard_pair();

/// Kronecker product a (x) b with `a` on the high bit.
Unitary2Q kron(const Matrix2cd &a, const Matrix2cd &b);

/// E[U(xa,ya) conj(U(xb,yb)) U(xc,yc) conj(U(xd,yd))] over Haar-random 4x4
/// U, exactly. Indices are in {0,1,2,3}.
Rational fourth_moment_reference(int xa, int xb, int xc, int xd, int ya, int yb,
                                 int yc, int yd);

} // namespace xeb
