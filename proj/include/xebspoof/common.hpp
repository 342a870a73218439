#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace xeb {

#define XEB_EIGEN_TYPEDEFS(Scalar)                                             \
  using Complex = std::complex<Scalar>;                                        \
  using Matrix2c = Eigen::Matrix<Complex, 2, 2>;                               \
  using Matrix4c = Eigen::Matrix<Complex, 4, 4>;                               \
  using Vector4c = Eigen::Matrix<Complex, 4, 1>;                               \
  using VectorXc = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;                  \
  using VectorXs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>

template <typename Scalar> struct math_types {
  XEB_EIGEN_TYPEDEFS(Scalar);
};

using Complex = std::complex<double>;
using Matrix2cd = Eigen::Matrix2cd;
using Matrix4cd = Eigen::Matrix4cd;
using Matrix16d = Eigen::Matrix<double, 16, 16>;
using VectorXcd = Eigen::VectorXcd;
using VectorXd = Eigen::VectorXd;

/// Exact rational used by the reference formulas and the lower-bound
/// assignment; arbitrary precision so powers like 5^200 stay exact.
using Rational = boost::multiprecision::cpp_rational;

/// Output bitstrings: qubit i (0-based) is bit i of the integer.
using Bits = std::uint64_t;

/// A wiring that cannot form a layered circuit (odd width, bad permutation).
class invalid_architecture : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a configured memory cap.
class resource_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr bool bit_of(Bits x, int i) { return ((x >> i) & 1U) != 0; }

} // namespace xeb
