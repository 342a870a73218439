#include "xebspoof/gates.hpp"

#include <stdexcept>

namespace xeb {

char pauli_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

Matrix2cd pauli_matrix(Pauli p) {
  const Complex i(0, 1);
  Matrix2cd m;
  switch (p) {
  case Pauli::I:
    m << 1, 0, 0, 1;
    break;
  case Pauli::X:
    m << 0, 1, 1, 0;
    break;
  case Pauli::Y:
    m << 0, i, -i, 0;
    break;
  case Pauli::Z:
    m << 1, 0, 0, -1;
    break;
  }
  return m;
}

Unitary2Q kron(const Matrix2cd &a, const Matrix2cd &b) {
  Unitary2Q out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      out(r, c) = a(r / 2, c / 2) * b(r % 2, c % 2);
  return out;
}

Unitary2Q identity_gate() { return Unitary2Q::Identity(); }

Unitary2Q hadamard_pair() {
  Matrix2cd h;
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  return kron(h, h);
}

Rational fourth_moment_reference(int xa, int xb, int xc, int xd, int ya, int yb,
                                 int yc, int yd) {
  for (int v : {xa, xb, xc, xd, ya, yb, yc, yd})
    if (v < 0 || v > 3)
      throw std::out_of_range("wire-pair index must be in {0,1,2,3}");
  auto delta = [](int a, int b) { return a == b ? 1 : 0; };
  const int same = delta(xa, xb) * delta(xc, xd) * delta(ya, yb) * delta(yc, yd) +
                   delta(xa, xd) * delta(xb, xc) * delta(ya, yd) * delta(yb, yc);
  const int mixed =
      delta(xa, xb) * delta(xc, xd) * delta(ya, yd) * delta(yb, yc) +
      delta(xa, xd) * delta(xb, xc) * delta(ya, yb) * delta(yc, yd);
  return Rational(same, 15) - Rational(mixed, 60);
}

} // namespace xeb
