// Dense complex linear algebra for two-qubit games: 2x2 and 4x4 unitaries,
// state vectors in the ordered basis |00>, |01>, |10>, |11>, tensor products,
// matrix exponentials and a concurrence measure. Everything is double
// precision and validated at construction.

#pragma once

#include <array>
#include <complex>

namespace qgame {

using Complex = std::complex<double>;
using Mat2 = std::array<std::array<Complex, 2>, 2>;
using Mat4 = std::array<std::array<Complex, 4>, 4>;
using Vec4 = std::array<Complex, 4>;

// Identity-level checks use kUnitaryTol; composed expressions (products of
// several operators) are allowed kComposedTol.
inline constexpr double kUnitaryTol = 1e-12;
inline constexpr double kComposedTol = 1e-10;

Mat2 identity2();
Mat4 identity4();

bool is_unitary(const Mat2& m, double tol = kUnitaryTol);
bool is_unitary(const Mat4& m, double tol = kUnitaryTol);
bool is_hermitian(const Mat4& m, double tol = kUnitaryTol);

// 2x2 complex matrix with U†U = I enforced at construction.
class Unitary2 {
 public:
  explicit Unitary2(const Mat2& entries);
  static Unitary2 identity();

  const Mat2& entries() const { return m_; }
  Complex at(int r, int c) const { return m_[r][c]; }

 private:
  Mat2 m_;
};

// 4x4 complex matrix with U†U = I enforced at construction.
class Unitary4 {
 public:
  explicit Unitary4(const Mat4& entries);
  static Unitary4 identity();

  const Mat4& entries() const { return m_; }
  Complex at(int r, int c) const { return m_[r][c]; }

 private:
  Mat4 m_;
};

// Normalized two-qubit pure state. Index k encodes the basis ket |k1 k0>
// with qubit A as the high bit: 0 -> |00>, 1 -> |01>, 2 -> |10>, 3 -> |11>.
class TwoQubitState {
 public:
  explicit TwoQubitState(const Vec4& amplitudes);
  static TwoQubitState basis(int k);

  const Vec4& amplitudes() const { return a_; }
  Complex at(int k) const { return a_[k]; }

 private:
  Vec4 a_;
};

// Kronecker product a ⊗ b; the first factor acts on qubit A.
Unitary4 tensor2(const Unitary2& a, const Unitary2& b);

TwoQubitState apply(const Unitary4& u, const TwoQubitState& s);

Unitary4 dagger4(const Unitary4& u);

Unitary4 mul4(const Unitary4& a, const Unitary4& b);

// exp(i*angle*g) for Hermitian g. Dispatches to the closed form
// cos(angle)*I + i*sin(angle)*g when g*g = I, otherwise to the
// scaling-and-squaring power series. Both paths are also exposed directly so
// they can be cross-checked against each other.
Unitary4 unitary_exp(double angle, const Unitary4& g);
Unitary4 unitary_exp_involutory(double angle, const Unitary4& g);
Unitary4 unitary_exp_series(double angle, const Unitary4& g);

// 2|a00*a11 - a01*a10|: 0 on product states, 1 on maximally entangled ones.
double concurrence(const TwoQubitState& s);

}  // namespace qgame
