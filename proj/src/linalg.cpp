#include "qgame/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace qgame {

namespace {

bool all_finite(const Mat2& m) {
  for (const auto& row : m)
    for (const auto& e : row)
      if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
  return true;
}

bool all_finite(const Mat4& m) {
  for (const auto& row : m)
    for (const auto& e : row)
      if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
  return true;
}

Mat4 mul_raw(const Mat4& a, const Mat4& b) {
  Mat4 c{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const Complex aik = a[i][k];
      if (aik == Complex{}) continue;
      for (int j = 0; j < 4; ++j) c[i][j] += aik * b[k][j];
    }
  return c;
}

Mat4 dagger_raw(const Mat4& m) {
  Mat4 d{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) d[i][j] = std::conj(m[j][i]);
  return d;
}

double max_abs_entry(const Mat4& m) {
  double mx = 0.0;
  for (const auto& row : m)
    for (const auto& e : row) mx = std::max(mx, std::abs(e));
  return mx;
}

bool is_involutory(const Mat4& g, double tol) {
  const Mat4 g2 = mul_raw(g, g);
  const Mat4 id = identity4();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (std::abs(g2[i][j] - id[i][j]) > tol) return false;
  return true;
}

void require_hermitian(const Mat4& g) {
  if (!is_hermitian(g, kUnitaryTol))
    throw std::invalid_argument("unitary_exp: generator is not Hermitian");
}

}  // namespace

Mat2 identity2() {
  Mat2 m{};
  m[0][0] = m[1][1] = 1.0;
  return m;
}

Mat4 identity4() {
  Mat4 m{};
  for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
  return m;
}

bool is_unitary(const Mat2& m, double tol) {
  if (!all_finite(m)) return false;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Complex e{};
      for (int k = 0; k < 2; ++k) e += std::conj(m[k][i]) * m[k][j];
      if (std::abs(e - (i == j ? Complex{1.0} : Complex{})) > tol) return false;
    }
  return true;
}

bool is_unitary(const Mat4& m, double tol) {
  if (!all_finite(m)) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Complex e{};
      for (int k = 0; k < 4; ++k) e += std::conj(m[k][i]) * m[k][j];
      if (std::abs(e - (i == j ? Complex{1.0} : Complex{})) > tol) return false;
    }
  return true;
}

bool is_hermitian(const Mat4& m, double tol) {
  if (!all_finite(m)) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (std::abs(m[i][j] - std::conj(m[j][i])) > tol) return false;
  return true;
}

Unitary2::Unitary2(const Mat2& entries) : m_(entries) {
  if (!is_unitary(m_, kUnitaryTol))
    throw std::invalid_argument("Unitary2: matrix is not unitary");
}

Unitary2 Unitary2::identity() { return Unitary2(identity2()); }

Unitary4::Unitary4(const Mat4& entries) : m_(entries) {
  if (!is_unitary(m_, kUnitaryTol))
    throw std::invalid_argument("Unitary4: matrix is not unitary");
}

Unitary4 Unitary4::identity() { return Unitary4(identity4()); }

TwoQubitState::TwoQubitState(const Vec4& amplitudes) : a_(amplitudes) {
  double norm2 = 0.0;
  for (const auto& amp : a_) {
    if (!std::isfinite(amp.real()) || !std::isfinite(amp.imag()))
      throw std::invalid_argument("TwoQubitState: non-finite amplitude");
    norm2 += std::norm(amp);
  }
  if (std::abs(norm2 - 1.0) > kUnitaryTol)
    throw std::invalid_argument("TwoQubitState: state is not normalized");
}

TwoQubitState TwoQubitState::basis(int k) {
  if (k < 0 || k > 3) throw std::invalid_argument("TwoQubitState::basis: index out of range");
  Vec4 a{};
  a[static_cast<size_t>(k)] = 1.0;
  return TwoQubitState(a);
}

Unitary4 tensor2(const Unitary2& a, const Unitary2& b) {
  Mat4 m{};
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2)
          m[2 * i1 + i2][2 * j1 + j2] = a.at(i1, j1) * b.at(i2, j2);
  return Unitary4(m);
}

TwoQubitState apply(const Unitary4& u, const TwoQubitState& s) {
  Vec4 out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i] += u.at(i, j) * s.at(j);
  return TwoQubitState(out);
}

Unitary4 dagger4(const Unitary4& u) { return Unitary4(dagger_raw(u.entries())); }

Unitary4 mul4(const Unitary4& a, const Unitary4& b) {
  return Unitary4(mul_raw(a.entries(), b.entries()));
}

Unitary4 unitary_exp_involutory(double angle, const Unitary4& g) {
  require_hermitian(g.entries());
  if (!is_involutory(g.entries(), kUnitaryTol))
    throw std::invalid_argument("unitary_exp_involutory: generator does not square to I");
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Mat4 m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      m[i][j] = Complex{0.0, s} * g.at(i, j) + (i == j ? Complex{c} : Complex{});
  return Unitary4(m);
}

Unitary4 unitary_exp_series(double angle, const Unitary4& g) {
  require_hermitian(g.entries());

  Mat4 arg{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) arg[i][j] = Complex{0.0, angle} * g.at(i, j);

  // Scale so the max-entry magnitude is <= 0.5, run the power series until
  // the next term drops below 1e-16, then undo by repeated squaring.
  int squarings = 0;
  double norm = max_abs_entry(arg);
  while (norm > 0.5) {
    norm /= 2.0;
    ++squarings;
  }
  const double scale = std::ldexp(1.0, -squarings);
  for (auto& row : arg)
    for (auto& e : row) e *= scale;

  Mat4 sum = identity4();
  Mat4 term = identity4();
  for (int k = 1; k <= 64; ++k) {
    term = mul_raw(term, arg);
    for (auto& row : term)
      for (auto& e : row) e /= static_cast<double>(k);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) sum[i][j] += term[i][j];
    if (max_abs_entry(term) < 1e-16) break;
  }

  for (int s = 0; s < squarings; ++s) sum = mul_raw(sum, sum);
  return Unitary4(sum);
}

Unitary4 unitary_exp(double angle, const Unitary4& g) {
  require_hermitian(g.entries());
  if (is_involutory(g.entries(), kUnitaryTol)) return unitary_exp_involutory(angle, g);
  return unitary_exp_series(angle, g);
}

double concurrence(const TwoQubitState& s) {
  const double c = 2.0 * std::abs(s.at(0) * s.at(3) - s.at(1) * s.at(2));
  return std::min(c, 1.0);
}

}  // namespace qgame
