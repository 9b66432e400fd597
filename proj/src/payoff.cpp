#include "qgame/payoff.hpp"

#include <cmath>
#include <sstream>

namespace qgame {

namespace {

std::string violation_message(const std::string& ineq, double lhs, double rhs) {
  std::ostringstream ss;
  ss << "payoff ordering violated: " << ineq << " (got " << lhs << " vs " << rhs << ")";
  return ss.str();
}

}  // namespace

PayoffMatrix::PayoffMatrix(double alpha, double beta, double gamma, double delta, bool legacy)
    : alpha_(alpha), beta_(beta), gamma_(gamma), delta_(delta), legacy_(legacy) {
  for (double v : {alpha, beta, gamma, delta})
    if (!std::isfinite(v)) throw OrderingViolation("finite", "payoff entry is not finite");
  if (!(beta > alpha)) throw OrderingViolation("beta > alpha", violation_message("beta > alpha", beta, alpha));
  if (!(alpha > gamma)) throw OrderingViolation("alpha > gamma", violation_message("alpha > gamma", alpha, gamma));
  if (!(gamma > delta)) throw OrderingViolation("gamma > delta", violation_message("gamma > delta", gamma, delta));
  if (!legacy && !(delta <= 0.0))
    throw OrderingViolation("delta <= 0", violation_message("delta <= 0", delta, 0.0));
}

MatrixDecomposition decompose(const PayoffMatrix& m) {
  MatrixDecomposition d{};
  d.diagonal_part = {{{m.alpha(), 0.0}, {0.0, m.gamma()}}};
  d.offdiagonal_part = {{{0.0, m.delta()}, {m.beta(), 0.0}}};
  return d;
}

MatrixClass classify(const PayoffMatrix& m) {
  if (m.delta() == -m.beta()) return MatrixClass::QuasiSkewSymmetric;
  if (std::abs(m.delta()) < m.beta()) return MatrixClass::Asymmetric;
  return MatrixClass::GeneralOffDiagonal;
}

BimatrixGame extend_symmetric(const PayoffMatrix& m) {
  return extend_symmetric(m, {"C", "D"}, {"C", "D"});
}

BimatrixGame extend_symmetric(const PayoffMatrix& m,
                              const std::array<std::string, 2>& row_labels,
                              const std::array<std::string, 2>& col_labels) {
  BimatrixGame g;
  g.row_payoffs = {{{m.alpha(), m.delta()}, {m.beta(), m.gamma()}}};
  g.col_payoffs = {{{m.alpha(), m.beta()}, {m.delta(), m.gamma()}}};
  g.row_labels = row_labels;
  g.col_labels = col_labels;
  return g;
}

ClassicalSolution solve_classical(const BimatrixGame& g) {
  ClassicalSolution sol;

  for (int r = 0; r < 2 && !sol.dominant_row; ++r) {
    const int other = 1 - r;
    bool weak = true, strict = true;
    for (int c = 0; c < 2; ++c) {
      weak = weak && g.row_payoffs[r][c] >= g.row_payoffs[other][c];
      strict = strict && g.row_payoffs[r][c] > g.row_payoffs[other][c];
    }
    if (weak) {
      sol.dominant_row = r;
      sol.dominant_row_strict = strict;
    }
  }

  for (int c = 0; c < 2 && !sol.dominant_col; ++c) {
    const int other = 1 - c;
    bool weak = true, strict = true;
    for (int r = 0; r < 2; ++r) {
      weak = weak && g.col_payoffs[r][c] >= g.col_payoffs[r][other];
      strict = strict && g.col_payoffs[r][c] > g.col_payoffs[r][other];
    }
    if (weak) {
      sol.dominant_col = c;
      sol.dominant_col_strict = strict;
    }
  }

  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      const bool row_ok = g.row_payoffs[r][c] >= g.row_payoffs[1 - r][c];
      const bool col_ok = g.col_payoffs[r][c] >= g.col_payoffs[r][1 - c];
      if (row_ok && col_ok) sol.pure_nash.emplace_back(r, c);
    }

  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      const double a = g.row_payoffs[r][c];
      const double b = g.col_payoffs[r][c];
      bool dominated = false;
      for (int r2 = 0; r2 < 2 && !dominated; ++r2)
        for (int c2 = 0; c2 < 2 && !dominated; ++c2) {
          const double a2 = g.row_payoffs[r2][c2];
          const double b2 = g.col_payoffs[r2][c2];
          dominated = a2 >= a && b2 >= b && (a2 > a || b2 > b);
        }
      if (!dominated) sol.pareto_optimal.push_back({r, c, a, b});
    }

  return sol;
}

std::pair<double, double> mixed_payoff_classical(const BimatrixGame& g, double p, double q) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("mixed_payoff_classical: p out of [0,1]");
  if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("mixed_payoff_classical: q out of [0,1]");
  const double pr[2] = {p, 1.0 - p};
  const double qc[2] = {q, 1.0 - q};
  double a = 0.0, b = 0.0;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      a += pr[r] * qc[c] * g.row_payoffs[r][c];
      b += pr[r] * qc[c] * g.col_payoffs[r][c];
    }
  return {a, b};
}

}  // namespace qgame
