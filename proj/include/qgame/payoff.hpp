// Payoff-matrix algebra and the classical 2x2 game solver.
//
// A payoff matrix is the four reals (alpha, beta, gamma, delta) arranged as
//
//        [ alpha  delta ]
//        [ beta   gamma ]
//
// with the ordering beta > alpha > gamma > delta and delta <= 0. The legacy
// flag drops only the delta <= 0 requirement; the strict chain itself already
// admits delta = 0 whenever gamma > 0 (the textbook PD and Newcomb values).

#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qgame {

// Thrown by payoff validation; names the first violated inequality.
class OrderingViolation : public std::invalid_argument {
 public:
  OrderingViolation(std::string inequality, const std::string& message)
      : std::invalid_argument(message), inequality_(std::move(inequality)) {}
  const std::string& inequality() const { return inequality_; }

 private:
  std::string inequality_;
};

class PayoffMatrix {
 public:
  PayoffMatrix(double alpha, double beta, double gamma, double delta, bool legacy = false);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }
  double delta() const { return delta_; }
  bool legacy() const { return legacy_; }

 private:
  double alpha_, beta_, gamma_, delta_;
  bool legacy_;
};

using Real2x2 = std::array<std::array<double, 2>, 2>;

// diag(alpha, gamma) plus [[0, delta], [beta, 0]]; summing the parts
// reconstructs the matrix exactly.
struct MatrixDecomposition {
  Real2x2 diagonal_part;
  Real2x2 offdiagonal_part;
};

enum class MatrixClass { Asymmetric, QuasiSkewSymmetric, GeneralOffDiagonal };

MatrixDecomposition decompose(const PayoffMatrix& m);

// QuasiSkewSymmetric iff delta == -beta exactly; Asymmetric iff |delta| < beta.
MatrixClass classify(const PayoffMatrix& m);

// Two-player 2x2 game. Strategy index 0 is the first label (C / Box1).
struct BimatrixGame {
  Real2x2 row_payoffs;
  Real2x2 col_payoffs;
  std::array<std::string, 2> row_labels{"C", "D"};
  std::array<std::string, 2> col_labels{"C", "D"};
};

// Symmetric extension: the row player gets [[alpha, delta], [beta, gamma]],
// the column player its transpose.
BimatrixGame extend_symmetric(const PayoffMatrix& m);
BimatrixGame extend_symmetric(const PayoffMatrix& m,
                              const std::array<std::string, 2>& row_labels,
                              const std::array<std::string, 2>& col_labels);

struct ClassicalSolution {
  // Weakly dominant strategies (ties resolved to the lower index), with a
  // strictness flag alongside.
  std::optional<int> dominant_row;
  std::optional<int> dominant_col;
  bool dominant_row_strict = false;
  bool dominant_col_strict = false;
  std::vector<std::pair<int, int>> pure_nash;  // row-major order
  struct ParetoCell {
    int row, col;
    double a, b;
  };
  std::vector<ParetoCell> pareto_optimal;  // row-major order
};

ClassicalSolution solve_classical(const BimatrixGame& g);

// Expected payoffs when the row player picks strategy 0 with probability p
// and the column player independently with probability q.
std::pair<double, double> mixed_payoff_classical(const BimatrixGame& g, double p, double q);

}  // namespace qgame
