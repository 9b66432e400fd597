// Newcomb's problem as a symmetric game: one-boxing maps to C, two-boxing to
// D, the predictor plays the column side. The classical analysis recommends
// the dominant strategy; the quantum analysis certifies the (sigma_z, sigma_z)
// pair on the configured grid and reports how often the predictor's outcome
// matches the chooser's (the diagonal outcome mass).

#pragma once

#include <string>

#include "qgame/nash.hpp"

namespace qgame {

struct NewcombInstance {
  double box1_full;       // alpha: opaque box filled, taken alone
  double both_when_full;  // beta: both boxes while the opaque one is full
  double box2_only;       // gamma: the transparent box alone
  double penalty;         // delta <= 0: charged when the prediction goes wrong
};

// Box1 maps to C, Box2 to D.
PayoffMatrix np_matrix(const NewcombInstance& inst);

// Chooser mixes Box1 with probability p; the resulting intermediate state is
// the real symmetric matrix (1/2) [[1, 2p-1], [2p-1, 1]].
struct MixedHumanState {
  double p;
  Real2x2 matrix;
};

MixedHumanState mixed_state(double p);

// Closed form (1/4) [alpha + (2p-1)(delta + beta) + gamma].
double mixed_payoff(double p, const PayoffMatrix& m);

// Same value computed by contracting the observable weights
// (alpha, delta, beta, gamma) against the state entries; the two routes must
// coincide.
double mixed_payoff_via_state(const MixedHumanState& s, const PayoffMatrix& m);

// Probability mass on the diagonal outcomes (both sides picking the same box).
double prediction_accuracy(const OutcomeProbs& p);

struct NewcombOptions {
  double tau = 1.5707963267948966;  // pi/2
  StrategyName entangler_base = StrategyName::D;
  StrategySpace space{};
  double epsilon = 1e-9;
};

struct NewcombReport {
  std::string classical_recommendation;  // "Box1" or "Box2"
  double classical_payoff = 0.0;         // against a correct predictor
  EquilibriumReport quantum_equilibrium;
  double prediction_accuracy = 0.0;  // at the quantum equilibrium pair
};

NewcombReport solve_np(const NewcombInstance& inst, const NewcombOptions& opts = {});

}  // namespace qgame
