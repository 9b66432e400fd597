// The EWL (Eisert-Wilkens-Lewenstein) protocol engine. A game instance is an
// entanglement angle tau in [0, pi/2], an entangler base U~ and a payoff
// matrix. Play entangles |00> with J = exp(i*tau*(U~ x U~)/2), applies the
// players' local unitaries, disentangles with J† and measures in the
// computational basis. tau = 0 is the classical game, tau = pi/2 the
// maximally entangled one.

#pragma once

#include <utility>

#include "qgame/linalg.hpp"
#include "qgame/payoff.hpp"

namespace qgame {

class NonHermitianBase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two-parameter strategy family
//   U(theta, phi) = [ e^{i phi} cos(theta/2)   sin(theta/2)           ]
//                   [ -sin(theta/2)            e^{-i phi} cos(theta/2) ]
// with theta in [0, pi], phi in [0, pi/2].
struct StrategyParams {
  StrategyParams(double theta, double phi);
  double theta;
  double phi;
};

Unitary2 strategy_unitary(const StrategyParams& s);

enum class StrategyName { C, D, Q, Hadamard, SigmaX, SigmaY, SigmaZ };

// Membership of the named strategies in the two-parameter family:
// C = U(0,0), D = U(pi,0), Q = U(0,pi/2) are exact members; sigma_z equals Q
// only up to the global phase i; H, sigma_x, sigma_y are outside the family.
struct NamedStrategy {
  StrategyName tag;
  bool in_two_parameter_family;
  bool family_up_to_global_phase;
};

NamedStrategy named_strategy(StrategyName n);
Unitary2 named_unitary(StrategyName n);
const char* strategy_label(StrategyName n);

class GameConfig {
 public:
  // Requires tau in [0, pi/2] and base x base Hermitian.
  GameConfig(double tau, const Unitary2& entangler_base, const PayoffMatrix& payoffs);

  double tau() const { return tau_; }
  const Unitary2& entangler_base() const { return base_; }
  const PayoffMatrix& payoffs() const { return payoffs_; }

 private:
  double tau_;
  Unitary2 base_;
  PayoffMatrix payoffs_;
};

// J = exp(i*tau*(base x base)/2).
Unitary4 entangler(double tau, const Unitary2& base);

// |psi_f> = J† (u_a x u_b) J |00>.
TwoQubitState play(const GameConfig& cfg, const Unitary2& u_a, const Unitary2& u_b);

struct OutcomeProbs {
  double p_cc, p_cd, p_dc, p_dd;

  // Validates each entry in [0,1] and the sum within 1e-12 of 1.
  static OutcomeProbs make(double p_cc, double p_cd, double p_dc, double p_dd);
};

OutcomeProbs outcome_probs(const TwoQubitState& s);

struct PayoffPair {
  double a, b;
};

// A's observable weights the outcomes (cc, cd, dc, dd) with
// (alpha, delta, beta, gamma); B's swaps delta and beta.
PayoffPair expected_payoffs(const OutcomeProbs& p, const PayoffMatrix& m);

std::pair<OutcomeProbs, PayoffPair> play_and_score(const GameConfig& cfg, const Unitary2& u_a,
                                                   const Unitary2& u_b);

}  // namespace qgame
