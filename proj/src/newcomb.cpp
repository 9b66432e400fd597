#include "qgame/newcomb.hpp"

namespace qgame {

PayoffMatrix np_matrix(const NewcombInstance& inst) {
  return PayoffMatrix(inst.box1_full, inst.both_when_full, inst.box2_only, inst.penalty);
}

MixedHumanState mixed_state(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("mixed_state: p out of [0,1]");
  const double off = (2.0 * p - 1.0) / 2.0;
  return {p, {{{0.5, off}, {off, 0.5}}}};
}

double mixed_payoff(double p, const PayoffMatrix& m) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("mixed_payoff: p out of [0,1]");
  return 0.25 * (m.alpha() + (2.0 * p - 1.0) * (m.delta() + m.beta()) + m.gamma());
}

double mixed_payoff_via_state(const MixedHumanState& s, const PayoffMatrix& m) {
  // The state entries, read row-major and halved, take the role of the four
  // outcome weights in the A-player observable contraction.
  const Real2x2& r = s.matrix;
  return 0.5 * (m.alpha() * r[0][0] + m.delta() * r[0][1] + m.beta() * r[1][0] +
                m.gamma() * r[1][1]);
}

double prediction_accuracy(const OutcomeProbs& p) { return p.p_cc + p.p_dd; }

NewcombReport solve_np(const NewcombInstance& inst, const NewcombOptions& opts) {
  const PayoffMatrix m = np_matrix(inst);
  const BimatrixGame game = extend_symmetric(m, {"Box1", "Box2"}, {"Box1", "Box2"});
  const ClassicalSolution classical = solve_classical(game);

  NewcombReport report;
  // Under the ordering beta > alpha and gamma > delta the chooser always has
  // a dominant strategy (Box2).
  const int rec = classical.dominant_row.value();
  report.classical_recommendation = game.row_labels[static_cast<size_t>(rec)];
  // A correct predictor lands on the matching column.
  report.classical_payoff = game.row_payoffs[rec][rec];

  const GameConfig cfg(opts.tau, named_unitary(opts.entangler_base), m);
  const StrategyDescriptor z = named_descriptor(StrategyName::SigmaZ);
  report.quantum_equilibrium = verify_nash(cfg, z, z, opts.space, opts.epsilon);
  report.prediction_accuracy =
      prediction_accuracy(outcome_probs(play(cfg, named_unitary(StrategyName::SigmaZ),
                                             named_unitary(StrategyName::SigmaZ))));
  return report;
}

}  // namespace qgame
