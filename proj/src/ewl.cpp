#include "qgame/ewl.hpp"

#include <cmath>
#include <numbers>

namespace qgame {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

StrategyParams::StrategyParams(double theta_in, double phi_in) : theta(theta_in), phi(phi_in) {
  if (!(theta >= 0.0 && theta <= kPi))
    throw std::invalid_argument("StrategyParams: theta out of [0, pi]");
  if (!(phi >= 0.0 && phi <= kPi / 2.0))
    throw std::invalid_argument("StrategyParams: phi out of [0, pi/2]");
}

Unitary2 strategy_unitary(const StrategyParams& s) {
  const double c = std::cos(s.theta / 2.0);
  const double sn = std::sin(s.theta / 2.0);
  const Complex eip = std::polar(1.0, s.phi);
  Mat2 m{};
  m[0][0] = eip * c;
  m[0][1] = sn;
  m[1][0] = -sn;
  m[1][1] = std::conj(eip) * c;
  return Unitary2(m);
}

NamedStrategy named_strategy(StrategyName n) {
  switch (n) {
    case StrategyName::C:
    case StrategyName::D:
    case StrategyName::Q:
      return {n, true, true};
    case StrategyName::SigmaZ:
      return {n, false, true};  // Q = i * sigma_z
    default:
      return {n, false, false};
  }
}

Unitary2 named_unitary(StrategyName n) {
  Mat2 m{};
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  switch (n) {
    case StrategyName::C:
      return Unitary2::identity();
    case StrategyName::D:
      m[0][1] = 1.0;
      m[1][0] = -1.0;
      break;
    case StrategyName::Q:
      m[0][0] = Complex{0.0, 1.0};
      m[1][1] = Complex{0.0, -1.0};
      break;
    case StrategyName::Hadamard:
      m[0][0] = m[0][1] = m[1][0] = inv_sqrt2;
      m[1][1] = -inv_sqrt2;
      break;
    case StrategyName::SigmaX:
      m[0][1] = m[1][0] = 1.0;
      break;
    case StrategyName::SigmaY:
      m[0][1] = Complex{0.0, -1.0};
      m[1][0] = Complex{0.0, 1.0};
      break;
    case StrategyName::SigmaZ:
      m[0][0] = 1.0;
      m[1][1] = -1.0;
      break;
  }
  return Unitary2(m);
}

const char* strategy_label(StrategyName n) {
  switch (n) {
    case StrategyName::C: return "C";
    case StrategyName::D: return "D";
    case StrategyName::Q: return "Q";
    case StrategyName::Hadamard: return "H";
    case StrategyName::SigmaX: return "X";
    case StrategyName::SigmaY: return "Y";
    case StrategyName::SigmaZ: return "Z";
  }
  return "?";
}

GameConfig::GameConfig(double tau, const Unitary2& entangler_base, const PayoffMatrix& payoffs)
    : tau_(tau), base_(entangler_base), payoffs_(payoffs) {
  if (!(tau_ >= 0.0 && tau_ <= kPi / 2.0))
    throw std::invalid_argument("GameConfig: tau out of [0, pi/2]");
  if (!is_hermitian(tensor2(base_, base_).entries(), kUnitaryTol))
    throw NonHermitianBase("GameConfig: entangler base x base is not Hermitian");
}

Unitary4 entangler(double tau, const Unitary2& base) {
  if (!(tau >= 0.0 && tau <= kPi / 2.0))
    throw std::invalid_argument("entangler: tau out of [0, pi/2]");
  const Unitary4 g = tensor2(base, base);
  if (!is_hermitian(g.entries(), kUnitaryTol))
    throw NonHermitianBase("entangler: base x base is not Hermitian");
  return unitary_exp(tau / 2.0, g);
}

TwoQubitState play(const GameConfig& cfg, const Unitary2& u_a, const Unitary2& u_b) {
  const Unitary4 j = entangler(cfg.tau(), cfg.entangler_base());
  const TwoQubitState psi0 = apply(j, TwoQubitState::basis(0));
  const TwoQubitState moved = apply(tensor2(u_a, u_b), psi0);
  return apply(dagger4(j), moved);
}

OutcomeProbs OutcomeProbs::make(double p_cc, double p_cd, double p_dc, double p_dd) {
  for (double p : {p_cc, p_cd, p_dc, p_dd})
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("OutcomeProbs: entry out of [0,1]");
  if (std::abs(p_cc + p_cd + p_dc + p_dd - 1.0) > 1e-12)
    throw std::invalid_argument("OutcomeProbs: probabilities do not sum to 1");
  return {p_cc, p_cd, p_dc, p_dd};
}

OutcomeProbs outcome_probs(const TwoQubitState& s) {
  return OutcomeProbs::make(std::norm(s.at(0)), std::norm(s.at(1)), std::norm(s.at(2)),
                            std::norm(s.at(3)));
}

PayoffPair expected_payoffs(const OutcomeProbs& p, const PayoffMatrix& m) {
  PayoffPair out{};
  out.a = m.alpha() * p.p_cc + m.delta() * p.p_cd + m.beta() * p.p_dc + m.gamma() * p.p_dd;
  out.b = m.alpha() * p.p_cc + m.beta() * p.p_cd + m.delta() * p.p_dc + m.gamma() * p.p_dd;
  return out;
}

std::pair<OutcomeProbs, PayoffPair> play_and_score(const GameConfig& cfg, const Unitary2& u_a,
                                                   const Unitary2& u_b) {
  const OutcomeProbs p = outcome_probs(play(cfg, u_a, u_b));
  return {p, expected_payoffs(p, cfg.payoffs())};
}

}  // namespace qgame
