#include "qgame/nash.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace qgame {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr size_t kMaxGridStrategies = 10000;

std::string format_pi_fraction(double angle) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10gpi", angle / kPi);
  return buf;
}

// Per-search evaluation context: the entangler and initial state are fixed,
// so precompute them once and reuse across grid points.
class Evaluator {
 public:
  explicit Evaluator(const GameConfig& cfg)
      : payoffs_(cfg.payoffs()),
        j_(entangler(cfg.tau(), cfg.entangler_base())),
        j_dag_(dagger4(j_)),
        psi0_(apply(j_, TwoQubitState::basis(0))) {}

  PayoffPair score(const Unitary2& a, const Unitary2& b) const {
    const TwoQubitState final_state = apply(j_dag_, apply(tensor2(a, b), psi0_));
    return expected_payoffs(outcome_probs(final_state), payoffs_);
  }

 private:
  PayoffMatrix payoffs_;
  Unitary4 j_;
  Unitary4 j_dag_;
  TwoQubitState psi0_;
};

std::vector<Unitary2> resolve_all(std::span<const StrategyDescriptor> grid) {
  std::vector<Unitary2> us;
  us.reserve(grid.size());
  for (const auto& d : grid) us.push_back(descriptor_unitary(d));
  return us;
}

}  // namespace

StrategyDescriptor grid_descriptor(const StrategyParams& p) {
  StrategyDescriptor d;
  d.params = p;
  d.label = "U(" + format_pi_fraction(p.theta) + "," + format_pi_fraction(p.phi) + ")";
  return d;
}

StrategyDescriptor named_descriptor(StrategyName n) {
  StrategyDescriptor d;
  d.name = n;
  d.label = strategy_label(n);
  return d;
}

Unitary2 descriptor_unitary(const StrategyDescriptor& d) {
  if (d.params) return strategy_unitary(*d.params);
  if (d.name) return named_unitary(*d.name);
  throw std::invalid_argument("StrategyDescriptor: neither grid params nor a name set");
}

std::vector<StrategyDescriptor> build_grid(const StrategySpace& space) {
  std::vector<StrategyDescriptor> grid;
  if (space.kind == SpaceKind::ClassicalPure) {
    grid.push_back(named_descriptor(StrategyName::C));
    grid.push_back(named_descriptor(StrategyName::D));
    return grid;
  }

  if (space.theta_steps < 2 || space.phi_steps < 2)
    throw std::invalid_argument("build_grid: step counts must be >= 2");

  grid.reserve(static_cast<size_t>(space.theta_steps) * space.phi_steps + 4);
  for (int i = 0; i < space.theta_steps; ++i) {
    // Endpoints assigned exactly so theta = pi and phi = pi/2 land on the grid.
    const double theta =
        (i == space.theta_steps - 1) ? kPi : kPi * i / (space.theta_steps - 1);
    for (int j = 0; j < space.phi_steps; ++j) {
      const double phi =
          (j == space.phi_steps - 1) ? kPi / 2.0 : (kPi / 2.0) * j / (space.phi_steps - 1);
      grid.push_back(grid_descriptor(StrategyParams(theta, phi)));
    }
  }

  if (space.kind == SpaceKind::TwoParameterPlusNamed) {
    for (StrategyName n : {StrategyName::Hadamard, StrategyName::SigmaX, StrategyName::SigmaY,
                           StrategyName::SigmaZ})
      grid.push_back(named_descriptor(n));
  }
  return grid;
}

std::pair<StrategyDescriptor, double> best_response(const GameConfig& cfg,
                                                    const StrategyDescriptor& opponent,
                                                    const StrategySpace& space,
                                                    PlayerId responder) {
  const auto grid = build_grid(space);
  return best_response(cfg, opponent, grid, responder);
}

std::pair<StrategyDescriptor, double> best_response(const GameConfig& cfg,
                                                    const StrategyDescriptor& opponent,
                                                    std::span<const StrategyDescriptor> grid,
                                                    PlayerId responder) {
  if (grid.empty()) throw std::invalid_argument("best_response: empty grid");
  const Evaluator eval(cfg);
  const Unitary2 opp = descriptor_unitary(opponent);

  size_t best = 0;
  double best_payoff = -std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < grid.size(); ++k) {
    const Unitary2 u = descriptor_unitary(grid[k]);
    const double payoff =
        responder == PlayerId::A ? eval.score(u, opp).a : eval.score(opp, u).b;
    if (payoff > best_payoff) {
      best_payoff = payoff;
      best = k;
    }
  }
  return {grid[best], best_payoff};
}

EquilibriumReport verify_nash(const GameConfig& cfg, const StrategyDescriptor& a,
                              const StrategyDescriptor& b, const StrategySpace& space,
                              double epsilon) {
  const auto grid = build_grid(space);
  return verify_nash(cfg, a, b, grid, space, epsilon);
}

EquilibriumReport verify_nash(const GameConfig& cfg, const StrategyDescriptor& a,
                              const StrategyDescriptor& b,
                              std::span<const StrategyDescriptor> grid,
                              const StrategySpace& space_meta, double epsilon) {
  const Evaluator eval(cfg);
  const Unitary2 ua = descriptor_unitary(a);
  const Unitary2 ub = descriptor_unitary(b);
  const PayoffPair base = eval.score(ua, ub);

  double best_a = -std::numeric_limits<double>::infinity();
  double best_b = -std::numeric_limits<double>::infinity();
  for (const auto& d : grid) {
    const Unitary2 u = descriptor_unitary(d);
    best_a = std::max(best_a, eval.score(u, ub).a);
    best_b = std::max(best_b, eval.score(ua, u).b);
  }

  EquilibriumReport report;
  report.a = a;
  report.b = b;
  report.payoffs = base;
  report.max_unilateral_gain_a = best_a - base.a;
  report.max_unilateral_gain_b = best_b - base.b;
  report.grid = space_meta;
  report.epsilon = epsilon;
  report.is_nash =
      report.max_unilateral_gain_a <= epsilon && report.max_unilateral_gain_b <= epsilon;
  return report;
}

std::vector<EquilibriumReport> search_equilibria(const GameConfig& cfg,
                                                 const StrategySpace& space, double epsilon) {
  const auto grid = build_grid(space);
  return search_equilibria(cfg, grid, space, epsilon);
}

std::vector<EquilibriumReport> search_equilibria(const GameConfig& cfg,
                                                 std::span<const StrategyDescriptor> grid,
                                                 const StrategySpace& space_meta,
                                                 double epsilon) {
  const size_t n = grid.size();
  if (n > kMaxGridStrategies)
    throw GridTooLarge("search_equilibria: grid exceeds 10^4 strategies per player");
  if (n == 0) return {};

  const Evaluator eval(cfg);
  const std::vector<Unitary2> us = resolve_all(grid);

  // Pass 1: per-column best payoff for A, per-row best payoff for B.
  std::vector<double> col_best_a(n, -std::numeric_limits<double>::infinity());
  std::vector<double> row_best_b(n, -std::numeric_limits<double>::infinity());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const PayoffPair p = eval.score(us[i], us[j]);
      col_best_a[j] = std::max(col_best_a[j], p.a);
      row_best_b[i] = std::max(row_best_b[i], p.b);
    }

  // Pass 2: keep pairs within epsilon of both best responses.
  std::vector<EquilibriumReport> found;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const PayoffPair p = eval.score(us[i], us[j]);
      const double gain_a = col_best_a[j] - p.a;
      const double gain_b = row_best_b[i] - p.b;
      if (gain_a <= epsilon && gain_b <= epsilon) {
        EquilibriumReport report;
        report.a = grid[i];
        report.b = grid[j];
        report.payoffs = p;
        report.max_unilateral_gain_a = gain_a;
        report.max_unilateral_gain_b = gain_b;
        report.grid = space_meta;
        report.epsilon = epsilon;
        report.is_nash = true;
        found.push_back(std::move(report));
      }
    }
  return found;
}

TauSweep sweep_tau(const GameConfig& cfg_base, const StrategyDescriptor& a,
                   const StrategyDescriptor& b, int steps) {
  if (steps < 2) throw std::invalid_argument("sweep_tau: steps must be >= 2");
  const Unitary2 ua = descriptor_unitary(a);
  const Unitary2 ub = descriptor_unitary(b);

  TauSweep sweep;
  sweep.tau_values.reserve(static_cast<size_t>(steps));
  sweep.payoff_pairs.reserve(static_cast<size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    const double tau = (k == steps - 1) ? kPi / 2.0 : (kPi / 2.0) * k / (steps - 1);
    const GameConfig cfg(tau, cfg_base.entangler_base(), cfg_base.payoffs());
    sweep.tau_values.push_back(tau);
    sweep.payoff_pairs.push_back(play_and_score(cfg, ua, ub).second);
  }
  return sweep;
}

}  // namespace qgame
