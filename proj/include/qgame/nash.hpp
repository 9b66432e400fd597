// Numerical Nash-equilibrium machinery over discretized strategy spaces:
// grid construction, best response, equilibrium verification/search and
// tau sweeps. All evaluations are pure and deterministic; ties are broken by
// the lowest grid index (theta-major, then phi, then named order).

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qgame/ewl.hpp"

namespace qgame {

class GridTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SpaceKind { TwoParameterFamily, TwoParameterPlusNamed, ClassicalPure };

struct StrategySpace {
  SpaceKind kind = SpaceKind::TwoParameterFamily;
  int theta_steps = 65;
  int phi_steps = 33;
};

// One candidate strategy: either a grid point of the two-parameter family or
// a named strategy.
struct StrategyDescriptor {
  std::optional<StrategyParams> params;
  std::optional<StrategyName> name;
  std::string label;
};

StrategyDescriptor grid_descriptor(const StrategyParams& p);
StrategyDescriptor named_descriptor(StrategyName n);
Unitary2 descriptor_unitary(const StrategyDescriptor& d);

// Uniform theta x phi grid including both endpoints of [0, pi] and [0, pi/2];
// ClassicalPure yields exactly {C, D}; TwoParameterPlusNamed appends
// {H, sigma_x, sigma_y, sigma_z} after the grid.
std::vector<StrategyDescriptor> build_grid(const StrategySpace& space);

enum class PlayerId { A, B };

// Argmax of the responder's payoff against the fixed opponent strategy.
std::pair<StrategyDescriptor, double> best_response(const GameConfig& cfg,
                                                    const StrategyDescriptor& opponent,
                                                    const StrategySpace& space,
                                                    PlayerId responder);
std::pair<StrategyDescriptor, double> best_response(const GameConfig& cfg,
                                                    const StrategyDescriptor& opponent,
                                                    std::span<const StrategyDescriptor> grid,
                                                    PlayerId responder);

struct EquilibriumReport {
  StrategyDescriptor a, b;
  PayoffPair payoffs{};
  // Best grid deviation minus the current payoff, per player; can be
  // negative when the pair beats every grid alternative.
  double max_unilateral_gain_a = 0.0;
  double max_unilateral_gain_b = 0.0;
  StrategySpace grid{};
  double epsilon = 0.0;
  bool is_nash = false;  // both gains <= epsilon
};

EquilibriumReport verify_nash(const GameConfig& cfg, const StrategyDescriptor& a,
                              const StrategyDescriptor& b, const StrategySpace& space,
                              double epsilon);
EquilibriumReport verify_nash(const GameConfig& cfg, const StrategyDescriptor& a,
                              const StrategyDescriptor& b,
                              std::span<const StrategyDescriptor> grid,
                              const StrategySpace& space_meta, double epsilon);

// All grid pairs passing verify_nash, row-major in (a, b) grid indices.
// Guards the per-player grid at 10^4 strategies.
std::vector<EquilibriumReport> search_equilibria(const GameConfig& cfg,
                                                 const StrategySpace& space, double epsilon);
std::vector<EquilibriumReport> search_equilibria(const GameConfig& cfg,
                                                 std::span<const StrategyDescriptor> grid,
                                                 const StrategySpace& space_meta, double epsilon);

struct TauSweep {
  std::vector<double> tau_values;
  std::vector<PayoffPair> payoff_pairs;
};

// Payoffs of the fixed pair at `steps` uniformly spaced tau values spanning
// [0, pi/2], endpoints included. The base config's own tau is ignored.
TauSweep sweep_tau(const GameConfig& cfg_base, const StrategyDescriptor& a,
                   const StrategyDescriptor& b, int steps);

}  // namespace qgame
