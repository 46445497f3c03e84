#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "corebound/core_weber.hpp"
#include "corebound/lattice.hpp"
#include "corebound/normal.hpp"
#include "corebound/setsystem.hpp"

namespace instances {

using corebound::Coalition;
using corebound::SetSystem;

/// Coalition from a digit string of 1-based labels, "134" -> {1,3,4}.
Coalition c(const char* digits);
SetSystem sys(int n, std::initializer_list<const char*> sets);
std::vector<Coalition> sets(std::initializer_list<const char*> digits);

corebound::PlayerPoset nine_player_poset();
SetSystem line_cone_system();        // {0,12,23,34,1234}
SetSystem four_player_lattice();     // downsets of 1<2, 3<2, 3<4
SetSystem regular_one_ray();         // regular, closure generated by 3<4
SetSystem five_player_regular();     // regular, four maximal chains
corebound::Game five_player_game();
SetSystem wuc_counterexample();      // weakly union-closed, C(0) larger than the closure's

corebound::PlayerPoset random_poset(std::mt19937_64& rng, int n, double density);
/// Union of the prefix families of k random player orders; may be irregular.
SetSystem random_prefix_system(std::mt19937_64& rng, int n, int k);
SetSystem random_system(std::mt19937_64& rng, int n, double density);
/// v(S) = y(S) - slack(S) with y in the core, so the core is never empty.
/// Coalitions in `tight` get no slack, keeping y in the restricted core.
corebound::Game random_game_with_core(std::mt19937_64& rng, const SetSystem& f,
                                      const std::vector<Coalition>& tight = {});
/// Nonnegative unanimity parts plus a modular part plus c |S|^2.
corebound::Game random_convex_game(std::mt19937_64& rng, const SetSystem& f);

}  // namespace instances
