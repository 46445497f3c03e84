#include "instances.hpp"

#include <algorithm>
#include <numeric>

namespace instances {

using corebound::Game;
using corebound::PlayerPoset;
using corebound::PlayerUniverse;
using corebound::Rational;

Coalition c(const char* digits) {
  Coalition s;
  for (const char* p = digits; *p; ++p) s = s | Coalition::singleton(*p - '1');
  return s;
}

std::vector<Coalition> sets(std::initializer_list<const char*> digits) {
  std::vector<Coalition> out;
  for (const char* d : digits) out.push_back(c(d));
  return out;
}

SetSystem sys(int n, std::initializer_list<const char*> digits) { return SetSystem(PlayerUniverse(n), sets(digits)); }

PlayerPoset nine_player_poset() {
  const std::vector<std::pair<int, int>> rel{{0, 3}, {0, 4}, {0, 8}, {3, 6}, {4, 6},
                                             {1, 6}, {5, 6}, {2, 5}, {5, 7}};
  return PlayerPoset::from_relations(9, rel);
}

SetSystem line_cone_system() { return sys(4, {"", "12", "23", "34", "1234"}); }

SetSystem four_player_lattice() { return sys(4, {"", "1", "3", "13", "34", "123", "134", "1234"}); }

SetSystem regular_one_ray() { return sys(4, {"", "1", "2", "13", "23", "134", "234", "1234"}); }

SetSystem five_player_regular() {
  return sys(5, {"", "1", "2", "14", "24", "124", "234", "1234", "2345", "12345"});
}

Game five_player_game() {
  const SetSystem f = five_player_regular();
  std::map<Coalition, Rational> v{{c("1"), 0},    {c("2"), 0},    {c("14"), 1},   {c("24"), 1},     {c("124"), 2},
                                  {c("234"), 1},  {c("1234"), 2}, {c("2345"), 2}, {c("12345"), 3}};
  return Game::from_map(f, v);
}

SetSystem wuc_counterexample() { return sys(4, {"", "12", "23", "123", "134", "1234"}); }

PlayerPoset random_poset(std::mt19937_64& rng, int n, double density) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution edge(density);
  std::vector<std::pair<int, int>> rel;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (edge(rng)) rel.emplace_back(order[a], order[b]);
    }
  }
  return PlayerPoset::from_relations(n, rel);
}

SetSystem random_prefix_system(std::mt19937_64& rng, int n, int k) {
  std::vector<Coalition> out{Coalition()};
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int r = 0; r < k; ++r) {
    std::shuffle(order.begin(), order.end(), rng);
    Coalition s;
    for (int p : order) {
      s = s | Coalition::singleton(p);
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
  }
  return SetSystem(PlayerUniverse(n), out);
}

SetSystem random_system(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<Coalition> out{Coalition(), Coalition::full(n)};
  for (unsigned m = 1; m + 1 < (1U << n); ++m) {
    if (keep(rng)) out.emplace_back(m);
  }
  return SetSystem(PlayerUniverse(n), out);
}

Game random_game_with_core(std::mt19937_64& rng, const SetSystem& f, const std::vector<Coalition>& tight) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> slack(0, 2);
  const int n = f.players();
  std::vector<Rational> y(n);
  for (auto& x : y) x = Rational(num(rng)) / den(rng);
  std::vector<Rational> values;
  for (Coalition s : f.sets()) {
    Rational total = 0;
    for (int p : s.players()) total += y[p];
    const bool is_tight = std::find(tight.begin(), tight.end(), s) != tight.end();
    if (!s.empty() && s != f.grand() && !is_tight) total -= Rational(slack(rng)) / den(rng);
    values.push_back(s.empty() ? Rational(0) : total);
  }
  return Game(f, values);
}

Game random_convex_game(std::mt19937_64& rng, const SetSystem& f) {
  const int n = f.players();
  std::uniform_int_distribution<int> weight(0, 3);
  std::uniform_int_distribution<int> modular(-3, 3);
  std::uniform_int_distribution<unsigned> carrier(1, (1U << n) - 1);
  std::vector<std::pair<Coalition, Rational>> unanimity;
  for (int k = 0; k < 3; ++k) unanimity.emplace_back(Coalition(carrier(rng)), Rational(weight(rng)) / 2);
  std::vector<Rational> m(n);
  for (auto& x : m) x = modular(rng);
  const Rational square = Rational(weight(rng)) / 3;
  std::vector<Rational> values;
  for (Coalition s : f.sets()) {
    Rational v = square * s.size() * s.size();
    for (int p : s.players()) v += m[p];
    for (const auto& [t, a] : unanimity) {
      if (t.is_subset_of(s)) v += a;
    }
    values.push_back(v);
  }
  return Game(f, values);
}

}  // namespace instances
