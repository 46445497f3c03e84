#include <doctest.h>

#include "corebound/core_weber.hpp"
#include "corebound/error.hpp"
#include "instances.hpp"
#include "oracles.hpp"
#include "roundtrip.hpp"

using namespace corebound;
using instances::c;
using instances::sets;
using instances::sys;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InternalInconsistency;
}

Game from_function(const SetSystem& f, const std::function<Rational(Coalition)>& v) {
  std::vector<Rational> values;
  for (Coalition s : f.sets()) values.push_back(v(s));
  return Game(f, values);
}

const NormalCollection kFivePlayerNormal{sets({"24", "234"}), CollectionKind::irredundant};

}  // namespace

TEST_CASE("restricted core of the five-player game") {
  const Game v = instances::five_player_game();
  const auto h = build_restricted_core(v, kFivePlayerNormal);
  CHECK(h.inequality_count() == 6);
  CHECK(h.equality_count() == 3);
  const RationalVector x = make_vector({1, 1, 0, 0, 1});
  CHECK(h.contains(x));
  CHECK(is_bounded(h));
  const auto core = dd_generators(h);
  CHECK(roundtrip::check(h, core).empty());
  // Independent vertex enumeration of the same nine rows.
  oracle::Rows a;
  oracle::Vec b;
  oracle::Rows e;
  oracle::Vec ev;
  for (Eigen::Index r = 0; r < h.inequality_count(); ++r) {
    a.push_back(oracle::to_vec(h.ineq_lhs.row(r).transpose()));
    b.push_back(h.ineq_rhs[r]);
  }
  for (Eigen::Index r = 0; r < h.equality_count(); ++r) {
    e.push_back(oracle::to_vec(h.eq_lhs.row(r).transpose()));
    ev.push_back(h.eq_rhs[r]);
  }
  CHECK(oracle::to_vecs(core.vertices) == oracle::vertices(a, b, e, ev, 5));
}

TEST_CASE("marginal vector along one chain of the five-player system") {
  const Game v = instances::five_player_game();
  const ChainOfSets chain{sets({"", "2", "24", "234", "2345", "12345"})};
  const auto mv = marginal_vector(v, chain);
  CHECK(same_vector(mv.payoff, make_vector({1, 0, 0, 1, 1})));
  for (Coalition s : chain.sets) {
    Rational total = 0;
    for (int p : s.players()) total += mv.payoff[p];
    CHECK(total == v.value(s));
  }
}

TEST_CASE("restricted Weber set of the five-player game is a single point") {
  const Game v = instances::five_player_game();
  const auto w = restricted_weber(v, kFivePlayerNormal);
  REQUIRE(w.vertices.size() == 1);
  CHECK(same_vector(w.vertices[0], make_vector({1, 0, 0, 1, 1})));
  CHECK(w.is_bounded());
}

TEST_CASE("inclusion fails for the five-player game") {
  const auto verdict = verify_inclusion(instances::five_player_game(), kFivePlayerNormal);
  CHECK_FALSE(verdict.holds);
  CHECK(verdict.witness_kind == WitnessKind::point);
  REQUIRE(verdict.witness.has_value());
  CHECK(build_restricted_core(instances::five_player_game(), kFivePlayerNormal).contains(*verdict.witness));
  CHECK_FALSE(hull_membership(*verdict.witness, verdict.weber));
}

TEST_CASE("zero game on the power set of two players") {
  const Game zero = from_function(power_set(2), [](Coalition) { return Rational(0); });
  const auto core = dd_generators(build_restricted_core(zero, NormalCollection{}));
  REQUIRE(core.vertices.size() == 1);
  CHECK(core.vertices[0].isZero());
  CHECK(core.is_bounded());
  const auto w = restricted_weber(zero, NormalCollection{});
  REQUIRE(w.vertices.size() == 1);
  CHECK(w.vertices[0].isZero());
  for (const auto& ch : maximal_chains(zero.system())) CHECK(marginal_vector(zero, ch).payoff.isZero());
}

TEST_CASE("nine-player system is bounded under its irredundant collection") {
  const auto f = downsets(instances::nine_player_poset());
  const Game v = from_function(f, [](Coalition s) { return Rational(s.size() * s.size(), 3); });
  const auto h = build_restricted_core(v, NormalCollection{sets({"123", "13456"}), CollectionKind::irredundant});
  CHECK(is_bounded(h));
  CHECK(dd_generators(h.homogenized()).vertices.size() == 1);
}

TEST_CASE("additive game gives the all-ones marginal vector") {
  const Game v = from_function(power_set(4), [](Coalition s) { return Rational(s.size()); });
  for (const auto& ch : maximal_chains(v.system())) {
    CHECK(same_vector(marginal_vector(v, ch).payoff, make_vector({1, 1, 1, 1})));
  }
  CHECK(is_convex(v));
}

TEST_CASE("convexity") {
  CHECK(is_convex(from_function(power_set(3), [](Coalition s) { return Rational(s.size() * s.size()); })));
  auto game = [](int v1) {
    return from_function(power_set(3), [v1](Coalition s) {
      if (s == c("12") || s == c("13") || s == c("123")) return Rational(1);
      if (s == c("1")) return Rational(v1);
      return Rational(0);
    });
  };
  CHECK(is_convex(game(1)) == oracle::convex(game(1)));
  CHECK_FALSE(is_convex(game(0)));
  CHECK_FALSE(oracle::convex(game(0)));
  CHECK(code_of([] { is_convex(instances::five_player_game()); }) == ErrorCode::NotClosed);
}

TEST_CASE("convex game on the power set: core equals Weber set") {
  const Game v = from_function(power_set(3), [](Coalition s) { return Rational(s.size() * s.size()); });
  const auto core = dd_generators(build_restricted_core(v, NormalCollection{}));
  const auto w = restricted_weber(v, NormalCollection{});
  CHECK(core == w);
  CHECK(verify_inclusion(v, NormalCollection{}).holds);
}

TEST_CASE("game construction errors") {
  const auto f = sys(2, {"", "1", "12"});
  CHECK(code_of([&] { Game(f, {Rational(0), Rational(1)}); }) == ErrorCode::MissingValue);
  CHECK(code_of([&] { Game(f, {Rational(1), Rational(1), Rational(1)}); }) == ErrorCode::MalformedDocument);
  CHECK(code_of([&] { Game::from_map(f, {{c("2"), Rational(1)}}); }) == ErrorCode::SetNotFeasible);
  CHECK(code_of([&] { Game::from_map(f, {{c("1"), Rational(1)}}); }) == ErrorCode::MissingValue);
  const Game v = Game::from_map(f, {{c("1"), Rational(1)}, {c("12"), Rational(3, 2)}});
  CHECK(v.value(Coalition()) == 0);
  CHECK(code_of([&] { v.value(c("2")); }) == ErrorCode::SetNotFeasible);
}

TEST_CASE("weber set errors") {
  const Game v = instances::five_player_game();
  CHECK(code_of([&] { restricted_weber(v, NormalCollection{sets({"14", "24"}), CollectionKind::custom}); }) ==
        ErrorCode::CollectionNotNested);
  CHECK(code_of([&] { restricted_weber(v, NormalCollection{sets({"4"}), CollectionKind::custom}); }) ==
        ErrorCode::NoRestrictedChain);
  const Game line = from_function(instances::line_cone_system(), [](Coalition) { return Rational(0); });
  CHECK(code_of([&] { restricted_weber(line, NormalCollection{}); }) == ErrorCode::ChainNotRegularSteps);
  CHECK(code_of([&] { build_restricted_core(v, NormalCollection{sets({"4"}), CollectionKind::custom}); }) ==
        ErrorCode::SetNotFeasible);
}

TEST_CASE("inclusion verdicts for empty and unbounded cores") {
  const Game empty = from_function(power_set(2), [](Coalition s) { return s.size() == 1 ? Rational(1) : Rational(0); });
  const auto e = verify_inclusion(empty, NormalCollection{});
  CHECK(e.core.empty);
  CHECK(e.holds);
  CHECK(e.witness_kind == WitnessKind::none);

  const auto f = instances::regular_one_ray();
  const Game zero = from_function(f, [](Coalition) { return Rational(0); });
  const auto u = verify_inclusion(zero, NormalCollection{});
  CHECK_FALSE(u.holds);
  CHECK(u.witness_kind == WitnessKind::direction);
  REQUIRE(u.witness.has_value());
  CHECK(same_vector(*u.witness, make_vector({0, 0, 1, -1})));
}
