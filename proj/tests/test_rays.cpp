#include <doctest.h>

#include <algorithm>

#include "corebound/error.hpp"
#include "corebound/rays.hpp"
#include "instances.hpp"
#include "oracles.hpp"

using namespace corebound;
using instances::sys;

namespace {

std::vector<oracle::Vec> vecs(const std::vector<OrderedPairRay>& rays, int n) {
  std::vector<oracle::Vec> out;
  for (const auto& r : rays) out.push_back(oracle::to_vec(r.to_vector(n)));
  return oracle::sorted(out);
}

// 1-based (plus, minus) pairs.
std::vector<oracle::Vec> pairs(int n, std::vector<std::pair<int, int>> one_based) {
  for (auto& [p, m] : one_based) {
    --p;
    --m;
  }
  return oracle::pair_vectors(n, one_based);
}

}  // namespace

TEST_CASE("nine-player poset has one ray per covering pair") {
  const auto rays = rays_distributive(instances::nine_player_poset());
  CHECK(vecs(rays, 9) == pairs(9, {{1, 9}, {1, 4}, {1, 5}, {3, 6}, {4, 7}, {5, 7}, {2, 7}, {6, 7}, {6, 8}}));
  const auto cone = dd_generators(build_recession_cone(downsets(instances::nine_player_poset())));
  CHECK(oracle::to_vecs(cone.rays) == vecs(rays, 9));
  CHECK(cone.lineality.empty());
}

TEST_CASE("distributive rays of an antichain and a chain") {
  CHECK(rays_distributive(PlayerPoset::from_relations(3, {})).empty());
  const std::vector<std::pair<int, int>> rel{{0, 1}, {1, 2}};
  const auto p = PlayerPoset::from_relations(3, rel);
  const auto rays = rays_distributive(p);
  CHECK(vecs(rays, 3) == pairs(3, {{1, 2}, {2, 3}}));
  CHECK(oracle::extreme_rays(oracle::recession_cone(downsets(p))) == vecs(rays, 3));
}

TEST_CASE("regular rays of the five-player system") {
  const auto f = instances::five_player_regular();
  const auto rays = rays_regular(f);
  CHECK(vecs(rays, 5) == pairs(5, {{4, 3}, {2, 3}, {3, 5}}));
  CHECK(oracle::extreme_rays(oracle::recession_cone(f)) == vecs(rays, 5));
  CHECK(oracle::lineality(oracle::recession_cone(f)).empty());
}

TEST_CASE("regular rays of small systems") {
  CHECK(rays_regular(power_set(4)).empty());
  const auto one = rays_regular(instances::regular_one_ray());
  REQUIRE(one.size() == 1);
  CHECK(one[0] == OrderedPairRay{2, 3});
  CHECK_THROWS_AS(rays_regular(instances::line_cone_system()), Error);
}

TEST_CASE("scan from every starting chain") {
  const auto f = instances::five_player_regular();
  const auto chains = maximal_chains(f);
  const auto reference = rays_regular(f);
  for (std::size_t k = 0; k < chains.size(); ++k) {
    const auto scanned = pair_ray_scan(f, k);
    if (scanned != reference) MESSAGE("starting chain " << k << " scan differs before the reduction pass");
    CHECK(rays_regular(f, k) == reference);
  }
}

TEST_CASE("regular system with an extremal ray outside pair form") {
  const auto f = sys(4, {"", "1", "3", "12", "13", "14", "123", "134", "1234"});
  REQUIRE(is_regular(f));
  const oracle::Vec mixed{1, -1, 1, -1};
  const auto all = oracle::extreme_rays(oracle::recession_cone(f));
  CHECK(std::find(all.begin(), all.end(), mixed) != all.end());
  CHECK(all.size() == 3);
  CHECK(vecs(rays_regular(f), 4) == pairs(4, {{1, 2}, {1, 4}}));
  const auto report = rays_general(f);
  CHECK_FALSE(report.all_pair_form);
  CHECK_FALSE(report.equals_closure_cone);
  CHECK(closure(f).size() == f.size() + 1);
}

TEST_CASE("players ranked after in every chain") {
  std::mt19937_64 rng(19);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 60; ++trial) {
    const int n = 3 + trial % 3;
    const auto f = instances::random_prefix_system(rng, n, 2 + trial % 3);
    if (!oracle::regular(f)) continue;
    ++checked;
    const auto after = ranked_after_in_every_chain(f);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        bool always = i != j;
        for (const auto& chain : oracle::maximal_chains(f)) {
          for (std::size_t k = 1; k < chain.size(); ++k) {
            const Coalition step = chain[k] - chain[k - 1];
            if (step.contains(j) && !chain[k - 1].contains(i)) always = false;
          }
        }
        CHECK(after[i].contains(j) == always);
      }
    }
  }
  CHECK(checked >= 30);
}

TEST_CASE("general rays of the line system") {
  const auto report = rays_general(instances::line_cone_system());
  REQUIRE(report.lineality.size() == 1);
  CHECK(same_vector(report.lineality[0], make_vector({1, -1, 1, -1})));
  REQUIRE(report.extremal_rays.size() == 1);
  CHECK(same_vector(report.extremal_rays[0], make_vector({0, 0, 1, -1})));
  CHECK(oracle::to_vecs(report.closure_rays) == oracle::sorted({{-1, 1, 0, 0}, {0, 0, 1, -1}}));
  CHECK(report.closure_lineality.empty());
  CHECK_FALSE(report.all_pair_form);
  CHECK_FALSE(report.equals_closure_cone);
}

TEST_CASE("weakly union-closed counterexample") {
  const auto f = instances::wuc_counterexample();
  const auto report = rays_general(f);
  CHECK(oracle::to_vecs(report.extremal_rays) == oracle::sorted({{0, 0, 1, -1}, {1, 0, 0, -1}, {1, -1, 1, -1}}));
  CHECK(oracle::to_vecs(report.closure_rays) == oracle::sorted({{0, 0, 1, -1}, {1, 0, 0, -1}}));
  CHECK(report.lineality.empty());
  CHECK_FALSE(report.equals_closure_cone);
  CHECK_FALSE(wuc_ray_equality_condition(f));
  CHECK(oracle::extreme_rays(oracle::recession_cone(f)) == oracle::to_vecs(report.extremal_rays));
}

TEST_CASE("ray equality condition on closed and non-wuc systems") {
  CHECK(wuc_ray_equality_condition(instances::four_player_lattice()));
  try {
    wuc_ray_equality_condition(instances::line_cone_system());
    FAIL("expected NotWeaklyUnionClosed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotWeaklyUnionClosed);
  }
}

TEST_CASE("pair ray recognition") {
  CHECK(as_pair_ray(make_vector({0, 1, -1})) == OrderedPairRay{1, 2});
  CHECK_FALSE(as_pair_ray(make_vector({1, -1, 1, -1})).has_value());
  CHECK_FALSE(as_pair_ray(make_vector({0, 2, -2})).has_value());
}
