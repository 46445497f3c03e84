#include "corebound/rays.hpp"

#include <algorithm>
#include <unordered_map>

#include "corebound/error.hpp"

namespace corebound {

RationalVector OrderedPairRay::to_vector(int n) const {
  RationalVector v = RationalVector::Zero(n);
  v[plus] = 1;
  v[minus] = -1;
  return v;
}

std::optional<OrderedPairRay> as_pair_ray(const RationalVector& v) {
  int plus = -1;
  int minus = -1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (v[i] == 1 && plus < 0) {
      plus = static_cast<int>(i);
    } else if (v[i] == -1 && minus < 0) {
      minus = static_cast<int>(i);
    } else {
      return std::nullopt;
    }
  }
  if (plus < 0 || minus < 0) return std::nullopt;
  return OrderedPairRay{plus, minus};
}

HPolyhedron<Rational> build_recession_cone(const SetSystem& f) {
  const int n = f.players();
  HPolyhedron<Rational> cone(n);
  auto indicator = [n](Coalition s) {
    RationalVector row = RationalVector::Zero(n);
    for (int p : s.players()) row[p] = 1;
    return row;
  };
  for (Coalition s : f.sets()) {
    if (s.empty() || s == f.grand()) continue;
    cone.add_inequality(indicator(s), Rational(0));
  }
  cone.add_equality(indicator(f.grand()), Rational(0));
  return cone;
}

std::vector<OrderedPairRay> rays_distributive(const PlayerPoset& p) {
  std::vector<OrderedPairRay> out;
  for (auto [lower, upper] : p.covering_pairs()) out.push_back({lower, upper});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Coalition> ranked_after_in_every_chain(const SetSystem& f) {
  const int n = f.players();
  std::vector<Coalition> after(n);
  for (int i = 0; i < n; ++i) {
    Coalition later = f.grand() - Coalition::singleton(i);
    for (Coalition s : f.sets()) {
      if (!s.contains(i)) later = later - s;
    }
    after[i] = later;
  }
  return after;
}

namespace {

ChainOfSets starting_chain(const SetSystem& f, std::size_t index) {
  if (index == 0) {
    // First chain in lexicographic order: always follow the first cover.
    const auto covers = covering_relation(f);
    ChainOfSets chain;
    std::size_t k = 0;
    chain.sets.push_back(f.sets()[0]);
    while (k + 1 < f.size()) {
      k = covers[k].front();
      chain.sets.push_back(f.sets()[k]);
    }
    return chain;
  }
  auto chains = maximal_chains(f);
  if (index >= chains.size()) {
    throw Error(ErrorCode::MalformedDocument, "starting chain index out of range");
  }
  return chains[index];
}

using PairTable = std::vector<std::vector<bool>>;

PairTable scan_pairs(const SetSystem& f, std::size_t start_chain, const std::vector<Coalition>& after) {
  if (!is_regular(f)) throw Error(ErrorCode::NotRegular, "set system is not regular");
  const int n = f.players();
  const auto order = starting_chain(f, start_chain).induced_order();
  PairTable listed(n, std::vector<bool>(n, false));
  for (int a = 0; a + 1 < n; ++a) {
    const int i = order[a];
    for (int b = a + 1; b < n; ++b) {
      const int j = order[b];
      if (!after[i].contains(j)) continue;
      listed[i][j] = true;
      for (int c = 0; c < a; ++c) {
        const int k = order[c];
        if (listed[k][i] && listed[k][j]) listed[k][j] = false;
      }
    }
  }
  return listed;
}

std::vector<OrderedPairRay> to_pairs(const PairTable& listed) {
  std::vector<OrderedPairRay> out;
  const int n = static_cast<int>(listed.size());
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      if (listed[k][j]) out.push_back({k, j});
    }
  }
  return out;
}

}  // namespace

std::vector<OrderedPairRay> pair_ray_scan(const SetSystem& f, std::size_t start_chain) {
  return to_pairs(scan_pairs(f, start_chain, ranked_after_in_every_chain(f)));
}

std::vector<OrderedPairRay> rays_regular(const SetSystem& f, std::size_t start_chain) {
  const int n = f.players();
  const auto after = ranked_after_in_every_chain(f);
  PairTable listed = scan_pairs(f, start_chain, after);
  // The scan above depends on the starting chain; this pass removes any
  // candidate still obtainable as a sum of two others.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        if (!listed[k][j]) continue;
        for (int i = 0; i < n; ++i) {
          if (after[k].contains(i) && after[i].contains(j)) {
            listed[k][j] = false;
            changed = true;
            break;
          }
        }
      }
    }
  }
  return to_pairs(listed);
}

RayReport rays_general(const SetSystem& f) {
  RayReport report;
  const auto cone = dd_generators(build_recession_cone(f));
  report.extremal_rays = cone.rays;
  report.lineality = cone.lineality;
  report.all_pair_form =
      cone.lineality.empty() && std::all_of(cone.rays.begin(), cone.rays.end(),
                                            [](const RationalVector& r) { return as_pair_ray(r).has_value(); });

  const SetSystem closed = closure(f);
  const auto closure_cone = dd_generators(build_recession_cone(closed));
  report.closure_rays = closure_cone.rays;
  report.closure_lineality = closure_cone.lineality;
  report.equals_closure_cone = cone == closure_cone;
  report.closure_has_full_height = height(closed) == f.players();
  if (report.closure_has_full_height && report.equals_closure_cone != report.all_pair_form) {
    throw Error(ErrorCode::InternalInconsistency,
                "closure cone comparison disagrees with the pair-form criterion");
  }
  return report;
}

namespace {

bool is_disjoint_union(const SetSystem& f, Coalition target, std::unordered_map<Coalition::Mask, bool>& memo) {
  if (target.empty()) return true;
  if (auto it = memo.find(target.bits()); it != memo.end()) return it->second;
  const int lowest = std::countr_zero(target.bits());
  bool found = false;
  for (Coalition s : f.sets()) {
    if (s.empty() || !s.contains(lowest) || !s.is_subset_of(target)) continue;
    if (is_disjoint_union(f, target - s, memo)) {
      found = true;
      break;
    }
  }
  memo[target.bits()] = found;
  return found;
}

bool is_coverable(const SetSystem& f, Coalition target) {
  Coalition covered;
  for (Coalition s : f.sets()) {
    if (s.is_subset_of(target)) covered = covered | s;
  }
  return covered == target;
}

}  // namespace

bool wuc_ray_equality_condition(const SetSystem& f) {
  if (!is_weakly_union_closed(f)) {
    throw Error(ErrorCode::NotWeaklyUnionClosed, "set system is not weakly union-closed");
  }
  const SetSystem closed = closure(f);
  const auto sets = f.sets();
  for (Coalition s : closed.sets()) {
    if (f.contains(s)) continue;
    std::unordered_map<Coalition::Mask, bool> memo;
    if (is_disjoint_union(f, s, memo)) continue;
    bool split = false;
    for (std::size_t a = 0; a < sets.size() && !split; ++a) {
      for (std::size_t b = a + 1; b < sets.size() && !split; ++b) {
        if ((sets[a] & sets[b]) == s && is_coverable(f, f.grand() - (sets[a] | sets[b]))) split = true;
      }
    }
    if (!split) return false;
  }
  return true;
}

}  // namespace corebound
