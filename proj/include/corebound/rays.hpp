#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "corebound/lattice.hpp"
#include "corebound/polyhedra.hpp"
#include "corebound/setsystem.hpp"

namespace corebound {

/// The direction (1_plus, -1_minus); players are 0-based.
struct OrderedPairRay {
  int plus;
  int minus;

  RationalVector to_vector(int n) const;
  friend auto operator<=>(const OrderedPairRay&, const OrderedPairRay&) = default;
};

/// Recognizes a vector of the form (1_j, -1_i).
std::optional<OrderedPairRay> as_pair_ray(const RationalVector& v);

struct RayReport {
  std::vector<RationalVector> extremal_rays;
  std::vector<RationalVector> lineality;
  /// Every extremal ray is a pair ray and there is no lineality.
  bool all_pair_form = false;
  /// C(0) equals the cone of the union/intersection closure.
  bool equals_closure_cone = false;
  std::vector<RationalVector> closure_rays;
  std::vector<RationalVector> closure_lineality;
  /// The closure has height n, so the pair-form criterion decides equality.
  bool closure_has_full_height = false;
};

/// C(0): x(S) >= 0 for every S in F other than the empty set and N, x(N) = 0.
HPolyhedron<Rational> build_recession_cone(const SetSystem& f);

/// Extremal rays of C(0) for the downset lattice of `p`: (1_j, -1_i) for every
/// covering pair j < i. Sorted.
std::vector<OrderedPairRay> rays_distributive(const PlayerPoset& p);

/// `after[i]` holds the players ranked after i in every maximal chain of a
/// regular system. For regular systems this is the set of j such that no
/// feasible coalition contains j without i.
std::vector<Coalition> ranked_after_in_every_chain(const SetSystem& f);

/// The scan of pairs from the order of one starting chain, without the final
/// reduction pass of rays_regular. Sorted. Errors: NotRegular.
std::vector<OrderedPairRay> pair_ray_scan(const SetSystem& f, std::size_t start_chain);

/// Pair-form extremal rays of C(0) for a regular system. A regular system can
/// also have extremal rays outside pair form; rays_general finds those. Pairs
/// (i, j) with j ranked after
/// i in every maximal chain are scanned in the order induced by the chosen
/// starting chain; a candidate (k, j) is dropped whenever (k, i) and (i, j)
/// are both present, repeated until nothing changes. `start_chain` indexes
/// maximal_chains(f). Sorted. Errors: NotRegular.
std::vector<OrderedPairRay> rays_regular(const SetSystem& f, std::size_t start_chain = 0);

/// Extremal rays and lineality of C(0) via the double description oracle,
/// compared with the cone of the closure. Throws InternalInconsistency if the
/// closure has height n and cone equality disagrees with the pair-form test.
RayReport rays_general(const SetSystem& f);

/// Sufficient condition for C(0) to equal the closure's cone on a weakly
/// union-closed system: every S in closure(F) \ F is a disjoint union of
/// members of F, or S = S1 & S2 for S1, S2 in F with N \ (S1 | S2) covered by
/// members of F. Errors: NotWeaklyUnionClosed.
bool wuc_ray_equality_condition(const SetSystem& f);

}  // namespace corebound
