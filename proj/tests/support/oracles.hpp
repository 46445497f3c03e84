#pragma once

// Brute-force reference implementations. They share only the value types
// (Coalition, SetSystem, Rational) with the library under test.

#include <optional>
#include <vector>

#include "corebound/core_weber.hpp"
#include "corebound/lattice.hpp"
#include "corebound/polyhedra.hpp"
#include "corebound/setsystem.hpp"

namespace oracle {

using corebound::Coalition;
using corebound::Rational;
using corebound::SetSystem;
using Vec = std::vector<Rational>;
using Rows = std::vector<Vec>;

// Linear algebra on plain row lists.
int rank(Rows rows);
Rows nullspace(const Rows& rows, int n);
/// Unique x with sum_k x_k * cols[k] = b, if the columns are independent and
/// the system is consistent.
std::optional<Vec> solve_columns(const Rows& cols, const Vec& b);
Vec primitive(Vec v);
Vec to_vec(const corebound::RationalVector& v);
std::vector<Vec> to_vecs(const std::vector<corebound::RationalVector>& vs);
std::vector<Vec> sorted(std::vector<Vec> vs);

/// Every subset of N closed downward under `leq`.
std::vector<Coalition> downsets(int n, const std::vector<std::vector<bool>>& leq);
std::vector<std::vector<bool>> leq_matrix(const corebound::PlayerPoset& p);
std::size_t linear_extensions(int n, const std::vector<std::vector<bool>>& leq);

std::vector<Coalition> closure(const SetSystem& f);
bool closed(const std::vector<Coalition>& sets);
std::vector<std::vector<Coalition>> maximal_chains(const SetSystem& f);
bool regular(const SetSystem& f);
bool weakly_union_closed(const SetSystem& f);

struct Cone {
  Rows ineq;  // a.x >= 0
  Rows eq;    // a.x = 0
  int n = 0;
};
Cone recession_cone(const SetSystem& f);
Rows lineality(const Cone& c);
/// Extreme rays of a pointed cone, primitive and sorted: each spans the
/// solution set of n-1 independent tight rows.
std::vector<Vec> extreme_rays(const Cone& c);
/// Pair rays (1_j, -1_i) as vectors, sorted.
std::vector<Vec> pair_vectors(int n, const std::vector<std::pair<int, int>>& plus_minus);

/// Vertices of {A x >= b, E x = e} by exhaustive basis search. Assumes the
/// polyhedron is pointed.
std::vector<Vec> vertices(const Rows& a, const Vec& b, const Rows& e, const Vec& ev, int n);
/// Caratheodory search over affinely independent subsets.
bool in_hull(const Vec& p, const std::vector<Vec>& points);

bool satisfies(const corebound::HPolyhedron<Rational>& h, const Vec& x);
bool convex(const corebound::Game& v);

}  // namespace oracle
