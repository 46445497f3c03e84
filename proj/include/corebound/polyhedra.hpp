#pragma once

#include <algorithm>
#include <concepts>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "corebound/error.hpp"
#include "corebound/rational.hpp"

// Exact H-to-V conversion for small polyhedra. Everything here is templated on
// an exact field type (numerator/denominator found by ADL); the library is
// compiled for corebound::Rational.

namespace corebound {

template <class T>
concept ExactScalar = requires(const T& a) {
  numerator(a);
  denominator(a);
  { a < a } -> std::convertible_to<bool>;
};

/// { x : ineq_lhs x >= ineq_rhs, eq_lhs x = eq_rhs }.
template <ExactScalar Scalar>
struct HPolyhedron {
  MatrixX<Scalar> ineq_lhs;
  VectorX<Scalar> ineq_rhs;
  MatrixX<Scalar> eq_lhs;
  VectorX<Scalar> eq_rhs;

  HPolyhedron() : HPolyhedron(0) {}
  explicit HPolyhedron(Eigen::Index dim) : ineq_lhs(0, dim), ineq_rhs(0), eq_lhs(0, dim), eq_rhs(0) {}

  Eigen::Index dim() const { return ineq_lhs.cols(); }
  Eigen::Index inequality_count() const { return ineq_lhs.rows(); }
  Eigen::Index equality_count() const { return eq_lhs.rows(); }

  void add_inequality(const VectorX<Scalar>& a, const Scalar& b) { append(ineq_lhs, ineq_rhs, a, b); }
  void add_equality(const VectorX<Scalar>& a, const Scalar& b) { append(eq_lhs, eq_rhs, a, b); }

  /// Same rows with every bound set to zero: the recession cone.
  HPolyhedron homogenized() const {
    HPolyhedron out = *this;
    out.ineq_rhs.setZero();
    out.eq_rhs.setZero();
    return out;
  }

  bool contains(const VectorX<Scalar>& x) const {
    check_dim(x);
    for (Eigen::Index i = 0; i < ineq_lhs.rows(); ++i) {
      if (ineq_lhs.row(i).dot(x) < ineq_rhs[i]) return false;
    }
    for (Eigen::Index i = 0; i < eq_lhs.rows(); ++i) {
      if (eq_lhs.row(i).dot(x) != eq_rhs[i]) return false;
    }
    return true;
  }

  /// Whether d is a direction of the recession cone.
  bool contains_direction(const VectorX<Scalar>& d) const { return homogenized().contains(d); }

 private:
  void check_dim(const VectorX<Scalar>& x) const {
    if (x.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "vector size differs from polyhedron dimension");
  }
  void append(MatrixX<Scalar>& lhs, VectorX<Scalar>& rhs, const VectorX<Scalar>& a, const Scalar& b) {
    if (a.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "row size differs from polyhedron dimension");
    lhs.conservativeResize(lhs.rows() + 1, Eigen::NoChange);
    lhs.row(lhs.rows() - 1) = a.transpose();
    rhs.conservativeResize(rhs.size() + 1);
    rhs[rhs.size() - 1] = b;
  }
};

/// conv(vertices) + cone(rays) + span(lineality). Rays and lineality vectors
/// are primitive integer vectors; lineality is in reduced echelon form and
/// rays and vertices are reduced against its pivot columns, so equal
/// polyhedra have equal representations. `empty` marks an infeasible system,
/// in which case all lists are empty.
template <ExactScalar Scalar>
struct VRepresentation {
  Eigen::Index dim = 0;
  bool empty = false;
  std::vector<VectorX<Scalar>> vertices;
  std::vector<VectorX<Scalar>> rays;
  std::vector<VectorX<Scalar>> lineality;

  bool is_bounded() const { return rays.empty() && lineality.empty(); }
  std::size_t generator_count() const { return vertices.size() + rays.size() + lineality.size(); }

  friend bool operator==(const VRepresentation& a, const VRepresentation& b) {
    auto same_list = [](const std::vector<VectorX<Scalar>>& x, const std::vector<VectorX<Scalar>>& y) {
      return x.size() == y.size() && std::equal(x.begin(), x.end(), y.begin(), same_vector<Scalar>);
    };
    return a.dim == b.dim && a.empty == b.empty && same_list(a.vertices, b.vertices) &&
           same_list(a.rays, b.rays) && same_list(a.lineality, b.lineality);
  }
};

namespace detail {

/// Scales v by a positive factor so its coordinates are coprime integers.
template <ExactScalar Scalar>
void make_primitive(VectorX<Scalar>& v) {
  using Int = std::decay_t<decltype(numerator(std::declval<Scalar>()))>;
  Int den_lcm = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] != 0) den_lcm = lcm(den_lcm, Int(denominator(v[i])));
  }
  Int num_gcd = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] != 0) num_gcd = gcd(num_gcd, Int(numerator(v[i]) * (den_lcm / denominator(v[i]))));
  }
  if (num_gcd == 0) return;
  const Scalar factor = Scalar(den_lcm) / Scalar(abs(num_gcd));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] *= factor;
}

/// Brings linearly independent rows into reduced row echelon form. Returns
/// the pivot column of each row.
template <ExactScalar Scalar>
std::vector<Eigen::Index> reduce_rows(std::vector<VectorX<Scalar>>& rows) {
  std::vector<Eigen::Index> pivots;
  std::size_t done = 0;
  const Eigen::Index cols = rows.empty() ? 0 : rows.front().size();
  for (Eigen::Index c = 0; c < cols && done < rows.size(); ++c) {
    auto it = std::find_if(rows.begin() + done, rows.end(), [&](const auto& r) { return r[c] != 0; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + done, it);
    VectorX<Scalar>& p = rows[done];
    p /= Scalar(p[c]);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == done || rows[k][c] == 0) continue;
      const Scalar f = rows[k][c];
      rows[k] -= f * p;
    }
    pivots.push_back(c);
    ++done;
  }
  rows.resize(done);
  return pivots;
}

/// Double description for a cone { y : h.y >= 0 or h.y = 0 per row }, starting
/// from the whole space. Lineality absorbs a constraint whenever possible;
/// otherwise rays are split by sign and adjacent pairs (no other ray tight on
/// all their common constraints) are combined.
template <ExactScalar Scalar>
class ConeEnumerator {
 public:
  ConeEnumerator(Eigen::Index dim, std::size_t row_count) : rows_(row_count) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      lineality_.push_back(VectorX<Scalar>::Unit(dim, i));
    }
  }

  void add(const VectorX<Scalar>& h, bool equality) {
    const std::size_t row = processed_++;
    auto pivot = std::find_if(lineality_.begin(), lineality_.end(),
                              [&](const VectorX<Scalar>& l) { return h.dot(l) != 0; });
    if (pivot != lineality_.end()) {
      absorb_into_lineality(h, equality, row, pivot);
    } else {
      refine_rays(h, equality, row);
    }
  }

  const std::vector<VectorX<Scalar>>& lineality() const { return lineality_; }
  std::vector<VectorX<Scalar>> rays() const {
    std::vector<VectorX<Scalar>> out;
    out.reserve(rays_.size());
    for (const auto& g : rays_) out.push_back(g.v);
    return out;
  }

 private:
  struct Generator {
    VectorX<Scalar> v;
    boost::dynamic_bitset<> tight;
  };

  void absorb_into_lineality(const VectorX<Scalar>& h, bool equality, std::size_t row,
                             typename std::vector<VectorX<Scalar>>::iterator pivot) {
    VectorX<Scalar> lead = std::move(*pivot);
    lineality_.erase(pivot);
    Scalar s = h.dot(lead);
    if (s < 0) {
      lead = -lead;
      s = -s;
    }
    for (auto& l : lineality_) {
      const Scalar c = h.dot(l);
      if (c != 0) {
        l -= (c / s) * lead;
        make_primitive(l);
      }
    }
    for (auto& g : rays_) {
      const Scalar c = h.dot(g.v);
      if (c != 0) {
        g.v -= (c / s) * lead;
        make_primitive(g.v);
      }
      g.tight.set(row);
    }
    if (!equality) {
      // Every earlier row vanishes on the lineality space, hence on `lead`.
      boost::dynamic_bitset<> tight(rows_);
      for (std::size_t k = 0; k < row; ++k) tight.set(k);
      make_primitive(lead);
      rays_.push_back({std::move(lead), std::move(tight)});
    }
  }

  void refine_rays(const VectorX<Scalar>& h, bool equality, std::size_t row) {
    std::vector<Scalar> value(rays_.size());
    std::vector<std::size_t> positive, negative;
    std::vector<Generator> next;
    for (std::size_t k = 0; k < rays_.size(); ++k) {
      value[k] = h.dot(rays_[k].v);
      if (value[k] > 0) positive.push_back(k);
      else if (value[k] < 0) negative.push_back(k);
    }
    for (std::size_t k = 0; k < rays_.size(); ++k) {
      if (value[k] == 0) {
        next.push_back(rays_[k]);
        next.back().tight.set(row);
      } else if (value[k] > 0 && !equality) {
        next.push_back(rays_[k]);
      }
    }
    for (std::size_t p : positive) {
      for (std::size_t q : negative) {
        boost::dynamic_bitset<> common = rays_[p].tight & rays_[q].tight;
        if (!adjacent(common, p, q)) continue;
        VectorX<Scalar> v = value[p] * rays_[q].v - value[q] * rays_[p].v;
        make_primitive(v);
        common.set(row);
        next.push_back({std::move(v), std::move(common)});
      }
    }
    rays_ = std::move(next);
  }

  bool adjacent(const boost::dynamic_bitset<>& common, std::size_t p, std::size_t q) const {
    for (std::size_t k = 0; k < rays_.size(); ++k) {
      if (k != p && k != q && common.is_subset_of(rays_[k].tight)) return false;
    }
    return true;
  }

  std::size_t rows_;
  std::size_t processed_ = 0;
  std::vector<VectorX<Scalar>> lineality_;
  std::vector<Generator> rays_;
};

/// Phase-one simplex with Bland's rule: is there z >= 0 with A z = b?
template <ExactScalar Scalar>
bool nonnegative_solution_exists(const MatrixX<Scalar>& A, const VectorX<Scalar>& b) {
  const Eigen::Index k = A.rows();
  const Eigen::Index m = A.cols();
  // Columns: m structural, k artificial, 1 right-hand side.
  MatrixX<Scalar> t = MatrixX<Scalar>::Zero(k, m + k + 1);
  std::vector<Eigen::Index> basis(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const bool flip = b[i] < 0;
    for (Eigen::Index j = 0; j < m; ++j) t(i, j) = flip ? Scalar(-A(i, j)) : A(i, j);
    t(i, m + i) = 1;
    t(i, m + k) = flip ? Scalar(-b[i]) : b[i];
    basis[i] = m + i;
  }
  // Reduced costs of the phase-one objective (sum of artificials).
  VectorX<Scalar> cost = VectorX<Scalar>::Zero(m + k + 1);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) cost[j] -= t(i, j);
    cost[m + k] -= t(i, m + k);
  }
  while (true) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < m; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    Eigen::Index leave = -1;
    Scalar best;
    for (Eigen::Index i = 0; i < k; ++i) {
      if (t(i, enter) <= 0) continue;
      const Scalar ratio = t(i, m + k) / t(i, enter);
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) break;  // unreachable: the phase-one objective is bounded below
    const Scalar pivot = t(leave, enter);
    t.row(leave) /= pivot;
    for (Eigen::Index i = 0; i < k; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      const Scalar f = t(i, enter);
      t.row(i) -= f * t.row(leave);
    }
    const Scalar f = cost[enter];
    cost -= f * t.row(leave).transpose();
    basis[leave] = enter;
  }
  Scalar residual = 0;
  for (Eigen::Index i = 0; i < k; ++i) {
    if (basis[i] >= m) residual += t(i, m + k);
  }
  return residual == 0;
}

}  // namespace detail

/// Exact V-representation of P by double description on the homogenized cone
/// { (t, x) : t >= 0, A x - b t >= 0, C x - d t = 0 }. Equalities go first,
/// then t >= 0, then inequalities in the given order.
template <ExactScalar Scalar>
VRepresentation<Scalar> dd_generators(const HPolyhedron<Scalar>& p) {
  const Eigen::Index n = p.dim();
  const std::size_t rows = static_cast<std::size_t>(p.equality_count() + 1 + p.inequality_count());
  detail::ConeEnumerator<Scalar> cone(n + 1, rows);
  auto lifted = [&](const auto& lhs, const Scalar& rhs) {
    VectorX<Scalar> h(n + 1);
    h[0] = -rhs;
    h.tail(n) = lhs.transpose();
    return h;
  };
  for (Eigen::Index i = 0; i < p.equality_count(); ++i) cone.add(lifted(p.eq_lhs.row(i), p.eq_rhs[i]), true);
  cone.add(VectorX<Scalar>::Unit(n + 1, 0), false);
  for (Eigen::Index i = 0; i < p.inequality_count(); ++i) cone.add(lifted(p.ineq_lhs.row(i), p.ineq_rhs[i]), false);

  VRepresentation<Scalar> out;
  out.dim = n;
  for (const auto& l : cone.lineality()) out.lineality.push_back(l.tail(n));
  for (const auto& g : cone.rays()) {
    if (g[0] > 0) {
      out.vertices.push_back(g.tail(n) / g[0]);
    } else {
      out.rays.push_back(g.tail(n));
    }
  }
  if (out.vertices.empty()) {
    out.empty = true;
    out.rays.clear();
    out.lineality.clear();
    return out;
  }

  const auto pivots = detail::reduce_rows(out.lineality);
  for (auto& l : out.lineality) detail::make_primitive(l);
  auto reduce = [&](VectorX<Scalar>& v) {
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      const auto c = pivots[k];
      if (v[c] != 0) {
        const Scalar f = v[c] / out.lineality[k][c];
        v -= f * out.lineality[k];
      }
    }
  };
  for (auto& v : out.vertices) reduce(v);
  for (auto& r : out.rays) {
    reduce(r);
    detail::make_primitive(r);
  }
  auto canonical = [](std::vector<VectorX<Scalar>>& list) {
    std::sort(list.begin(), list.end(), lex_less<Scalar>);
    list.erase(std::unique(list.begin(), list.end(), same_vector<Scalar>), list.end());
  };
  canonical(out.vertices);
  canonical(out.rays);
  return out;
}

/// True iff the recession cone of P is {0}.
template <ExactScalar Scalar>
bool is_bounded(const HPolyhedron<Scalar>& p) {
  return dd_generators(p.homogenized()).is_bounded();
}

/// Exact test of p in conv(vertices) + cone(rays) + span(lineality).
template <ExactScalar Scalar>
bool hull_membership(const VectorX<Scalar>& point, const VRepresentation<Scalar>& gens) {
  if (point.size() != gens.dim) {
    throw Error(ErrorCode::DimensionMismatch, "point and generators have different dimensions");
  }
  if (gens.empty || gens.vertices.empty()) return false;
  const Eigen::Index n = gens.dim;
  const auto cols = static_cast<Eigen::Index>(gens.vertices.size() + gens.rays.size() + 2 * gens.lineality.size());
  MatrixX<Scalar> a = MatrixX<Scalar>::Zero(n + 1, cols);
  Eigen::Index c = 0;
  for (const auto& v : gens.vertices) {
    a.col(c).head(n) = v;
    a(n, c++) = 1;
  }
  for (const auto& r : gens.rays) a.col(c++).head(n) = r;
  for (const auto& l : gens.lineality) {
    a.col(c++).head(n) = l;
    a.col(c++).head(n) = -l;
  }
  VectorX<Scalar> b(n + 1);
  b.head(n) = point;
  b[n] = 1;
  return detail::nonnegative_solution_exists(a, b);
}

/// Whether { x : A x >= b, C x = d } has a point, by exact phase-one simplex.
template <ExactScalar Scalar>
bool is_feasible(const HPolyhedron<Scalar>& p) {
  const Eigen::Index n = p.dim();
  const Eigen::Index mi = p.inequality_count();
  const Eigen::Index me = p.equality_count();
  // x = x+ - x-, A x - s = b with s >= 0.
  MatrixX<Scalar> a = MatrixX<Scalar>::Zero(mi + me, 2 * n + mi);
  VectorX<Scalar> b(mi + me);
  a.topLeftCorner(mi, n) = p.ineq_lhs;
  a.block(0, n, mi, n) = -p.ineq_lhs;
  a.topRightCorner(mi, mi) = -MatrixX<Scalar>::Identity(mi, mi);
  a.bottomLeftCorner(me, n) = p.eq_lhs;
  a.block(mi, n, me, n) = -p.eq_lhs;
  b.head(mi) = p.ineq_rhs;
  b.tail(me) = p.eq_rhs;
  return detail::nonnegative_solution_exists(a, b);
}

/// Whether a.x >= bound holds on all of P, by affine Farkas: a = lambda A + mu C
/// and bound <= lambda b + mu d with lambda >= 0. P must be nonempty.
template <ExactScalar Scalar>
bool implies(const HPolyhedron<Scalar>& p, const VectorX<Scalar>& a, const Scalar& bound) {
  if (a.size() != p.dim()) throw Error(ErrorCode::DimensionMismatch, "row size differs from polyhedron dimension");
  const Eigen::Index n = p.dim();
  const Eigen::Index mi = p.inequality_count();
  const Eigen::Index me = p.equality_count();
  // Unknowns: lambda (mi), mu+ (me), mu- (me), slack (1).
  MatrixX<Scalar> m = MatrixX<Scalar>::Zero(n + 1, mi + 2 * me + 1);
  m.topLeftCorner(n, mi) = p.ineq_lhs.transpose();
  m.block(0, mi, n, me) = p.eq_lhs.transpose();
  m.block(0, mi + me, n, me) = -p.eq_lhs.transpose();
  m.block(n, 0, 1, mi) = p.ineq_rhs.transpose();
  m.block(n, mi, 1, me) = p.eq_rhs.transpose();
  m.block(n, mi + me, 1, me) = -p.eq_rhs.transpose();
  m(n, mi + 2 * me) = -1;
  VectorX<Scalar> rhs(n + 1);
  rhs.head(n) = a;
  rhs[n] = bound;
  return detail::nonnegative_solution_exists(m, rhs);
}

/// H-representation of conv(vertices) + cone(rays) + span(lineality), read
/// off the generators of the dual cone.
template <ExactScalar Scalar>
HPolyhedron<Scalar> facets_of(const VRepresentation<Scalar>& gens) {
  const Eigen::Index n = gens.dim;
  HPolyhedron<Scalar> out(n);
  if (gens.empty || gens.vertices.empty()) {
    out.add_inequality(VectorX<Scalar>::Zero(n), Scalar(1));
    return out;
  }
  HPolyhedron<Scalar> dual(n + 1);
  auto lifted = [&](const VectorX<Scalar>& v, int t) {
    VectorX<Scalar> g(n + 1);
    g[0] = t;
    g.tail(n) = v;
    return g;
  };
  for (const auto& v : gens.vertices) dual.add_inequality(lifted(v, 1), Scalar(0));
  for (const auto& r : gens.rays) dual.add_inequality(lifted(r, 0), Scalar(0));
  for (const auto& l : gens.lineality) dual.add_equality(lifted(l, 0), Scalar(0));
  const auto cone = dd_generators(dual);
  for (const auto& y : cone.rays) {
    if (!y.tail(n).isZero()) out.add_inequality(y.tail(n), Scalar(-y[0]));
  }
  for (const auto& y : cone.lineality) {
    if (!y.tail(n).isZero()) out.add_equality(y.tail(n), Scalar(-y[0]));
  }
  return out;
}

extern template VRepresentation<Rational> dd_generators(const HPolyhedron<Rational>&);
extern template bool is_bounded(const HPolyhedron<Rational>&);
extern template bool hull_membership(const RationalVector&, const VRepresentation<Rational>&);
extern template bool is_feasible(const HPolyhedron<Rational>&);
extern template bool implies(const HPolyhedron<Rational>&, const RationalVector&, const Rational&);
extern template HPolyhedron<Rational> facets_of(const VRepresentation<Rational>&);

}  // namespace corebound
