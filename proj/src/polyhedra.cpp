#include "corebound/polyhedra.hpp"

namespace corebound {

template VRepresentation<Rational> dd_generators(const HPolyhedron<Rational>&);
template bool is_bounded(const HPolyhedron<Rational>&);
template bool hull_membership(const RationalVector&, const VRepresentation<Rational>&);
template bool is_feasible(const HPolyhedron<Rational>&);
template bool implies(const HPolyhedron<Rational>&, const RationalVector&, const Rational&);
template HPolyhedron<Rational> facets_of(const VRepresentation<Rational>&);

}  // namespace corebound
