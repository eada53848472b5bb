#ifndef GUARD_FUSIONFORGE_GOURSAT_H
#define GUARD_FUSIONFORGE_GOURSAT_H

#include "fusionforge/group.hpp"

namespace fusionforge {

// The classification data of a subgroup X of a product L x R: its two projections, its two
// slices (intersections with the factors), and the isomorphism between the projection
// quotients that X is the graph of.
struct GoursatData {
  Subgroup p1; // projection of X into L, a subgroup of L
  Subgroup p2; // projection of X into R, a subgroup of R
  Subgroup k1; // left slice: {l : (l, 1) in X}, normal in p1
  Subgroup k2; // right slice: {r : (1, r) in X}, normal in p2

  QuotientGroup q1; // p1 / k1
  QuotientGroup q2; // p2 / k2

  GroupMorphism theta; // the induced isomorphism q1 -> q2
};

GoursatData goursat_decompose(ProductGroup const &amb, Subgroup const &X);

// the subgroup {(l, r) : l in p1, r in p2, theta(l k1) = r k2}; inverse of decompose
Subgroup goursat_reconstruct(ProductGroup const &amb, GoursatData const &d);

// X carried through the swap L x R -> R x L
Subgroup flip_subgroup(ProductGroup const &amb, ProductGroup const &flipped,
                       Subgroup const &X);

// the graph {(phi(u), u)} of a morphism from a subgroup of the right factor into the left
// factor
Subgroup diagonal_subgroup(ProductGroup const &amb, GroupMorphism const &phi);

// A x B embedded as a subgroup of the ambient product (A in the left factor, B in the right)
Subgroup slice_product(ProductGroup const &amb, Subgroup const &A, Subgroup const &B);

// true when both projections of X are onto the full factors
bool projections_surjective(ProductGroup const &amb, Subgroup const &X);

// checks the structural identity behind the decomposition: X / (k1 x k2) maps isomorphically
// onto the graph of theta inside (p1/k1) x (p2/k2)
bool middle_quotient_is_graph(ProductGroup const &amb, Subgroup const &X);

} // namespace fusionforge

#endif // GUARD_FUSIONFORGE_GOURSAT_H
