#ifndef GUARD_FUSIONFORGE_EXPLORER_H
#define GUARD_FUSIONFORGE_EXPLORER_H

#include <optional>
#include <vector>

#include "fusionforge/fusion.hpp"

namespace fusionforge {

// One conjugacy class of product subgroups with surjective projections,
// examined against the two fusion systems.
struct CompatibilityCandidate {
  Subgroup rep;         // canonical class representative inside P1 x P2
  Subgroup left_slice;  // intersection with the left factor, as a subgroup of P1
  Subgroup right_slice; // intersection with the right factor, as a subgroup of P2
  bool left_closed;     // left slice strongly closed in F1
  bool right_closed;    // right slice strongly closed in F2
  // When both slices are strongly closed: do the image quotients match under
  // the isomorphism the candidate induces between them?
  std::optional<bool> quotient_transport;
};

struct CompatibilityReport {
  ProductGroup product;
  std::vector<CompatibilityCandidate> candidates;
};

// Enumerate every conjugacy class of subgroups R <= P1 x P2 whose two
// projections are surjective, pull out the slices R meets each factor in,
// test them for strong closedness, and compare the quotient systems along
// the induced isomorphism whenever both sides allow one.  Candidates appear
// in the canonical subgroup order of their representatives.
CompatibilityReport explore_compatibility(FusionSystem const &F1,
                                          FusionSystem const &F2,
                                          Config const &cfg = Config());

// The isomorphism between the two slice quotients induced by a subgroup of
// the product with surjective projections: the left coset of x is sent to
// the right coset of any partner of x inside R.
GroupMorphism induced_quotient_iso(ProductGroup const &amb, Subgroup const &R,
                                   QuotientGroup const &q1,
                                   QuotientGroup const &q2);

} // namespace fusionforge

#endif // GUARD_FUSIONFORGE_EXPLORER_H
