#ifndef GUARD_FUSIONFORGE_BOUC_H
#define GUARD_FUSIONFORGE_BOUC_H

#include "fusionforge/goursat.hpp"
#include "fusionforge/gset.hpp"

namespace fusionforge {

// The twisted relational product of X <= G x H and Y <= H x K at t in H: the subgroup of
// G x K of all pairs (g, k) with (g, h) in X and (t^-1 h t, k) in Y for some h.
Subgroup star_product(ProductGroup const &ambGH, Subgroup const &X,
                      ProductGroup const &ambHK, Subgroup const &Y,
                      ProductGroup const &ambGK, el t);

struct BoucTerm {
  el rep;        // double coset representative in H
  Subgroup star; // the twisted product at that representative, a subgroup of G x K
};

// One term per double coset p2(X) \ H / p1(Y), in ascending order of representative. The
// composed coset biset decomposes as the disjoint union of the coset bisets of these
// subgroups.
std::vector<BoucTerm> bouc_terms(ProductGroup const &ambGH, Subgroup const &X,
                                 ProductGroup const &ambHK, Subgroup const &Y,
                                 ProductGroup const &ambGK);

struct BoucComparison {
  TransitiveDecomposition lhs; // stabilizer classes of the composed coset biset
  TransitiveDecomposition rhs; // classes of the decomposition-term subgroups
  std::vector<el> reps;        // double coset representatives used on the right
  bool equal = false;
};

// Computes the composition of (G x H)/X with (H x K)/Y and the predicted decomposition, and
// compares their stabilizer class multisets. Equal for every input.
BoucComparison bouc_comparison(ProductGroup const &ambGH, Subgroup const &X,
                               ProductGroup const &ambHK, Subgroup const &Y,
                               ProductGroup const &ambGK);

// sweep variant: canonicalizes stabilizer classes through a shared cache over G x K
BoucComparison bouc_comparison(ProductGroup const &ambGH, Subgroup const &X,
                               ProductGroup const &ambHK, Subgroup const &Y,
                               ProductGroup const &ambGK, ClassKeyCache &cache);

} // namespace fusionforge

#endif // GUARD_FUSIONFORGE_BOUC_H
