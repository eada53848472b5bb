#include "fusionforge/bouc.hpp"

#include <algorithm>
#include <cassert>

namespace fusionforge {

Subgroup star_product(ProductGroup const &ambGH, Subgroup const &X,
                      ProductGroup const &ambHK, Subgroup const &Y,
                      ProductGroup const &ambGK, el t)
{
  assert(X.parent().same_group(ambGH.group));
  assert(Y.parent().same_group(ambHK.group));
  assert(ambGH.right.same_group(ambHK.left));
  assert(ambGK.left.same_group(ambGH.left) && ambGK.right.same_group(ambHK.right));

  PermGroup const &H = ambGH.right;

  // partners of each middle element on the right side
  std::vector<std::vector<el>> partners(H.order());
  for (el y : Y.indices())
    partners[ambHK.left_of(y)].push_back(ambHK.right_of(y));

  el tinv = H.inv(t);

  std::vector<bool> in(ambGK.group.order(), false);
  for (el x : X.indices()) {
    el g = ambGH.left_of(x);
    el h = ambGH.right_of(x);
    el h2 = H.mul(H.mul(tinv, h), t);
    for (el k : partners[h2])
      in[ambGK.pair_index(g, k)] = true;
  }

  std::vector<el> idx;
  for (el e = 0u; e < ambGK.group.order(); ++e)
    if (in[e])
      idx.push_back(e);

  // the result is a subgroup; the constructor cross-checks closure in debug builds
  return Subgroup(ambGK.group, std::move(idx));
}

std::vector<BoucTerm> bouc_terms(ProductGroup const &ambGH, Subgroup const &X,
                                 ProductGroup const &ambHK, Subgroup const &Y,
                                 ProductGroup const &ambGK)
{
  PermGroup const &H = ambGH.right;

  GoursatData dx = goursat_decompose(ambGH, X);
  GoursatData dy = goursat_decompose(ambHK, Y);

  std::vector<BoucTerm> terms;
  for (el t : double_coset_reps(H, dx.p2, dy.p1))
    terms.push_back(BoucTerm{t, star_product(ambGH, X, ambHK, Y, ambGK, t)});
  return terms;
}

namespace {

BoucComparison bouc_comparison_impl(ProductGroup const &ambGH, Subgroup const &X,
                                    ProductGroup const &ambHK, Subgroup const &Y,
                                    ProductGroup const &ambGK, ClassKeyCache *cache)
{
  BoucComparison cmp;

  Biset composed = compose(biset_from_subgroup(ambGH, X), biset_from_subgroup(ambHK, Y),
                           ambGK);
  cmp.lhs = cache != nullptr ? composed.carrier.decomposition(*cache)
                             : composed.carrier.decomposition();

  auto terms = bouc_terms(ambGH, X, ambHK, Y, ambGK);
  std::vector<Subgroup> parts;
  parts.reserve(terms.size());
  for (auto &term : terms) {
    cmp.reps.push_back(term.rep);
    parts.push_back(cache != nullptr ? cache->representative(term.star)
                                     : std::move(term.star));
  }
  cmp.rhs = TransitiveDecomposition::from_parts(ambGK.group, std::move(parts));

  cmp.equal = cmp.lhs == cmp.rhs;
  return cmp;
}

} // namespace

BoucComparison bouc_comparison(ProductGroup const &ambGH, Subgroup const &X,
                               ProductGroup const &ambHK, Subgroup const &Y,
                               ProductGroup const &ambGK)
{
  return bouc_comparison_impl(ambGH, X, ambHK, Y, ambGK, nullptr);
}

BoucComparison bouc_comparison(ProductGroup const &ambGH, Subgroup const &X,
                               ProductGroup const &ambHK, Subgroup const &Y,
                               ProductGroup const &ambGK, ClassKeyCache &cache)
{
  assert(cache.group().same_group(ambGK.group));
  return bouc_comparison_impl(ambGH, X, ambHK, Y, ambGK, &cache);
}

} // namespace fusionforge
