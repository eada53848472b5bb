#include "fusionforge/goursat.hpp"

#include <algorithm>
#include <cassert>

namespace fusionforge {

GoursatData goursat_decompose(ProductGroup const &amb, Subgroup const &X)
{
  assert(X.parent().same_group(amb.group));

  std::vector<el> p1i, p2i, k1i, k2i;
  for (el e : X.indices()) {
    el l = amb.left_of(e);
    el r = amb.right_of(e);
    p1i.push_back(l);
    p2i.push_back(r);
    if (r == 0u)
      k1i.push_back(l);
    if (l == 0u)
      k2i.push_back(r);
  }

  auto dedup = [](std::vector<el> &v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedup(p1i);
  dedup(p2i);
  dedup(k1i);
  dedup(k2i);

  Subgroup p1(amb.left, std::move(p1i));
  Subgroup p2(amb.right, std::move(p2i));
  Subgroup k1(amb.left, std::move(k1i));
  Subgroup k2(amb.right, std::move(k2i));

  assert(is_normal_in(p1, k1));
  assert(is_normal_in(p2, k2));

  QuotientGroup q1 = quotient_group(p1, k1);
  QuotientGroup q2 = quotient_group(p2, k2);

  // theta sends the class of l to the class of any r paired with it in X
  std::vector<el> images(q1.group.order());
  std::vector<bool> have(q1.group.order(), false);
  for (el e : X.indices()) {
    el l = amb.left_of(e);
    el r = amb.right_of(e);
    el lc = q1.projection.apply(static_cast<el>(p1.local_index(l)));
    if (have[lc])
      continue;
    have[lc] = true;
    images[lc] = q2.projection.apply(static_cast<el>(p2.local_index(r)));
  }
  assert(std::all_of(have.begin(), have.end(), [](bool b) { return b; }));

  GroupMorphism theta(q1.group.full_subgroup(), q2.group.full_subgroup(), std::move(images));
  assert(theta.is_homomorphism() && theta.is_bijective());

  return GoursatData{std::move(p1), std::move(p2), std::move(k1), std::move(k2),
                     std::move(q1), std::move(q2), std::move(theta)};
}

Subgroup goursat_reconstruct(ProductGroup const &amb, GoursatData const &d)
{
  std::vector<el> idx;
  for (el l : d.p1.indices()) {
    el lc = d.theta.apply(d.q1.projection.apply(static_cast<el>(d.p1.local_index(l))));
    for (el r : d.p2.indices()) {
      if (d.q2.projection.apply(static_cast<el>(d.p2.local_index(r))) == lc)
        idx.push_back(amb.pair_index(l, r));
    }
  }

  // l-major ascending traversal emits pair indices in increasing order already
  assert(std::is_sorted(idx.begin(), idx.end()));
  return Subgroup(amb.group, std::move(idx));
}

Subgroup flip_subgroup(ProductGroup const &amb, ProductGroup const &flipped,
                       Subgroup const &X)
{
  assert(X.parent().same_group(amb.group));
  assert(flipped.left.same_group(amb.right) && flipped.right.same_group(amb.left));

  std::vector<el> idx;
  idx.reserve(X.order());
  for (el e : X.indices())
    idx.push_back(flipped.pair_index(amb.right_of(e), amb.left_of(e)));
  std::sort(idx.begin(), idx.end());
  return Subgroup(flipped.group, std::move(idx));
}

Subgroup diagonal_subgroup(ProductGroup const &amb, GroupMorphism const &phi)
{
  assert(phi.source().parent().same_group(amb.right));
  assert(phi.target().parent().same_group(amb.left));

  std::vector<el> idx;
  idx.reserve(phi.source().order());
  for (el u : phi.source().indices())
    idx.push_back(amb.pair_index(phi.apply(u), u));
  std::sort(idx.begin(), idx.end());
  return Subgroup(amb.group, std::move(idx));
}

Subgroup slice_product(ProductGroup const &amb, Subgroup const &A, Subgroup const &B)
{
  assert(A.parent().same_group(amb.left));
  assert(B.parent().same_group(amb.right));

  std::vector<el> idx;
  idx.reserve(static_cast<std::size_t>(A.order()) * B.order());
  for (el a : A.indices())
    for (el b : B.indices())
      idx.push_back(amb.pair_index(a, b));

  assert(std::is_sorted(idx.begin(), idx.end()));
  return Subgroup(amb.group, std::move(idx));
}

bool projections_surjective(ProductGroup const &amb, Subgroup const &X)
{
  std::vector<bool> left(amb.left.order(), false);
  std::vector<bool> right(amb.right.order(), false);
  unsigned nl = 0u, nr = 0u;
  for (el e : X.indices()) {
    el l = amb.left_of(e);
    el r = amb.right_of(e);
    if (!left[l]) {
      left[l] = true;
      ++nl;
    }
    if (!right[r]) {
      right[r] = true;
      ++nr;
    }
  }
  return nl == amb.left.order() && nr == amb.right.order();
}

bool middle_quotient_is_graph(ProductGroup const &amb, Subgroup const &X)
{
  GoursatData d = goursat_decompose(amb, X);

  Subgroup slices = slice_product(amb, d.k1, d.k2);
  if (!slices.is_subgroup_of(X))
    return false;

  QuotientGroup mid = quotient_group(X, slices);

  ProductGroup qprod = direct_product(d.q1.group, d.q2.group);
  if (mid.group.order() != static_cast<unsigned>(d.q1.group.order()))
    return false; // the middle quotient must be as large as one projection quotient

  // map each class of X/(k1 x k2) to the pair of projection-quotient classes of any member
  std::vector<el> images(mid.group.order());
  for (el e = 0u; e < mid.group.order(); ++e) {
    el local = mid.preimage[e];                // element of X's standalone group
    el global = X.indices()[local];            // inside the ambient product
    el l = amb.left_of(global);
    el r = amb.right_of(global);
    el lc = d.q1.projection.apply(static_cast<el>(d.p1.local_index(l)));
    el rc = d.q2.projection.apply(static_cast<el>(d.p2.local_index(r)));
    images[e] = qprod.pair_index(lc, rc);
  }

  GroupMorphism m(mid.group.full_subgroup(), qprod.group.full_subgroup(), std::move(images));
  if (!m.is_homomorphism() || !m.is_injective())
    return false;

  return m.image() == diagonal_subgroup(qprod, d.theta.inverse());
}

} // namespace fusionforge
