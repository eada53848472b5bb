#include "fusionforge/explorer.hpp"

#include <algorithm>
#include <set>

namespace fusionforge {

GroupMorphism induced_quotient_iso(ProductGroup const &amb, Subgroup const &R,
                                   QuotientGroup const &q1,
                                   QuotientGroup const &q2) {
  unsigned m = q1.group.order();
  std::vector<el> img(m);
  for (el e1 = 0; e1 < m; ++e1) {
    el x1 = q1.preimage[e1];
    bool found = false;
    for (el r : R.indices())
      if (amb.left_of(r) == x1) {
        img[e1] = q2.projection.apply(amb.right_of(r));
        found = true;
        break;
      }
    if (!found)
      throw InvalidData("left projection of the candidate is not surjective");
  }
  GroupMorphism theta(q1.group.full_subgroup(), q2.group.full_subgroup(),
                      std::move(img));
  if (!theta.is_bijective() || !theta.is_homomorphism())
    throw InvalidData("candidate does not induce a quotient isomorphism");
  return theta;
}

CompatibilityReport explore_compatibility(FusionSystem const &F1,
                                          FusionSystem const &F2,
                                          Config const &cfg) {
  if (F1.prime() != F2.prime())
    throw InvalidData("compatibility exploration needs a common prime");
  PermGroup const &P1 = F1.group();
  PermGroup const &P2 = F2.group();
  ProductGroup amb = direct_product(P1, P2);
  std::vector<Subgroup> subs = all_subgroups(amb.group, cfg);

  CompatibilityReport report{amb, {}};
  std::set<std::vector<el>> seen;
  for (auto const &R : subs) {
    // both projections must cover their factor
    std::vector<bool> hit1(P1.order(), false), hit2(P2.order(), false);
    unsigned c1 = 0, c2 = 0;
    for (el e : R.indices()) {
      el a = amb.left_of(e), b = amb.right_of(e);
      if (!hit1[a]) {
        hit1[a] = true;
        ++c1;
      }
      if (!hit2[b]) {
        hit2[b] = true;
        ++c2;
      }
    }
    if (c1 != P1.order() || c2 != P2.order())
      continue;

    Subgroup canon = canonical_conjugate(amb.group, R);
    if (!seen.insert(canon.indices()).second)
      continue;

    std::vector<el> r1, r2;
    for (el e : canon.indices()) {
      if (amb.right_of(e) == 0)
        r1.push_back(amb.left_of(e));
      if (amb.left_of(e) == 0)
        r2.push_back(amb.right_of(e));
    }
    std::sort(r1.begin(), r1.end());
    std::sort(r2.begin(), r2.end());
    Subgroup R1(P1, std::move(r1));
    Subgroup R2(P2, std::move(r2));

    bool cl1 = F1.strongly_closed(R1);
    bool cl2 = F2.strongly_closed(R2);
    std::optional<bool> transport;
    if (cl1 && cl2) {
      QuotientSystem qs1 = quotient_images(F1, R1, cfg);
      QuotientSystem qs2 = quotient_images(F2, R2, cfg);
      GroupMorphism theta = induced_quotient_iso(amb, canon, qs1.q, qs2.q);
      transport = iso_check(qs1.system, qs2.system, theta);
    }
    report.candidates.push_back(
        {canon, std::move(R1), std::move(R2), cl1, cl2, std::move(transport)});
  }
  return report;
}

} // namespace fusionforge
