#include "fusionforge/fusion.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace fusionforge {

namespace {

unsigned pos_in(std::vector<el> const &sorted, el x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  assert(it != sorted.end() && *it == x && "element not in subgroup");
  return static_cast<unsigned>(it - sorted.begin());
}

std::vector<el> sorted_values(std::vector<el> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Push the morphism table `t` (on source indices S upstairs) down along the
// projection; `pre_in_S` must give, for each downstairs element of proj(S), a
// preimage inside S.
std::vector<el> induced_table(GroupMorphism const &proj, std::vector<el> const &S,
                              std::vector<el> const &t,
                              std::vector<el> const &down_src,
                              std::vector<el> const &pre_in_S) {
  std::vector<el> out(down_src.size());
  for (unsigned i = 0; i < down_src.size(); ++i) {
    el x = pre_in_S[i];
    out[i] = proj.apply(t[pos_in(S, x)]);
  }
  return out;
}

} // namespace

QuotientSystem quotient_stabilizing(FusionSystem const &F, Subgroup const &R,
                                    Config const &cfg) {
  QuotientGroup q = quotient_group(F.group(), R); // NotNormal if R is not normal
  auto atlas2 = std::make_shared<SubgroupAtlas const>(q.group, cfg);
  std::vector<std::vector<std::vector<el>>> tables(atlas2->subs.size());
  std::vector<std::set<std::vector<el>>> seen(atlas2->subs.size());

  std::vector<el> const &ridx = R.indices();
  auto const &atlas = *F.atlas();
  for (unsigned s = 0; s < atlas.subs.size(); ++s) {
    if (!R.is_subgroup_of(atlas.subs[s]))
      continue;
    std::vector<el> const &sidx = atlas.subs[s].indices();
    // downstairs source and the minimal preimage of each of its elements
    std::vector<el> down;
    for (el x : sidx)
      down.push_back(q.projection.apply(x));
    down = sorted_values(down);
    std::vector<el> pre(down.size());
    for (unsigned i = 0; i < down.size(); ++i)
      pre[i] = q.preimage[down[i]]; // lies in the source: it contains R, so whole cosets
    unsigned did = atlas2->id_of(down);
    for (auto const &t : F.tables_from(s)) {
      bool stabilizes = true;
      for (el r : ridx)
        if (!std::binary_search(ridx.begin(), ridx.end(), t[pos_in(sidx, r)])) {
          stabilizes = false;
          break;
        }
      if (!stabilizes)
        continue;
      seen[did].insert(induced_table(q.projection, sidx, t, down, pre));
    }
  }
  for (unsigned d = 0; d < seen.size(); ++d)
    tables[d].assign(seen[d].begin(), seen[d].end());
  FusionSystem sys = FusionSystem::from_tables(atlas2, F.prime(), std::move(tables));
  return {std::move(q), std::move(sys)};
}

QuotientSystem quotient_images(FusionSystem const &F, Subgroup const &R,
                               Config const &cfg) {
  if (!F.strongly_closed(R))
    throw NotStronglyClosed("image quotient requires a strongly closed subgroup");
  QuotientGroup q = quotient_group(F.group(), R);
  auto atlas2 = std::make_shared<SubgroupAtlas const>(q.group, cfg);
  std::vector<std::vector<std::vector<el>>> tables(atlas2->subs.size());
  std::vector<std::set<std::vector<el>>> seen(atlas2->subs.size());

  auto const &atlas = *F.atlas();
  for (unsigned s = 0; s < atlas.subs.size(); ++s) {
    std::vector<el> const &sidx = atlas.subs[s].indices();
    std::vector<el> down;
    for (el x : sidx)
      down.push_back(q.projection.apply(x));
    down = sorted_values(down);
    // first preimage of each downstairs element inside the source itself
    std::vector<el> pre(down.size(), 0);
    std::vector<bool> have(down.size(), false);
    for (el x : sidx) {
      unsigned i = pos_in(down, q.projection.apply(x));
      if (!have[i]) {
        have[i] = true;
        pre[i] = x;
      }
    }
    unsigned did = atlas2->id_of(down);
    for (auto const &t : F.tables_from(s))
      seen[did].insert(induced_table(q.projection, sidx, t, down, pre));
  }
  for (unsigned d = 0; d < seen.size(); ++d)
    tables[d].assign(seen[d].begin(), seen[d].end());
  FusionSystem sys = FusionSystem::from_tables(atlas2, F.prime(), std::move(tables));
  return {std::move(q), std::move(sys)};
}

QuotientSystem quotient_images_closure(FusionSystem const &F, Subgroup const &R,
                                       Config const &cfg) {
  QuotientSystem qi = quotient_images(F, R, cfg);
  std::vector<GroupMorphism> seeds;
  for (auto const &sub : qi.system.subgroups())
    for (auto &m : qi.system.isos_from(sub))
      seeds.push_back(std::move(m));
  FusionSystem closed =
      FusionSystem::generated(qi.q.group, F.prime(), seeds, cfg);
  return {std::move(qi.q), std::move(closed)};
}

FusionSystem alperin_generated(FusionSystem const &F, Config const &cfg) {
  std::vector<GroupMorphism> seeds;
  for (auto const &sub : F.subgroups())
    if (F.fully_normalized(sub))
      for (auto &m : F.automorphisms_of(sub))
        seeds.push_back(std::move(m));
  return FusionSystem::generated(F.group(), F.prime(), seeds, cfg);
}

bool iso_check(FusionSystem const &F1, FusionSystem const &F2,
               GroupMorphism const &theta) {
  PermGroup const &P1 = F1.group();
  PermGroup const &P2 = F2.group();
  if (F1.prime() != F2.prime() || P1.order() != P2.order())
    return false;
  if (theta.source().order() != P1.order() ||
      !theta.source().parent().same_group(P1) ||
      !theta.target().parent().same_group(P2) || !theta.is_bijective())
    throw InvalidData("transport requires an isomorphism between the two groups");
  assert(theta.is_homomorphism());

  std::vector<el> const &img = theta.images();
  std::vector<el> tinv(P2.order());
  for (el x = 0; x < P1.order(); ++x)
    tinv[img[x]] = x;

  auto const &atlas1 = *F1.atlas();
  auto const &atlas2 = *F2.atlas();
  if (atlas1.subs.size() != atlas2.subs.size())
    return false;
  for (unsigned s1 = 0; s1 < atlas1.subs.size(); ++s1) {
    std::vector<el> const &S1 = atlas1.subs[s1].indices();
    std::vector<el> S2;
    for (el x : S1)
      S2.push_back(img[x]);
    S2 = sorted_values(S2);
    unsigned s2 = atlas2.id_of(S2);
    auto const &mine = F1.tables_from(s1);
    auto const &theirs = F2.tables_from(s2);
    if (mine.size() != theirs.size())
      return false;
    std::vector<std::vector<el>> moved;
    moved.reserve(mine.size());
    for (auto const &t : mine) {
      std::vector<el> tau(S2.size());
      for (unsigned j = 0; j < S2.size(); ++j)
        tau[j] = img[t[pos_in(S1, tinv[S2[j]])]];
      moved.push_back(std::move(tau));
    }
    std::sort(moved.begin(), moved.end());
    if (moved != theirs)
      return false;
  }
  return true;
}

bool inner_by_diagonal(PermGroup const &P, GroupMorphism const &phi) {
  assert(phi.source().order() == P.order() && phi.is_bijective());
  ProductGroup amb = direct_product(P, P);
  std::vector<el> diag, graph;
  for (el u = 0; u < P.order(); ++u) {
    diag.push_back(amb.pair_index(u, u));
    graph.push_back(amb.pair_index(phi.images()[u], u));
  }
  std::sort(graph.begin(), graph.end());
  Subgroup a(amb.group, std::move(graph));
  Subgroup b(amb.group, std::move(diag));
  return conjugate_test(amb.group, a, b).has_value();
}

bool inner_by_witness(PermGroup const &P, GroupMorphism const &phi) {
  assert(phi.source().order() == P.order() && phi.is_bijective());
  std::vector<el> const &img = phi.images();
  for (el u = 0; u < P.order(); ++u) {
    bool ok = true;
    for (el x = 0; x < P.order() && ok; ++x)
      ok = img[x] == P.conj(u, x);
    if (ok)
      return true;
  }
  return false;
}

} // namespace fusionforge
