#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "fusionforge/gset.hpp"

using namespace fusionforge;

namespace {

// oracle: search for an explicit equivariant bijection, orbit by orbit
bool isomorphic_brute(GSet const &A, GSet const &B)
{
  if (!A.group().same_group(B.group()) || A.size() != B.size())
    return false;

  auto const &G = A.group();
  auto oa = A.orbits();
  auto ob = B.orbits();
  if (oa.size() != ob.size())
    return false;

  std::vector<bool> used(ob.size(), false);
  std::vector<pt> f(A.size(), 0u);

  for (auto const &O : oa) {
    pt x = O.front();
    Subgroup S = A.stabilizer(x);

    bool matched = false;
    for (std::size_t j = 0u; j < ob.size() && !matched; ++j) {
      if (used[j] || ob[j].size() != O.size())
        continue;
      for (pt y : ob[j]) {
        if (B.stabilizer(y) == S) { // equal stabilizers allow g.x -> g.y
          used[j] = true;
          matched = true;
          for (el g = 0u; g < G.order(); ++g)
            f[A.apply(g, x)] = B.apply(g, y);
          break;
        }
      }
    }
    if (!matched)
      return false;
  }

  std::vector<bool> hit(B.size(), false);
  for (pt x = 0u; x < A.size(); ++x) {
    if (hit[f[x]])
      return false;
    hit[f[x]] = true;
  }
  for (el g = 0u; g < G.order(); ++g)
    for (pt x = 0u; x < A.size(); ++x)
      if (f[A.apply(g, x)] != B.apply(g, f[x]))
        return false;
  return true;
}

PermGroup make_q8()
{
  return PermGroup::from_generators(8u, {Perm({2, 3, 1, 0, 6, 7, 5, 4}),
                                         Perm({4, 5, 7, 6, 1, 0, 2, 3})});
}

Subgroup diagonal(ProductGroup const &amb, GroupMorphism const &phi)
{
  // {(phi(u), u)} for phi defined on the right factor into the left factor
  std::vector<el> idx;
  for (el u = 0u; u < amb.right.order(); ++u)
    idx.push_back(amb.pair_index(phi.apply(u), u));
  std::sort(idx.begin(), idx.end());
  return Subgroup(amb.group, std::move(idx));
}

} // namespace

TEST_CASE("coset actions")
{
  PermGroup s4 = PermGroup::symmetric(4u);

  for (auto const &H : all_subgroups(s4)) {
    GSet X = GSet::cosets(s4, H);
    CHECK(X.size() == s4.order() / H.order());
    CHECK(X.orbits().size() == 1u);
    CHECK(X.stabilizer(0u) == H); // point 0 is the identity coset
    X.validate();
  }

  GSet R = GSet::regular(s4);
  CHECK(R.size() == 24u);
  CHECK(R.orbits().size() == 1u);
  CHECK(R.stabilizer(0u).order() == 1u);

  GSet P = GSet::single_point(s4);
  CHECK(P.size() == 1u);
  CHECK(P.stabilizer(0u).order() == 24u);
}

TEST_CASE("orbits of disjoint unions")
{
  PermGroup d8 = PermGroup::dihedral(8u);
  Subgroup rot = Subgroup::generated_perms(d8, {Perm({1, 2, 3, 0})});

  GSet U = GSet::disjoint_union(GSet::cosets(d8, rot), GSet::regular(d8));
  CHECK(U.size() == 2u + 8u);

  auto orbits = U.orbits();
  REQUIRE(orbits.size() == 2u);
  CHECK(orbits[0].size() == 2u);
  CHECK(orbits[1].size() == 8u);

  auto dec = U.decomposition();
  REQUIRE(dec.parts().size() == 2u);
  CHECK(dec.parts()[0].first.order() == 1u);
  CHECK(dec.parts()[1].first.order() == 4u);
  CHECK(dec.total_points(d8) == U.size());
}

TEST_CASE("decomposition equality matches the explicit bijection oracle")
{
  for (auto const &G : {PermGroup::symmetric(4u), PermGroup::dihedral(8u), make_q8()}) {
    auto subs = all_subgroups(G);
    for (auto const &H1 : subs) {
      for (auto const &H2 : subs) {
        GSet A = GSet::cosets(G, H1);
        GSet B = GSet::cosets(G, H2);
        bool expected = conjugate_test(G, H1, H2).has_value();
        CHECK(A.is_isomorphic_to(B) == expected);
        CHECK(isomorphic_brute(A, B) == expected);
      }
    }
  }
}

TEST_CASE("decomposition with a class key cache agrees with the plain one")
{
  PermGroup s4 = PermGroup::symmetric(4u);
  ClassKeyCache cache(s4);

  for (auto const &H : all_subgroups(s4)) {
    GSet X = GSet::disjoint_union(GSet::cosets(s4, H), GSet::single_point(s4));
    CHECK(X.decomposition(cache) == X.decomposition());
  }
}

TEST_CASE("restriction of the regular action is free")
{
  PermGroup s4 = PermGroup::symmetric(4u);
  Subgroup p2 = sylow(s4, 2u);

  GSet R = GSet::regular(s4).restricted(p2);
  CHECK(R.group().order() == 8u);
  CHECK(R.size() == 24u);

  auto dec = R.decomposition();
  REQUIRE(dec.parts().size() == 1u);
  CHECK(dec.parts()[0].first.order() == 1u);
  CHECK(dec.parts()[0].second == 3u); // three free orbits
}

TEST_CASE("transport along an automorphism maps coset actions to image coset actions")
{
  PermGroup d8 = PermGroup::dihedral(8u);

  for (auto const &a : automorphisms(d8)) {
    for (auto const &H : all_subgroups(d8)) {
      GSet X = GSet::cosets(d8, H).transported(a);

      // phi(H) computed through the morphism
      GSet Y = GSet::cosets(d8, a.restricted(H).image());
      CHECK(X.is_isomorphic_to(Y));
      CHECK(isomorphic_brute(X, Y));
    }
  }
}

TEST_CASE("induction of a point recovers the coset action")
{
  PermGroup s4 = PermGroup::symmetric(4u);

  for (auto const &H : all_subgroups(s4)) {
    GSet X = induce(s4, H, GSet::single_point(H.as_group()));
    CHECK(X.is_isomorphic_to(GSet::cosets(s4, H)));
  }
}

TEST_CASE("induction preserves disjoint unions")
{
  PermGroup s4 = PermGroup::symmetric(4u);
  Subgroup H = sylow(s4, 2u);
  PermGroup Hg = H.as_group();

  Subgroup inner = Subgroup::generated_perms(Hg, {Perm({1, 0, 3, 2})});
  GSet A = GSet::cosets(Hg, inner);
  GSet B = GSet::regular(Hg);

  GSet lhs = induce(s4, H, GSet::disjoint_union(A, B));
  GSet rhs = GSet::disjoint_union(induce(s4, H, A), induce(s4, H, B));
  CHECK(lhs.is_isomorphic_to(rhs));
  CHECK(isomorphic_brute(lhs, rhs));
}

TEST_CASE("double cosets partition the group")
{
  PermGroup s4 = PermGroup::symmetric(4u);
  auto subs = all_subgroups(s4);

  for (auto const &K : subs) {
    for (auto const &H : subs) {
      auto reps = double_coset_reps(s4, K, H);
      CHECK(reps.front() == 0u);
      CHECK(std::is_sorted(reps.begin(), reps.end()));

      // each element lies in exactly one double coset
      std::vector<unsigned> owner(s4.order(), 0u);
      for (el t : reps)
        for (el k : K.indices())
          for (el h : H.indices())
            ++owner[s4.mul(s4.mul(k, t), h)];

      unsigned covered = 0u;
      for (el g = 0u; g < s4.order(); ++g) {
        CHECK(owner[g] > 0u);
        covered += owner[g] > 0u ? 1u : 0u;
      }
      CHECK(covered == s4.order());

      // orbit count of K on G/H equals the double coset count
      CHECK(GSet::cosets(s4, H).restricted(K).orbits().size() == reps.size());
    }
  }
}

TEST_CASE("restricted inductions decompose over double cosets")
{
  PermGroup s4 = PermGroup::symmetric(4u);
  auto subs = all_subgroups(s4);

  // the trivial module over every (H, K) pair
  for (auto const &H : subs) {
    GSet X = GSet::single_point(H.as_group());
    for (auto const &K : subs) {
      auto cmp = mackey_comparison(s4, H, K, X);
      CHECK(cmp.isomorphic);
      CHECK(cmp.lhs == cmp.rhs);
    }
  }

  // nontrivial modules: every coset action of the Sylow 2-subgroup
  Subgroup H = sylow(s4, 2u);
  PermGroup Hg = H.as_group();
  for (auto const &L : all_subgroups(Hg)) {
    GSet X = GSet::cosets(Hg, L);
    for (auto const &K : subs) {
      auto cmp = mackey_comparison(s4, H, K, X);
      CHECK(cmp.isomorphic);
    }
  }
}

TEST_CASE("deflation collapses coset actions to quotient coset actions")
{
  PermGroup s4 = PermGroup::symmetric(4u);
  Subgroup v4 = Subgroup::generated_perms(s4, {Perm({1, 0, 3, 2}), Perm({2, 3, 0, 1})});
  Subgroup a4 = Subgroup::generated_perms(s4, {Perm({1, 2, 0, 3}), Perm({1, 0, 3, 2})});

  for (auto const &N : {v4, a4}) {
    QuotientGroup q = quotient_group(s4, N);

    for (auto const &H : all_subgroups(s4)) {
      GSet X = GSet::cosets(s4, H);
      GSet D = deflate(X, q, N);

      // image of HN in the quotient
      std::vector<el> hn(H.indices());
      hn.insert(hn.end(), N.indices().begin(), N.indices().end());
      std::sort(hn.begin(), hn.end());
      hn.erase(std::unique(hn.begin(), hn.end()), hn.end());
      Subgroup HN = Subgroup::generated(s4, hn);
      Subgroup img = q.projection.restricted(HN).image();

      GSet Y = GSet::cosets(q.group, img);
      CHECK(D.is_isomorphic_to(Y));
      CHECK(isomorphic_brute(D, Y));
    }
  }
}

TEST_CASE("quotient realizations embed compatibly")
{
  PermGroup s4 = PermGroup::symmetric(4u);
  Subgroup v4 = Subgroup::generated_perms(s4, {Perm({1, 0, 3, 2}), Perm({2, 3, 0, 1})});
  QuotientGroup outer = quotient_group(s4, v4);

  for (auto const &H : all_subgroups(s4)) {
    if (!v4.is_subgroup_of(H))
      continue;

    // V4 inside H's standalone group
    PermGroup Hg = H.as_group();
    std::vector<el> local;
    for (el g : v4.indices())
      local.push_back(static_cast<el>(H.local_index(g)));
    QuotientGroup inner = quotient_group(Hg, Subgroup(Hg, local));

    GroupMorphism emb = quotient_embedding(inner, H, outer);
    CHECK(emb.is_homomorphism());
    CHECK(emb.is_injective());
    CHECK(emb.image() == outer.projection.restricted(H).image());
  }
}

TEST_CASE("bisets from subgroups of a product")
{
  PermGroup c2 = PermGroup::cyclic(2u);
  ProductGroup amb = direct_product(c2, c2);

  // the full subgroup gives a single point; the diagonal gives the group itself
  Biset full = biset_from_subgroup(amb, amb.group.full_subgroup());
  CHECK(full.carrier.size() == 1u);

  Subgroup delta(amb.group, {amb.pair_index(0u, 0u), amb.pair_index(1u, 1u)});
  Biset diag = biset_from_subgroup(amb, delta);
  CHECK(diag.carrier.size() == 2u);

  // frozen micro-example: (full) composed with (diagonal) is one class with full stabilizer
  Biset comp = compose(full, diag);
  CHECK(comp.carrier.size() == 1u);
  CHECK(comp.carrier.stabilizer(0u).order() == 4u);
}

TEST_CASE("dualize swaps the sides and flips stabilizers")
{
  PermGroup d8 = PermGroup::dihedral(8u);
  PermGroup c4 = PermGroup::cyclic(4u);
  ProductGroup amb = direct_product(d8, c4);

  for (auto const &U : all_subgroups(amb.group)) {
    if (U.order() % 2u != 0u)
      continue; // just thin the sweep

    Biset B = biset_from_subgroup(amb, U);
    Biset D = dualize(B);

    CHECK(D.amb.left.same_group(c4));
    CHECK(D.amb.right.same_group(d8));
    CHECK(D.carrier.size() == B.carrier.size());

    // stabilizers flip coordinatewise
    for (pt x = 0u; x < B.carrier.size(); ++x) {
      Subgroup s = B.carrier.stabilizer(x);
      std::vector<el> flipped;
      for (el e : s.indices())
        flipped.push_back(D.amb.pair_index(amb.right_of(e), amb.left_of(e)));
      std::sort(flipped.begin(), flipped.end());
      CHECK(D.carrier.stabilizer(x) == Subgroup(D.amb.group, flipped));
    }

    // dualizing twice restores the table exactly
    Biset DD = dualize(D);
    CHECK(DD.amb.group.same_group(amb.group));
    for (el e = 0u; e < amb.group.order(); ++e)
      for (pt x = 0u; x < B.carrier.size(); ++x)
        CHECK(DD.carrier.apply(e, x) == B.carrier.apply(e, x));
  }
}

TEST_CASE("composition of graph bisets composes the maps")
{
  PermGroup d8 = PermGroup::dihedral(8u);
  ProductGroup amb = direct_product(d8, d8);

  auto auts = automorphisms(d8);
  for (auto const &phi : auts) {
    for (auto const &psi : auts) {
      Biset B1 = biset_from_subgroup(amb, diagonal(amb, phi));
      Biset B2 = biset_from_subgroup(amb, diagonal(amb, psi));

      Biset lhs = compose(B1, B2);
      Biset rhs = biset_from_subgroup(amb, diagonal(amb, phi.compose(psi)));

      CHECK(lhs.amb.group.same_group(amb.group));
      CHECK(lhs.carrier.is_isomorphic_to(rhs.carrier));
    }
  }
}

TEST_CASE("duality reverses composition")
{
  PermGroup d8 = PermGroup::dihedral(8u);
  PermGroup c4 = PermGroup::cyclic(4u);
  PermGroup c2 = PermGroup::cyclic(2u);

  ProductGroup amb1 = direct_product(d8, c4);
  ProductGroup amb2 = direct_product(c4, c2);

  auto subs1 = all_subgroups(amb1.group);
  auto subs2 = all_subgroups(amb2.group);

  unsigned tried = 0u;
  for (std::size_t i = 0u; i < subs1.size(); i += 7u) {
    for (std::size_t j = 0u; j < subs2.size(); j += 3u) {
      Biset B1 = biset_from_subgroup(amb1, subs1[i]);
      Biset B2 = biset_from_subgroup(amb2, subs2[j]);

      Biset lhs = dualize(compose(B1, B2));
      Biset rhs = compose(dualize(B2), dualize(B1));

      CHECK(lhs.amb.group.same_group(rhs.amb.group));
      CHECK(lhs.carrier.is_isomorphic_to(rhs.carrier));
      ++tried;
    }
  }
  CHECK(tried > 10u);
}
