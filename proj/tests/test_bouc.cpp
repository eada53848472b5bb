#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "fusionforge/bouc.hpp"

using namespace fusionforge;

namespace {

PermGroup make_q8()
{
  return PermGroup::from_generators(8u, {Perm({2, 3, 1, 0, 6, 7, 5, 4}),
                                         Perm({4, 5, 7, 6, 1, 0, 2, 3})});
}

// oracle: the defining condition checked by an independent triple loop
Subgroup star_brute(ProductGroup const &ambGH, Subgroup const &X, ProductGroup const &ambHK,
                    Subgroup const &Y, ProductGroup const &ambGK, el t)
{
  PermGroup const &H = ambGH.right;

  std::vector<el> idx;
  for (el g = 0u; g < ambGK.left.order(); ++g) {
    for (el k = 0u; k < ambGK.right.order(); ++k) {
      bool found = false;
      for (el h = 0u; h < H.order() && !found; ++h) {
        el h2 = H.mul(H.mul(H.inv(t), h), t);
        found = X.contains(ambGH.pair_index(g, h)) && Y.contains(ambHK.pair_index(h2, k));
      }
      if (found)
        idx.push_back(ambGK.pair_index(g, k));
    }
  }
  std::sort(idx.begin(), idx.end());
  return Subgroup(ambGK.group, std::move(idx));
}

} // namespace

TEST_CASE("frozen micro-example over the two-element group")
{
  PermGroup c2 = PermGroup::cyclic(2u);
  ProductGroup amb = direct_product(c2, c2);

  Subgroup full = amb.group.full_subgroup();
  Subgroup delta(amb.group, {amb.pair_index(0u, 0u), amb.pair_index(1u, 1u)});

  Subgroup star = star_product(amb, full, amb, delta, amb, 0u);
  CHECK(star == full);

  auto cmp = bouc_comparison(amb, full, amb, delta, amb);
  CHECK(cmp.equal);
  CHECK(cmp.reps.size() == 1u);
  REQUIRE(cmp.rhs.parts().size() == 1u);
  CHECK(cmp.rhs.parts()[0].first.order() == 4u);
}

TEST_CASE("twisted products match the brute-force definition")
{
  ProductGroup ambGH = direct_product(PermGroup::dihedral(8u), PermGroup::cyclic(4u));
  ProductGroup ambHK = direct_product(PermGroup::cyclic(4u), PermGroup::symmetric(3u));
  ProductGroup ambGK = direct_product(PermGroup::dihedral(8u), PermGroup::symmetric(3u));

  auto subsGH = all_subgroups(ambGH.group);
  auto subsHK = all_subgroups(ambHK.group);

  unsigned tried = 0u;
  for (std::size_t i = 0u; i < subsGH.size(); i += 5u) {
    for (std::size_t j = 0u; j < subsHK.size(); j += 4u) {
      for (el t = 0u; t < ambGH.right.order(); t += 3u) {
        CHECK(star_product(ambGH, subsGH[i], ambHK, subsHK[j], ambGK, t) ==
              star_brute(ambGH, subsGH[i], ambHK, subsHK[j], ambGK, t));
        ++tried;
      }
    }
  }
  CHECK(tried >= 40u);
}

TEST_CASE("twisted products of morphism graphs compose the morphisms")
{
  for (auto const &G : {PermGroup::dihedral(8u), make_q8()}) {
    ProductGroup amb = direct_product(G, G);
    auto auts = automorphisms(G);

    for (auto const &phi : auts) {
      for (auto const &psi : auts) {
        Subgroup star = star_product(amb, diagonal_subgroup(amb, phi), amb,
                                     diagonal_subgroup(amb, psi), amb, 0u);
        CHECK(star == diagonal_subgroup(amb, phi.compose(psi)));
      }
    }
  }
}

TEST_CASE("composed coset bisets decompose into the predicted terms")
{
  PermGroup c4 = PermGroup::cyclic(4u);
  PermGroup v4 = PermGroup::dihedral(4u);
  PermGroup c2 = PermGroup::cyclic(2u);

  // every subgroup pair for a fixed triple
  {
    ProductGroup ambGH = direct_product(c4, c4);
    ProductGroup ambHK = direct_product(c4, c4);
    ProductGroup ambGK = direct_product(c4, c4);

    auto subs = all_subgroups(ambGH.group);
    for (auto const &X : subs) {
      for (auto const &Y : subs) {
        auto cmp = bouc_comparison(ambGH, X, ambHK, Y, ambGK);
        CHECK(cmp.equal);
      }
    }
  }

  // a mixed triple with a noncyclic middle
  {
    ProductGroup ambGH = direct_product(c4, v4);
    ProductGroup ambHK = direct_product(v4, c2);
    ProductGroup ambGK = direct_product(c4, c2);

    for (auto const &X : all_subgroups(ambGH.group)) {
      for (auto const &Y : all_subgroups(ambHK.group)) {
        auto cmp = bouc_comparison(ambGH, X, ambHK, Y, ambGK);
        CHECK(cmp.equal);

        // the composed carrier has one orbit per double coset
        Biset composed = compose(biset_from_subgroup(ambGH, X),
                                 biset_from_subgroup(ambHK, Y), ambGK);
        CHECK(composed.carrier.orbits().size() == cmp.reps.size());
      }
    }
  }
}

TEST_CASE("a nonabelian triple with caching agrees with the plain comparison")
{
  PermGroup d8 = PermGroup::dihedral(8u);
  PermGroup c2 = PermGroup::cyclic(2u);

  ProductGroup ambGH = direct_product(d8, c2);
  ProductGroup ambHK = direct_product(c2, d8);
  ProductGroup ambGK = direct_product(d8, d8);

  ClassKeyCache cache(ambGK.group);

  for (auto const &X : all_subgroups(ambGH.group)) {
    for (auto const &Y : all_subgroups(ambHK.group)) {
      auto plain = bouc_comparison(ambGH, X, ambHK, Y, ambGK);
      auto cached = bouc_comparison(ambGH, X, ambHK, Y, ambGK, cache);
      CHECK(plain.equal);
      CHECK(cached.equal);
      CHECK(plain.lhs == cached.lhs);
      CHECK(plain.rhs == cached.rhs);
    }
  }
}
