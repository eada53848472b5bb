#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "fusionforge/goursat.hpp"

using namespace fusionforge;

namespace {

PermGroup make_q8()
{
  return PermGroup::from_generators(8u, {Perm({2, 3, 1, 0, 6, 7, 5, 4}),
                                         Perm({4, 5, 7, 6, 1, 0, 2, 3})});
}

} // namespace

TEST_CASE("decompose and reconstruct round-trip on every subgroup")
{
  std::vector<ProductGroup> products;
  products.push_back(direct_product(PermGroup::dihedral(8u), PermGroup::cyclic(4u)));
  products.push_back(direct_product(PermGroup::cyclic(6u), PermGroup::symmetric(3u)));
  products.push_back(direct_product(make_q8(), PermGroup::cyclic(2u)));
  products.push_back(direct_product(PermGroup::cyclic(4u), PermGroup::cyclic(4u)));

  for (auto const &amb : products) {
    for (auto const &X : all_subgroups(amb.group)) {
      GoursatData d = goursat_decompose(amb, X);

      CHECK(goursat_reconstruct(amb, d) == X);

      // the defining order relations of the data
      CHECK(X.order() == d.p1.order() * d.k2.order());
      CHECK(X.order() == d.k1.order() * d.p2.order());
      CHECK(d.q1.group.order() == d.q2.group.order());

      CHECK(d.k1.is_subgroup_of(d.p1));
      CHECK(d.k2.is_subgroup_of(d.p2));
      CHECK(is_normal_in(d.p1, d.k1));
      CHECK(is_normal_in(d.p2, d.k2));

      CHECK(d.theta.is_homomorphism());
      CHECK(d.theta.is_bijective());

      CHECK(slice_product(amb, d.k1, d.k2).is_subgroup_of(X));
    }
  }
}

TEST_CASE("the middle quotient is the graph of theta")
{
  ProductGroup amb = direct_product(PermGroup::dihedral(8u), PermGroup::symmetric(3u));
  for (auto const &X : all_subgroups(amb.group))
    CHECK(middle_quotient_is_graph(amb, X));
}

TEST_CASE("graphs of morphisms decompose with trivial slices")
{
  PermGroup d8 = PermGroup::dihedral(8u);
  ProductGroup amb = direct_product(d8, d8);

  for (auto const &phi : automorphisms(d8)) {
    Subgroup graph = diagonal_subgroup(amb, phi);
    CHECK(graph.order() == d8.order());

    GoursatData d = goursat_decompose(amb, graph);
    CHECK(d.p1.order() == d8.order());
    CHECK(d.p2.order() == d8.order());
    CHECK(d.k1.order() == 1u);
    CHECK(d.k2.order() == 1u);
    CHECK(goursat_reconstruct(amb, d) == graph);
  }

  // graphs of proper restrictions project onto proper subgroups
  Subgroup rot = Subgroup::generated_perms(d8, {Perm({1, 2, 3, 0})});
  GroupMorphism incl(rot, d8.full_subgroup(), std::vector<el>(rot.indices()));
  Subgroup graph = diagonal_subgroup(amb, incl);
  GoursatData d = goursat_decompose(amb, graph);
  CHECK(d.p1 == rot);
  CHECK(d.p2 == rot);
  CHECK(d.k1.order() == 1u);
}

TEST_CASE("flip is an involution matching inverse graphs")
{
  PermGroup d8 = PermGroup::dihedral(8u);
  PermGroup c4 = PermGroup::cyclic(4u);
  ProductGroup amb = direct_product(d8, c4);
  ProductGroup flipped = direct_product(c4, d8);

  for (auto const &X : all_subgroups(amb.group)) {
    Subgroup Y = flip_subgroup(amb, flipped, X);
    CHECK(Y.order() == X.order());
    CHECK(flip_subgroup(flipped, amb, Y) == X);

    // projections and slices swap sides
    GoursatData dx = goursat_decompose(amb, X);
    GoursatData dy = goursat_decompose(flipped, Y);
    CHECK(dx.p1 == dy.p2);
    CHECK(dx.p2 == dy.p1);
    CHECK(dx.k1 == dy.k2);
    CHECK(dx.k2 == dy.k1);
  }

  // flipping the graph of an automorphism gives the graph of its inverse
  ProductGroup square = direct_product(d8, d8);
  for (auto const &phi : automorphisms(d8)) {
    Subgroup graph = diagonal_subgroup(square, phi);
    CHECK(flip_subgroup(square, square, graph) ==
          diagonal_subgroup(square, phi.inverse()));
  }
}

TEST_CASE("subgroups with surjective projections are graphs of quotient isomorphisms")
{
  PermGroup c4 = PermGroup::cyclic(4u);
  ProductGroup amb = direct_product(c4, c4);

  unsigned surjective = 0u;
  for (auto const &X : all_subgroups(amb.group)) {
    if (!projections_surjective(amb, X))
      continue;
    ++surjective;

    GoursatData d = goursat_decompose(amb, X);
    CHECK(d.p1.order() == c4.order());
    CHECK(d.p2.order() == c4.order());
    CHECK(is_normal(c4, d.k1));
    CHECK(is_normal(c4, d.k2));
  }

  // graphs of isomorphisms C4/N1 -> C4/N2: two automorphism graphs, one order-8 graph
  // between the order-2 quotients, and the full product
  CHECK(surjective == 4u);

  // sanity in a nonabelian product: the diagonal itself
  PermGroup d8 = PermGroup::dihedral(8u);
  ProductGroup square = direct_product(d8, d8);
  unsigned graphs = 0u;
  for (auto const &X : all_subgroups(square.group))
    if (projections_surjective(square, X) && X.order() == d8.order())
      ++graphs; // full graphs = automorphism count
  CHECK(graphs == automorphisms(d8).size());
}
