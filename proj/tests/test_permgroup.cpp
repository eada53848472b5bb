#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>
#include <vector>

#include "fusionforge/group.hpp"

using namespace fusionforge;

namespace {

// oracle: closure by repeated pairwise products until fixpoint
std::vector<Perm> naive_closure(unsigned degree, std::vector<Perm> const &gens)
{
  std::set<Perm> s(gens.begin(), gens.end());
  s.insert(Perm(degree));

  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> cur(s.begin(), s.end());
    for (auto const &a : cur)
      for (auto const &b : cur)
        if (s.insert(a * b).second)
          grew = true;
  }
  return {s.begin(), s.end()};
}

// oracle: count subgroups by enumerating all identity-containing subsets (|G| <= 16)
unsigned count_subgroups_brute(PermGroup const &G)
{
  unsigned n = G.order();
  REQUIRE(n <= 16u);

  unsigned count = 0u;
  for (std::uint32_t mask = 1u; mask < (1u << n); ++mask) {
    if (!(mask & 1u))
      continue; // must contain the identity (index 0)
    if (n % static_cast<unsigned>(std::popcount(mask)) != 0u)
      continue; // Lagrange pre-filter

    std::vector<el> idx;
    for (unsigned i = 0u; i < n; ++i)
      if ((mask >> i) & 1u)
        idx.push_back(static_cast<el>(i));

    bool closed = true;
    for (el a : idx) {
      for (el b : idx) {
        if (!((mask >> G.mul(a, b)) & 1u)) {
          closed = false;
          break;
        }
      }
      if (!closed)
        break;
    }
    if (closed)
      ++count;
  }
  return count;
}

PermGroup make_e8()
{
  return PermGroup::from_generators(6u, {Perm({1, 0, 2, 3, 4, 5}), Perm({0, 1, 3, 2, 4, 5}),
                                         Perm({0, 1, 2, 3, 5, 4})});
}

PermGroup make_q8()
{
  // a regular action of the quaternion group: generators a, b with a^4 = 1, b^2 = a^2,
  // b a b^-1 = a^-1
  return PermGroup::from_generators(8u, {Perm({2, 3, 1, 0, 6, 7, 5, 4}),
                                         Perm({4, 5, 7, 6, 1, 0, 2, 3})});
}

} // namespace

TEST_CASE("closure agrees with the naive oracle")
{
  struct Case {
    unsigned degree;
    std::vector<Perm> gens;
    unsigned order;
  };

  std::vector<Case> cases = {
    {4u, {Perm({1, 2, 3, 0}), Perm({2, 1, 0, 3})}, 8u}, // 4-cycle + diagonal flip
    {3u, {}, 1u},
    {3u, {Perm({1, 0, 2})}, 2u},
    {5u, {Perm({1, 2, 3, 4, 0})}, 5u},
    {4u, {Perm({1, 0, 2, 3}), Perm({0, 2, 1, 3}), Perm({0, 1, 3, 2})}, 24u},
    {6u, {Perm({1, 2, 0, 3, 4, 5}), Perm({0, 1, 2, 4, 3, 5})}, 6u},
  };

  for (auto const &c : cases) {
    PermGroup G = closure(c.gens, c.degree);
    CHECK(G.order() == c.order);
    CHECK(G.elements() == naive_closure(c.degree, c.gens));
  }
}

TEST_CASE("factories produce the expected groups")
{
  CHECK(PermGroup::trivial().order() == 1u);
  CHECK(PermGroup::trivial(5u).degree() == 5u);
  CHECK(PermGroup::symmetric(1u).order() == 1u);
  CHECK(PermGroup::symmetric(3u).order() == 6u);
  CHECK(PermGroup::symmetric(4u).order() == 24u);
  CHECK(PermGroup::symmetric(5u).order() == 120u);
  CHECK(PermGroup::alternating(2u).order() == 1u);
  CHECK(PermGroup::alternating(3u).order() == 3u);
  CHECK(PermGroup::alternating(4u).order() == 12u);
  CHECK(PermGroup::alternating(5u).order() == 60u);
  CHECK(PermGroup::cyclic(1u).order() == 1u);
  CHECK(PermGroup::cyclic(8u).order() == 8u);
  CHECK(PermGroup::dihedral(4u).order() == 4u);
  CHECK(PermGroup::dihedral(8u).order() == 8u);
  CHECK(PermGroup::dihedral(16u).order() == 16u);

  PermGroup q8 = make_q8();
  CHECK(q8.order() == 8u);

  // exactly one involution is the signature of this group among order-8 groups
  unsigned involutions = 0u;
  for (el e = 0u; e < q8.order(); ++e)
    if (q8.element_order(e) == 2u)
      ++involutions;
  CHECK(involutions == 1u);

  CHECK(make_e8().order() == 8u);
}

TEST_CASE("canonical element order puts the identity first")
{
  for (auto const &G : {PermGroup::symmetric(4u), PermGroup::dihedral(12u), make_q8()}) {
    CHECK(G.element(0u).is_identity());
    CHECK(std::is_sorted(G.elements().begin(), G.elements().end()));
    CHECK(G.index_of(Perm(G.degree())) == 0u);
  }
}

TEST_CASE("index arithmetic matches permutation arithmetic")
{
  for (auto const &G : {PermGroup::symmetric(4u), make_q8(), PermGroup::dihedral(10u)}) {
    for (el a = 0u; a < G.order(); ++a) {
      CHECK(G.element(G.inv(a)) == G.element(a).inverse());
      CHECK(G.element_order(a) == G.element(a).order());
      for (el b = 0u; b < G.order(); ++b) {
        CHECK(G.element(G.mul(a, b)) == G.element(a) * G.element(b));
        CHECK(G.element(G.conj(a, b)) ==
              G.element(a) * G.element(b) * G.element(a).inverse());
      }
    }
  }
}

TEST_CASE("index arithmetic beyond the multiplication table threshold")
{
  PermGroup G = PermGroup::symmetric(7u); // order 5040, no materialized table
  CHECK(G.order() == 5040u);

  for (el a = 0u; a < G.order(); a += 389u) {
    CHECK(G.element(G.inv(a)) == G.element(a).inverse());
    for (el b = 1u; b < G.order(); b += 397u)
      CHECK(G.element(G.mul(a, b)) == G.element(a) * G.element(b));
  }
}

TEST_CASE("closure cap raises CapExceeded")
{
  Config cfg;
  cfg.closure_cap = 10u;
  CHECK_THROWS_AS(PermGroup::from_generators(
                    4u, {Perm({1, 0, 2, 3}), Perm({1, 2, 3, 0})}, cfg),
                  CapExceeded);
}

TEST_CASE("index_of rejects non-elements")
{
  PermGroup G = PermGroup::cyclic(4u);
  CHECK_THROWS_AS(G.index_of(Perm({1, 0, 2, 3})), InvalidData);
  CHECK(!G.contains(Perm({1, 0, 2, 3})));
  CHECK(G.contains(Perm({1, 2, 3, 0})));
}

TEST_CASE("subgroup basics")
{
  PermGroup G = PermGroup::symmetric(4u);

  Subgroup full = G.full_subgroup();
  CHECK(full.order() == 24u);

  Subgroup triv = G.trivial_subgroup();
  CHECK(triv.order() == 1u);
  CHECK(triv.is_subgroup_of(full));

  Subgroup C = Subgroup::generated_perms(G, {Perm({1, 2, 3, 0})});
  CHECK(C.order() == 4u);
  CHECK(C.contains_perm(Perm({2, 3, 0, 1})));
  CHECK(!C.contains_perm(Perm({1, 0, 2, 3})));
  CHECK(C.is_subgroup_of(full));
  CHECK(!full.is_subgroup_of(C));

  // local/global index roundtrip
  for (unsigned l = 0u; l < C.order(); ++l)
    CHECK(C.local_index(C.indices()[l]) == l);

  // as_group preserves the canonical order
  PermGroup Cg = C.as_group();
  CHECK(Cg.order() == 4u);
  for (unsigned l = 0u; l < C.order(); ++l)
    CHECK(Cg.element(static_cast<el>(l)) == C.element(l));

  // generating_set regenerates the subgroup
  Subgroup A = Subgroup::generated_perms(G, {Perm({1, 0, 3, 2}), Perm({2, 3, 0, 1})});
  CHECK(A.order() == 4u);
  CHECK(Subgroup::generated(G, A.generating_set()) == A);
  CHECK(A.generating_set().size() <= 2u);
}

TEST_CASE("subgroup enumeration matches the subset oracle")
{
  struct Case {
    PermGroup G;
    unsigned expected;
  };

  std::vector<Case> cases = {
    {PermGroup::cyclic(6u), 4u},
    {PermGroup::dihedral(4u), 5u},  // Klein four-group
    {PermGroup::dihedral(8u), 10u},
    {make_q8(), 6u},
    {PermGroup::symmetric(3u), 6u},
    {PermGroup::alternating(4u), 10u},
    {PermGroup::cyclic(16u), 5u},
  };

  for (auto const &c : cases) {
    auto subs = all_subgroups(c.G);
    CHECK(subs.size() == c.expected);
    CHECK(subs.size() == count_subgroups_brute(c.G));

    // canonical order: by (order, index list), starting at the trivial subgroup and ending
    // at the full group
    CHECK(subs.front().order() == 1u);
    CHECK(subs.back().order() == c.G.order());
    for (std::size_t i = 1u; i < subs.size(); ++i) {
      bool lt = subs[i - 1u].order() < subs[i].order() ||
                (subs[i - 1u].order() == subs[i].order() &&
                 subs[i - 1u].indices() < subs[i].indices());
      CHECK(lt);
    }

    // Lagrange
    for (auto const &S : subs)
      CHECK(c.G.order() % S.order() == 0u);
  }
}

TEST_CASE("subgroup enumeration on larger groups")
{
  PermGroup e16 = PermGroup::from_generators(
    8u, {Perm({1, 0, 2, 3, 4, 5, 6, 7}), Perm({0, 1, 3, 2, 4, 5, 6, 7}),
         Perm({0, 1, 2, 3, 5, 4, 6, 7}), Perm({0, 1, 2, 3, 4, 5, 7, 6})});
  CHECK(e16.order() == 16u);
  CHECK(all_subgroups(e16).size() == 67u);
  CHECK(count_subgroups_brute(e16) == 67u);

  CHECK(all_subgroups(PermGroup::symmetric(4u)).size() == 30u);
}

TEST_CASE("subgroup cap raises CapExceeded")
{
  Config cfg;
  cfg.subgroup_cap = 10u;
  CHECK_THROWS_AS(all_subgroups(PermGroup::symmetric(4u), cfg), CapExceeded);
}

TEST_CASE("sylow subgroups")
{
  PermGroup s4 = PermGroup::symmetric(4u);

  Subgroup p2 = sylow(s4, 2u);
  CHECK(p2.order() == 8u);
  CHECK(is_p_group(p2, 2u));

  Subgroup p3 = sylow(s4, 3u);
  CHECK(p3.order() == 3u);

  CHECK(sylow(s4, 5u).order() == 1u);

  PermGroup c12 = PermGroup::cyclic(12u);
  CHECK(sylow(c12, 2u).order() == 4u);
  CHECK(sylow(c12, 3u).order() == 3u);

  PermGroup a5 = PermGroup::alternating(5u);
  CHECK(sylow(a5, 2u).order() == 4u);
  CHECK(sylow(a5, 3u).order() == 3u);
  CHECK(sylow(a5, 5u).order() == 5u);

  // determinism: the same subgroup every time
  CHECK(sylow(s4, 2u) == sylow(s4, 2u));
}

TEST_CASE("conjugacy tests")
{
  PermGroup d8 = PermGroup::dihedral(8u);
  auto subs = all_subgroups(d8);

  // collect the order-2 subgroups; the two reflection classes are conjugate within
  // themselves but not to the center
  std::vector<Subgroup> order2;
  for (auto const &S : subs)
    if (S.order() == 2u)
      order2.push_back(S);
  CHECK(order2.size() == 5u);

  unsigned myself = 0u;
  for (auto const &S : order2) {
    auto w = conjugate_test(d8, S, S);
    REQUIRE(w.has_value());
    CHECK(w->is_identity()); // minimal witness for A == A
    ++myself;
  }
  CHECK(myself == 5u);

  // conjugation witness actually conjugates
  for (auto const &A : order2) {
    for (auto const &B : order2) {
      auto w = conjugate_test(d8, A, B);
      if (!w.has_value())
        continue;
      CHECK(A.conjugated_by(d8.index_of(*w)) == B);
    }
  }

  // canonical representatives agree exactly on conjugacy classes
  for (auto const &A : order2)
    for (auto const &B : order2)
      CHECK((canonical_conjugate(d8, A) == canonical_conjugate(d8, B)) ==
            conjugate_test(d8, A, B).has_value());

  // the two Klein subgroups of D8 are not conjugate, and neither is conjugate to the
  // rotation subgroup
  std::vector<Subgroup> order4;
  for (auto const &S : subs)
    if (S.order() == 4u)
      order4.push_back(S);
  CHECK(order4.size() == 3u);
  for (auto const &A : order4)
    for (auto const &B : order4)
      CHECK(conjugate_test(d8, A, B).has_value() == (A == B));

  // canonical_conjugate is idempotent and stays in the class
  for (auto const &S : subs) {
    Subgroup c = canonical_conjugate(d8, S);
    CHECK(conjugate_test(d8, c, S).has_value());
    CHECK(canonical_conjugate(d8, c) == c);
  }
}

TEST_CASE("normalizers and centralizers")
{
  PermGroup s4 = PermGroup::symmetric(4u);

  Subgroup p2 = sylow(s4, 2u);
  CHECK(normalizer(s4, p2).order() == 8u); // Sylow 2-subgroups are self-normalizing here

  Subgroup p3 = sylow(s4, 3u);
  CHECK(normalizer(s4, p3).order() == 6u);
  CHECK(centralizer(s4, p3).order() == 3u);

  PermGroup d8 = PermGroup::dihedral(8u);
  Subgroup center = centralizer(d8, d8.full_subgroup());
  CHECK(center.order() == 2u);
  CHECK(is_normal(d8, center));
  CHECK(normalizer(d8, center).order() == 8u);

  // relative variants agree with the absolute ones on the full subgroup
  Subgroup full = d8.full_subgroup();
  for (auto const &S : all_subgroups(d8)) {
    CHECK(normalizer_in(full, S) == normalizer(d8, S));
    CHECK(centralizer_in(full, S) == centralizer(d8, S));
    CHECK(is_normal_in(full, S) == is_normal(d8, S));
  }

  // the normalizer computed inside a proper subgroup: reflections normalize nothing extra
  // inside the rotation subgroup beyond what is central
  Subgroup rot = Subgroup::generated_perms(d8, {Perm({1, 2, 3, 0})});
  Subgroup refl = Subgroup::generated_perms(d8, {Perm({0, 3, 2, 1})});
  Subgroup nr = normalizer_in(rot, refl);
  CHECK(nr == centralizer_in(rot, refl));
  CHECK(nr.order() == 2u);
}

TEST_CASE("normality against the definition")
{
  PermGroup s3 = PermGroup::symmetric(3u);
  Subgroup a3 = Subgroup::generated_perms(s3, {Perm({1, 2, 0})});
  Subgroup t = Subgroup::generated_perms(s3, {Perm({1, 0, 2})});

  CHECK(is_normal(s3, a3));
  CHECK(!is_normal(s3, t));

  // brute-force definition on every subgroup of S4
  PermGroup s4 = PermGroup::symmetric(4u);
  for (auto const &S : all_subgroups(s4)) {
    bool normal = true;
    for (el g = 0u; g < s4.order() && normal; ++g)
      normal = S.conjugated_by(g) == S;
    CHECK(is_normal(s4, S) == normal);
  }
}

TEST_CASE("automorphism groups have the right order")
{
  struct Case {
    PermGroup G;
    unsigned aut_order;
  };

  std::vector<Case> cases = {
    {PermGroup::trivial(), 1u},
    {PermGroup::cyclic(2u), 1u},
    {PermGroup::cyclic(4u), 2u},
    {PermGroup::cyclic(6u), 2u},
    {PermGroup::cyclic(8u), 4u},
    {PermGroup::dihedral(4u), 6u}, // Klein four-group
    {make_e8(), 168u},
    {PermGroup::symmetric(3u), 6u},
    {PermGroup::dihedral(8u), 8u},
    {make_q8(), 24u},
    {PermGroup::alternating(4u), 24u},
  };

  for (auto const &c : cases) {
    auto auts = automorphisms(c.G);
    CHECK(auts.size() == c.aut_order);

    for (auto const &a : auts) {
      CHECK(a.is_homomorphism());
      CHECK(a.is_bijective());
    }

    // distinct and sorted by image table
    for (std::size_t i = 1u; i < auts.size(); ++i)
      CHECK(auts[i - 1u].images() < auts[i].images());

    // the identity map is among them
    bool has_id = false;
    for (auto const &a : auts) {
      bool is_id = true;
      for (el e = 0u; e < c.G.order(); ++e)
        if (a.apply(e) != e)
          is_id = false;
      if (is_id)
        has_id = true;
    }
    CHECK(has_id);
  }
}

TEST_CASE("automorphisms are closed under composition and inverse")
{
  PermGroup d8 = PermGroup::dihedral(8u);
  auto auts = automorphisms(d8);

  auto find = [&](GroupMorphism const &m) {
    for (auto const &a : auts)
      if (a.images() == m.images())
        return true;
    return false;
  };

  for (auto const &a : auts) {
    CHECK(find(a.inverse()));
    for (auto const &b : auts)
      CHECK(find(a.compose(b)));
  }
}

TEST_CASE("automorphism cap raises CapExceeded")
{
  Config cfg;
  cfg.automorphism_cap = 4u;
  CHECK_THROWS_AS(automorphisms(PermGroup::dihedral(16u), cfg), CapExceeded);
}

TEST_CASE("morphism algebra")
{
  PermGroup s4 = PermGroup::symmetric(4u);

  Subgroup v4 = Subgroup::generated_perms(s4, {Perm({1, 0, 3, 2}), Perm({2, 3, 0, 1})});
  CHECK(is_normal(s4, v4));

  QuotientGroup q = quotient_group(s4, v4);
  CHECK(q.group.order() == 6u);

  GroupMorphism const &pi = q.projection;
  CHECK(pi.is_homomorphism());
  CHECK(!pi.is_injective());
  CHECK(pi.image().order() == 6u);

  // kernel elements are exactly v4
  std::vector<el> kernel;
  for (el e = 0u; e < s4.order(); ++e)
    if (pi.apply(e) == 0u)
      kernel.push_back(e);
  CHECK(kernel == v4.indices());

  // restriction to a transversal-generated C3 is injective there
  Subgroup c3 = Subgroup::generated_perms(s4, {Perm({1, 2, 0, 3})});
  GroupMorphism r = pi.restricted(c3);
  CHECK(r.is_homomorphism());
  CHECK(r.is_injective());
  CHECK(!r.is_bijective());

  GroupMorphism rc = r.corestricted();
  CHECK(rc.is_bijective());
  GroupMorphism back = rc.inverse();
  CHECK(back.is_homomorphism());
  for (el e : c3.indices())
    CHECK(back.apply(rc.apply(e)) == e);

  CHECK_THROWS_AS(pi.inverse(), NotIsomorphism);

  // compose: inclusion after inverse is the identity on the image subgroup
  GroupMorphism idm = rc.compose(back);
  for (el e : idm.source().indices())
    CHECK(idm.apply(e) == e);
}

TEST_CASE("quotient structure")
{
  PermGroup d8 = PermGroup::dihedral(8u);
  Subgroup center = centralizer(d8, d8.full_subgroup());

  QuotientGroup q = quotient_group(d8, center);
  CHECK(q.group.order() == 4u);

  // D8 over its center is the Klein four-group: no element of order 4
  for (el e = 0u; e < q.group.order(); ++e)
    CHECK(q.group.element_order(e) <= 2u);

  // projection, preimage, coset tables are mutually consistent
  for (el g = 0u; g < d8.order(); ++g) {
    el img = q.projection.apply(g);
    CHECK(q.projection.apply(q.preimage[img]) == img);
    CHECK(q.coset_of[g] < q.group.degree());
    CHECK(q.coset_of[q.coset_rep[q.coset_of[g]]] == q.coset_of[g]);
  }

  // cosets partition the group into |N|-sized chunks
  std::vector<unsigned> sizes(q.group.degree(), 0u);
  for (el g = 0u; g < d8.order(); ++g)
    ++sizes[q.coset_of[g]];
  for (unsigned s : sizes)
    CHECK(s == center.order());

  // coset representatives are minimal in their cosets
  for (unsigned c = 0u; c < q.group.degree(); ++c)
    for (el g = 0u; g < q.coset_rep[c]; ++g)
      CHECK(q.coset_of[g] != c);

  // non-normal subgroups are rejected
  PermGroup s3 = PermGroup::symmetric(3u);
  Subgroup t = Subgroup::generated_perms(s3, {Perm({1, 0, 2})});
  CHECK_THROWS_AS(quotient_group(s3, t), NotNormal);

  // subgroup-relative quotient: S4's Sylow 2-subgroup over its Klein kernel
  PermGroup s4 = PermGroup::symmetric(4u);
  Subgroup p2 = sylow(s4, 2u);
  Subgroup v4 = Subgroup::generated_perms(s4, {Perm({1, 0, 3, 2}), Perm({2, 3, 0, 1})});
  CHECK(v4.is_subgroup_of(p2));
  QuotientGroup q2 = quotient_group(p2, v4);
  CHECK(q2.group.order() == 2u);
}

TEST_CASE("direct products")
{
  PermGroup d8 = PermGroup::dihedral(8u);
  PermGroup c2 = PermGroup::cyclic(2u);

  ProductGroup p = direct_product(d8, c2);
  CHECK(p.group.order() == 16u);
  CHECK(p.group.degree() == d8.degree() + c2.degree());

  // pair indexing is consistent with the canonical element order
  for (el a = 0u; a < d8.order(); ++a) {
    for (el b = 0u; b < c2.order(); ++b) {
      el e = p.pair_index(a, b);
      CHECK(p.left_of(e) == a);
      CHECK(p.right_of(e) == b);
      CHECK(p.proj_left.apply(e) == a);
      CHECK(p.proj_right.apply(e) == b);
    }
  }

  CHECK(p.proj_left.is_homomorphism());
  CHECK(p.proj_right.is_homomorphism());
  CHECK(p.inj_left.is_homomorphism());
  CHECK(p.inj_right.is_homomorphism());

  // projection after injection is the identity
  for (el a = 0u; a < d8.order(); ++a)
    CHECK(p.proj_left.apply(p.inj_left.apply(a)) == a);
  for (el b = 0u; b < c2.order(); ++b)
    CHECK(p.proj_right.apply(p.inj_right.apply(b)) == b);

  // multiplication is componentwise
  for (el e = 0u; e < p.group.order(); e += 3u)
    for (el f = 0u; f < p.group.order(); f += 5u)
      CHECK(p.group.mul(e, f) ==
            p.pair_index(d8.mul(p.left_of(e), p.left_of(f)), c2.mul(p.right_of(e), p.right_of(f))));

  // known subgroup counts of products
  CHECK(all_subgroups(direct_product(PermGroup::dihedral(8u), PermGroup::dihedral(8u)).group)
          .size() == 389u);
  CHECK(all_subgroups(direct_product(make_q8(), make_q8()).group).size() == 133u);
  CHECK(all_subgroups(direct_product(PermGroup::cyclic(8u), PermGroup::cyclic(8u)).group)
          .size() == 37u);
}

TEST_CASE("number helpers")
{
  CHECK(p_part(48u, 2u) == 16u);
  CHECK(p_part(48u, 3u) == 3u);
  CHECK(p_part(5u, 2u) == 1u);
  CHECK(is_p_power(8u, 2u));
  CHECK(is_p_power(1u, 3u));
  CHECK(!is_p_power(12u, 2u));
  CHECK(is_prime(2u));
  CHECK(is_prime(97u));
  CHECK(!is_prime(1u));
  CHECK(!is_prime(91u));
  CHECK(prime_divisors(360u) == std::vector<unsigned>{2u, 3u, 5u});
  CHECK(prime_divisors(1u).empty());
}
