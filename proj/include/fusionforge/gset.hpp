#ifndef GUARD_FUSIONFORGE_GSET_H
#define GUARD_FUSIONFORGE_GSET_H

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "fusionforge/group.hpp"

namespace fusionforge {

// index of a point in a finite group action
using pt = std::uint32_t;

// Structure of the left cosets of a (not necessarily normal) subgroup: minimal-element
// representatives in ascending order and the coset index of every group element.
struct CosetTable {
  std::vector<el> rep;            // per coset: minimal member element
  std::vector<std::uint16_t> coset_of; // per group element: its coset
};

CosetTable left_cosets(PermGroup const &G, Subgroup const &H);

// minimal-element representatives of the double cosets K\G/H, ascending
std::vector<el> double_coset_reps(PermGroup const &G, Subgroup const &K, Subgroup const &H);

// Isomorphism invariant of a finite group action: for each orbit the canonical conjugacy
// class representative of its point stabilizers, with multiplicities. Two actions of the
// same group are isomorphic exactly when these agree.
class TransitiveDecomposition {
public:
  TransitiveDecomposition() = default;

  // canonicalizes (replaces each part by its class representative) and merges duplicates
  static TransitiveDecomposition from_parts(PermGroup const &G, std::vector<Subgroup> parts);

  std::vector<std::pair<Subgroup, unsigned>> const &parts() const { return _parts; }

  unsigned total_points(PermGroup const &G) const; // sum of orbit sizes [G : S]

  bool operator==(TransitiveDecomposition const &other) const;
  bool operator!=(TransitiveDecomposition const &other) const { return !(*this == other); }

private:
  // sorted by (order, element index list) of the class representative
  std::vector<std::pair<Subgroup, unsigned>> _parts;
};

// memo for canonical conjugacy class representatives, useful inside sweeps that
// canonicalize many subgroups of one fixed ambient group
class ClassKeyCache {
public:
  explicit ClassKeyCache(PermGroup G) : _group(std::move(G)) {}

  PermGroup const &group() const { return _group; }

  Subgroup const &representative(Subgroup const &S);

private:
  PermGroup _group;
  std::map<std::vector<el>, Subgroup> _memo;
};

// A finite left action of a permutation group on abstract points, stored as a full
// element-by-point table.
class GSet {
public:
  // table[g * size + x] = image of point x under element g; validated in debug builds
  GSet(PermGroup group, pt size, std::vector<pt> table);

  // the action of G on the left cosets of H by translation
  static GSet cosets(PermGroup const &G, Subgroup const &H);

  static GSet single_point(PermGroup const &G);

  // left translation of G on its own element list
  static GSet regular(PermGroup const &G);

  // same group acting on the concatenation of both point sets
  static GSet disjoint_union(GSet const &A, GSet const &B);

  PermGroup const &group() const { return _group; }
  pt size() const { return _size; }

  pt apply(el g, pt x) const { return _table[static_cast<std::size_t>(g) * _size + x]; }

  // full associativity/identity check; InvalidData on failure
  void validate() const;

  // orbits as sorted point lists, ordered by minimal point
  std::vector<std::vector<pt>> orbits() const;

  Subgroup stabilizer(pt x) const;

  TransitiveDecomposition decomposition() const;
  TransitiveDecomposition decomposition(ClassKeyCache &cache) const;

  bool is_isomorphic_to(GSet const &other) const;

  // the same points acted on by a subgroup (carried by its standalone group)
  GSet restricted(Subgroup const &K) const;

  // relabel the acting group along an isomorphism iso : group() -> other
  GSet transported(GroupMorphism const &iso) const;

private:
  PermGroup _group;
  pt _size;
  std::vector<pt> _table;
};

// the G-set G x_H X induced from an H-set: pairs (coset of H, point of X) with g acting by
// translation and carry into H
GSet induce(PermGroup const &G, Subgroup const &H, GSet const &X);

// X viewed through conjugation: the K ∩ tHt^-1-set with u acting as t^-1 u t does on X
GSet conjugated_slice(PermGroup const &G, Subgroup const &H, GSet const &X, el t,
                      Subgroup const &L);

// Both sides of the double-coset decomposition of a restricted induced action:
// Res_K Ind_H X against the disjoint union of Ind_{K ∩ tHt^-1} of the t-twisted slices of X
// over double coset representatives t of K\G/H. Isomorphic for every input.
struct MackeyComparison {
  TransitiveDecomposition lhs;
  TransitiveDecomposition rhs;
  std::vector<el> reps; // the double coset representatives used
  bool isomorphic = false;
};

MackeyComparison mackey_comparison(PermGroup const &G, Subgroup const &H, Subgroup const &K,
                                   GSet const &X);

// contraction of a G-set to a G/N-set by collapsing N-orbits (N normal, q = G/N data)
GSet deflate(GSet const &X, QuotientGroup const &q, Subgroup const &N);

// A set with commuting left and right actions, encoded as a left action of the product
// amb = L x R via (l, r) . x = l . x . r^-1.
struct Biset {
  ProductGroup amb;
  GSet carrier;
};

// the biset (L x R)/U for a subgroup U of the product
Biset biset_from_subgroup(ProductGroup const &amb, Subgroup const &U);

// sides swapped: an (R, L)-biset on the same points, (r, l) acting as (l, r) did
Biset dualize(Biset const &B);

// quotient of the pointwise product by the middle action: points are pairs (a, b) modulo
// (a, b) ~ ((1, h) . a, (h, 1) . b), with the outer groups acting on the outer slots
Biset compose(Biset const &B1, Biset const &B2);

// the same with a precomputed outer ambient product (must be B1.amb.left x B2.amb.right)
Biset compose(Biset const &B1, Biset const &B2, ProductGroup const &amb);

} // namespace fusionforge

#endif // GUARD_FUSIONFORGE_GSET_H
