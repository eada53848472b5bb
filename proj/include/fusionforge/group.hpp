#ifndef GUARD_FUSIONFORGE_GROUP_H
#define GUARD_FUSIONFORGE_GROUP_H

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "fusionforge/config.hpp"
#include "fusionforge/errors.hpp"
#include "fusionforge/perm.hpp"

namespace fusionforge {

// index of an element in a group's canonical (lexicographically sorted) element list
using el = std::uint16_t;

class Subgroup;

// A finite permutation group with its full element list materialized.
//
// The element list is always sorted lexicographically by image vectors; this ordering is the
// canonical one used everywhere (element indices, subgroup identity, coset representatives,
// double coset representatives, JSON output). Index 0 is always the identity. Instances are
// immutable after construction and cheap to copy (shared data); they are safe to share
// read-only across parallel workers.
class PermGroup {
public:
  // trivial group on one point
  PermGroup();

  // group generated by `generators` via breadth-first closure; fails with CapExceeded if the
  // order would exceed cfg.closure_cap (or the uint16 index space)
  static PermGroup from_generators(unsigned degree, std::vector<Perm> const &generators,
                                   Config const &cfg = Config());

  // group from a complete element list (trusted; asserted closed in debug builds for small
  // orders). `generators` defaults to the whole list.
  static PermGroup from_elements(unsigned degree, std::vector<Perm> elements,
                                 std::vector<Perm> generators = {});

  static PermGroup trivial(unsigned degree = 1u);
  static PermGroup symmetric(unsigned n);
  static PermGroup alternating(unsigned n);
  static PermGroup cyclic(unsigned n);
  static PermGroup dihedral(unsigned order); // order 2n acting on n >= 2 polygon vertices

  unsigned degree() const;
  unsigned order() const;

  std::vector<Perm> const &elements() const;
  std::vector<Perm> const &generators() const;
  std::vector<el> const &generator_indices() const;

  Perm const &element(el i) const;
  el index_of(Perm const &p) const; // InvalidData if not an element
  bool contains(Perm const &p) const;

  // index arithmetic; backed by a multiplication table for orders <= 2048, by composition and
  // hash lookup beyond that
  el mul(el a, el b) const;
  el inv(el a) const;
  el conj(el g, el x) const; // g x g^-1

  unsigned element_order(el a) const;

  // true if both objects describe the same group representation (same degree, same elements)
  bool same_group(PermGroup const &other) const;

  Subgroup full_subgroup() const;
  Subgroup trivial_subgroup() const;

private:
  struct Data;
  explicit PermGroup(std::shared_ptr<Data const> d) : _d(std::move(d)) {}

  static std::shared_ptr<Data const> build_data(unsigned degree, std::vector<Perm> elements,
                                                std::vector<Perm> generators);
  static std::shared_ptr<Data const> const &trivial_data();

  std::shared_ptr<Data const> _d;
};

// A subgroup of a PermGroup, identified canonically by its sorted element index list.
class Subgroup {
public:
  Subgroup(PermGroup parent, std::vector<el> sorted_indices);

  static Subgroup generated(PermGroup const &parent, std::vector<el> const &generator_indices);
  static Subgroup generated_perms(PermGroup const &parent, std::vector<Perm> const &generators);

  PermGroup const &parent() const { return _parent; }
  std::vector<el> const &indices() const { return _idx; }
  unsigned order() const { return static_cast<unsigned>(_idx.size()); }

  bool contains(el global) const;
  bool contains_perm(Perm const &p) const;

  Perm const &element(unsigned local) const { return _parent.element(_idx[local]); }
  unsigned local_index(el global) const; // position in indices(); asserts membership

  std::vector<Perm> elements() const;

  // a small deterministic generating set (greedy first-new scan over the element list)
  std::vector<el> generating_set() const;

  // this subgroup as a standalone group on the same points, same canonical element order
  PermGroup as_group() const;

  Subgroup conjugated_by(el g) const;
  bool is_subgroup_of(Subgroup const &other) const;

  bool operator==(Subgroup const &other) const;
  bool operator!=(Subgroup const &other) const { return !(*this == other); }

private:
  PermGroup _parent;
  std::vector<el> _idx;
};

// A homomorphism between subgroups (possibly of different parent groups), stored as an
// element-to-element table aligned with the source's canonical element list. Image values are
// element indices of the *target's parent* and are required to lie in the target.
class GroupMorphism {
public:
  GroupMorphism(Subgroup source, Subgroup target, std::vector<el> images);

  Subgroup const &source() const { return _source; }
  Subgroup const &target() const { return _target; }
  std::vector<el> const &images() const { return _images; }

  el apply(el source_global) const;
  el apply_local(unsigned source_local) const { return _images[source_local]; }
  Perm const &apply_perm(Perm const &p) const;

  bool is_homomorphism() const; // full double-loop check
  bool is_injective() const;
  bool is_bijective() const; // injective and onto the target

  Subgroup image() const;

  GroupMorphism compose(GroupMorphism const &inner) const; // (*this) after `inner`
  GroupMorphism inverse() const;                           // NotIsomorphism unless bijective
  GroupMorphism restricted(Subgroup const &sub) const;     // sub <= source
  GroupMorphism corestricted() const;                      // target shrunk to the image

  bool operator==(GroupMorphism const &other) const;

private:
  Subgroup _source;
  Subgroup _target;
  std::vector<el> _images;
};

// --- operations ----------------------------------------------------------------------------

// breadth-first closure of a generator list (CapExceeded beyond cfg.closure_cap)
PermGroup closure(std::vector<Perm> const &generators, unsigned degree,
                  Config const &cfg = Config());

// every subgroup of G, canonically ordered by (order, element index list); complete by
// bottom-up closure over cyclic subgroups and pairwise joins (CapExceeded if
// |G| > cfg.subgroup_cap)
std::vector<Subgroup> all_subgroups(PermGroup const &G, Config const &cfg = Config());

// a Sylow p-subgroup (the deterministic one found by ascending normalizer growth); the
// trivial subgroup if p does not divide |G|
Subgroup sylow(PermGroup const &G, unsigned p);

// a witness g with gAg^-1 = B, or nullopt; scans elements in canonical order, so the witness
// is the minimal one and equals the identity when A == B
std::optional<Perm> conjugate_test(PermGroup const &G, Subgroup const &A, Subgroup const &B);

// lexicographically minimal conjugate of S under G; canonical representative of S's
// conjugacy class
Subgroup canonical_conjugate(PermGroup const &G, Subgroup const &S);

// intersection of two subgroups of the same parent
Subgroup intersection(Subgroup const &A, Subgroup const &B);

Subgroup normalizer(PermGroup const &G, Subgroup const &S);
Subgroup centralizer(PermGroup const &G, Subgroup const &S);
bool is_normal(PermGroup const &G, Subgroup const &S);

// the same, computed inside a subgroup U of the common parent
Subgroup normalizer_in(Subgroup const &U, Subgroup const &S);
Subgroup centralizer_in(Subgroup const &U, Subgroup const &S);
bool is_normal_in(Subgroup const &U, Subgroup const &S);

// Aut(P) by pruned generator-image search, each automorphism a bijective GroupMorphism
// P -> P, sorted by image table (CapExceeded if |P| > cfg.automorphism_cap or the search
// frontier explodes)
std::vector<GroupMorphism> automorphisms(PermGroup const &P, Config const &cfg = Config());

// G/N as a permutation group acting on the left cosets of N
struct QuotientGroup {
  PermGroup group;
  GroupMorphism projection;        // full G -> full quotient
  std::vector<el> preimage;        // per quotient element: minimal g projecting onto it
  std::vector<el> coset_rep;       // per coset point: minimal member element of that coset
  std::vector<std::uint16_t> coset_of; // per g: the coset point gN
};

QuotientGroup quotient_group(PermGroup const &G, Subgroup const &N); // NotNormal
QuotientGroup quotient_group(Subgroup const &P, Subgroup const &R);  // R normal in P

// The inclusion H/N -> G/N between two quotient realizations: `inner` must be built from
// the subgroup H (which contains N), `outer` from H's parent group, both over the same N.
// Injective homomorphism onto the image of H in `outer`.
GroupMorphism quotient_embedding(QuotientGroup const &inner, Subgroup const &H,
                                 QuotientGroup const &outer);

// G1 x G2 on degree(G1) + degree(G2) points; element index of a pair (a, b) is
// a * |G2| + b, consistent with the canonical element order
struct ProductGroup {
  PermGroup group;
  PermGroup left;
  PermGroup right;
  GroupMorphism proj_left;
  GroupMorphism proj_right;
  GroupMorphism inj_left;
  GroupMorphism inj_right;

  el pair_index(el a, el b) const;
  el left_of(el e) const;
  el right_of(el e) const;
};

ProductGroup direct_product(PermGroup const &G1, PermGroup const &G2);

// --- small number-theory helpers -----------------------------------------------------------

unsigned p_part(unsigned n, unsigned p);
bool is_p_power(unsigned n, unsigned p);
bool is_prime(unsigned n);
std::vector<unsigned> prime_divisors(unsigned n);
bool is_p_group(Subgroup const &S, unsigned p);

} // namespace fusionforge

#endif // GUARD_FUSIONFORGE_GROUP_H
