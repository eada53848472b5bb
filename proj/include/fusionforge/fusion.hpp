#ifndef GUARD_FUSIONFORGE_FUSION_H
#define GUARD_FUSIONFORGE_FUSION_H

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fusionforge/group.hpp"

namespace fusionforge {

// Shared classification of a p-group: its subgroup lattice plus per-subgroup
// normalizers and centralizers, with stable ids in canonical order.
struct SubgroupAtlas {
  PermGroup group;
  std::vector<Subgroup> subs;
  std::vector<Subgroup> normalizers;
  std::vector<Subgroup> centralizers;
  // For each id, the ids of the subgroups contained in it (ascending).
  std::vector<std::vector<unsigned>> contained;
  std::map<std::vector<el>, unsigned> ids;

  explicit SubgroupAtlas(PermGroup g, Config const &cfg = Config());
  unsigned id_of(std::vector<el> const &indices) const; // InvalidData if absent
  unsigned id_of(Subgroup const &s) const { return id_of(s.indices()); }
};

// A conjugation-like category on the subgroups of a fixed finite p-group P:
// for every subgroup Q, a deduplicated sorted list of injective morphism
// tables out of Q (values are element indices of P).  Built from an ambient
// overgroup, from generating morphisms by closure, or directly from tables
// (the quotient constructions).  Queries never assume more closure than the
// construction guarantees; closure_report() measures it.
class FusionSystem {
public:
  // All morphisms induced by conjugation in G on the subgroups of a Sylow-like
  // p-subgroup P of G.  P is rebuilt as a standalone group; everything in the
  // result is expressed relative to that standalone copy.
  static FusionSystem ambient(PermGroup const &G, Subgroup const &P, unsigned p,
                              Config const &cfg = Config());

  // Conjugation inside P only.
  static FusionSystem inner(PermGroup const &P, unsigned p,
                            Config const &cfg = Config());

  // Smallest store containing conjugation inside P and the seed morphisms,
  // closed under restriction, composition and inverse.  Seeds must be
  // injective morphisms between subgroups of P.  CapExceeded if the store
  // would exceed cfg.closure_cap tables.
  static FusionSystem generated(PermGroup const &P, unsigned p,
                                std::vector<GroupMorphism> const &seeds,
                                Config const &cfg = Config());

  // Wrap explicit per-source tables (sources indexed against `atlas`).
  static FusionSystem from_tables(std::shared_ptr<SubgroupAtlas const> atlas,
                                  unsigned p,
                                  std::vector<std::vector<std::vector<el>>> tables);

  PermGroup const &group() const { return _atlas->group; }
  unsigned prime() const { return _p; }
  std::shared_ptr<SubgroupAtlas const> const &atlas() const { return _atlas; }
  std::vector<Subgroup> const &subgroups() const { return _atlas->subs; }

  // Raw tables out of one source subgroup (lex sorted, unique).
  std::vector<std::vector<el>> const &tables_from(unsigned id) const {
    return _tables[id];
  }
  // Target subgroup id of each table, parallel to tables_from.
  std::vector<unsigned> const &targets_from(unsigned id) const {
    return _targets[id];
  }
  unsigned table_count() const;

  // Morphism views.
  std::vector<GroupMorphism> isos_from(Subgroup const &Q) const;
  std::vector<GroupMorphism> hom_set(Subgroup const &Q, Subgroup const &T) const;
  std::vector<GroupMorphism> automorphisms_of(Subgroup const &Q) const;
  // All targets of morphisms out of Q (includes Q; sorted by id).
  std::vector<Subgroup> isomorphism_class(Subgroup const &Q) const;

  bool fully_normalized(Subgroup const &Q) const;
  bool fully_centralized(Subgroup const &Q) const;
  // The P-conjugations of Q form a full Sylow p-subgroup of its
  // self-morphisms.
  bool fully_automized(Subgroup const &Q) const;
  // Every morphism onto Q extends to the part of the source's normalizer it
  // transports into P-conjugation.
  bool receptive(Subgroup const &Q) const;

  // No morphism moves R to a different subgroup / moves any element out of R.
  bool weakly_closed(Subgroup const &R) const;
  bool strongly_closed(Subgroup const &R) const;
  // R is normal in P and every morphism extends to one mapping R onto R.
  bool normal_in_system(Subgroup const &R) const;

  struct SaturationReport {
    bool saturated = true;
    // On failure: the offending subgroup, which axiom broke, and for
    // extension failures the morphism with no extension.
    std::optional<Subgroup> witness_subgroup;
    std::string axiom; // "sylow" or "extension"
    std::optional<GroupMorphism> witness_morphism;
  };
  // Checks every fully normalized subgroup for the Sylow and extension
  // axioms.  CapExceeded if |P| > cfg.saturation_cap.
  SaturationReport saturation_check(Config const &cfg = Config()) const;

  struct ClosureReport {
    bool contains_inner = true;
    bool restriction_closed = true;
    bool composition_closed = true;
    bool inverse_closed = true;
    bool honest() const {
      return contains_inner && restriction_closed && composition_closed &&
             inverse_closed;
    }
  };
  ClosureReport closure_report() const;

  // Same standalone group (same element tables), same prime, same stores.
  bool same_system(FusionSystem const &other) const;
  // Every table of this system appears in `other` (atlases must agree).
  bool subsystem_of(FusionSystem const &other) const;

private:
  FusionSystem(std::shared_ptr<SubgroupAtlas const> atlas, unsigned p);
  void sort_tables();
  void fill_targets();
  std::vector<std::vector<el>> const &aut_p_tables(unsigned id) const;

  std::shared_ptr<SubgroupAtlas const> _atlas;
  unsigned _p;
  std::vector<std::vector<std::vector<el>>> _tables;
  std::vector<std::vector<unsigned>> _targets;
  // Conjugation tables Q -> Q by elements of N_P(Q), flattened per id,
  // lex sorted; built on demand.
  mutable std::vector<std::optional<std::vector<std::vector<el>>>> _aut_p;
};

// A quotient system together with the projection data used to build it.
struct QuotientSystem {
  QuotientGroup q; // quotient of F.group() by R
  FusionSystem system;
};

// Morphisms that map R onto R, pushed down to the quotient.  Requires R
// normal in F.group(); the result is closed whenever F is.
QuotientSystem quotient_stabilizing(FusionSystem const &F, Subgroup const &R,
                                    Config const &cfg = Config());

// Images of all morphisms of F in the quotient.  Requires R strongly closed
// (NotStronglyClosed otherwise).  Restriction- and inverse-closed, but not
// composition-closed in general.
QuotientSystem quotient_images(FusionSystem const &F, Subgroup const &R,
                               Config const &cfg = Config());

// Closure of quotient_images under composition (and the rest).
QuotientSystem quotient_images_closure(FusionSystem const &F, Subgroup const &R,
                                       Config const &cfg = Config());

// Regenerate a system from the self-morphisms of its fully normalized
// subgroups; equals the original for the saturated systems we construct.
FusionSystem alperin_generated(FusionSystem const &F, Config const &cfg = Config());

// Transport F1 along the group isomorphism theta : F1.group() -> F2.group()
// and compare the stores.
bool iso_check(FusionSystem const &F1, FusionSystem const &F2,
               GroupMorphism const &theta);

// phi (an automorphism of P) is conjugation by an element of P, decided two
// ways: by conjugacy of its graph to the plain diagonal inside P x P, and by
// scanning for a conjugating element directly.
bool inner_by_diagonal(PermGroup const &P, GroupMorphism const &phi);
bool inner_by_witness(PermGroup const &P, GroupMorphism const &phi);

} // namespace fusionforge

#endif // GUARD_FUSIONFORGE_FUSION_H
