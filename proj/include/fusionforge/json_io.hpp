// JSON serialization for the public report types. Every serializer is
// deterministic: object keys are emitted in sorted order by the JSON library
// and all array contents come from canonically ordered data, so dumping the
// same mathematical object twice yields byte-identical text.
#ifndef GUARD_FUSIONFORGE_JSON_IO_H
#define GUARD_FUSIONFORGE_JSON_IO_H

#include "fusionforge/bouc.hpp"
#include "fusionforge/explorer.hpp"
#include "fusionforge/fusion.hpp"
#include "fusionforge/goursat.hpp"
#include "fusionforge/group.hpp"
#include "fusionforge/gset.hpp"

#include <json.hpp>

namespace fusionforge {

nlohmann::json json_perm(Perm const &p);

// degree, order, and the image tables of a generating set
nlohmann::json json_group(PermGroup const &G);

// order plus the sorted element indices into the parent group
nlohmann::json json_subgroup(Subgroup const &S);

// source/target element lists and the image index per source position
nlohmann::json json_morphism(GroupMorphism const &m);

nlohmann::json json_goursat(GoursatData const &d);

nlohmann::json json_decomposition(TransitiveDecomposition const &td);

nlohmann::json json_mackey(MackeyComparison const &m);

nlohmann::json json_bouc(BoucComparison const &b);

// the full morphism store: per subgroup its elements, closure flags,
// automorphism count, fusion class, and every morphism table with its target
nlohmann::json json_fusion(FusionSystem const &F);

nlohmann::json json_saturation(FusionSystem::SaturationReport const &r);

nlohmann::json json_compatibility(CompatibilityReport const &r);

} // namespace fusionforge

#endif // GUARD_FUSIONFORGE_JSON_IO_H
