#include "fusionforge/json_io.hpp"

namespace fusionforge {

namespace {

nlohmann::json index_array(std::vector<el> const &v) {
  nlohmann::json a = nlohmann::json::array();
  for (el e : v)
    a.push_back(e);
  return a;
}

} // namespace

nlohmann::json json_perm(Perm const &p) {
  nlohmann::json a = nlohmann::json::array();
  for (unsigned x = 0; x < p.degree(); ++x)
    a.push_back(p[static_cast<pt>(x)]);
  return a;
}

nlohmann::json json_group(PermGroup const &G) {
  nlohmann::json gens = nlohmann::json::array();
  for (Perm const &g : G.generators())
    gens.push_back(json_perm(g));
  return {{"degree", G.degree()}, {"order", G.order()}, {"generators", gens}};
}

nlohmann::json json_subgroup(Subgroup const &S) {
  return {{"order", S.order()}, {"elements", index_array(S.indices())}};
}

nlohmann::json json_morphism(GroupMorphism const &m) {
  std::vector<el> images(m.source().order());
  for (unsigned i = 0; i < m.source().order(); ++i)
    images[i] = m.apply_local(i);
  return {{"source", index_array(m.source().indices())},
          {"target", index_array(m.target().indices())},
          {"images", index_array(images)}};
}

nlohmann::json json_goursat(GoursatData const &d) {
  return {{"projection_left", json_subgroup(d.p1)},
          {"projection_right", json_subgroup(d.p2)},
          {"slice_left", json_subgroup(d.k1)},
          {"slice_right", json_subgroup(d.k2)},
          {"quotient_order", d.q1.group.order()},
          {"theta", json_morphism(d.theta)}};
}

nlohmann::json json_decomposition(TransitiveDecomposition const &td) {
  nlohmann::json parts = nlohmann::json::array();
  for (auto const &[sub, mult] : td.parts())
    parts.push_back({{"stabilizer", json_subgroup(sub)}, {"multiplicity", mult}});
  return parts;
}

nlohmann::json json_mackey(MackeyComparison const &m) {
  return {{"isomorphic", m.isomorphic},
          {"representatives", index_array(m.reps)},
          {"lhs", json_decomposition(m.lhs)},
          {"rhs", json_decomposition(m.rhs)}};
}

nlohmann::json json_bouc(BoucComparison const &b) {
  return {{"equal", b.equal},
          {"representatives", index_array(b.reps)},
          {"lhs", json_decomposition(b.lhs)},
          {"rhs", json_decomposition(b.rhs)}};
}

nlohmann::json json_fusion(FusionSystem const &F) {
  nlohmann::json subs = nlohmann::json::array();
  unsigned total = 0;
  for (unsigned id = 0; id < F.subgroups().size(); ++id) {
    Subgroup const &S = F.subgroups()[id];
    nlohmann::json tables = nlohmann::json::array();
    auto const &ts = F.tables_from(id);
    auto const &tg = F.targets_from(id);
    for (unsigned k = 0; k < ts.size(); ++k)
      tables.push_back({{"images", index_array(ts[k])}, {"target", tg[k]}});
    total += static_cast<unsigned>(ts.size());
    nlohmann::json cls = nlohmann::json::array();
    for (Subgroup const &T : F.isomorphism_class(S))
      cls.push_back(F.atlas()->id_of(T));
    subs.push_back({{"elements", index_array(S.indices())},
                    {"order", S.order()},
                    {"fully_normalized", F.fully_normalized(S)},
                    {"weakly_closed", F.weakly_closed(S)},
                    {"strongly_closed", F.strongly_closed(S)},
                    {"automorphisms", static_cast<unsigned>(F.automorphisms_of(S).size())},
                    {"class", cls},
                    {"morphisms", tables}});
  }
  return {{"prime", F.prime()},
          {"group", json_group(F.group())},
          {"subgroup_count", static_cast<unsigned>(F.subgroups().size())},
          {"morphism_count", total},
          {"subgroups", subs}};
}

nlohmann::json json_saturation(FusionSystem::SaturationReport const &r) {
  nlohmann::json out = {{"saturated", r.saturated}};
  if (!r.saturated) {
    out["witness_subgroup"] = json_subgroup(*r.witness_subgroup);
    out["axiom"] = r.axiom;
    if (r.witness_morphism)
      out["witness_morphism"] = json_morphism(*r.witness_morphism);
  }
  return out;
}

nlohmann::json json_compatibility(CompatibilityReport const &r) {
  nlohmann::json cands = nlohmann::json::array();
  for (CompatibilityCandidate const &c : r.candidates) {
    nlohmann::json entry = {{"subgroup", json_subgroup(c.rep)},
                            {"left_slice", json_subgroup(c.left_slice)},
                            {"right_slice", json_subgroup(c.right_slice)},
                            {"left_closed", c.left_closed},
                            {"right_closed", c.right_closed}};
    if (c.quotient_transport)
      entry["quotient_transport"] = *c.quotient_transport;
    else
      entry["quotient_transport"] = nullptr;
    cands.push_back(entry);
  }
  return {{"left", json_group(r.product.left)},
          {"right", json_group(r.product.right)},
          {"product_order", r.product.group.order()},
          {"candidates", cands}};
}

} // namespace fusionforge
