#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fusionforge/catalog.hpp"
#include "fusionforge/fusion.hpp"
#include "fusionforge/goursat.hpp"
#include "fusionforge/group.hpp"
#include "fusionforge/json_io.hpp"

using namespace fusionforge;

TEST_CASE("group serialization carries degree, order, generators") {
  PermGroup G = catalog_group("S4");
  nlohmann::json j = json_group(G);
  CHECK(j.at("degree") == 4);
  CHECK(j.at("order") == 24);
  for (auto const &g : j.at("generators"))
    CHECK(g.size() == 4);
}

TEST_CASE("subgroup serialization lists sorted element indices") {
  PermGroup G = catalog_group("D8");
  Subgroup Z = centralizer(G, G.full_subgroup());
  nlohmann::json j = json_subgroup(Z);
  CHECK(j.at("order") == 2);
  auto elems = j.at("elements").get<std::vector<el>>();
  CHECK(std::is_sorted(elems.begin(), elems.end()));
  CHECK(elems.front() == 0); // identity index
}

TEST_CASE("morphism serialization commutes with apply") {
  PermGroup G = catalog_group("C4");
  Subgroup full = G.full_subgroup();
  // inversion is an automorphism of a cyclic group
  std::vector<el> inv;
  for (el e = 0; e < G.order(); ++e)
    inv.push_back(G.inv(e));
  GroupMorphism m(full, full, inv);
  nlohmann::json j = json_morphism(m);
  auto src = j.at("source").get<std::vector<el>>();
  auto img = j.at("images").get<std::vector<el>>();
  REQUIRE(src.size() == img.size());
  for (std::size_t i = 0; i < src.size(); ++i)
    CHECK(img[i] == m.apply(src[i]));
}

TEST_CASE("goursat serialization lists both projections and slices") {
  ProductGroup amb = direct_product(catalog_group("C2"), catalog_group("C2"));
  std::vector<el> diag;
  for (el a = 0; a < 2; ++a)
    diag.push_back(amb.pair_index(a, a));
  GoursatData g = goursat_decompose(amb, Subgroup(amb.group, diag));
  nlohmann::json j = json_goursat(g);
  CHECK(j.at("projection_left").at("order") == 2);
  CHECK(j.at("projection_right").at("order") == 2);
  CHECK(j.at("slice_left").at("order") == 1);
  CHECK(j.at("slice_right").at("order") == 1);
  CHECK(j.at("quotient_order") == 2);
}

TEST_CASE("fusion serialization is reproducible byte for byte") {
  auto build = [] {
    PermGroup G = catalog_group("S4");
    FusionSystem F = FusionSystem::ambient(G, sylow(G, 2), 2);
    return json_fusion(F).dump();
  };
  std::string const a = build();
  std::string const b = build();
  CHECK(a == b);
  CHECK(a.find("morphism_count") != std::string::npos);
}
