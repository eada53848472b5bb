#include "fusionforge/suite.hpp"

#include "fusionforge/bouc.hpp"
#include "fusionforge/catalog.hpp"
#include "fusionforge/errors.hpp"
#include "fusionforge/explorer.hpp"
#include "fusionforge/fusion.hpp"
#include "fusionforge/goursat.hpp"
#include "fusionforge/group.hpp"
#include "fusionforge/gset.hpp"
#include "fusionforge/json_io.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace fusionforge {

namespace {

// Tallies checks and keeps the first failing instance for the detail block.
struct FailureLog {
  nlohmann::json first;
  std::uint64_t failures = 0;
  std::uint64_t checks = 0;

  template <class InfoFn> void check(bool ok, InfoFn &&info) {
    ++checks;
    if (!ok && failures++ == 0)
      first = info();
  }

  bool ok() const { return failures == 0; }

  void fill(nlohmann::json &detail) const {
    detail["checks"] = checks;
    detail["failures"] = failures;
    if (failures != 0)
      detail["first_failure"] = first;
  }
};

Config with_subgroup_cap(Config cfg, unsigned floor_cap) {
  if (cfg.subgroup_cap < floor_cap)
    cfg.subgroup_cap = floor_cap;
  return cfg;
}

Subgroup join_subgroup(PermGroup const &G, Subgroup const &A, Subgroup const &B) {
  std::vector<el> u(A.indices());
  u.insert(u.end(), B.indices().begin(), B.indices().end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return Subgroup::generated(G, u);
}

// A subgroup M <= H of the ambient group, re-expressed inside H's standalone
// group (indices() of both are ascending, so the local list stays sorted).
Subgroup local_part(Subgroup const &H, Subgroup const &M) {
  std::vector<el> locals;
  locals.reserve(M.order());
  for (el g : M.indices())
    locals.push_back(static_cast<el>(H.local_index(g)));
  return Subgroup(H.as_group(), std::move(locals));
}

// The embedding of H/(H cap N) onto the image of H in G/N, expressed as an
// isomorphism onto that image's standalone group so G-sets can be transported.
GroupMorphism quotient_chart(QuotientGroup const &qH, Subgroup const &H,
                             QuotientGroup const &q, Subgroup const &img) {
  GroupMorphism emb = quotient_embedding(qH, H, q);
  std::vector<el> images(qH.group.order());
  for (el e = 0; e < qH.group.order(); ++e)
    images[e] = static_cast<el>(img.local_index(emb.apply(e)));
  return GroupMorphism(qH.group.full_subgroup(), img.as_group().full_subgroup(),
                       std::move(images));
}

struct NamedSystem {
  std::string label;
  FusionSystem system;
};

// The fixed battery of fusion systems the fusion-layer criteria sweep:
// ambient systems at a Sylow subgroup plus a few purely inner ones. The
// extended battery adds one system whose Sylow subgroup lives in a product
// group; its square has ~20k subgroups, far too many for the compatibility
// explorer on a single core, so only the cheap per-system sweeps include it.
std::vector<NamedSystem> catalog_systems(Config const &cfg, bool extended = false) {
  std::vector<NamedSystem> out;
  auto ambient = [&](std::string const &name, unsigned p) {
    PermGroup G = catalog_group(name, cfg);
    out.push_back({"F(" + name + ", " + std::to_string(p) + ")",
                   FusionSystem::ambient(G, sylow(G, p), p, cfg)});
  };
  auto inner = [&](std::string const &name, unsigned p) {
    out.push_back({"inner(" + name + ")",
                   FusionSystem::inner(catalog_group(name, cfg), p, cfg)});
  };
  ambient("S3", 2);
  ambient("S3", 3);
  ambient("A4", 2);
  ambient("A4", 3);
  ambient("S4", 2);
  ambient("SL23", 2);
  ambient("GL23", 2);
  inner("D8", 2);
  inner("Q16", 2);
  inner("SD16", 2);
  inner("C4 x C4", 2);
  if (extended)
    ambient("S4 x C2", 2);
  return out;
}

// ---- criterion: goursat-roundtrip ---------------------------------------------------------
// Every subgroup of every catalog product of order <= 256 decomposes into
// section data that reconstructs it exactly, with the order identities
// |X| = |p1||k2| = |k1||p2|, an honest middle isomorphism, and a graph-shaped
// middle quotient.
CriterionResult goursat_roundtrip(SuiteOptions const &opt) {
  Config cfg = with_subgroup_cap(opt.cfg, 4096);
  std::vector<std::string> const names = {"C2",  "C3",      "C4", "C6",  "C8",
                                          "C12", "C16",     "C2 x C2", "D8", "D16",
                                          "Q8",  "Q16",     "SD16",    "S3", "S4",
                                          "A4",  "SL23",    "GL23"};
  FailureLog log;
  unsigned pairs = 0;
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i; j < names.size(); ++j) {
      PermGroup G1 = catalog_group(names[i], cfg);
      PermGroup G2 = catalog_group(names[j], cfg);
      if (G1.order() * G2.order() > 256)
        continue;
      ++pairs;
      ProductGroup amb = direct_product(G1, G2);
      for (Subgroup const &X : all_subgroups(amb.group, cfg)) {
        GoursatData d = goursat_decompose(amb, X);
        bool const ok = goursat_reconstruct(amb, d) == X &&
                        X.order() == d.p1.order() * d.k2.order() &&
                        X.order() == d.k1.order() * d.p2.order() &&
                        d.theta.is_homomorphism() && d.theta.is_bijective() &&
                        middle_quotient_is_graph(amb, X);
        log.check(ok, [&] {
          return nlohmann::json{{"pair", {names[i], names[j]}},
                                {"subgroup", json_subgroup(X)}};
        });
      }
    }
  CriterionResult r{"goursat-roundtrip", log.ok(), nlohmann::json::object()};
  r.detail["groups"] = names;
  r.detail["pairs"] = pairs;
  log.fill(r.detail);
  return r;
}

// ---- criterion: tensor-decomposition ------------------------------------------------------
// For every ordered triple from the small-group list and every subgroup pair
// (X of G x H, Y of H x K), the double-coset star-product decomposition equals
// the directly composed coset biset, and the term count matches the number of
// double cosets used.
CriterionResult tensor_decomposition(SuiteOptions const &opt) {
  // order <= 8 roster; raising max_order to 16 pulls in the second tier.
  // The elementary abelian E16 stays out: squares of the listed groups top
  // out near two thousand subgroups, while E16 x E16 = C2^8 has over a
  // million, which no exhaustive sweep can visit.
  std::vector<std::string> base = {"C2", "C4", "C2 x C2", "D8", "Q8", "C8"};
  if (opt.max_order >= 16)
    for (auto const &n : {"C16", "D16", "Q16", "SD16", "C2 x C8", "C4 x C4"})
      base.push_back(n);
  Config cfg = with_subgroup_cap(opt.cfg, 4096);
  std::vector<std::string> names;
  std::vector<PermGroup> groups;
  for (auto const &n : base) {
    PermGroup G = catalog_group(n, cfg);
    if (G.order() <= opt.max_order) {
      names.push_back(n);
      groups.push_back(std::move(G));
    }
  }

  struct ProdData {
    ProductGroup amb;
    std::vector<Subgroup> subs;
    ClassKeyCache cache;
  };
  std::map<std::pair<unsigned, unsigned>, std::unique_ptr<ProdData>> memo;
  auto data = [&](unsigned a, unsigned b) -> ProdData & {
    auto key = std::make_pair(a, b);
    auto it = memo.find(key);
    if (it == memo.end()) {
      ProductGroup amb = direct_product(groups[a], groups[b]);
      std::vector<Subgroup> subs = all_subgroups(amb.group, cfg);
      ClassKeyCache cache(amb.group);
      it = memo
               .emplace(key, std::make_unique<ProdData>(ProdData{
                                 std::move(amb), std::move(subs), std::move(cache)}))
               .first;
    }
    return *it->second;
  };

  FailureLog log;
  unsigned triples = 0;
  for (unsigned a = 0; a < groups.size(); ++a)
    for (unsigned b = 0; b < groups.size(); ++b)
      for (unsigned c = 0; c < groups.size(); ++c) {
        ++triples;
        ProdData &gh = data(a, b);
        ProdData &hk = data(b, c);
        ProdData &gk = data(a, c);
        std::uint64_t const ny = hk.subs.size();
        std::uint64_t const total = gh.subs.size() * ny;
        std::uint64_t stride = 1;
        if (opt.pair_cap != 0 && total > opt.pair_cap)
          stride = (total + opt.pair_cap - 1) / opt.pair_cap;
        for (std::uint64_t t = 0; t < total; t += stride) {
          Subgroup const &X = gh.subs[static_cast<std::size_t>(t / ny)];
          Subgroup const &Y = hk.subs[static_cast<std::size_t>(t % ny)];
          BoucComparison cmp = bouc_comparison(gh.amb, X, hk.amb, Y, gk.amb, gk.cache);
          std::uint64_t mults = 0;
          for (auto const &[part, m] : cmp.rhs.parts())
            mults += m;
          log.check(cmp.equal && mults == cmp.reps.size(), [&] {
            return nlohmann::json{{"triple", {names[a], names[b], names[c]}},
                                  {"X", json_subgroup(X)},
                                  {"Y", json_subgroup(Y)}};
          });
        }
      }

  CriterionResult r{"tensor-decomposition", log.ok(), nlohmann::json::object()};
  r.detail["groups"] = names;
  r.detail["triples"] = triples;
  r.detail["exhaustive"] = (opt.pair_cap == 0);
  log.fill(r.detail);
  return r;
}

// ---- criterion: mackey-deflation ----------------------------------------------------------
// Over every catalog group of order <= 24: the double-coset formula for a
// restricted induced trivial module holds for all subgroup pairs, and
// collapsing by any normal subgroup (a) turns coset actions into quotient
// coset actions, (b) commutes with restriction to overgroups of the kernel,
// and (c) commutes with induction.
CriterionResult mackey_deflation(SuiteOptions const &opt) {
  Config const &cfg = opt.cfg;
  std::vector<std::string> const names = {
      "C2",      "C3",      "C4",  "C6",  "C8",   "C12", "C16", "C2 x C2", "C2 x C4",
      "D8",      "D16",     "Q8",  "Q16", "SD16", "S3",  "S4",  "A4",      "SL23"};
  FailureLog log;
  for (auto const &name : names) {
    PermGroup G = catalog_group(name, cfg);
    std::vector<Subgroup> const subs = all_subgroups(G, cfg);

    for (Subgroup const &H : subs) {
      GSet X = GSet::single_point(H.as_group());
      for (Subgroup const &K : subs) {
        MackeyComparison cmp = mackey_comparison(G, H, K, X);
        log.check(cmp.isomorphic, [&] {
          return nlohmann::json{{"group", name},
                                {"H", json_subgroup(H)},
                                {"K", json_subgroup(K)},
                                {"kind", "double-coset formula"}};
        });
      }
    }

    for (Subgroup const &N : subs) {
      if (!is_normal(G, N))
        continue;
      QuotientGroup q = quotient_group(G, N);

      // (a) collapse of coset actions
      for (Subgroup const &H : subs) {
        GSet D = deflate(GSet::cosets(G, H), q, N);
        Subgroup img = q.projection.restricted(join_subgroup(G, H, N)).image();
        log.check(D.is_isomorphic_to(GSet::cosets(q.group, img)), [&] {
          return nlohmann::json{{"group", name},
                                {"N", json_subgroup(N)},
                                {"H", json_subgroup(H)},
                                {"kind", "coset collapse"}};
        });
      }

      // (b) commuting with restriction, for subgroups containing the kernel
      for (Subgroup const &H : subs) {
        if (!N.is_subgroup_of(H))
          continue;
        Subgroup imgH = q.projection.restricted(H).image();
        Subgroup N_loc = local_part(H, N);
        QuotientGroup qH = quotient_group(H.as_group(), N_loc);
        GroupMorphism chart = quotient_chart(qH, H, q, imgH);
        for (Subgroup const &L : subs) {
          GSet S = GSet::cosets(G, L);
          GSet lhs = deflate(S, q, N).restricted(imgH);
          GSet rhs = deflate(S.restricted(H), qH, N_loc).transported(chart);
          log.check(lhs.is_isomorphic_to(rhs), [&] {
            return nlohmann::json{{"group", name},
                                  {"N", json_subgroup(N)},
                                  {"H", json_subgroup(H)},
                                  {"L", json_subgroup(L)},
                                  {"kind", "restriction commutes"}};
          });
        }
      }

      // (c) commuting with induction, from arbitrary subgroups
      for (Subgroup const &H : subs) {
        Subgroup imgHN = q.projection.restricted(join_subgroup(G, H, N)).image();
        Subgroup M_loc = local_part(H, intersection(H, N));
        QuotientGroup qH = quotient_group(H.as_group(), M_loc);
        GroupMorphism chart = quotient_chart(qH, H, q, imgHN);
        for (Subgroup const &L : all_subgroups(H.as_group(), cfg)) {
          GSet X = GSet::cosets(H.as_group(), L);
          GSet lhs = deflate(induce(G, H, X), q, N);
          GSet rhs = induce(q.group, imgHN, deflate(X, qH, M_loc).transported(chart));
          log.check(lhs.is_isomorphic_to(rhs), [&] {
            return nlohmann::json{{"group", name},
                                  {"N", json_subgroup(N)},
                                  {"H", json_subgroup(H)},
                                  {"L", json_subgroup(L)},
                                  {"kind", "induction commutes"}};
          });
        }
      }
    }
  }

  CriterionResult r{"mackey-deflation", log.ok(), nlohmann::json::object()};
  r.detail["groups"] = names;
  log.fill(r.detail);
  return r;
}

// ---- criterion: quotient-chain ------------------------------------------------------------
// For every catalog fusion system and every normal subgroup R of its p-group:
// the stabilizing quotient is an honest fusion system; when R is strongly
// closed the stabilizing, image, and image-closure quotients coincide, are
// saturated, and are regenerated from automorphism groups; when R is not
// strongly closed the image construction refuses; when R is weakly closed the
// stabilizing quotient is still saturated.
CriterionResult quotient_chain(SuiteOptions const &opt) {
  Config const &cfg = opt.cfg;
  FailureLog log;
  std::vector<std::string> labels;
  for (NamedSystem const &ns : catalog_systems(cfg, /*extended=*/true)) {
    FusionSystem const &F = ns.system;
    labels.push_back(ns.label);
    PermGroup const &P = F.group();
    for (Subgroup const &R : F.subgroups()) {
      if (!is_normal(P, R))
        continue;
      bool const strongly = F.strongly_closed(R);
      bool const weakly = F.weakly_closed(R);
      QuotientSystem qs = quotient_stabilizing(F, R, cfg);
      log.check(qs.system.closure_report().honest(), [&] {
        return nlohmann::json{{"system", ns.label},
                              {"R", json_subgroup(R)},
                              {"kind", "stabilizing quotient honest"}};
      });
      if (strongly) {
        QuotientSystem qi = quotient_images(F, R, cfg);
        QuotientSystem qc = quotient_images_closure(F, R, cfg);
        bool const chain = qs.system.subsystem_of(qi.system) &&
                           qi.system.subsystem_of(qc.system);
        bool const coincide = qs.system.same_system(qi.system) &&
                              qi.system.same_system(qc.system);
        bool const saturated = qs.system.saturation_check(cfg).saturated;
        bool const regenerated =
            alperin_generated(qs.system, cfg).same_system(qs.system);
        log.check(chain && coincide && saturated && regenerated, [&] {
          return nlohmann::json{{"system", ns.label},
                                {"R", json_subgroup(R)},
                                {"chain", chain},
                                {"coincide", coincide},
                                {"saturated", saturated},
                                {"regenerated", regenerated},
                                {"kind", "strongly closed quotient"}};
        });
      } else {
        bool refused = false;
        try {
          quotient_images(F, R, cfg);
        } catch (NotStronglyClosed const &) {
          refused = true;
        }
        log.check(refused, [&] {
          return nlohmann::json{{"system", ns.label},
                                {"R", json_subgroup(R)},
                                {"kind", "image quotient must refuse"}};
        });
        if (weakly) {
          log.check(qs.system.saturation_check(cfg).saturated, [&] {
            return nlohmann::json{{"system", ns.label},
                                  {"R", json_subgroup(R)},
                                  {"kind", "weakly closed quotient saturated"}};
          });
        }
      }
    }
  }
  CriterionResult r{"quotient-chain", log.ok(), nlohmann::json::object()};
  r.detail["systems"] = labels;
  log.fill(r.detail);
  return r;
}

// ---- criterion: inner-criterion -----------------------------------------------------------
// For every automorphism of every listed catalog p-group, the product-diagonal
// conjugacy verdict agrees with the direct witness search, and the number of
// inner automorphisms found equals |P| / |Z(P)|.
CriterionResult inner_criterion(SuiteOptions const &opt) {
  std::vector<std::string> const names = {
      "C2",      "C4",      "C8",      "C16",     "C32",     "C64",  "C2 x C2",
      "C2 x C4", "C2 x C8", "C4 x C4", "E8",      "D8",      "D16",  "D32",
      "Q8",      "Q16",     "SD16",    "C3",      "C9",      "C27",  "C3 x C3",
      "C5",      "C25",     "C7",      "C49"};
  FailureLog log;
  nlohmann::json aut_counts = nlohmann::json::object();
  for (auto const &name : names) {
    PermGroup P = catalog_group(name, opt.cfg);
    std::vector<GroupMorphism> const auts = automorphisms(P, opt.cfg);
    aut_counts[name] = auts.size();
    unsigned inner_count = 0;
    for (GroupMorphism const &phi : auts) {
      bool const by_diagonal = inner_by_diagonal(P, phi);
      bool const by_witness = inner_by_witness(P, phi);
      log.check(by_diagonal == by_witness, [&] {
        return nlohmann::json{{"group", name},
                              {"automorphism", json_morphism(phi)},
                              {"by_diagonal", by_diagonal},
                              {"by_witness", by_witness}};
      });
      if (by_diagonal)
        ++inner_count;
    }
    Subgroup Z = centralizer(P, P.full_subgroup());
    log.check(static_cast<std::uint64_t>(inner_count) * Z.order() == P.order(), [&] {
      return nlohmann::json{{"group", name},
                            {"inner_found", inner_count},
                            {"center_order", Z.order()},
                            {"kind", "inner count"}};
    });
  }
  CriterionResult r{"inner-criterion", log.ok(), nlohmann::json::object()};
  r.detail["groups"] = names;
  r.detail["automorphism_counts"] = aut_counts;
  log.fill(r.detail);
  return r;
}

// ---- criterion: saturation ----------------------------------------------------------------
// Every catalog system (ambient at a Sylow subgroup, or inner) passes the
// saturation axioms, and three seeded counterexamples fail with exactly the
// expected axiom and witness shape.
CriterionResult saturation_audit(SuiteOptions const &opt) {
  Config const &cfg = opt.cfg;
  FailureLog log;
  std::vector<std::string> labels;
  for (NamedSystem const &ns : catalog_systems(cfg, /*extended=*/true)) {
    labels.push_back(ns.label);
    auto rep = ns.system.saturation_check(cfg);
    log.check(rep.saturated, [&] {
      return nlohmann::json{{"system", ns.label}, {"report", json_saturation(rep)}};
    });
  }

  // full automorphism group seeded on a cyclic group: too many self-morphisms
  {
    PermGroup C4 = catalog_group("C4", cfg);
    FusionSystem F = FusionSystem::generated(C4, 2, automorphisms(C4, cfg), cfg);
    auto rep = F.saturation_check(cfg);
    log.check(!rep.saturated && rep.axiom == "sylow" && rep.witness_subgroup &&
                  rep.witness_subgroup->order() == 4,
              [&] {
                return nlohmann::json{{"seed", "cyclic full automorphisms"},
                                      {"report", json_saturation(rep)}};
              });
  }

  // an involutive swap on the Klein group: same failure higher up
  {
    PermGroup V = catalog_group("C2 x C2", cfg);
    std::vector<GroupMorphism> seed;
    for (GroupMorphism const &a : automorphisms(V, cfg)) {
      bool identity = true, involution = true;
      for (el x = 0; x < V.order(); ++x) {
        if (a.images()[x] != x)
          identity = false;
        if (a.images()[a.images()[x]] != x)
          involution = false;
      }
      if (!identity && involution) {
        seed.push_back(a);
        break;
      }
    }
    FusionSystem F = FusionSystem::generated(V, 2, seed, cfg);
    auto rep = F.saturation_check(cfg);
    log.check(!rep.saturated && rep.axiom == "sylow" && rep.witness_subgroup &&
                  rep.witness_subgroup->order() == 4,
              [&] {
                return nlohmann::json{{"seed", "Klein involutive swap"},
                                      {"report", json_saturation(rep)}};
              });
  }

  // joining the two reflection classes of the dihedral group without the
  // order-4 morphisms that would extend the join: extension axiom breaks
  {
    PermGroup D8 = catalog_group("D8", cfg);
    std::vector<Subgroup> order2;
    for (Subgroup const &s : all_subgroups(D8, cfg))
      if (s.order() == 2 && !is_normal(D8, s))
        order2.push_back(s);
    Subgroup a = order2.front();
    Subgroup b = a;
    for (Subgroup const &s : order2)
      if (!conjugate_test(D8, a, s).has_value()) {
        b = s;
        break;
      }
    FusionSystem F = FusionSystem::generated(
        D8, 2, {GroupMorphism(a, b, {0, b.indices()[1]})}, cfg);
    auto rep = F.saturation_check(cfg);
    log.check(!rep.saturated && rep.axiom == "extension" &&
                  rep.witness_morphism.has_value(),
              [&] {
                return nlohmann::json{{"seed", "dihedral reflection join"},
                                      {"report", json_saturation(rep)}};
              });
  }

  CriterionResult r{"saturation", log.ok(), nlohmann::json::object()};
  r.detail["systems"] = labels;
  log.fill(r.detail);
  return r;
}

// ---- criterion: explorer-diagonal ---------------------------------------------------------
// Self-exploration of every catalog system contains the diagonal class with a
// fully passing row, and in every run (self or cross) each graph-shaped
// candidate's transport verdict equals the direct isomorphism test of the
// graph it encodes.
CriterionResult explorer_diagonal(SuiteOptions const &opt) {
  Config cfg = with_subgroup_cap(opt.cfg, 8192);
  FailureLog log;

  auto check_run = [&](FusionSystem const &F1, FusionSystem const &F2,
                       std::string const &label) {
    CompatibilityReport r = explore_compatibility(F1, F2, cfg);
    for (CompatibilityCandidate const &c : r.candidates) {
      if (c.left_slice.order() != 1 || c.right_slice.order() != 1)
        continue;
      std::vector<el> images(F1.group().order());
      for (el e : c.rep.indices())
        images[r.product.left_of(e)] = r.product.right_of(e);
      GroupMorphism theta(F1.group().full_subgroup(),
                          F2.group().full_subgroup(), std::move(images));
      bool const direct = iso_check(F1, F2, theta);
      log.check(c.quotient_transport.has_value() &&
                    *c.quotient_transport == direct,
                [&] {
                  return nlohmann::json{{"run", label},
                                        {"candidate", json_subgroup(c.rep)},
                                        {"direct", direct},
                                        {"kind", "graph transport"}};
                });
    }
    return r;
  };

  std::vector<std::string> labels;
  for (NamedSystem const &ns : catalog_systems(cfg)) {
    labels.push_back(ns.label);
    CompatibilityReport r = check_run(ns.system, ns.system, ns.label);
    std::vector<el> d;
    d.reserve(ns.system.group().order());
    for (el a = 0; a < ns.system.group().order(); ++a)
      d.push_back(r.product.pair_index(a, a));
    Subgroup delta =
        canonical_conjugate(r.product.group, Subgroup(r.product.group, d));
    bool found = false, all_pass = false;
    for (CompatibilityCandidate const &c : r.candidates)
      if (c.rep == delta) {
        found = true;
        all_pass = c.left_closed && c.right_closed &&
                   c.quotient_transport.has_value() && *c.quotient_transport;
      }
    log.check(found && all_pass, [&] {
      return nlohmann::json{{"run", ns.label},
                            {"found", found},
                            {"kind", "diagonal class present and passing"}};
    });
  }

  // cross runs between systems with matched and mismatched fusion
  {
    PermGroup sl = catalog_group("SL23", cfg);
    FusionSystem FQ = FusionSystem::ambient(sl, sylow(sl, 2), 2, cfg);
    PermGroup a4 = catalog_group("A4", cfg);
    FusionSystem FV = FusionSystem::ambient(a4, sylow(a4, 2), 2, cfg);
    FusionSystem IV = FusionSystem::inner(catalog_group("C2 x C2", cfg), 2, cfg);
    PermGroup s4 = catalog_group("S4", cfg);
    FusionSystem FD = FusionSystem::ambient(s4, sylow(s4, 2), 2, cfg);
    FusionSystem ID = FusionSystem::inner(catalog_group("D8", cfg), 2, cfg);
    check_run(FQ, FV, "F(SL23, 2) vs F(A4, 2)");
    check_run(FQ, IV, "F(SL23, 2) vs inner(C2 x C2)");
    check_run(FD, ID, "F(S4, 2) vs inner(D8)");
  }

  CriterionResult r{"explorer-diagonal", log.ok(), nlohmann::json::object()};
  r.detail["systems"] = labels;
  log.fill(r.detail);
  return r;
}

// ---- criterion: determinism ---------------------------------------------------------------
// A fixed representative workload — fusion reports, a saturation report, a
// compatibility exploration, a quotient system, a Goursat sweep, a Mackey
// comparison, and a tensor-decomposition comparison — serialized twice from
// scratch must be byte-identical.
CriterionResult determinism(SuiteOptions const &opt) {
  auto build = [&]() -> std::string {
    Config const &cfg = opt.cfg;
    nlohmann::json j;

    PermGroup s4 = catalog_group("S4", cfg);
    FusionSystem F = FusionSystem::ambient(s4, sylow(s4, 2), 2, cfg);
    j["fusion"] = json_fusion(F);
    j["saturation"] = json_saturation(F.saturation_check(cfg));

    PermGroup sl = catalog_group("SL23", cfg);
    FusionSystem F1 = FusionSystem::ambient(sl, sylow(sl, 2), 2, cfg);
    PermGroup a4 = catalog_group("A4", cfg);
    FusionSystem F2 = FusionSystem::ambient(a4, sylow(a4, 2), 2, cfg);
    j["compatibility"] = json_compatibility(explore_compatibility(F1, F2, cfg));

    Subgroup Z = centralizer(F1.group(), F1.group().full_subgroup());
    j["quotient"] = json_fusion(quotient_stabilizing(F1, Z, cfg).system);

    ProductGroup amb =
        direct_product(catalog_group("D8", cfg), catalog_group("C4", cfg));
    nlohmann::json sweep = nlohmann::json::array();
    for (Subgroup const &X : all_subgroups(amb.group, cfg))
      sweep.push_back(json_goursat(goursat_decompose(amb, X)));
    j["goursat"] = sweep;

    Subgroup H = sylow(s4, 2);
    j["mackey"] = json_mackey(
        mackey_comparison(s4, H, sylow(s4, 3), GSet::single_point(H.as_group())));

    PermGroup d8 = catalog_group("D8", cfg);
    ProductGroup pp = direct_product(d8, d8);
    std::vector<el> diag;
    for (el a = 0; a < d8.order(); ++a)
      diag.push_back(pp.pair_index(a, a));
    Subgroup delta(pp.group, diag);
    j["tensor"] = json_bouc(bouc_comparison(pp, delta, pp, delta, pp));

    return j.dump();
  };

  std::string const one = build();
  std::string const two = build();
  CriterionResult r{"determinism", one == two, nlohmann::json::object()};
  r.detail["bytes"] = one.size();
  r.detail["identical"] = (one == two);
  return r;
}

using Runner = CriterionResult (*)(SuiteOptions const &);

struct Entry {
  char const *name;
  Runner run;
};

Entry const registry[] = {
    {"goursat-roundtrip", &goursat_roundtrip},
    {"tensor-decomposition", &tensor_decomposition},
    {"mackey-deflation", &mackey_deflation},
    {"quotient-chain", &quotient_chain},
    {"inner-criterion", &inner_criterion},
    {"saturation", &saturation_audit},
    {"explorer-diagonal", &explorer_diagonal},
    {"determinism", &determinism},
};

} // namespace

std::vector<std::string> criterion_names() {
  std::vector<std::string> out;
  for (Entry const &e : registry)
    out.emplace_back(e.name);
  return out;
}

CriterionResult run_criterion(std::string const &name, SuiteOptions const &opt) {
  for (Entry const &e : registry)
    if (name == e.name) {
      try {
        return e.run(opt);
      } catch (std::exception const &ex) {
        CriterionResult r{name, false, nlohmann::json::object()};
        r.detail["error"] = ex.what();
        return r;
      }
    }
  throw InvalidData("unknown criterion: " + name);
}

std::vector<CriterionResult> run_suite(SuiteOptions const &opt) {
  return run_suite(opt, criterion_names());
}

std::vector<CriterionResult> run_suite(SuiteOptions const &opt,
                                       std::vector<std::string> const &names) {
  for (auto const &n : names)
    if (std::none_of(std::begin(registry), std::end(registry),
                     [&](Entry const &e) { return n == e.name; }))
      throw InvalidData("unknown criterion: " + n);
  std::vector<CriterionResult> out;
  for (Entry const &e : registry)
    if (std::find(names.begin(), names.end(), e.name) != names.end())
      out.push_back(run_criterion(e.name, opt));
  return out;
}

nlohmann::json suite_report(std::vector<CriterionResult> const &results) {
  nlohmann::json list = nlohmann::json::array();
  nlohmann::json failures = nlohmann::json::array();
  bool all = true;
  for (CriterionResult const &r : results) {
    list.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    if (!r.passed) {
      all = false;
      failures.push_back(r.name);
    }
  }
  return {{"criteria", list}, {"passed", all}, {"failures", failures}};
}

} // namespace fusionforge
