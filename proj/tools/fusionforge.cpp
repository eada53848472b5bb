// Command-line entry point. Subcommands: group, goursat, bouc, fusion,
// explore, suite. All machine output is JSON on standard output; progress and
// error text goes to standard error. Exit codes: 0 success, 1 when a verdict
// is negative or a computation refuses its input, 2 on usage errors.
#include "fusionforge/bouc.hpp"
#include "fusionforge/catalog.hpp"
#include "fusionforge/errors.hpp"
#include "fusionforge/explorer.hpp"
#include "fusionforge/fusion.hpp"
#include "fusionforge/goursat.hpp"
#include "fusionforge/group.hpp"
#include "fusionforge/gset.hpp"
#include "fusionforge/json_io.hpp"
#include "fusionforge/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace ff = fusionforge;

namespace {

ff::Config load_config(std::string const &path) {
  if (!path.empty())
    return ff::config_from_json_file(path);
  return ff::config_from_env();
}

nlohmann::json read_json_file(std::string const &path) {
  std::ifstream in(path);
  if (!in)
    throw ff::InvalidData("cannot open file: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

// Accepts {"degree": d, "generators": [[images], ...]}.
ff::PermGroup group_from_file(std::string const &path, ff::Config const &cfg) {
  nlohmann::json j = read_json_file(path);
  unsigned const degree = j.at("degree").get<unsigned>();
  std::vector<ff::Perm> gens;
  for (auto const &g : j.at("generators")) {
    std::vector<ff::point> images;
    for (auto const &v : g)
      images.push_back(v.get<ff::point>());
    gens.push_back(ff::Perm(std::move(images)));
  }
  return ff::PermGroup::from_generators(degree, gens, cfg);
}

ff::PermGroup resolve_group(std::string const &name, std::string const &file,
                            ff::Config const &cfg) {
  if (!name.empty() && !file.empty())
    throw ff::InvalidData("give a catalog name or a group file, not both");
  if (!name.empty())
    return ff::catalog_group(name, cfg);
  if (!file.empty())
    return group_from_file(file, cfg);
  throw ff::InvalidData("no group given: use --group/--name or a file option");
}

// A fusion-system request: ambient at a Sylow subgroup by default, or the
// purely inner system of the named p-group with --inner.
struct SystemChoice {
  std::string group;
  std::string file;
  unsigned p = 2;
  bool inner = false;
};

ff::FusionSystem build_system(SystemChoice const &s, ff::Config const &cfg) {
  ff::PermGroup G = resolve_group(s.group, s.file, cfg);
  if (s.inner)
    return ff::FusionSystem::inner(G, s.p, cfg);
  return ff::FusionSystem::ambient(G, ff::sylow(G, s.p), s.p, cfg);
}

// "NAME:prime", e.g. "SL23:2" or "S4 x C2:2".
SystemChoice parse_system_colon(std::string const &text, bool inner) {
  auto const pos = text.rfind(':');
  if (pos == std::string::npos || pos + 1 == text.size())
    throw ff::InvalidData("expected NAME:PRIME, got: " + text);
  SystemChoice s;
  s.group = text.substr(0, pos);
  s.p = static_cast<unsigned>(std::stoul(text.substr(pos + 1)));
  s.inner = inner;
  return s;
}

// {"pairs": [[a, b], ...]} — generator pairs of a subgroup of a product,
// given as element indices into the two factors.
ff::Subgroup subgroup_from_pairs(ff::ProductGroup const &amb, std::string const &path) {
  nlohmann::json j = read_json_file(path);
  std::vector<ff::el> gens;
  for (auto const &pr : j.at("pairs")) {
    if (!pr.is_array() || pr.size() != 2)
      throw ff::InvalidData("each pair must be [left, right]");
    ff::el const a = pr[0].get<ff::el>();
    ff::el const b = pr[1].get<ff::el>();
    if (a >= amb.left.order() || b >= amb.right.order())
      throw ff::InvalidData("pair index out of range");
    gens.push_back(amb.pair_index(a, b));
  }
  return ff::Subgroup::generated(amb.group, gens);
}

void emit(nlohmann::json const &j) { std::cout << j.dump(2) << "\n"; }

ff::Subgroup atlas_subgroup(ff::FusionSystem const &F, unsigned id) {
  if (id >= F.subgroups().size())
    throw ff::InvalidData("subgroup id out of range: " + std::to_string(id));
  return F.subgroups()[id];
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact permutation groups, bisets, and saturated fusion systems"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path,
                 "JSON config file (default: $FUSIONFORGE_CONFIG if set)");

  // every subcommand fills `action`; it runs after parsing, under the
  // exception-to-exit-code mapping at the bottom
  std::function<bool(ff::Config const &)> action;

  // ---- group --------------------------------------------------------------
  {
    auto *cmd = app.add_subcommand("group", "resolve a group and print it");
    auto name = std::make_shared<std::string>();
    auto file = std::make_shared<std::string>();
    auto subs = std::make_shared<bool>(false);
    cmd->add_option("--name", *name, "catalog name, e.g. \"S4\" or \"D8 x C2\"");
    cmd->add_option("--file", *file, "JSON group file {degree, generators}");
    cmd->add_flag("--subgroups", *subs, "also enumerate all subgroups");
    cmd->callback([name, file, subs, &action] {
      action = [=](ff::Config const &cfg) {
        ff::PermGroup G = resolve_group(*name, *file, cfg);
        nlohmann::json j = ff::json_group(G);
        if (*subs) {
          nlohmann::json list = nlohmann::json::array();
          for (ff::Subgroup const &S : ff::all_subgroups(G, cfg))
            list.push_back(ff::json_subgroup(S));
          j["subgroups"] = list;
        }
        emit(j);
        return true;
      };
    });
  }

  // ---- goursat ------------------------------------------------------------
  {
    auto *cmd = app.add_subcommand(
        "goursat", "decompose subgroups of a direct product into section data");
    auto left = std::make_shared<std::string>();
    auto right = std::make_shared<std::string>();
    auto pairs = std::make_shared<std::string>();
    auto diagonal = std::make_shared<bool>(false);
    cmd->add_option("--left", *left, "left factor (catalog name)")->required();
    cmd->add_option("--right", *right, "right factor (catalog name)")->required();
    cmd->add_option("--pairs", *pairs,
                    "JSON file {pairs: [[a,b],...]} generating the subgroup");
    cmd->add_flag("--diagonal", *diagonal,
                  "use the diagonal subgroup (factors must coincide)");
    cmd->callback([left, right, pairs, diagonal, &action] {
      action = [=](ff::Config const &cfg) {
        ff::ProductGroup amb = ff::direct_product(ff::catalog_group(*left, cfg),
                                                  ff::catalog_group(*right, cfg));
        if (*diagonal) {
          if (!amb.left.same_group(amb.right))
            throw ff::InvalidData("--diagonal needs identical factors");
          std::vector<ff::el> d;
          for (ff::el a = 0; a < amb.left.order(); ++a)
            d.push_back(amb.pair_index(a, a));
          ff::GoursatData g = ff::goursat_decompose(amb, ff::Subgroup(amb.group, d));
          emit(ff::json_goursat(g));
          return true;
        }
        if (!pairs->empty()) {
          ff::GoursatData g =
              ff::goursat_decompose(amb, subgroup_from_pairs(amb, *pairs));
          emit(ff::json_goursat(g));
          return true;
        }
        nlohmann::json list = nlohmann::json::array();
        for (ff::Subgroup const &X : ff::all_subgroups(amb.group, cfg))
          list.push_back({{"subgroup", ff::json_subgroup(X)},
                          {"data", ff::json_goursat(ff::goursat_decompose(amb, X))}});
        emit({{"left", ff::json_group(amb.left)},
              {"right", ff::json_group(amb.right)},
              {"subgroups", list}});
        return true;
      };
    });
  }

  // ---- bouc ---------------------------------------------------------------
  {
    auto *cmd = app.add_subcommand(
        "bouc", "double-coset decomposition of composed coset bisets");
    auto *verify = cmd->add_subcommand(
        "verify", "compare the decomposition against the composition oracle");
    auto G = std::make_shared<std::string>();
    auto H = std::make_shared<std::string>();
    auto K = std::make_shared<std::string>();
    auto X = std::make_shared<std::string>();
    auto Y = std::make_shared<std::string>();
    auto exhaustive = std::make_shared<bool>(false);
    verify->add_option("--G", *G, "left group (catalog name)")->required();
    verify->add_option("--H", *H, "middle group (catalog name)")->required();
    verify->add_option("--K", *K, "right group (catalog name)")->required();
    verify->add_option("--X", *X, "JSON pairs file for X inside G x H");
    verify->add_option("--Y", *Y, "JSON pairs file for Y inside H x K");
    verify->add_flag("--exhaustive", *exhaustive,
                     "sweep every subgroup pair (default when no --X/--Y)");
    verify->callback([G, H, K, X, Y, exhaustive, &action] {
      action = [=](ff::Config const &cfg) {
        ff::PermGroup g = ff::catalog_group(*G, cfg);
        ff::PermGroup h = ff::catalog_group(*H, cfg);
        ff::PermGroup k = ff::catalog_group(*K, cfg);
        ff::ProductGroup ambGH = ff::direct_product(g, h);
        ff::ProductGroup ambHK = ff::direct_product(h, k);
        ff::ProductGroup ambGK = ff::direct_product(g, k);
        if (X->empty() != Y->empty())
          throw ff::InvalidData("--X and --Y must be given together");
        if (!X->empty()) {
          ff::BoucComparison cmp =
              ff::bouc_comparison(ambGH, subgroup_from_pairs(ambGH, *X), ambHK,
                                  subgroup_from_pairs(ambHK, *Y), ambGK);
          emit(ff::json_bouc(cmp));
          return cmp.equal;
        }
        ff::ClassKeyCache cache(ambGK.group);
        std::uint64_t n = 0, equal = 0;
        nlohmann::json failures = nlohmann::json::array();
        for (ff::Subgroup const &sx : ff::all_subgroups(ambGH.group, cfg))
          for (ff::Subgroup const &sy : ff::all_subgroups(ambHK.group, cfg)) {
            ff::BoucComparison cmp =
                ff::bouc_comparison(ambGH, sx, ambHK, sy, ambGK, cache);
            ++n;
            if (cmp.equal)
              ++equal;
            else if (failures.size() < 10)
              failures.push_back({{"X", ff::json_subgroup(sx)},
                                  {"Y", ff::json_subgroup(sy)}});
          }
        emit({{"groups", {*G, *H, *K}},
              {"pairs", n},
              {"equal", equal},
              {"all_equal", n == equal},
              {"failures", failures}});
        return n == equal;
      };
    });
    cmd->require_subcommand(1);
  }

  // ---- fusion -------------------------------------------------------------
  {
    auto *cmd = app.add_subcommand("fusion", "saturated fusion system queries");
    auto choice = std::make_shared<SystemChoice>();
    cmd->add_option("--group", choice->group, "catalog name of the ambient group");
    cmd->add_option("--file", choice->file, "JSON group file {degree, generators}");
    cmd->add_option("--p", choice->p, "the prime (Sylow subgroup taken automatically)");
    cmd->add_flag("--inner", choice->inner,
                  "treat the group itself as the p-group and use inner fusion only");

    auto *subgroups = cmd->add_subcommand("subgroups", "list the subgroup atlas");
    subgroups->callback([choice, &action] {
      action = [=](ff::Config const &cfg) {
        ff::FusionSystem F = build_system(*choice, cfg);
        nlohmann::json list = nlohmann::json::array();
        for (unsigned id = 0; id < F.subgroups().size(); ++id) {
          nlohmann::json row = ff::json_subgroup(F.subgroups()[id]);
          row["id"] = id;
          list.push_back(row);
        }
        emit({{"group", ff::json_group(F.group())}, {"subgroups", list}});
        return true;
      };
    });

    auto *homs = cmd->add_subcommand("homs", "morphism tables of the system");
    auto src = std::make_shared<int>(-1);
    auto tgt = std::make_shared<int>(-1);
    homs->add_option("--source", *src, "source subgroup id (atlas order)");
    homs->add_option("--target", *tgt, "target subgroup id (atlas order)");
    homs->callback([choice, src, tgt, &action] {
      action = [=](ff::Config const &cfg) {
        ff::FusionSystem F = build_system(*choice, cfg);
        if (*src < 0) {
          emit(ff::json_fusion(F));
          return true;
        }
        ff::Subgroup S = atlas_subgroup(F, static_cast<unsigned>(*src));
        std::vector<ff::GroupMorphism> homs_list =
            *tgt < 0 ? F.isos_from(S)
                     : F.hom_set(S, atlas_subgroup(F, static_cast<unsigned>(*tgt)));
        nlohmann::json list = nlohmann::json::array();
        for (ff::GroupMorphism const &m : homs_list)
          list.push_back(ff::json_morphism(m));
        emit({{"source", ff::json_subgroup(S)}, {"morphisms", list}});
        return true;
      };
    });

    auto *closed = cmd->add_subcommand("closed", "closedness of one subgroup");
    auto strong = std::make_shared<bool>(false);
    auto weak = std::make_shared<bool>(false);
    auto closed_id = std::make_shared<unsigned>(0);
    closed->add_flag("--strong", *strong, "no morphism leaves the subgroup");
    closed->add_flag("--weak", *weak, "every morphism on it maps it onto itself");
    closed->add_option("--subgroup", *closed_id, "subgroup id (atlas order)")
        ->required();
    closed->callback([choice, strong, weak, closed_id, &action] {
      action = [=](ff::Config const &cfg) {
        if (*strong == *weak)
          throw ff::InvalidData("pick exactly one of --strong / --weak");
        ff::FusionSystem F = build_system(*choice, cfg);
        ff::Subgroup R = atlas_subgroup(F, *closed_id);
        bool const verdict = *strong ? F.strongly_closed(R) : F.weakly_closed(R);
        emit({{"subgroup", ff::json_subgroup(R)},
              {"mode", *strong ? "strong" : "weak"},
              {"closed", verdict}});
        return verdict;
      };
    });

    auto *saturate = cmd->add_subcommand("saturate", "check the saturation axioms");
    saturate->callback([choice, &action] {
      action = [=](ff::Config const &cfg) {
        ff::FusionSystem F = build_system(*choice, cfg);
        auto rep = F.saturation_check(cfg);
        emit(ff::json_saturation(rep));
        return rep.saturated;
      };
    });

    auto *quotient = cmd->add_subcommand("quotient", "quotient fusion system");
    auto flavor = std::make_shared<std::string>("stabilizing");
    auto quot_id = std::make_shared<unsigned>(0);
    quotient->add_option("--flavor", *flavor,
                         "stabilizing | images | closure")
        ->check(CLI::IsMember({"stabilizing", "images", "closure"}));
    quotient->add_option("--subgroup", *quot_id, "id of the collapsed subgroup")
        ->required();
    quotient->callback([choice, flavor, quot_id, &action] {
      action = [=](ff::Config const &cfg) {
        ff::FusionSystem F = build_system(*choice, cfg);
        ff::Subgroup R = atlas_subgroup(F, *quot_id);
        ff::QuotientSystem qs =
            *flavor == "stabilizing" ? ff::quotient_stabilizing(F, R, cfg)
            : *flavor == "images"    ? ff::quotient_images(F, R, cfg)
                                     : ff::quotient_images_closure(F, R, cfg);
        emit({{"flavor", *flavor},
              {"collapsed", ff::json_subgroup(R)},
              {"system", ff::json_fusion(qs.system)}});
        return true;
      };
    });

    auto *alperin = cmd->add_subcommand(
        "alperin", "regenerate from automorphisms of fully normalized subgroups");
    alperin->callback([choice, &action] {
      action = [=](ff::Config const &cfg) {
        ff::FusionSystem F = build_system(*choice, cfg);
        bool const same = ff::alperin_generated(F, cfg).same_system(F);
        emit({{"regenerates", same}});
        return same;
      };
    });

    auto *iso = cmd->add_subcommand("iso", "fusion-preserving isomorphism test");
    auto other = std::make_shared<SystemChoice>();
    auto theta_file = std::make_shared<std::string>();
    auto identity = std::make_shared<bool>(false);
    iso->add_option("--other", other->group, "catalog name of the other system");
    iso->add_option("--other-file", other->file, "JSON group file for the other system");
    iso->add_option("--other-p", other->p, "prime of the other system");
    iso->add_flag("--other-inner", other->inner, "inner fusion for the other system");
    iso->add_option("--theta", *theta_file,
                    "JSON array: image element index per element of this p-group");
    iso->add_flag("--identity", *identity, "use the identity map");
    iso->callback([choice, other, theta_file, identity, &action] {
      action = [=](ff::Config const &cfg) {
        ff::FusionSystem F1 = build_system(*choice, cfg);
        ff::FusionSystem F2 = build_system(*other, cfg);
        std::vector<ff::el> images;
        if (*identity) {
          for (ff::el e = 0; e < F1.group().order(); ++e)
            images.push_back(e);
        } else {
          if (theta_file->empty())
            throw ff::InvalidData("give --theta FILE or --identity");
          for (auto const &v : read_json_file(*theta_file))
            images.push_back(v.get<ff::el>());
        }
        if (F1.group().order() != F2.group().order())
          throw ff::InvalidData("the two underlying p-groups have different orders");
        if (images.size() != F1.group().order())
          throw ff::InvalidData("theta must list one image per element");
        for (ff::el v : images)
          if (v >= F2.group().order())
            throw ff::InvalidData("theta image out of range");
        ff::GroupMorphism theta(F1.group().full_subgroup(),
                                F2.group().full_subgroup(), images);
        if (!theta.is_homomorphism() || !theta.is_bijective())
          throw ff::InvalidData("theta is not a group isomorphism");
        bool const verdict = ff::iso_check(F1, F2, theta);
        emit({{"isomorphic", verdict}});
        return verdict;
      };
    });

    cmd->require_subcommand(1);
  }

  // ---- explore ------------------------------------------------------------
  {
    auto *cmd = app.add_subcommand(
        "explore", "compatibility candidates between two fusion systems");
    auto left = std::make_shared<std::string>();
    auto right = std::make_shared<std::string>();
    auto left_inner = std::make_shared<bool>(false);
    auto right_inner = std::make_shared<bool>(false);
    auto out_path = std::make_shared<std::string>();
    cmd->add_option("--left", *left, "left system as NAME:PRIME")->required();
    cmd->add_option("--right", *right, "right system as NAME:PRIME")->required();
    cmd->add_flag("--left-inner", *left_inner, "inner fusion on the left");
    cmd->add_flag("--right-inner", *right_inner, "inner fusion on the right");
    cmd->add_option("--json", *out_path, "also write the report to this file");
    cmd->callback([left, right, left_inner, right_inner, out_path, &action] {
      action = [=](ff::Config const &cfg) {
        ff::FusionSystem F1 =
            build_system(parse_system_colon(*left, *left_inner), cfg);
        ff::FusionSystem F2 =
            build_system(parse_system_colon(*right, *right_inner), cfg);
        nlohmann::json j =
            ff::json_compatibility(ff::explore_compatibility(F1, F2, cfg));
        emit(j);
        if (!out_path->empty()) {
          std::ofstream out(*out_path);
          if (!out)
            throw ff::InvalidData("cannot write file: " + *out_path);
          out << j.dump(2) << "\n";
        }
        return true;
      };
    });
  }

  // ---- suite --------------------------------------------------------------
  {
    auto *cmd = app.add_subcommand("suite", "run the verification criteria");
    auto names = std::make_shared<std::vector<std::string>>();
    auto max_order = std::make_shared<unsigned>(8);
    auto pair_cap = std::make_shared<std::uint64_t>(0);
    auto list_only = std::make_shared<bool>(false);
    cmd->add_option("criteria", *names,
                    "criterion names (default: all); short aliases accepted");
    cmd->add_option("--max-order", *max_order,
                    "largest factor order in the tensor-decomposition sweep");
    cmd->add_option("--pair-cap", *pair_cap,
                    "max subgroup pairs per triple, 0 = exhaustive");
    cmd->add_flag("--list", *list_only, "list criterion names and exit");
    cmd->callback([names, max_order, pair_cap, list_only, &action] {
      action = [=](ff::Config const &cfg) {
        if (*list_only) {
          emit(ff::criterion_names());
          return true;
        }
        static std::map<std::string, std::string> const aliases = {
            {"goursat", "goursat-roundtrip"}, {"bouc", "tensor-decomposition"},
            {"mackey", "mackey-deflation"},   {"quotient", "quotient-chain"},
            {"inner", "inner-criterion"},     {"explorer", "explorer-diagonal"},
        };
        std::vector<std::string> wanted;
        for (std::string const &n : *names) {
          auto it = aliases.find(n);
          wanted.push_back(it == aliases.end() ? n : it->second);
        }
        if (wanted.empty())
          wanted = ff::criterion_names();

        ff::SuiteOptions opt;
        opt.cfg = cfg;
        opt.max_order = *max_order;
        opt.pair_cap = *pair_cap;

        // validate names before running anything
        auto const known = ff::criterion_names();
        for (std::string const &n : wanted)
          if (std::find(known.begin(), known.end(), n) == known.end())
            throw ff::InvalidData("unknown criterion: " + n);

        std::vector<ff::CriterionResult> results;
        for (std::string const &n : known) {
          if (std::find(wanted.begin(), wanted.end(), n) == wanted.end())
            continue;
          ff::CriterionResult r = ff::run_criterion(n, opt);
          std::cerr << (r.passed ? "PASS " : "FAIL ") << r.name << "\n";
          results.push_back(std::move(r));
        }
        nlohmann::json report = ff::suite_report(results);
        emit(report);
        return report.at("passed").get<bool>();
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ff::Config cfg = load_config(config_path);
    return action(cfg) ? 0 : 1;
  } catch (ff::InvalidData const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
