#include "fusionforge/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fusionforge/errors.hpp"

namespace fusionforge {

void Config::validate() const
{
  if (closure_cap == 0u)
    throw InvalidData("closure_cap must be positive");
  if (subgroup_cap == 0u)
    throw InvalidData("subgroup_cap must be positive");
  if (saturation_cap == 0u)
    throw InvalidData("saturation_cap must be positive");
  if (automorphism_cap == 0u)
    throw InvalidData("automorphism_cap must be positive");
  if (parallelism == 0u)
    throw InvalidData("parallelism must be positive");
}

Config config_from_json_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw InvalidData("cannot open config file: " + path);

  nlohmann::json j;
  try {
    in >> j;
  } catch (nlohmann::json::exception const &e) {
    throw InvalidData(std::string("config file is not valid JSON: ") + e.what());
  }

  if (!j.is_object())
    throw InvalidData("config file must hold a JSON object");

  Config cfg;
  for (auto const &[key, value] : j.items()) {
    if (key == "closure_cap")
      cfg.closure_cap = value.get<std::uint32_t>();
    else if (key == "subgroup_cap")
      cfg.subgroup_cap = value.get<std::uint32_t>();
    else if (key == "saturation_cap")
      cfg.saturation_cap = value.get<std::uint32_t>();
    else if (key == "automorphism_cap")
      cfg.automorphism_cap = value.get<std::uint32_t>();
    else if (key == "parallelism")
      cfg.parallelism = value.get<unsigned>();
    else if (key == "seed")
      cfg.seed = value.get<std::uint64_t>();
    else
      throw InvalidData("unknown config key: " + key);
  }

  cfg.validate();
  return cfg;
}

Config config_from_env()
{
  char const *path = std::getenv("FUSIONFORGE_CONFIG");
  if (path == nullptr || *path == '\0')
    return Config();
  return config_from_json_file(path);
}

} // namespace fusionforge
