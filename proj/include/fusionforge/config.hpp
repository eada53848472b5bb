#ifndef GUARD_FUSIONFORGE_CONFIG_H
#define GUARD_FUSIONFORGE_CONFIG_H

#include <cstdint>
#include <string>

namespace fusionforge {

// Resource caps and run parameters. All computations are exact; the caps only bound how much
// exhaustive work an operation may attempt before failing fast with CapExceeded.
struct Config {
  // maximum group order closure() may materialize
  std::uint32_t closure_cap = 20160u;
  // maximum group order all_subgroups() accepts
  std::uint32_t subgroup_cap = 1024u;
  // maximum p-group order saturation_check() accepts
  std::uint32_t saturation_cap = 64u;
  // maximum group order automorphisms() accepts
  std::uint32_t automorphism_cap = 256u;
  // worker budget for embarrassingly parallel verification sweeps
  unsigned parallelism = 1u;
  // seed for randomized property tests
  std::uint64_t seed = 0x5eedf0c5u;

  void validate() const;
};

// Parse a JSON config file; unknown keys are rejected, missing keys keep defaults.
Config config_from_json_file(std::string const &path);

// Config from the FUSIONFORGE_CONFIG environment variable, or defaults if it is unset.
Config config_from_env();

} // namespace fusionforge

#endif // GUARD_FUSIONFORGE_CONFIG_H
