#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nalab/term.hpp"

namespace nalab {

struct PresetVar {
  std::string name;
  int parity = -1;      // -1: both parities admissible; 0/1: fixed
  bool central = false; // instantiated only with commutative-center elements
};

/// A named identity family. `build` produces the defining term polynomial for
/// a concrete parity assignment; identities without super signs ignore it.
struct IdentityPreset {
  std::string name;
  std::vector<PresetVar> vars;
  std::function<TermPoly(const std::vector<int>& parities)> build;
  bool parity_dependent = false;
};

/// Registry lookup; throws UnknownAlgebra-style errors on bad names.
const IdentityPreset& preset(const std::string& name);
std::vector<std::string> preset_names();

/// Families used by the suites: "strongly11" = {right_alt, eq6, eq2};
/// "jordan" = {comm, jordan_id}; "prop74" = the five Grassmann-envelope
/// identities; single preset names resolve to singleton lists.
std::vector<const IdentityPreset*> preset_family(const std::string& name);

}  // namespace nalab
