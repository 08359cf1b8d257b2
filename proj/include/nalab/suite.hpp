#pragma once

#include <string>

#include "nalab/engine.hpp"
#include "nalab/named.hpp"

namespace nalab {

struct SuiteResult {
  bool pass = true;
  std::string report_text;  // pretty JSON, deterministic
};

/// Runs a verification suite described by a JSON config:
///   suite      name
///   algebra    realization spec (see make_named)
///   cap        spanning degree cap
///   generators names of named generators spanning by closure ([] = basis)
///   mode       {"kind":"exhaustive"} or {"kind":"random","seed":..,"count":..,"support":..}
///   items      [{"type":"identity","preset":..,"form":"raw"|"linearized"}
///               or {"type":"center","which":"K|V|N|Z|Z_alt","term":"..."}]
SuiteResult run_suite_config(const std::string& config_text, int jobs);

SuiteResult run_suite_file(const std::string& path, int jobs);

}  // namespace nalab
