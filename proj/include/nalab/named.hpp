#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nalab/algebra.hpp"

namespace nalab {

/// A concrete realization together with its distinguished generators.
struct NamedAlgebra {
  std::string id;
  AlgebraPtr algebra;
  std::vector<std::pair<std::string, AnyElem>> generators;

  const AnyElem& generator(const std::string& name) const;
  bool has_generator(const std::string& name) const;
};

/// Builds a realization from its id. Atoms:
///   F0 | F1 | Ft | JF0 | free11 | FZx:<k> | F0Zx:<k>
///   A0:<m> | Abar0:<m> | Jbar0:<m> | G11:<m>
///   Bt:<nvars>,<cap> | Jt:<nvars>,<cap>       (truncated vector-type rings)
///   avfN | avfN_badtau
/// Combinators: env(<spec>,<m>) and sym(<spec>).
NamedAlgebra make_named(const std::string& spec);

}  // namespace nalab
