#pragma once

#include <cstdint>
#include <vector>

#include "nalab/algebra.hpp"
#include "nalab/presets.hpp"

namespace nalab {

/// Tree-structural evaluation of a term polynomial under a substitution; the
/// vector is indexed by the term context's variables. On graded algebras the
/// parity of every bound element must match the variable's declaration.
AnyElem evaluate(const Algebra& alg, const TermPoly& f, const std::vector<AnyElem>& subst);

enum class SubstMode { Exhaustive, Random };
enum class PresetForm { Raw, Linearized };

/// A preset instantiated at concrete parities, optionally multilinearized;
/// `info` describes every context variable (fresh linearization variables
/// inherit parity and centrality from their base variable).
struct BuiltIdentity {
  TermPoly f;
  std::vector<PresetVar> info;
};

BuiltIdentity build_identity(const IdentityPreset& preset, const std::vector<int>& parities,
                             PresetForm form);

struct RandomSpec {
  std::uint64_t seed = 1;
  int count = 200;
  int support = 3;  // spanning elements combined per random element
};

struct SubstReport {
  std::string identity;
  std::string algebra;
  std::string form;  // "raw" | "linearized"
  std::string mode;  // "exhaustive" | "random"
  std::uint64_t seed = 0;
  int cap = 0;
  long long checked = 0;
  long long skipped_trivial = 0;  // tuples annihilated by exterior nilpotency
  bool pass = true;
  std::vector<std::pair<std::string, std::string>> counterexample;  // var -> element text
  std::string value;  // nonzero value at the counterexample
};

enum class CenterKind { K, V, N, Z, Z_ALT };

CenterKind center_kind(const std::string& name);

/// Bounded certification: all defining brackets/associators of the chosen
/// center vanish against every witness (pair).
bool center_membership(const Algebra& alg, const AnyElem& elem, CenterKind which,
                       const std::vector<AnyElem>& witnesses);

/// Spanning elements up to `cap`: the handle's canonical basis when
/// `generators` is empty, otherwise representatives of the span closure of
/// the generators (degree = word length in the generators).
std::vector<SpanningElement> spanning_set(const Algebra& alg,
                                          const std::vector<AnyElem>& generators, int cap);

SubstReport verify_by_substitution(const Algebra& alg, const IdentityPreset& preset,
                                   PresetForm form, const std::vector<SpanningElement>& span,
                                   SubstMode mode, const RandomSpec& rnd = {});

}  // namespace nalab
