#pragma once

#include <map>
#include <string>
#include <vector>

#include "nalab/named.hpp"
#include "nalab/term.hpp"

namespace nalab {

struct MultiDeg {
  std::map<std::string, int> axes;

  int total() const;
  int at(const std::string& axis) const;
  std::string text() const;  // "x=2,z=1", axes sorted
  bool operator<(const MultiDeg& o) const { return axes < o.axes; }
  bool operator==(const MultiDeg&) const = default;
};

/// A canonical basis element of one of the named algebras, together with its
/// multidegree and enough structure to realize it.
struct BasisLabel {
  std::string algebra;
  std::string text;
  MultiDeg deg;

  // structured payload; unused parts stay empty
  std::vector<int> I;                   // multi-index of powers over R^k-derived letters
  std::map<int, std::vector<int>> J;    // per-even-generator multi-indices
  int npow = 0;                         // plain power of z
  int kpow = 0;                         // (z R_{x,x})^k count
  int mpow = 0;                         // x^2 power / associator-pair count
  int eps = 0;                          // trailing odd generator
  ExtWord word = 0;                     // exterior letters
};

/// Complete duplicate-free enumeration of the cited basis up to total
/// degree `bound`. Ids: free-on-x, F0, F1, Ft, FZx:<k>, JF0,
/// A0:<m>, Abar0:<m>, Jbar0:<m>, G11:<m>.
std::vector<BasisLabel> basis_enumerate(const std::string& algebra_id, int bound);

int dim_count(const std::string& algebra_id, const MultiDeg& deg);

using DimTable = std::map<MultiDeg, int>;
DimTable dim_table(const std::string& algebra_id, int bound);
std::string dim_table_text(const std::string& algebra_id, const DimTable& t);

/// The named realization that carries the basis of `algebra_id`.
NamedAlgebra realization_for(const std::string& algebra_id);

/// Image of a basis label in its realization.
AnyElem realize_label(const NamedAlgebra& named, const BasisLabel& label);

/// Exact rank of the span of all bracketings of all words with the given
/// letter counts (indexed like named.generators). Memoizes across queries.
class SpanRanker {
 public:
  explicit SpanRanker(const NamedAlgebra& named) : named_(named) {}

  int rank(const std::vector<int>& counts);
  const std::vector<AnyElem>& representatives(const std::vector<int>& counts);

 private:
  struct State {
    std::vector<AnyElem> reps;
    std::vector<std::map<std::string, Rational>> coords;
  };
  const State& compute(const std::vector<int>& counts);

  const NamedAlgebra& named_;
  std::map<std::vector<int>, State> memo_;
};

/// Evaluates a term over the named generators in the realization.
AnyElem normal_form(const NamedAlgebra& named, const TermPoly& term);

}  // namespace nalab
