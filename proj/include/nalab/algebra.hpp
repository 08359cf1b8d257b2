#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nalab/avf.hpp"
#include "nalab/vt.hpp"

namespace nalab {

/// Finite sum of tensors (carrier element) (x) (exterior word), collected on
/// words. Each stored carrier element is homogeneous of the word's parity.
template <class C>
struct Tensor {
  std::map<ExtWord, C> terms;
  bool is_zero() const { return terms.empty(); }
  bool operator==(const Tensor&) const = default;
};

using EnvVtElement = Tensor<VtElement>;
using EnvAvfElement = Tensor<AvfElement>;

using AnyElem = std::variant<VtElement, AvfElement, EnvVtElement, EnvAvfElement>;

struct SpanningElement {
  AnyElem value;
  Parity parity = Parity::Even;
  int degree = 0;
  std::string label;
};

/// Uniform interface over the concrete algebra realizations. Handles are
/// immutable; element operations are pure.
class Algebra {
 public:
  virtual ~Algebra() = default;

  virtual const std::string& name() const = 0;
  /// True for superalgebras whose elements carry a Z2-grading that constrains
  /// substitution; false for plain algebras (the Grassmann envelopes).
  virtual bool graded_super() const = 0;

  virtual AnyElem zero() const = 0;
  virtual AnyElem add(const AnyElem& a, const AnyElem& b) const = 0;
  virtual AnyElem scale(const Rational& c, const AnyElem& a) const = 0;
  virtual AnyElem mul(const AnyElem& a, const AnyElem& b) const = 0;
  /// into += c * x; the default routes through add/scale.
  virtual void add_scaled(AnyElem& into, const Rational& c, const AnyElem& x) const {
    into = add(into, scale(c, x));
  }
  virtual bool is_zero(const AnyElem& a) const = 0;
  virtual Parity parity(const AnyElem& a) const = 0;
  virtual AnyElem component(const AnyElem& a, Parity p) const = 0;

  /// Coordinates over the canonical linear basis, keyed by printable labels.
  virtual std::map<std::string, Rational> coords(const AnyElem& a) const = 0;
  virtual std::string show(const AnyElem& a) const = 0;
  virtual AnyElem parse_elem(std::string_view text) const = 0;

  /// Canonical spanning set (basis elements) up to the given degree.
  virtual std::vector<SpanningElement> basis(int degree_cap) const = 0;

  /// For envelope elements supported on a single exterior word: that word.
  /// Plain word 0 for non-envelope algebras; nullopt when mixed.
  virtual std::optional<ExtWord> single_word(const AnyElem& a) const = 0;

  AnyElem sub(const AnyElem& a, const AnyElem& b) const {
    return add(a, scale(Rational(-1), b));
  }
  bool equal(const AnyElem& a, const AnyElem& b) const { return is_zero(sub(a, b)); }
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

AlgebraPtr make_vt_handle(VtAlgebra alg);
AlgebraPtr make_avf_handle(AvfAlgebra alg);
/// Grassmann envelope of a vector-type or vector-fields handle.
AlgebraPtr make_envelope(const AlgebraPtr& base, int rank);
/// Same carrier with the (super)symmetrized product.
AlgebraPtr make_symmetrized(const AlgebraPtr& inner);

/// Concrete data accessors (null when the handle is of a different kind).
const VtAlgebra* vt_data(const Algebra& a);
const AvfAlgebra* avf_data(const Algebra& a);

}  // namespace nalab
