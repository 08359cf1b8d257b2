#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "nalab/rational.hpp"

namespace nalab {

/// Declared variables of a free-term computation; parity is 0 or 1.
class TermContext {
 public:
  int declare(const std::string& name, int parity);
  int find(const std::string& name) const;  // -1 when absent
  int parity(int idx) const { return vars_[idx].second; }
  const std::string& var_name(int idx) const { return vars_[idx].first; }
  int size() const { return static_cast<int>(vars_.size()); }
  bool operator==(const TermContext&) const = default;

 private:
  std::vector<std::pair<std::string, int>> vars_;
};

using TermCtxPtr = std::shared_ptr<const TermContext>;

/// Node of a binary nonassociative word; immutable and shared.
struct TermNode {
  int var = -1;  // leaf when >= 0
  std::shared_ptr<const TermNode> l, r;
  int degree = 1;  // leaf count
};
using TermRef = std::shared_ptr<const TermNode>;

TermRef term_leaf(int var);
TermRef term_node(const TermRef& l, const TermRef& r);
int term_compare(const TermRef& a, const TermRef& b);
/// Occurrences of each variable; indexed by variable id.
void term_multideg(const TermRef& t, std::vector<int>& out);
std::string term_text(const TermRef& t, const TermContext& ctx);

struct TermLess {
  bool operator()(const TermRef& a, const TermRef& b) const { return term_compare(a, b) < 0; }
};

/// Rational-linear combination of binary nonassociative words.
class TermPoly {
 public:
  TermPoly() = default;
  explicit TermPoly(TermCtxPtr ctx) : ctx_(std::move(ctx)) {}
  static TermPoly variable(const TermCtxPtr& ctx, int idx);

  const TermCtxPtr& ctx() const { return ctx_; }
  const std::map<TermRef, Rational, TermLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const TermRef& t, const Rational& c);

  TermPoly operator+(const TermPoly& o) const;
  TermPoly operator-(const TermPoly& o) const;
  TermPoly operator-() const;
  TermPoly scaled(const Rational& c) const;
  /// Grafting product: pairwise tree products, bilinear.
  TermPoly operator*(const TermPoly& o) const;
  bool equals(const TermPoly& o) const;

  /// 0 or 1 when every word has the same parity; ParityMismatch otherwise.
  int parity() const;
  /// Max occurrences of the variable over the support.
  int degree_in(int var) const;
  bool is_multilinear() const;  // every declared variable exactly once per word

  std::string text() const;

 private:
  TermCtxPtr ctx_;
  std::map<TermRef, Rational, TermLess> terms_;
};

// Derived operator vocabulary.
TermPoly t_assoc(const TermPoly& a, const TermPoly& b, const TermPoly& c);
TermPoly t_comm(const TermPoly& a, const TermPoly& b);
TermPoly t_scomm(const TermPoly& a, const TermPoly& b);  // xy - (-1)^{|x||y|} yx
TermPoly op_R(const TermPoly& t, const TermPoly& a);     // t a
TermPoly op_L(const TermPoly& t, const TermPoly& a);     // a t
TermPoly op_Rab(const TermPoly& t, const TermPoly& a, const TermPoly& b);  // (ta)b - t(ab)
TermPoly op_Q(const TermPoly& t, const TermPoly& a);     // (a,a,t)
TermPoly op_Dab(const TermPoly& t, const TermPoly& a, const TermPoly& b);  // (a,t,b)

TermPoly k_func(const TermPoly& x, const TermPoly& y, const TermPoly& z, const TermPoly& t);
TermPoly k_xy(const TermPoly& x, const TermPoly& y);  // k(x;y) = k(x,x;y,y)
TermPoly h_func(const TermPoly& x, const TermPoly& a, const TermPoly& b);  // x[Q_a,Q_b]

/// Every product node replaced by its symmetrization, recursively.
TermPoly symmetrize_term(const TermPoly& f);

enum class LinMode { Plain, Alternating };

/// Multilinearization of f in x (f homogeneous of degree n in x): fresh
/// variables <x>1..<x>n replace the occurrences over all assignments;
/// Alternating weights each assignment by its permutation sign.
TermPoly full_linearize(const TermPoly& f, int var, LinMode mode = LinMode::Plain);

/// sum_{sigma in S_n} sign(sigma) f(x_{1 sigma},...,x_{n sigma}) for f
/// multilinear in the given variables.
TermPoly alternating_sum(const TermPoly& f, const std::vector<int>& vars);

/// Partial linearization Delta_x^i(y): replace exactly i occurrences of x by
/// y, summed over all choices.
TermPoly partial_linearize(const TermPoly& f, int x, int y, int i);

/// Substitutes a term polynomial for every occurrence of the variable.
TermPoly substitute_var(const TermPoly& f, int var, const TermPoly& g);

/// Full multilinearization: every variable of degree >= 2 is linearized; the
/// result is multilinear. Fresh variables are named <var>1, <var>2, ...
TermPoly multilinearize(const TermPoly& f);

/// Parses the term grammar. A header may declare variables:
///   even x z ; odd y ; (assoc x y z)
/// With `base` given, undeclared variables resolve against it.
TermPoly parse_term(std::string_view text, const TermCtxPtr& base = nullptr);

}  // namespace nalab
