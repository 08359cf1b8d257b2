#include "nalab/term.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "nalab/error.hpp"

namespace nalab {

int TermContext::declare(const std::string& name, int parity) {
  if (find(name) >= 0) fail(Errc::InvalidParameter, "variable '" + name + "' declared twice");
  vars_.push_back({name, parity});
  return static_cast<int>(vars_.size()) - 1;
}

int TermContext::find(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].first == name) return static_cast<int>(i);
  return -1;
}

TermRef term_leaf(int var) {
  auto n = std::make_shared<TermNode>();
  n->var = var;
  n->degree = 1;
  return n;
}

TermRef term_node(const TermRef& l, const TermRef& r) {
  auto n = std::make_shared<TermNode>();
  n->var = -1;
  n->l = l;
  n->r = r;
  n->degree = l->degree + r->degree;
  return n;
}

int term_compare(const TermRef& a, const TermRef& b) {
  if (a.get() == b.get()) return 0;
  if (a->degree != b->degree) return a->degree < b->degree ? -1 : 1;
  bool la = a->var >= 0, lb = b->var >= 0;
  if (la != lb) return la ? -1 : 1;
  if (la) return a->var == b->var ? 0 : (a->var < b->var ? -1 : 1);
  int c = term_compare(a->l, b->l);
  if (c) return c;
  return term_compare(a->r, b->r);
}

void term_multideg(const TermRef& t, std::vector<int>& out) {
  if (t->var >= 0) {
    if (t->var >= static_cast<int>(out.size())) out.resize(t->var + 1, 0);
    ++out[t->var];
    return;
  }
  term_multideg(t->l, out);
  term_multideg(t->r, out);
}

std::string term_text(const TermRef& t, const TermContext& ctx) {
  if (t->var >= 0) return ctx.var_name(t->var);
  return "(* " + term_text(t->l, ctx) + " " + term_text(t->r, ctx) + ")";
}

TermPoly TermPoly::variable(const TermCtxPtr& ctx, int idx) {
  TermPoly p(ctx);
  p.add_term(term_leaf(idx), 1);
  return p;
}

void TermPoly::add_term(const TermRef& t, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {
TermCtxPtr common_ctx(const TermPoly& a, const TermPoly& b) {
  if (a.ctx() && b.ctx() && !(*a.ctx() == *b.ctx()))
    fail(Errc::ContextMismatch, "terms come from different variable contexts");
  return a.ctx() ? a.ctx() : b.ctx();
}
}  // namespace

TermPoly TermPoly::operator+(const TermPoly& o) const {
  TermPoly r(common_ctx(*this, o));
  r.terms_ = terms_;
  for (const auto& [t, c] : o.terms_) r.add_term(t, c);
  return r;
}

TermPoly TermPoly::operator-(const TermPoly& o) const {
  TermPoly r(common_ctx(*this, o));
  r.terms_ = terms_;
  for (const auto& [t, c] : o.terms_) r.add_term(t, -c);
  return r;
}

TermPoly TermPoly::operator-() const {
  TermPoly r(ctx_);
  for (const auto& [t, c] : terms_) r.terms_.emplace(t, -c);
  return r;
}

TermPoly TermPoly::scaled(const Rational& c) const {
  TermPoly r(ctx_);
  if (c == 0) return r;
  for (const auto& [t, k] : terms_) r.terms_.emplace(t, k * c);
  return r;
}

TermPoly TermPoly::operator*(const TermPoly& o) const {
  TermPoly r(common_ctx(*this, o));
  for (const auto& [t1, c1] : terms_)
    for (const auto& [t2, c2] : o.terms_) r.add_term(term_node(t1, t2), c1 * c2);
  return r;
}

bool TermPoly::equals(const TermPoly& o) const { return (*this - o).is_zero(); }

int TermPoly::parity() const {
  int seen = -1;
  for (const auto& [t, c] : terms_) {
    std::vector<int> deg;
    term_multideg(t, deg);
    int p = 0;
    for (std::size_t v = 0; v < deg.size(); ++v)
      p += deg[v] * ctx_->parity(static_cast<int>(v));
    p &= 1;
    if (seen < 0) seen = p;
    else if (seen != p) fail(Errc::ParityMismatch, "term polynomial has mixed parity");
  }
  return seen < 0 ? 0 : seen;
}

int TermPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [t, c] : terms_) {
    std::vector<int> deg;
    term_multideg(t, deg);
    if (var < static_cast<int>(deg.size())) d = std::max(d, deg[var]);
  }
  return d;
}

bool TermPoly::is_multilinear() const {
  for (const auto& [t, c] : terms_) {
    std::vector<int> deg;
    term_multideg(t, deg);
    for (int d : deg)
      if (d > 1) return false;
  }
  return true;
}

std::string TermPoly::text() const {
  if (terms_.empty()) return "0";
  if (terms_.size() == 1 && terms_.begin()->second == 1)
    return term_text(terms_.begin()->first, *ctx_);
  std::string s = "(+";
  for (const auto& [t, c] : terms_) {
    s += " ";
    if (c == 1) s += term_text(t, *ctx_);
    else s += "(scale " + rat_text(c) + " " + term_text(t, *ctx_) + ")";
  }
  return s + ")";
}

TermPoly t_assoc(const TermPoly& a, const TermPoly& b, const TermPoly& c) {
  return (a * b) * c - a * (b * c);
}

TermPoly t_comm(const TermPoly& a, const TermPoly& b) { return a * b - b * a; }

TermPoly t_scomm(const TermPoly& a, const TermPoly& b) {
  int sign = (a.parity() & b.parity()) ? -1 : 1;
  return a * b - (b * a).scaled(sign);
}

TermPoly op_R(const TermPoly& t, const TermPoly& a) { return t * a; }
TermPoly op_L(const TermPoly& t, const TermPoly& a) { return a * t; }
TermPoly op_Rab(const TermPoly& t, const TermPoly& a, const TermPoly& b) {
  return (t * a) * b - t * (a * b);
}
TermPoly op_Q(const TermPoly& t, const TermPoly& a) { return t_assoc(a, a, t); }
TermPoly op_Dab(const TermPoly& t, const TermPoly& a, const TermPoly& b) {
  return t_assoc(a, t, b);
}

TermPoly k_func(const TermPoly& x, const TermPoly& y, const TermPoly& z, const TermPoly& t) {
  return t_assoc(x * y, z, t) - t_assoc(x, z, t) * y - x * t_assoc(y, z, t);
}

TermPoly k_xy(const TermPoly& x, const TermPoly& y) { return k_func(x, x, y, y); }

TermPoly h_func(const TermPoly& x, const TermPoly& a, const TermPoly& b) {
  return op_Q(op_Q(x, a), b) - op_Q(op_Q(x, b), a);
}

namespace {
TermPoly symmetrize_tree(const TermRef& t, const TermCtxPtr& ctx,
                         std::map<const TermNode*, TermPoly>& memo) {
  auto it = memo.find(t.get());
  if (it != memo.end()) return it->second;
  TermPoly r(ctx);
  if (t->var >= 0) {
    r.add_term(t, 1);
  } else {
    TermPoly l = symmetrize_tree(t->l, ctx, memo);
    TermPoly rr = symmetrize_tree(t->r, ctx, memo);
    r = (l * rr + rr * l).scaled(Rational(1, 2));
  }
  memo.emplace(t.get(), r);
  return r;
}
}  // namespace

TermPoly symmetrize_term(const TermPoly& f) {
  TermPoly r(f.ctx());
  std::map<const TermNode*, TermPoly> memo;
  for (const auto& [t, c] : f.terms()) r = r + symmetrize_tree(t, f.ctx(), memo).scaled(c);
  return r;
}

namespace {

// Rebuilds `t`, replacing the j-th occurrence of `var` (left-to-right) by the
// leaf image[j].
TermRef relabel_occurrences(const TermRef& t, int var, const std::vector<int>& image,
                            int& counter) {
  if (t->var >= 0) {
    if (t->var != var) return t;
    return term_leaf(image[counter++]);
  }
  TermRef l = relabel_occurrences(t->l, var, image, counter);
  TermRef r = relabel_occurrences(t->r, var, image, counter);
  return term_node(l, r);
}

int perm_sign(const std::vector<int>& perm) {
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace

TermPoly full_linearize(const TermPoly& f, int var, LinMode mode) {
  int n = f.degree_in(var);
  if (n == 0) fail(Errc::NotHomogeneous, "variable does not occur");
  for (const auto& [t, c] : f.terms()) {
    std::vector<int> deg;
    term_multideg(t, deg);
    int d = var < static_cast<int>(deg.size()) ? deg[var] : 0;
    if (d != n) fail(Errc::NotHomogeneous, "term polynomial is not homogeneous in the variable");
  }
  auto ctx = std::make_shared<TermContext>(*f.ctx());
  const std::string base = f.ctx()->var_name(var);
  int par = f.ctx()->parity(var);
  std::vector<int> fresh;
  for (int j = 1; j <= n; ++j) fresh.push_back(ctx->declare(base + std::to_string(j), par));
  TermPoly out{TermCtxPtr(ctx)};
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int sign = mode == LinMode::Alternating ? perm_sign(perm) : 1;
    std::vector<int> image(n);
    for (int j = 0; j < n; ++j) image[j] = fresh[perm[j]];
    for (const auto& [t, c] : f.terms()) {
      int counter = 0;
      out.add_term(relabel_occurrences(t, var, image, counter), c * sign);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

TermPoly alternating_sum(const TermPoly& f, const std::vector<int>& vars) {
  for (const auto& [t, c] : f.terms()) {
    std::vector<int> deg;
    term_multideg(t, deg);
    for (int v : vars) {
      int d = v < static_cast<int>(deg.size()) ? deg[v] : 0;
      if (d != 1) fail(Errc::NotHomogeneous, "alternating sum needs a multilinear input");
    }
  }
  int n = static_cast<int>(vars.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  TermPoly out(f.ctx());
  do {
    int sign = perm_sign(perm);
    // substitution x_i -> x_{perm(i)}
    for (const auto& [t, c] : f.terms()) {
      struct Rec {
        const std::vector<int>& vars;
        const std::vector<int>& perm;
        TermRef walk(const TermRef& t) {
          if (t->var >= 0) {
            for (std::size_t i = 0; i < vars.size(); ++i)
              if (vars[i] == t->var) return term_leaf(vars[perm[i]]);
            return t;
          }
          return term_node(walk(t->l), walk(t->r));
        }
      } rec{vars, perm};
      out.add_term(rec.walk(t), c * sign);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {
// Sum over the ways to replace exactly i of the remaining occurrences.
TermPoly delta_rec(const TermRef& t, int x, int y, int i, const TermCtxPtr& ctx) {
  TermPoly zero(ctx);
  if (t->var >= 0) {
    if (i == 0) {
      TermPoly r(ctx);
      r.add_term(t, 1);
      return r;
    }
    if (i == 1 && t->var == x) {
      TermPoly r(ctx);
      r.add_term(term_leaf(y), 1);
      return r;
    }
    return zero;
  }
  std::vector<int> degl;
  term_multideg(t->l, degl);
  int dl = x < static_cast<int>(degl.size()) ? degl[x] : 0;
  TermPoly out(ctx);
  for (int j = 0; j <= i; ++j) {
    if (j > dl) break;
    TermPoly left = delta_rec(t->l, x, y, j, ctx);
    if (left.is_zero()) continue;
    TermPoly right = delta_rec(t->r, x, y, i - j, ctx);
    if (right.is_zero()) continue;
    out = out + left * right;
  }
  return out;
}
}  // namespace

TermPoly partial_linearize(const TermPoly& f, int x, int y, int i) {
  if (f.degree_in(x) < i)
    fail(Errc::DegreeTooLow, "partial linearization degree exceeds the variable degree");
  TermPoly out(f.ctx());
  for (const auto& [t, c] : f.terms()) out = out + delta_rec(t, x, y, i, f.ctx()).scaled(c);
  return out;
}

namespace {
TermPoly subst_tree(const TermRef& t, int var, const TermPoly& g, const TermCtxPtr& ctx,
                    std::map<const TermNode*, TermPoly>& memo) {
  auto it = memo.find(t.get());
  if (it != memo.end()) return it->second;
  TermPoly r(ctx);
  if (t->var >= 0) {
    if (t->var == var) r = g;
    else r.add_term(t, 1);
  } else {
    r = subst_tree(t->l, var, g, ctx, memo) * subst_tree(t->r, var, g, ctx, memo);
  }
  memo.emplace(t.get(), r);
  return r;
}
}  // namespace

TermPoly substitute_var(const TermPoly& f, int var, const TermPoly& g) {
  TermCtxPtr ctx = common_ctx(f, g);
  TermPoly out(ctx);
  std::map<const TermNode*, TermPoly> memo;
  for (const auto& [t, c] : f.terms()) out = out + subst_tree(t, var, g, ctx, memo).scaled(c);
  return out;
}

TermPoly multilinearize(const TermPoly& f) {
  TermPoly cur = f;
  while (true) {
    int var = -1;
    for (int v = 0; v < cur.ctx()->size(); ++v) {
      if (cur.degree_in(v) > 1) {
        var = v;
        break;
      }
    }
    if (var < 0) return cur;
    cur = full_linearize(cur, var, LinMode::Plain);
  }
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct TermParser {
  std::string_view t;
  std::size_t i = 0;
  std::shared_ptr<TermContext> ctx;

  void skip() { while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i; }

  bool at_end() {
    skip();
    return i >= t.size();
  }

  std::string ident() {
    skip();
    std::size_t s = i;
    while (i < t.size() &&
           (std::isalnum(static_cast<unsigned char>(t[i])) || t[i] == '_' || t[i] == '\'')) ++i;
    if (s == i) fail(Errc::SyntaxError, "expected identifier at offset " + std::to_string(i));
    return std::string(t.substr(s, i - s));
  }

  void expect(char c) {
    skip();
    if (i >= t.size() || t[i] != c)
      fail(Errc::SyntaxError, std::string("expected '") + c + "' at offset " + std::to_string(i));
    ++i;
  }

  bool peek(char c) {
    skip();
    return i < t.size() && t[i] == c;
  }

  // scalar-or-poly value
  struct Val {
    bool is_scalar = false;
    Rational scalar;
    TermPoly poly;
  };

  Val scalar(const Rational& q) { return {true, q, TermPoly(ctx)}; }
  Val wrap(TermPoly p) { return {false, 0, std::move(p)}; }

  TermPoly need_poly(const Val& v, const char* what) {
    if (v.is_scalar) {
      if (v.scalar == 0) return TermPoly(ctx);
      fail(Errc::SyntaxError, std::string("constant where a term is required in ") + what);
    }
    return v.poly;
  }

  Val v_mul(const Val& a, const Val& b) {
    if (a.is_scalar && b.is_scalar) return scalar(a.scalar * b.scalar);
    if (a.is_scalar) return wrap(b.poly.scaled(a.scalar));
    if (b.is_scalar) return wrap(a.poly.scaled(b.scalar));
    return wrap(a.poly * b.poly);
  }

  Val v_add(const Val& a, const Val& b, int sign) {
    if (a.is_scalar && b.is_scalar)
      return scalar(sign > 0 ? Rational(a.scalar + b.scalar) : Rational(a.scalar - b.scalar));
    if (a.is_scalar && a.scalar == 0) return sign > 0 ? b : wrap(-b.poly);
    if (b.is_scalar && b.scalar == 0) return a;
    if (a.is_scalar || b.is_scalar)
      fail(Errc::SyntaxError, "cannot add a constant to a term");
    return wrap(sign > 0 ? a.poly + b.poly : a.poly - b.poly);
  }

  Val expr() {
    skip();
    if (i >= t.size()) fail(Errc::SyntaxError, "unexpected end of input");
    char c = t[i];
    if (c == '(') {
      ++i;
      skip();
      std::string head;
      if (i < t.size() && (t[i] == '*' || t[i] == '+' || t[i] == '-')) {
        head = std::string(1, t[i]);
        ++i;
      } else {
        head = ident();
      }
      Val out;
      if (head == "*") {
        Val a = expr();
        Val b = expr();
        out = v_mul(a, b);
      } else if (head == "+") {
        std::vector<Val> parts;
        while (!peek(')')) parts.push_back(expr());
        if (parts.empty()) fail(Errc::SyntaxError, "(+) needs arguments");
        out = parts[0];
        for (std::size_t j = 1; j < parts.size(); ++j) out = v_add(out, parts[j], +1);
      } else if (head == "-") {
        Val a = expr();
        Val b = expr();
        out = v_add(a, b, -1);
      } else if (head == "scale") {
        skip();
        Rational q = parse_rational(t, &i);
        Val a = expr();
        if (a.is_scalar) out = scalar(q * a.scalar);
        else out = wrap(a.poly.scaled(q));
      } else if (head == "assoc") {
        TermPoly a = need_poly(expr(), "assoc");
        TermPoly b = need_poly(expr(), "assoc");
        TermPoly cc = need_poly(expr(), "assoc");
        out = wrap(t_assoc(a, b, cc));
      } else if (head == "comm") {
        TermPoly a = need_poly(expr(), "comm");
        TermPoly b = need_poly(expr(), "comm");
        out = wrap(t_comm(a, b));
      } else if (head == "scomm") {
        TermPoly a = need_poly(expr(), "scomm");
        TermPoly b = need_poly(expr(), "scomm");
        out = wrap(t_scomm(a, b));
      } else if (head == "sym") {
        out = wrap(symmetrize_term(need_poly(expr(), "sym")));
      } else if (head == "op") {
        std::string kind = ident();
        if (kind == "R") {
          TermPoly a = need_poly(expr(), "op R");
          TermPoly arg = need_poly(expr(), "op R");
          out = wrap(op_R(arg, a));
        } else if (kind == "L") {
          TermPoly a = need_poly(expr(), "op L");
          TermPoly arg = need_poly(expr(), "op L");
          out = wrap(op_L(arg, a));
        } else if (kind == "Rab") {
          TermPoly a = need_poly(expr(), "op Rab");
          TermPoly b = need_poly(expr(), "op Rab");
          TermPoly arg = need_poly(expr(), "op Rab");
          out = wrap(op_Rab(arg, a, b));
        } else if (kind == "Q") {
          TermPoly a = need_poly(expr(), "op Q");
          TermPoly arg = need_poly(expr(), "op Q");
          out = wrap(op_Q(arg, a));
        } else if (kind == "Dab") {
          TermPoly a = need_poly(expr(), "op Dab");
          TermPoly b = need_poly(expr(), "op Dab");
          TermPoly arg = need_poly(expr(), "op Dab");
          out = wrap(op_Dab(arg, a, b));
        } else {
          fail(Errc::SyntaxError, "unknown operator '" + kind + "'");
        }
      } else {
        fail(Errc::SyntaxError, "unknown form '" + head + "'");
      }
      expect(')');
      return out;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
      return scalar(parse_rational(t, &i));
    }
    std::string name = ident();
    int idx = ctx->find(name);
    if (idx < 0) fail(Errc::UndeclaredVariable, "variable '" + name + "' is not declared");
    return wrap(TermPoly::variable(ctx, idx));
  }
};

}  // namespace

TermPoly parse_term(std::string_view text, const TermCtxPtr& base) {
  TermParser p;
  p.t = text;
  p.ctx = base ? std::make_shared<TermContext>(*base) : std::make_shared<TermContext>();

  // optional header groups: ("even"|"odd") name+ ';'
  while (true) {
    std::size_t save = p.i;
    p.skip();
    std::size_t word_start = p.i;
    while (p.i < p.t.size() && std::isalpha(static_cast<unsigned char>(p.t[p.i]))) ++p.i;
    std::string word(p.t.substr(word_start, p.i - word_start));
    if (word != "even" && word != "odd") {
      p.i = save;
      break;
    }
    int parity = word == "odd" ? 1 : 0;
    while (!p.peek(';')) {
      std::string name = p.ident();
      p.ctx->declare(name, parity);
    }
    p.expect(';');
  }

  auto val = p.expr();
  if (!p.at_end()) fail(Errc::SyntaxError, "trailing characters after term");
  if (val.is_scalar) {
    if (val.scalar == 0) return TermPoly(TermCtxPtr(p.ctx));
    fail(Errc::SyntaxError, "a bare constant is not a term");
  }
  TermPoly out = val.poly;
  if (!out.ctx()) out = TermPoly(TermCtxPtr(p.ctx));
  return out;
}

}  // namespace nalab
