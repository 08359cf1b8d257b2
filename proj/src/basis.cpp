#include "nalab/basis.hpp"

#include <algorithm>
#include <bit>

#include "nalab/engine.hpp"
#include "nalab/error.hpp"
#include "nalab/linalg.hpp"

namespace nalab {

int MultiDeg::total() const {
  int t = 0;
  for (const auto& [a, v] : axes) t += v;
  return t;
}

int MultiDeg::at(const std::string& axis) const {
  auto it = axes.find(axis);
  return it == axes.end() ? 0 : it->second;
}

std::string MultiDeg::text() const {
  std::string s;
  for (const auto& [a, v] : axes) {
    if (!s.empty()) s += ",";
    s += a + "=" + std::to_string(v);
  }
  return s;
}

namespace {

// multi-indices I = (i_0..i_k) with sum_k I[k]*w(k) <= bound, weight w(k) = base + step*k
void enumerate_multiindices(int bound, int base, int step, std::vector<int>& cur,
                            int used, std::size_t k, std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  for (std::size_t j = k;; ++j) {
    int w = base + step * static_cast<int>(j);
    if (w > bound - used) break;
    if (cur.size() <= j) cur.resize(j + 1, 0);
    ++cur[j];
    enumerate_multiindices(bound, base, step, cur, used + w, j, out);
    --cur[j];
    while (!cur.empty() && cur.back() == 0) cur.pop_back();
  }
}

std::vector<std::vector<int>> multiindices(int bound, int base, int step) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  enumerate_multiindices(bound, base, step, cur, 0, 0, out);
  return out;
}

int weight_sum(const std::vector<int>& I, int base, int step) {
  int s = 0;
  for (std::size_t k = 0; k < I.size(); ++k) s += I[k] * (base + step * static_cast<int>(k));
  return s;
}

int index_weight(const std::vector<int>& I) {  // sum k * I[k]
  int s = 0;
  for (std::size_t k = 0; k < I.size(); ++k) s += static_cast<int>(k) * I[k];
  return s;
}

int order_sum(const std::vector<int>& I) {  // |I|
  int s = 0;
  for (int v : I) s += v;
  return s;
}

std::string multiindex_text(const std::vector<int>& I, const std::string& letter) {
  std::string s;
  for (std::size_t k = 0; k < I.size(); ++k) {
    if (!I[k]) continue;
    if (!s.empty()) s += "*";
    s += "(" + letter;
    if (k) s += "R" + std::to_string(k);
    s += ")";
    if (I[k] > 1) s += "^" + std::to_string(I[k]);
  }
  return s;
}

struct IdParts {
  std::string head;
  std::vector<int> args;
};

IdParts split_id(const std::string& id) {
  IdParts p;
  auto colon = id.find(':');
  p.head = id.substr(0, colon);
  if (colon != std::string::npos) {
    std::size_t pos = colon + 1;
    while (pos < id.size()) {
      auto comma = id.find(',', pos);
      std::string tok = id.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      p.args.push_back(std::stoi(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  return p;
}

void enumerate_words(int rank, int max_len, std::vector<ExtWord>& out) {
  for (ExtWord w = 0; w < (ExtWord{1} << rank); ++w)
    if (ext_word_len(w) <= max_len) out.push_back(w);
}

std::vector<BasisLabel> labels_free_on_x(int bound) {
  std::vector<BasisLabel> out;
  for (const auto& I : multiindices(bound, 2, 2)) {
    int d = weight_sum(I, 2, 2);
    for (int eps = 0; eps <= 1; ++eps) {
      if (d + eps > bound || d + eps == 0) continue;
      BasisLabel l;
      l.algebra = "free-on-x";
      l.I = I;
      l.eps = eps;
      l.deg.axes["x"] = d + eps;
      l.text = multiindex_text(I, "x^2");
      if (eps) l.text += (l.text.empty() ? "x" : "*x");
      if (l.text.empty()) l.text = "1";
      out.push_back(std::move(l));
    }
  }
  return out;
}

std::vector<BasisLabel> labels_f_series(const std::string& id, int bound) {
  // F0 / F1 / JF0: z^n (zR)^k x^eps; F1 keeps the empty label (unit)
  bool unital = id == "F1";
  std::vector<BasisLabel> out;
  for (int n = 0; n <= bound; ++n)
    for (int k = 0; n + k <= bound; ++k)
      for (int eps = 0; eps <= 1; ++eps) {
        int zdeg = n + k, xdeg = 2 * k + eps;
        if (zdeg + xdeg > bound) continue;
        if (!unital && n + k + eps == 0) continue;
        BasisLabel l;
        l.algebra = id;
        l.npow = n;
        l.kpow = k;
        l.eps = eps;
        l.deg.axes["z"] = zdeg;
        l.deg.axes["x"] = xdeg;
        std::string s;
        if (n) s += "z^" + std::to_string(n);
        if (k) s += (s.empty() ? "" : "*") + std::string("(zRxx)^") + std::to_string(k);
        if (eps) s += (s.empty() ? "x" : "*x");
        l.text = s.empty() ? "1" : s;
        out.push_back(std::move(l));
      }
  return out;
}

std::vector<BasisLabel> labels_ft(int bound) {
  std::vector<BasisLabel> out;
  for (int m = 0; 2 * m <= bound; ++m)
    for (int n = 0; n <= bound; ++n)
      for (int k = 0; k <= bound; ++k)
        for (int eps = 0; eps <= 1; ++eps) {
          int zdeg = n + k, xdeg = 2 * m + 2 * k + eps;
          if (zdeg + xdeg > bound) continue;
          if (m + n + k + eps == 0) continue;
          BasisLabel l;
          l.algebra = "Ft";
          l.mpow = m;
          l.npow = n;
          l.kpow = k;
          l.eps = eps;
          l.deg.axes["z"] = zdeg;
          l.deg.axes["x"] = xdeg;
          std::string s;
          if (m) s += "(x^2)^" + std::to_string(m);
          if (n) s += (s.empty() ? "" : "*") + std::string("z^") + std::to_string(n);
          if (k) s += (s.empty() ? "" : "*") + std::string("(zRxx)^") + std::to_string(k);
          if (eps) s += (s.empty() ? "x" : "*x");
          l.text = s.empty() ? "1" : s;
          out.push_back(std::move(l));
        }
  return out;
}

void product_of_multiindices(int zcount, int bound, std::vector<std::map<int, std::vector<int>>>& out) {
  // distribute multi-indices over z1..zk; weight of (z R^l) is 1 on z-axis and 2l on x
  std::vector<std::map<int, std::vector<int>>> acc = {{}};
  for (int j = 1; j <= zcount; ++j) {
    std::vector<std::map<int, std::vector<int>>> next;
    for (const auto& partial : acc) {
      int used = 0;
      for (const auto& [jj, JJ] : partial) used += order_sum(JJ) + 2 * index_weight(JJ);
      for (const auto& J : multiindices(bound - used, 1, 2)) {
        auto copy = partial;
        if (order_sum(J) > 0) copy.emplace(j, J);
        next.push_back(std::move(copy));
      }
    }
    acc = std::move(next);
  }
  out = std::move(acc);
}

std::vector<BasisLabel> labels_fzx(const std::string& head, int zcount, int bound) {
  // FZx carries (x^2)^I letters; JZx has no x^2 letters at all
  std::vector<BasisLabel> out;
  std::vector<std::map<int, std::vector<int>>> zparts;
  product_of_multiindices(zcount, bound, zparts);
  std::vector<std::vector<int>> Is =
      head == "JZx" ? std::vector<std::vector<int>>{{}} : multiindices(bound, 2, 2);
  for (const auto& I : Is) {
    int xI = weight_sum(I, 2, 2);
    for (const auto& zp : zparts) {
      int x = xI, ztot = 0;
      std::map<std::string, int> zaxes;
      for (const auto& [j, J] : zp) {
        x += 2 * index_weight(J);
        zaxes["z" + std::to_string(j)] = order_sum(J);
        ztot += order_sum(J);
      }
      for (int eps = 0; eps <= 1; ++eps) {
        int xd = x + eps;
        if (xd + ztot > bound) continue;
        if (order_sum(I) + ztot + eps == 0) continue;
        BasisLabel l;
        l.algebra = head + ":" + std::to_string(zcount);
        l.I = I;
        l.J = zp;
        l.eps = eps;
        l.deg.axes["x"] = xd;
        for (int j = 1; j <= zcount; ++j) {
          auto it = zaxes.find("z" + std::to_string(j));
          l.deg.axes["z" + std::to_string(j)] = it == zaxes.end() ? 0 : it->second;
        }
        std::string s = multiindex_text(I, "x^2");
        for (const auto& [j, J] : zp) {
          std::string t = multiindex_text(J, "z" + std::to_string(j));
          if (!t.empty()) s += (s.empty() ? "" : "*") + t;
        }
        if (eps) s += (s.empty() ? "x" : "*x");
        l.text = s.empty() ? "1" : s;
        out.push_back(std::move(l));
      }
    }
  }
  return out;
}

std::vector<BasisLabel> labels_a0(const std::string& head, int rank, int bound) {
  // head is A0 (optional Grassmann tail word) or Abar0/Jbar0 (single tail letter)
  bool bar_family = head != "A0";
  std::vector<BasisLabel> out;
  std::vector<ExtWord> words;
  enumerate_words(rank, bound, words);
  for (ExtWord w : words) {
    int len = ext_word_len(w);
    for (int m = 0; 2 * m <= len; ++m) {
      int tail = len - 2 * m;
      // the ordering constraint forces the pair letters to be the least 2m
      // letters of the word; bar-family labels allow at most one tail letter
      if (bar_family && tail > 1) continue;
      for (int n = 0;; ++n) {
        int zdeg = n + m;
        if (zdeg + len > bound) break;
        if (n + m + tail == 0) continue;  // empty label
        BasisLabel l;
        l.algebra = head + ":" + std::to_string(rank);
        l.npow = n;
        l.mpow = m;
        l.word = w;
        l.deg.axes["z"] = zdeg;
        l.deg.axes["E"] = len;
        std::string s;
        if (n) s += "z^" + std::to_string(n);
        // pair letters are the least 2m letters of w
        ExtWord rest = w;
        std::vector<int> letters;
        for (int i = 0; i < 64 && rest; ++i)
          if (rest & (ExtWord{1} << i)) {
            letters.push_back(i + 1);
            rest &= ~(ExtWord{1} << i);
          }
        for (int p = 0; p < m; ++p) {
          s += (s.empty() ? "" : "*") + std::string("(z,e") + std::to_string(letters[2 * p]) +
               ",e" + std::to_string(letters[2 * p + 1]) + ")";
        }
        if (tail) {
          std::string t;
          for (std::size_t i = 2 * m; i < letters.size(); ++i)
            t += (t.empty() ? "e" : "*e") + std::to_string(letters[i]);
          s += (s.empty() ? "" : "*") + t;
        }
        l.text = s.empty() ? "1" : s;
        out.push_back(std::move(l));
      }
    }
  }
  return out;
}

std::vector<BasisLabel> labels_g11(int rank, int bound) {
  std::vector<BasisLabel> out;
  for (const auto& u : labels_free_on_x(bound)) {
    int n = u.deg.at("x");
    if (n > rank || n > bound) continue;
    // all increasing words of length n over e1..e_rank
    for (ExtWord w = 0; w < (ExtWord{1} << rank); ++w) {
      if (ext_word_len(w) != n) continue;
      BasisLabel l;
      l.algebra = "G11:" + std::to_string(rank);
      l.I = u.I;
      l.eps = u.eps;
      l.word = w;
      l.deg.axes["n"] = n;
      l.text = "(" + u.text + ")@" + ext_word_text(w);
      out.push_back(std::move(l));
    }
  }
  return out;
}

}  // namespace

std::vector<BasisLabel> basis_enumerate(const std::string& algebra_id, int bound) {
  if (bound < 0) fail(Errc::InvalidParameter, "degree bound must be non-negative");
  IdParts p = split_id(algebra_id);
  if (p.head == "free-on-x" || p.head == "free11") return labels_free_on_x(bound);
  if (p.head == "F0" || p.head == "F1" || p.head == "JF0") return labels_f_series(p.head, bound);
  if (p.head == "Ft") return labels_ft(bound);
  if (p.head == "FZx" || p.head == "JZx") {
    if (p.args.size() != 1) fail(Errc::UnknownAlgebra, p.head + " expects :k");
    return labels_fzx(p.head, p.args[0], bound);
  }
  if (p.head == "A0" || p.head == "Abar0" || p.head == "Jbar0") {
    if (p.args.size() != 1) fail(Errc::UnknownAlgebra, p.head + " expects :m");
    return labels_a0(p.head, p.args[0], bound);
  }
  if (p.head == "G11") {
    if (p.args.size() != 1) fail(Errc::UnknownAlgebra, "G11 expects :m");
    return labels_g11(p.args[0], bound);
  }
  fail(Errc::UnknownAlgebra, "no basis enumeration for '" + algebra_id + "'");
}

int dim_count(const std::string& algebra_id, const MultiDeg& deg) {
  int count = 0;
  for (const auto& l : basis_enumerate(algebra_id, deg.total()))
    if (l.deg == deg) ++count;
  return count;
}

DimTable dim_table(const std::string& algebra_id, int bound) {
  DimTable t;
  for (const auto& l : basis_enumerate(algebra_id, bound)) ++t[l.deg];
  return t;
}

std::string dim_table_text(const std::string& algebra_id, const DimTable& t) {
  std::string s = "# dim table: " + algebra_id + "\n";
  for (const auto& [deg, count] : t) s += deg.text() + " : " + std::to_string(count) + "\n";
  return s;
}

NamedAlgebra realization_for(const std::string& algebra_id) {
  IdParts p = split_id(algebra_id);
  if (p.head == "free-on-x") return make_named("free11");
  return make_named(algebra_id);
}

namespace {

AnyElem realize_vt_mono(const PolyElement& poly, int eps) {
  return eps ? VtElement::odd(poly) : VtElement::even(poly);
}

PolyElement t_monomial(const std::vector<int>& I) {
  // (x^2 R^k) -> 2^k t_k
  Monomial m;
  Rational c = 1;
  for (std::size_t k = 0; k < I.size(); ++k) {
    if (!I[k]) continue;
    m = m.times(Monomial::var(VarId{"t", static_cast<int>(k)}, I[k]));
    c *= rat_pow(Rational(2), static_cast<unsigned>(k) * static_cast<unsigned>(I[k]));
  }
  return PolyElement::monomial(m, c);
}

}  // namespace

AnyElem realize_label(const NamedAlgebra& named, const BasisLabel& label) {
  IdParts p = split_id(label.algebra);
  if (p.head == "free-on-x") {
    return realize_vt_mono(t_monomial(label.I), label.eps);
  }
  if (p.head == "F0" || p.head == "F1" || p.head == "JF0") {
    // z^n ((z,x,x))^k with (z,x,x) = 2s (twisted) or s/2 (Jordan)
    Rational unit = p.head == "JF0" ? Rational(1, 2) : Rational(2);
    Monomial m = Monomial::var(VarId{"z", -1}, label.npow).times(Monomial::var(VarId{"s", -1}, label.kpow));
    PolyElement poly = PolyElement::monomial(m, rat_pow(unit, label.kpow));
    return realize_vt_mono(poly, label.eps);
  }
  if (p.head == "Ft") {
    Monomial m = Monomial::var(VarId{"t", -1}, label.mpow)
                     .times(Monomial::var(VarId{"z", -1}, label.npow))
                     .times(Monomial::var(VarId{"s", -1}, label.kpow));
    PolyElement poly = PolyElement::monomial(m, rat_pow(Rational(2), label.kpow));
    return realize_vt_mono(poly, label.eps);
  }
  if (p.head == "FZx" || p.head == "JZx") {
    // (z R^l) realizes as 2^l z_l in the twisted algebra and (1/2)^l z_l in
    // the Jordan one (R_{x,x} acts as 2D resp. D/2 on the even part)
    Rational step = p.head == "JZx" ? Rational(1, 2) : Rational(2);
    PolyElement poly = t_monomial(label.I);
    for (const auto& [j, J] : label.J) {
      Monomial m;
      Rational c = 1;
      for (std::size_t l = 0; l < J.size(); ++l) {
        if (!J[l]) continue;
        m = m.times(Monomial::var(VarId{"z" + std::to_string(j), static_cast<int>(l)}, J[l]));
        c *= rat_pow(step, static_cast<unsigned>(l) * static_cast<unsigned>(J[l]));
      }
      poly = poly * PolyElement::monomial(m, c);
    }
    return realize_vt_mono(poly, label.eps);
  }
  if (p.head == "A0" || p.head == "Abar0" || p.head == "Jbar0") {
    Rational pairval = p.head == "Jbar0" ? Rational(1, 2) : Rational(2);
    Monomial m = Monomial::var(VarId{"z", -1}, label.npow).times(Monomial::var(VarId{"s", -1}, label.mpow));
    PolyElement poly = PolyElement::monomial(m, rat_pow(pairval, label.mpow));
    int tail = ext_word_len(label.word) - 2 * label.mpow;
    EnvVtElement e;
    e.terms.emplace(label.word, tail % 2 ? VtElement::odd(poly) : VtElement::even(poly));
    return e;
  }
  if (p.head == "G11") {
    PolyElement poly = t_monomial(label.I);
    EnvVtElement e;
    e.terms.emplace(label.word, label.eps ? VtElement::odd(poly) : VtElement::even(poly));
    return e;
  }
  fail(Errc::UnknownAlgebra, "no realization for '" + label.algebra + "' (" + named.id + ")");
}

const SpanRanker::State& SpanRanker::compute(const std::vector<int>& counts) {
  auto it = memo_.find(counts);
  if (it != memo_.end()) return it->second;

  const Algebra& alg = *named_.algebra;
  State st;
  int total = 0;
  for (int c : counts) total += c;
  if (total == 1) {
    for (std::size_t g = 0; g < counts.size(); ++g) {
      if (counts[g] == 1) {
        const AnyElem& e = named_.generators[g].second;
        if (!alg.is_zero(e)) {
          st.reps.push_back(e);
          st.coords.push_back(alg.coords(e));
        }
      }
    }
  } else if (total > 1) {
    Echelon<std::string> ech;
    // all ordered splits counts = c1 + c2 with both parts nonzero
    std::vector<int> c1(counts.size(), 0);
    while (true) {
      int s1 = 0;
      for (int v : c1) s1 += v;
      if (s1 != 0 && s1 != total) {
        std::vector<int> c2(counts.size());
        for (std::size_t i = 0; i < counts.size(); ++i) c2[i] = counts[i] - c1[i];
        const State& L = compute(c1);
        const State& R = compute(c2);
        for (const auto& u : L.reps) {
          for (const auto& v : R.reps) {
            AnyElem prod = alg.mul(u, v);
            if (alg.is_zero(prod)) continue;
            auto coord = alg.coords(prod);
            if (ech.insert(coord)) {
              st.reps.push_back(prod);
              st.coords.push_back(std::move(coord));
            }
          }
        }
      }
      // odometer over c1 <= counts
      std::size_t i = 0;
      for (; i < counts.size(); ++i) {
        if (++c1[i] <= counts[i]) break;
        c1[i] = 0;
      }
      if (i == counts.size()) break;
    }
  }
  auto [jt, ok] = memo_.emplace(counts, std::move(st));
  return jt->second;
}

int SpanRanker::rank(const std::vector<int>& counts) {
  return static_cast<int>(compute(counts).reps.size());
}

const std::vector<AnyElem>& SpanRanker::representatives(const std::vector<int>& counts) {
  return compute(counts).reps;
}

AnyElem normal_form(const NamedAlgebra& named, const TermPoly& term) {
  const TermCtxPtr& ctx = term.ctx();
  std::vector<AnyElem> subst;
  for (int v = 0; v < ctx->size(); ++v) {
    const std::string& name = ctx->var_name(v);
    if (!named.has_generator(name))
      fail(Errc::UndeclaredVariable,
           "variable '" + name + "' is not a generator of " + named.id);
    subst.push_back(named.generator(name));
  }
  return evaluate(*named.algebra, term, subst);
}

}  // namespace nalab
