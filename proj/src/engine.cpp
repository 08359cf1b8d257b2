#include "nalab/engine.hpp"

#include <random>

#include "nalab/error.hpp"
#include "nalab/linalg.hpp"

namespace nalab {

namespace {

AnyElem eval_tree_plain(const Algebra& alg, const TermRef& t,
                        const std::vector<const AnyElem*>& subst) {
  if (t->var >= 0) return *subst[t->var];
  return alg.mul(eval_tree_plain(alg, t->l, subst), eval_tree_plain(alg, t->r, subst));
}

AnyElem eval_tree_memo(const Algebra& alg, const TermRef& t,
                       const std::vector<const AnyElem*>& subst,
                       std::map<TermRef, AnyElem, TermLess>& memo) {
  if (t->var >= 0) return *subst[t->var];
  auto it = memo.find(t);
  if (it != memo.end()) return it->second;
  AnyElem l = eval_tree_memo(alg, t->l, subst, memo);
  AnyElem r = eval_tree_memo(alg, t->r, subst, memo);
  AnyElem v = alg.mul(l, r);
  memo.emplace(t, v);
  return v;
}

AnyElem evaluate_refs(const Algebra& alg, const TermPoly& f,
                      const std::vector<const AnyElem*>& subst) {
  AnyElem acc = alg.zero();
  // the structural memo only pays off on large polynomials with shared shapes
  if (f.terms().size() > 16) {
    std::map<TermRef, AnyElem, TermLess> memo;
    for (const auto& [t, c] : f.terms())
      alg.add_scaled(acc, c, eval_tree_memo(alg, t, subst, memo));
  } else {
    for (const auto& [t, c] : f.terms())
      alg.add_scaled(acc, c, eval_tree_plain(alg, t, subst));
  }
  return acc;
}

}  // namespace

AnyElem evaluate(const Algebra& alg, const TermPoly& f, const std::vector<AnyElem>& subst) {
  if (f.ctx() && static_cast<int>(subst.size()) < f.ctx()->size())
    fail(Errc::InvalidParameter, "substitution does not cover the term context");
  if (alg.graded_super() && f.ctx()) {
    for (int v = 0; v < f.ctx()->size(); ++v) {
      if (f.degree_in(v) == 0) continue;
      Parity want = f.ctx()->parity(v) ? Parity::Odd : Parity::Even;
      Parity got = alg.parity(subst[v]);
      if (!alg.is_zero(subst[v]) && got != want)
        fail(Errc::ParityMismatch,
             "variable " + f.ctx()->var_name(v) + " bound to an element of the wrong parity");
    }
  }
  std::vector<const AnyElem*> refs;
  refs.reserve(subst.size());
  for (const auto& e : subst) refs.push_back(&e);
  return evaluate_refs(alg, f, refs);
}

CenterKind center_kind(const std::string& name) {
  if (name == "K") return CenterKind::K;
  if (name == "V") return CenterKind::V;
  if (name == "N") return CenterKind::N;
  if (name == "Z") return CenterKind::Z;
  if (name == "Z_alt" || name == "Z_ALT") return CenterKind::Z_ALT;
  fail(Errc::InvalidParameter, "unknown center '" + name + "'");
}

bool center_membership(const Algebra& alg, const AnyElem& elem, CenterKind which,
                       const std::vector<AnyElem>& witnesses) {
  auto assoc = [&](const AnyElem& a, const AnyElem& b, const AnyElem& c) {
    return alg.sub(alg.mul(alg.mul(a, b), c), alg.mul(a, alg.mul(b, c)));
  };
  switch (which) {
    case CenterKind::K:
      for (const auto& w : witnesses)
        if (!alg.is_zero(alg.sub(alg.mul(elem, w), alg.mul(w, elem)))) return false;
      return true;
    case CenterKind::V:
      for (const auto& w1 : witnesses)
        for (const auto& w2 : witnesses)
          if (!alg.is_zero(alg.add(assoc(w1, w2, elem), assoc(w2, w1, elem)))) return false;
      return true;
    case CenterKind::N:
      for (const auto& w1 : witnesses)
        for (const auto& w2 : witnesses) {
          if (!alg.is_zero(assoc(w1, w2, elem))) return false;
          if (!alg.is_zero(assoc(w1, elem, w2))) return false;
          if (!alg.is_zero(assoc(elem, w1, w2))) return false;
        }
      return true;
    case CenterKind::Z:
      return center_membership(alg, elem, CenterKind::K, witnesses) &&
             center_membership(alg, elem, CenterKind::N, witnesses);
    case CenterKind::Z_ALT:
      for (const auto& w1 : witnesses)
        for (const auto& w2 : witnesses) {
          int sign = 1;
          if (alg.graded_super()) {
            bool o1 = alg.parity(w1) == Parity::Odd;
            bool o2 = alg.parity(w2) == Parity::Odd;
            sign = (o1 && o2) ? -1 : 1;
          }
          AnyElem lhs = alg.add(assoc(elem, w1, w2), alg.scale(Rational(sign), assoc(elem, w2, w1)));
          if (!alg.is_zero(lhs)) return false;
        }
      return true;
  }
  return false;
}

std::vector<SpanningElement> spanning_set(const Algebra& alg,
                                          const std::vector<AnyElem>& generators, int cap) {
  if (generators.empty()) return alg.basis(cap);
  std::vector<SpanningElement> out;
  Echelon<std::string> ech;
  std::vector<std::vector<AnyElem>> reps(static_cast<std::size_t>(cap) + 1);
  for (const auto& g : generators) {
    if (alg.is_zero(g)) continue;
    if (ech.insert(alg.coords(g))) {
      reps[1].push_back(g);
      out.push_back({g, alg.parity(g), 1, alg.show(g)});
    }
  }
  for (int d = 2; d <= cap; ++d) {
    for (int a = 1; a < d; ++a) {
      for (const auto& u : reps[a]) {
        for (const auto& v : reps[d - a]) {
          AnyElem p = alg.mul(u, v);
          if (alg.is_zero(p)) continue;
          if (ech.insert(alg.coords(p))) {
            reps[d].push_back(p);
            out.push_back({p, alg.parity(p), d, alg.show(p)});
          }
        }
      }
    }
  }
  return out;
}

BuiltIdentity build_identity(const IdentityPreset& preset, const std::vector<int>& parities,
                             PresetForm form) {
  BuiltIdentity b;
  b.f = preset.build(parities);
  b.info = preset.vars;
  for (std::size_t i = 0; i < b.info.size(); ++i)
    if (b.info[i].parity < 0) b.info[i].parity = parities[i];
  if (form == PresetForm::Linearized) {
    while (true) {
      int var = -1;
      for (int v = 0; v < b.f.ctx()->size(); ++v)
        if (b.f.degree_in(v) > 1) {
          var = v;
          break;
        }
      if (var < 0) break;
      int n = b.f.degree_in(var);
      PresetVar base = b.info[var];
      b.f = full_linearize(b.f, var, LinMode::Plain);
      for (int j = 1; j <= n; ++j)
        b.info.push_back({base.name + std::to_string(j), base.parity, base.central});
    }
  }
  return b;
}

namespace {

struct TuplePruner {
  // distinct per-term multidegree patterns over the active variables
  std::vector<std::vector<int>> patterns;

  explicit TuplePruner(const TermPoly& f, int nvars) {
    for (const auto& [t, c] : f.terms()) {
      std::vector<int> d;
      term_multideg(t, d);
      d.resize(nvars, 0);
      bool seen = false;
      for (const auto& p : patterns)
        if (p == d) {
          seen = true;
          break;
        }
      if (!seen) patterns.push_back(d);
    }
  }

  // true when every term is annihilated by a repeated exterior generator
  bool trivially_zero(const std::vector<std::optional<ExtWord>>& words) const {
    for (const auto& pat : patterns) {
      bool zero = false;
      ExtWord acc = 0;
      for (std::size_t v = 0; v < pat.size(); ++v) {
        if (!pat[v]) continue;
        if (!words[v]) return false;  // combination element: cannot prune
        ExtWord w = *words[v];
        if (!w) continue;
        if (pat[v] >= 2 || (acc & w)) {
          zero = true;
          break;
        }
        acc |= w;
      }
      if (!zero) return false;
    }
    return true;
  }
};

}  // namespace

SubstReport verify_by_substitution(const Algebra& alg, const IdentityPreset& preset,
                                   PresetForm form, const std::vector<SpanningElement>& span,
                                   SubstMode mode, const RandomSpec& rnd) {
  SubstReport rep;
  rep.identity = preset.name;
  rep.algebra = alg.name();
  rep.form = form == PresetForm::Raw ? "raw" : "linearized";
  rep.mode = mode == SubstMode::Exhaustive ? "exhaustive" : "random";
  if (mode == SubstMode::Random) rep.seed = rnd.seed;

  // parity assignments for free-parity variables
  std::vector<std::vector<int>> assignments;
  {
    std::vector<int> cur(preset.vars.size(), 0);
    if (alg.graded_super()) {
      std::vector<int> free_idx;
      for (std::size_t i = 0; i < preset.vars.size(); ++i)
        if (preset.vars[i].parity < 0) free_idx.push_back(static_cast<int>(i));
      for (unsigned mask = 0; mask < (1u << free_idx.size()); ++mask) {
        std::vector<int> a(preset.vars.size(), 0);
        for (std::size_t i = 0; i < preset.vars.size(); ++i)
          if (preset.vars[i].parity >= 0) a[i] = preset.vars[i].parity;
        for (std::size_t j = 0; j < free_idx.size(); ++j)
          a[free_idx[j]] = (mask >> j) & 1u;
        assignments.push_back(a);
      }
    } else {
      for (std::size_t i = 0; i < preset.vars.size(); ++i)
        if (preset.vars[i].parity > 0) cur[i] = preset.vars[i].parity;
      assignments.push_back(cur);
    }
  }

  // centrality cache over spanning elements
  std::vector<int> central_flag(span.size(), -1);
  auto is_central = [&](std::size_t idx) {
    if (central_flag[idx] < 0) {
      std::vector<AnyElem> wit;
      wit.reserve(span.size());
      for (const auto& s : span) wit.push_back(s.value);
      central_flag[idx] =
          center_membership(alg, span[idx].value, CenterKind::K, wit) ? 1 : 0;
    }
    return central_flag[idx] == 1;
  };

  std::mt19937_64 rng(rnd.seed);

  for (const auto& parities : assignments) {
    BuiltIdentity built = build_identity(preset, parities, form);
    const int nvars = built.f.ctx()->size();
    std::vector<int> active;
    for (int v = 0; v < nvars; ++v)
      if (built.f.degree_in(v) > 0) active.push_back(v);

    // candidate indices into span, per active variable
    std::vector<std::vector<std::size_t>> cand(active.size());
    for (std::size_t k = 0; k < active.size(); ++k) {
      const PresetVar& info = built.info[active[k]];
      for (std::size_t s = 0; s < span.size(); ++s) {
        if (alg.graded_super()) {
          Parity want = info.parity ? Parity::Odd : Parity::Even;
          if (span[s].parity != want) continue;
        }
        if (info.central && !is_central(s)) continue;
        cand[k].push_back(s);
      }
      if (cand[k].empty()) cand[k].clear();
    }
    bool feasible = true;
    for (const auto& c : cand)
      if (c.empty()) feasible = false;
    if (!feasible) continue;

    TuplePruner pruner(built.f, nvars);
    const AnyElem zero_elem = alg.zero();
    std::vector<const AnyElem*> subst(nvars, &zero_elem);
    std::vector<std::optional<ExtWord>> words(nvars, ExtWord{0});
    // single-word data of spanning elements, computed once
    std::vector<std::optional<ExtWord>> span_words(span.size());
    for (std::size_t s = 0; s < span.size(); ++s) span_words[s] = alg.single_word(span[s].value);

    auto run_tuple = [&]() -> bool {
      ++rep.checked;
      if (pruner.trivially_zero(words)) {
        ++rep.skipped_trivial;
        return true;
      }
      AnyElem val = evaluate_refs(alg, built.f, subst);
      if (alg.is_zero(val)) return true;
      rep.pass = false;
      for (int v : active)
        rep.counterexample.push_back({built.f.ctx()->var_name(v), alg.show(*subst[v])});
      rep.value = alg.show(val);
      return false;
    };

    if (mode == SubstMode::Exhaustive) {
      std::vector<std::size_t> odo(active.size(), 0);
      for (std::size_t k = 0; k < active.size(); ++k) {
        std::size_t pick = cand[k][0];
        subst[active[k]] = &span[pick].value;
        words[active[k]] = span_words[pick];
      }
      while (true) {
        if (!run_tuple()) return rep;
        std::size_t k = 0;
        for (; k < active.size(); ++k) {
          if (++odo[k] < cand[k].size()) break;
          odo[k] = 0;
          std::size_t pick = cand[k][0];
          subst[active[k]] = &span[pick].value;
          words[active[k]] = span_words[pick];
        }
        if (k == active.size()) break;
        std::size_t pick = cand[k][odo[k]];
        subst[active[k]] = &span[pick].value;
        words[active[k]] = span_words[pick];
      }
    } else {
      std::vector<AnyElem> combos(active.size(), alg.zero());
      for (int trial = 0; trial < rnd.count; ++trial) {
        for (std::size_t k = 0; k < active.size(); ++k) {
          AnyElem combo = alg.zero();
          for (int j = 0; j < rnd.support; ++j) {
            std::size_t pick = cand[k][rng() % cand[k].size()];
            long long c = static_cast<long long>(rng() % 4) - 2;
            if (c >= 0) ++c;  // skip zero
            combo = alg.add(combo, alg.scale(Rational(c), span[pick].value));
          }
          combos[k] = std::move(combo);
          subst[active[k]] = &combos[k];
          words[active[k]] = alg.single_word(combos[k]);
        }
        if (!run_tuple()) return rep;
      }
    }
  }
  return rep;
}

}  // namespace nalab
