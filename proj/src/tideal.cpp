#include "nalab/tideal.hpp"

#include <bit>
#include <functional>
#include <unordered_set>

#include "nalab/engine.hpp"
#include "nalab/error.hpp"
#include "nalab/linalg.hpp"

namespace nalab {

Integer multilinear_monomial_count(int n) {
  // n! * Catalan(n-1)
  if (n < 1) return 0;
  Integer cat = factorial(2 * (n - 1));
  cat /= factorial(n - 1);
  cat /= factorial(n);
  return factorial(n) * cat;
}

namespace {

constexpr int kMaxDegree = 6;

/// Shared state for one (defining set, degree) computation.
struct TIdeal {
  int n;
  int hole;  // variable id of the context hole
  TermCtxPtr ctx;
  std::map<std::string, int> col_ids;
  std::vector<std::string> col_names;
  std::map<unsigned, std::vector<TermRef>> mono_cache;  // mask over n+1 vars

  explicit TIdeal(int degree) : n(degree), hole(degree) {
    auto c = std::make_shared<TermContext>();
    for (int j = 1; j <= n; ++j) c->declare("x" + std::to_string(j), 0);
    c->declare("HOLE", 0);
    ctx = c;
  }

  int col(const TermRef& t) {
    std::string key = term_text(t, *ctx);
    auto it = col_ids.find(key);
    if (it != col_ids.end()) return it->second;
    int id = static_cast<int>(col_names.size());
    col_ids.emplace(key, id);
    col_names.push_back(key);
    return id;
  }

  const std::vector<TermRef>& monomials(unsigned mask) {
    auto it = mono_cache.find(mask);
    if (it != mono_cache.end()) return it->second;
    std::vector<TermRef> out;
    if (std::popcount(mask) == 1) {
      out.push_back(term_leaf(std::countr_zero(mask)));
    } else {
      // split by the root: left factor over A, right factor over mask\A
      for (unsigned sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
        unsigned rest = mask & ~sub;
        if (!rest) continue;
        for (const auto& l : monomials(sub))
          for (const auto& r : monomials(rest)) out.push_back(term_node(l, r));
      }
    }
    auto [jt, ok] = mono_cache.emplace(mask, std::move(out));
    return jt->second;
  }

  // expand a multilinear TermPoly over ctx into a sparse column vector
  std::map<int, Rational> expand(const TermPoly& f) {
    std::map<int, Rational> row;
    for (const auto& [t, c] : f.terms()) {
      int id = col(t);
      auto [it, ins] = row.try_emplace(id, c);
      if (!ins) {
        it->second += c;
        if (it->second == 0) row.erase(it);
      }
    }
    return row;
  }
};

TermRef graft(const TermRef& t, const std::vector<TermRef>& leaf_image) {
  if (t->var >= 0) {
    const TermRef& img = leaf_image[t->var];
    return img ? img : t;
  }
  return term_node(graft(t->l, leaf_image), graft(t->r, leaf_image));
}

std::string row_key(const std::map<int, Rational>& row) {
  std::string s;
  for (const auto& [c, v] : row) {
    s += std::to_string(c);
    s += ':';
    s += rat_text(v);
    s += ';';
  }
  return s;
}

/// Streams every generating row of the multilinear T-ideal component:
/// substitution of multilinear monomials on disjoint blocks into each
/// (linearized) defining identity, embedded at every position of a context
/// monomial on the remaining variables; plus hypothesis rows [x_j, w].
struct RowGenerator {
  TIdeal& T;
  const std::vector<const IdentityPreset*>& defining;
  const std::vector<int>& central_vars;

  // fn(row, desc_fn, poly_fn) -> bool (false stops generation)
  using Sink = std::function<bool(std::map<int, Rational>&, const std::string&, const TermPoly&)>;

  bool emit_embedded(const TermPoly& u, const std::string& desc, unsigned context_mask,
                     const Sink& sink) {
    unsigned hole_bit = 1u << T.hole;
    for (const auto& w : T.monomials(context_mask | hole_bit)) {
      TermPoly row_poly(T.ctx);
      std::vector<TermRef> image(T.hole + 1);
      for (const auto& [tu, cu] : u.terms()) {
        image[T.hole] = tu;
        row_poly.add_term(graft(w, image), cu);
      }
      auto row = T.expand(row_poly);
      if (row.empty()) continue;
      std::string d = desc + " in " + term_text(w, *T.ctx);
      if (!sink(row, d, row_poly)) return false;
    }
    return true;
  }

  bool generate(const Sink& sink) {
    const unsigned all = (1u << T.n) - 1;
    // hypothesis rows for central candidate variables
    for (int j : central_vars) {
      TermPoly xj = TermPoly::variable(T.ctx, j);
      for (unsigned b = 1; b <= all; ++b) {
        if ((b & all) != b || (b & (1u << j))) continue;
        for (const auto& m : T.monomials(b)) {
          TermPoly w(T.ctx);
          w.add_term(m, 1);
          TermPoly u = xj * w - w * xj;
          unsigned context = all & ~b & ~(1u << j);
          std::string desc = "central(x" + std::to_string(j + 1) + ") comm with " +
                             term_text(m, *T.ctx);
          if (!emit_embedded(u, desc, context, sink)) return false;
        }
      }
    }

    for (const IdentityPreset* g : defining) {
      for (const auto& v : g->vars)
        if (v.central && central_vars.empty())
          fail(Errc::InvalidParameter,
               "defining identity '" + g->name + "' needs central hypothesis variables");
      BuiltIdentity built = build_identity(*g, std::vector<int>(g->vars.size(), 0),
                                           PresetForm::Linearized);
      // slots = variables that actually occur in the linearized identity
      std::vector<int> slots;
      for (int v = 0; v < built.f.ctx()->size(); ++v)
        if (built.f.degree_in(v) > 0) slots.push_back(v);
      int d = static_cast<int>(slots.size());
      if (d > T.n) continue;

      // assignment of each candidate variable to a slot (1..d) or context (0)
      std::vector<int> assign(T.n, 0);
      while (true) {
        // check every slot receives a nonempty block
        std::vector<unsigned> block(d, 0);
        unsigned context = 0;
        for (int v = 0; v < T.n; ++v) {
          if (assign[v] == 0) context |= 1u << v;
          else block[assign[v] - 1] |= 1u << v;
        }
        bool ok = true;
        for (int k = 0; k < d && ok; ++k) {
          if (!block[k]) ok = false;
          // central slots accept only hypothesis variables as bare leaves
          if (ok && built.info[slots[k]].central) {
            bool singleton = std::popcount(block[k]) == 1;
            bool allowed = false;
            if (singleton) {
              int j = std::countr_zero(block[k]);
              for (int cv : central_vars) allowed = allowed || cv == j;
            }
            if (!allowed) ok = false;
          }
        }
        if (ok) {
          // product over slot monomial choices
          std::vector<std::size_t> pick(d, 0);
          while (true) {
            std::vector<TermRef> image(T.hole + 1);
            std::string desc = g->name + "(";
            for (int k = 0; k < d; ++k) {
              const auto& ms = T.monomials(block[k]);
              image[slots[k]] = ms[pick[k]];
              if (k) desc += ",";
              desc += term_text(ms[pick[k]], *T.ctx);
            }
            desc += ")";
            TermPoly u(T.ctx);
            for (const auto& [t, c] : built.f.terms()) u.add_term(graft(t, image), c);
            if (!emit_embedded(u, desc, context, sink)) return false;
            int k = 0;
            for (; k < d; ++k) {
              if (++pick[k] < T.monomials(block[k]).size()) break;
              pick[k] = 0;
            }
            if (k == d) break;
          }
        }
        int v = 0;
        for (; v < T.n; ++v) {
          if (++assign[v] <= d) break;
          assign[v] = 0;
        }
        if (v == T.n) break;
      }
    }
    return true;
  }
};

void check_degree(int n, bool allow6) {
  if (n < 1) fail(Errc::InvalidParameter, "degree must be positive");
  if (n > kMaxDegree || (n == kMaxDegree && !allow6))
    fail(Errc::CapExceeded, "consequence degree " + std::to_string(n) +
                                " exceeds the configured cap");
}

std::map<int, Rational> candidate_vector(TIdeal& T, const TermPoly& candidate) {
  if (!candidate.ctx() || candidate.ctx()->size() < T.n)
    fail(Errc::InvalidParameter, "candidate does not declare the expected variables");
  for (const auto& [t, c] : candidate.terms()) {
    std::vector<int> deg;
    term_multideg(t, deg);
    deg.resize(candidate.ctx()->size(), 0);
    for (int v = 0; v < T.n; ++v)
      if (deg[v] != 1)
        fail(Errc::InvalidParameter, "candidate is not multilinear of the given degree");
    for (std::size_t v = T.n; v < deg.size(); ++v)
      if (deg[v])
        fail(Errc::InvalidParameter, "candidate uses variables beyond the given degree");
  }
  // re-expand against the canonical context (indices agree by construction)
  TermPoly canon(T.ctx);
  for (const auto& [t, c] : candidate.terms()) canon.add_term(t, c);
  return T.expand(canon);
}

}  // namespace

int MultilinearMatrix::rank() const {
  Echelon<int> ech;
  for (const auto& r : rows) ech.insert(r);
  return ech.rank();
}

int MultilinearMatrix::rank_with_order(const std::vector<std::size_t>& order) const {
  Echelon<int> ech;
  for (std::size_t i : order) ech.insert(rows[i]);
  return ech.rank();
}

MultilinearMatrix tideal_multilinear_span(const std::vector<const IdentityPreset*>& defining,
                                          int n, bool allow_degree6,
                                          const std::vector<int>& central_vars) {
  check_degree(n, allow_degree6);
  TIdeal T(n);
  MultilinearMatrix M;
  M.degree = n;
  std::unordered_set<std::string> seen;
  RowGenerator gen{T, defining, central_vars};
  gen.generate([&](std::map<int, Rational>& row, const std::string& desc, const TermPoly&) {
    if (seen.insert(row_key(row)).second) {
      M.rows.push_back(row);
      M.row_descs.push_back(desc);
    }
    return true;
  });
  M.columns = T.col_names;
  return M;
}

ConsequenceCertificate is_consequence(const TermPoly& candidate,
                                      const std::vector<const IdentityPreset*>& defining, int n,
                                      bool allow_degree6, const std::vector<int>& central_vars) {
  check_degree(n, allow_degree6);
  TIdeal T(n);
  ConsequenceCertificate cert;
  cert.degree = n;

  auto cand = candidate_vector(T, candidate);
  {
    TermPoly canon(T.ctx);
    for (const auto& [t, c] : candidate.terms()) canon.add_term(t, c);
    cert.candidate = canon.text();
  }

  Echelon<int> ech(/*track=*/true);
  std::unordered_set<std::string> seen;
  struct Source {
    std::string desc;
    TermPoly poly;
    std::map<int, Rational> row;
  };
  std::vector<Source> sources;
  std::optional<Echelon<int>::Combo> member;

  auto try_membership = [&]() {
    member = ech.membership(cand);
    return member.has_value();
  };

  if (cand.empty()) {
    // expands to zero: trivially a member with the empty combination
    cert.verdict = "MEMBER";
    cert.span_rank = 0;
    return cert;
  }

  long long since_check = 0;
  RowGenerator gen{T, defining, central_vars};
  gen.generate([&](std::map<int, Rational>& row, const std::string& desc, const TermPoly& poly) {
    if (!seen.insert(row_key(row)).second) return true;
    int id = static_cast<int>(sources.size());
    sources.push_back({desc, poly, row});
    ech.insert(row, id);
    if (++since_check >= 512) {
      since_check = 0;
      if (try_membership()) return false;
    }
    return true;
  });
  cert.rows_generated = static_cast<long long>(sources.size());
  cert.span_rank = ech.rank();

  if (!member) try_membership();
  if (member) {
    cert.verdict = "MEMBER";
    for (const auto& [src, coef] : *member) {
      ConsequenceCertificate::Part part;
      part.description = sources[src].desc;
      part.row = sources[src].poly.text();
      part.coeff = coef;
      cert.parts.push_back(std::move(part));
    }
    return cert;
  }

  cert.verdict = "NOT_MEMBER";
  auto residual = cand;
  ech.reduce(residual);
  auto phi = ech.separating_functional(residual);
  for (const auto& [c, v] : phi) cert.functional.emplace(T.col_names[c], v);
  return cert;
}

bool verify_member_certificate(const ConsequenceCertificate& cert, const TermPoly& candidate) {
  if (cert.verdict != "MEMBER") return false;
  TIdeal T(cert.degree);
  auto cand = candidate_vector(T, candidate);
  std::map<int, Rational> acc;
  for (const auto& part : cert.parts) {
    TermPoly row = parse_term(part.row, T.ctx);
    for (auto& [col, v] : T.expand(row)) {
      auto [it, ins] = acc.try_emplace(col, 0);
      it->second += v * part.coeff;
      if (it->second == 0) acc.erase(it);
    }
  }
  return acc == cand;
}

bool verify_not_member_certificate(const ConsequenceCertificate& cert, const TermPoly& candidate,
                                   const std::vector<const IdentityPreset*>& defining,
                                   bool allow_degree6, const std::vector<int>& central_vars) {
  if (cert.verdict != "NOT_MEMBER") return false;
  TIdeal T(cert.degree);
  auto cand = candidate_vector(T, candidate);
  // functional keyed by column text
  auto apply = [&](const std::map<int, Rational>& row) {
    Rational acc = 0;
    for (const auto& [c, v] : row) {
      auto it = cert.functional.find(T.col_names[c]);
      if (it != cert.functional.end()) acc += v * it->second;
    }
    return acc;
  };
  if (apply(cand) == 0) return false;
  bool ok = true;
  RowGenerator gen{T, defining, central_vars};
  gen.generate([&](std::map<int, Rational>& row, const std::string&, const TermPoly&) {
    if (apply(row) != 0) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

}  // namespace nalab
