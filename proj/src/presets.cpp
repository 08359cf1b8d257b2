#include "nalab/presets.hpp"

#include <map>

#include "nalab/error.hpp"

namespace nalab {

namespace {

TermCtxPtr ctx_for(const std::vector<PresetVar>& vars, const std::vector<int>& parities) {
  auto ctx = std::make_shared<TermContext>();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    int p = vars[i].parity >= 0 ? vars[i].parity : parities[i];
    ctx->declare(vars[i].name, p);
  }
  return ctx;
}

using Vars = std::vector<TermPoly>;

Vars make_vars(const TermCtxPtr& ctx, std::size_t n) {
  Vars vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back(TermPoly::variable(ctx, static_cast<int>(i)));
  return vs;
}

IdentityPreset make(const std::string& name, std::vector<PresetVar> vars,
                    std::function<TermPoly(const Vars&, const std::vector<int>&)> body,
                    bool parity_dependent = false) {
  IdentityPreset p;
  p.name = name;
  p.vars = vars;
  p.parity_dependent = parity_dependent;
  std::size_t n = vars.size();
  p.build = [vars, body, n](const std::vector<int>& parities) {
    TermCtxPtr ctx = ctx_for(vars, parities);
    return body(make_vars(ctx, n), parities);
  };
  return p;
}

std::map<std::string, IdentityPreset> build_registry() {
  std::map<std::string, IdentityPreset> reg;
  auto add = [&reg](IdentityPreset p) { reg.emplace(p.name, std::move(p)); };

  // right alternativity and its multilinear form
  add(make("right_alt", {{"x"}, {"y"}},
           [](const Vars& v, const std::vector<int>&) { return t_assoc(v[0], v[1], v[1]); }));
  // cyclic associator identity
  add(make("eq6", {{"x"}, {"y"}, {"z"}}, [](const Vars& v, const std::vector<int>&) {
    return t_assoc(v[0], v[1], v[2]) + t_assoc(v[1], v[2], v[0]) + t_assoc(v[2], v[0], v[1]);
  }));
  // commutators are central
  add(make("eq2", {{"x"}, {"y"}, {"z"}}, [](const Vars& v, const std::vector<int>&) {
    return t_comm(t_comm(v[0], v[1]), v[2]);
  }));
  add(make("comm", {{"x"}, {"y"}},
           [](const Vars& v, const std::vector<int>&) { return t_comm(v[0], v[1]); }));
  add(make("jordan_id", {{"x"}, {"y"}}, [](const Vars& v, const std::vector<int>&) {
    return t_assoc(v[0] * v[0], v[1], v[0]);
  }));
  add(make("flex", {{"x"}, {"y"}},
           [](const Vars& v, const std::vector<int>&) { return t_assoc(v[0], v[1], v[0]); }));

  // right-alternative consequences
  add(make("eq3", {{"a"}, {"b"}, {"x"}, {"y"}}, [](const Vars& v, const std::vector<int>&) {
    return t_assoc(v[0] * v[1], v[2], v[3]) + t_assoc(v[0], v[1], t_comm(v[2], v[3])) -
           v[0] * t_assoc(v[1], v[2], v[3]) - t_assoc(v[0], v[2], v[3]) * v[1];
  }));
  add(make("eq4", {{"a"}, {"x"}, {"y"}}, [](const Vars& v, const std::vector<int>&) {
    return t_assoc(v[0], v[1], v[2]) * v[1] - t_assoc(v[0], v[1], v[1] * v[2]);
  }));
  // identities of every algebra
  add(make("eq4p", {{"x"}, {"y"}, {"z"}, {"t"}}, [](const Vars& v, const std::vector<int>&) {
    return t_assoc(v[0] * v[1], v[2], v[3]) - t_assoc(v[0], v[1] * v[2], v[3]) +
           t_assoc(v[0], v[1], v[2] * v[3]) - v[0] * t_assoc(v[1], v[2], v[3]) -
           t_assoc(v[0], v[1], v[2]) * v[3];
  }));
  add(make("eq4pp", {{"x"}, {"y"}, {"z"}}, [](const Vars& v, const std::vector<int>&) {
    return t_comm(v[0] * v[1], v[2]) - v[0] * t_comm(v[1], v[2]) - t_comm(v[0], v[2]) * v[1] -
           t_assoc(v[0], v[1], v[2]) + t_assoc(v[0], v[2], v[1]) - t_assoc(v[2], v[0], v[1]);
  }));

  // central-element identities; k is instantiated with certified central elements
  add(make("eq8", {{"k", -1, true}, {"x"}, {"y"}}, [](const Vars& v, const std::vector<int>&) {
    return t_assoc(v[0], v[1], v[2]) - t_assoc(v[1], v[0], v[2]).scaled(2);
  }));
  add(make("eq9", {{"k", -1, true}, {"x"}, {"y"}}, [](const Vars& v, const std::vector<int>&) {
    return t_comm(v[0] * v[1], v[2]) - v[0] * t_comm(v[1], v[2]) -
           t_assoc(v[0], v[1], v[2]).scaled(Rational(3, 2));
  }));
  add(make("eq10", {{"k", -1, true}, {"x"}, {"y"}, {"z"}},
           [](const Vars& v, const std::vector<int>&) {
             return t_assoc(v[1], v[2], v[3] * v[0]) - t_assoc(v[1], v[2], v[3]) * v[0] -
                    t_assoc(v[1], v[2], v[0]) * v[3];
           }));
  add(make("eq11", {{"k", -1, true}, {"a"}, {"x"}}, [](const Vars& v, const std::vector<int>&) {
    return t_assoc(v[0], v[1] * v[1], v[2]) - (t_assoc(v[0], v[1], v[2]) * v[1]).scaled(2);
  }));
  add(make("eq12", {{"k", -1, true}, {"x"}, {"y"}}, [](const Vars& v, const std::vector<int>&) {
    return t_assoc(v[0] * v[0], v[1], v[2]) - (t_assoc(v[0], v[1], v[2]) * v[0]).scaled(2);
  }));

  // 2(x,y,z)^+ = (y,x,z) in strongly (-1,1)
  add(make("eq7", {{"x"}, {"y"}, {"z"}}, [](const Vars& v, const std::vector<int>&) {
    return symmetrize_term(t_assoc(v[0], v[1], v[2])).scaled(2) - t_assoc(v[1], v[0], v[2]);
  }));
  // right-alternative symmetrization identity 4(x,y,z)^+ = 2(y,x,z) + [y,[x,z]]
  add(make("ra_sym", {{"x"}, {"y"}, {"z"}}, [](const Vars& v, const std::vector<int>&) {
    return symmetrize_term(t_assoc(v[0], v[1], v[2])).scaled(4) -
           t_assoc(v[1], v[0], v[2]).scaled(2) - t_comm(v[1], t_comm(v[0], v[2]));
  }));

  add(make("kleinfeld", {{"x"}, {"y"}}, [](const Vars& v, const std::vector<int>&) {
    TermPoly c = t_comm(v[0], v[1]);
    return (c * c) * c;
  }));

  // super forms on homogeneous arguments
  add(make(
      "super_right_alt", {{"x"}, {"y"}, {"z"}},
      [](const Vars& v, const std::vector<int>& par) {
        int sign = (par[1] & par[2]) ? -1 : 1;
        return t_assoc(v[0], v[1], v[2]) + t_assoc(v[0], v[2], v[1]).scaled(sign);
      },
      true));
  add(make(
      "super_strong", {{"x"}, {"y"}, {"z"}},
      [](const Vars& v, const std::vector<int>&) {
        return t_scomm(t_scomm(v[0], v[1]), v[2]);
      },
      true));

  // alternative-center membership form
  add(make(
      "z_alt", {{"z"}, {"x"}, {"y"}},
      [](const Vars& v, const std::vector<int>& par) {
        int sign = (par[1] & par[2]) ? -1 : 1;
        return t_assoc(v[0], v[1], v[2]) + t_assoc(v[0], v[2], v[1]).scaled(sign);
      },
      true));

  // Jordan-function identities of the Grassmann envelope of J(G,delta)
  add(make("k_q", {{"x"}, {"y"}, {"c"}}, [](const Vars& v, const std::vector<int>&) {
    return op_Q(k_xy(v[0], v[1]), v[2]);
  }));
  add(make("h_q", {{"x"}, {"a"}, {"b"}, {"c"}}, [](const Vars& v, const std::vector<int>&) {
    return op_Q(h_func(v[0], v[1], v[2]), v[3]);
  }));
  add(make("k_sq", {{"x"}, {"y"}}, [](const Vars& v, const std::vector<int>&) {
    TermPoly k = k_xy(v[0], v[1]);
    return k * k;
  }));
  add(make("h_sq", {{"x"}, {"a"}, {"b"}}, [](const Vars& v, const std::vector<int>&) {
    TermPoly h = h_func(v[0], v[1], v[2]);
    return h * h;
  }));
  add(make("assoc_sq", {{"a"}, {"b"}}, [](const Vars& v, const std::vector<int>&) {
    TermPoly t = t_assoc(v[0], v[0], v[1]);
    return t * t;
  }));

  // k- and h-function vanishing, used as defining sets
  add(make("k_zero", {{"x"}, {"y"}, {"z"}, {"t"}}, [](const Vars& v, const std::vector<int>&) {
    return k_func(v[0], v[1], v[2], v[3]);
  }));
  add(make("h_zero", {{"x"}, {"a"}, {"b"}}, [](const Vars& v, const std::vector<int>&) {
    return h_func(v[0], v[1], v[2]);
  }));

  return reg;
}

const std::map<std::string, IdentityPreset>& registry() {
  static const std::map<std::string, IdentityPreset> reg = build_registry();
  return reg;
}

}  // namespace

const IdentityPreset& preset(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) fail(Errc::InvalidParameter, "unknown identity preset '" + name + "'");
  return it->second;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : registry()) out.push_back(k);
  return out;
}

std::vector<const IdentityPreset*> preset_family(const std::string& name) {
  if (name == "strongly11") return {&preset("right_alt"), &preset("eq6"), &preset("eq2")};
  if (name == "jordan") return {&preset("comm"), &preset("jordan_id")};
  if (name == "prop74")
    return {&preset("k_q"), &preset("h_q"), &preset("k_sq"), &preset("h_sq"), &preset("assoc_sq")};
  return {&preset(name)};
}

}  // namespace nalab
