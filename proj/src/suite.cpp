#include "nalab/suite.hpp"

#include <fstream>
#include <future>
#include <json.hpp>
#include <sstream>

#include "nalab/error.hpp"

namespace nalab {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

ojson report_of(const SubstReport& r) {
  ojson j;
  j["identity"] = r.identity;
  j["form"] = r.form;
  j["mode"] = r.mode;
  if (r.mode == "random") j["seed"] = r.seed;
  j["checked"] = r.checked;
  j["skipped_trivial"] = r.skipped_trivial;
  j["verdict"] = r.pass ? "PASS" : "FAIL";
  if (!r.pass) {
    ojson cx = ojson::object();
    for (const auto& [var, elem] : r.counterexample) cx[var] = elem;
    j["counterexample"] = cx;
    j["value"] = r.value;
  }
  return j;
}

struct CenterItem {
  std::string which;
  std::string term;
};

ojson run_center_item(const NamedAlgebra& named, const CenterItem& item,
                      const std::vector<SpanningElement>& span) {
  const Algebra& alg = *named.algebra;
  ojson j;
  j["which"] = item.which;
  j["term"] = item.term;
  CenterKind kind = center_kind(item.which);
  TermPoly f = parse_term(item.term);
  std::vector<AnyElem> witnesses;
  for (const auto& s : span) witnesses.push_back(s.value);

  long long checked = 0;
  bool pass = true;
  ojson cx = ojson::object();
  std::string culprit;

  const int nvars = f.ctx() ? f.ctx()->size() : 0;
  std::vector<std::vector<std::size_t>> cand(nvars);
  for (int v = 0; v < nvars; ++v) {
    for (std::size_t s = 0; s < span.size(); ++s) {
      if (alg.graded_super()) {
        Parity want = f.ctx()->parity(v) ? Parity::Odd : Parity::Even;
        if (span[s].parity != want) continue;
      }
      cand[v].push_back(s);
    }
  }

  std::vector<std::size_t> odo(nvars, 0);
  std::vector<AnyElem> subst(nvars, alg.zero());
  bool feasible = true;
  for (int v = 0; v < nvars; ++v)
    if (f.degree_in(v) > 0 && cand[v].empty()) feasible = false;
  if (feasible && nvars > 0) {
    while (true) {
      for (int v = 0; v < nvars; ++v)
        if (!cand[v].empty()) subst[v] = span[cand[v][odo[v]]].value;
      AnyElem value = evaluate(alg, f, subst);
      ++checked;
      if (!center_membership(alg, value, kind, witnesses)) {
        pass = false;
        for (int v = 0; v < nvars; ++v)
          if (f.degree_in(v) > 0) cx[f.ctx()->var_name(v)] = alg.show(subst[v]);
        culprit = alg.show(value);
        break;
      }
      int v = 0;
      for (; v < nvars; ++v) {
        if (cand[v].empty()) continue;
        if (++odo[v] < cand[v].size()) break;
        odo[v] = 0;
      }
      if (v == nvars) break;
    }
  }
  j["checked"] = checked;
  j["verdict"] = pass ? "PASS" : "FAIL";
  if (!pass) {
    j["counterexample"] = cx;
    j["value"] = culprit;
  }
  return j;
}

}  // namespace

SuiteResult run_suite_config(const std::string& config_text, int jobs) {
  json cfg;
  try {
    cfg = json::parse(config_text);
  } catch (const std::exception& e) {
    fail(Errc::ConfigError, std::string("bad suite config: ") + e.what());
  }
  if (!cfg.contains("suite") || !cfg.contains("algebra") || !cfg.contains("items"))
    fail(Errc::ConfigError, "suite config needs suite, algebra, items");

  const std::string suite_name = cfg["suite"].get<std::string>();
  const std::string algebra_spec = cfg["algebra"].get<std::string>();
  const int cap = cfg.value("cap", 3);

  SubstMode mode = SubstMode::Exhaustive;
  RandomSpec rnd;
  if (cfg.contains("mode")) {
    const auto& m = cfg["mode"];
    std::string kind = m.value("kind", "exhaustive");
    if (kind == "random") {
      mode = SubstMode::Random;
      rnd.seed = m.value("seed", 1);
      rnd.count = m.value("count", 200);
      rnd.support = m.value("support", 3);
    } else if (kind != "exhaustive") {
      fail(Errc::ConfigError, "mode.kind must be exhaustive or random");
    }
  }

  NamedAlgebra named = make_named(algebra_spec);
  std::vector<AnyElem> gens;
  if (cfg.contains("generators")) {
    for (const auto& g : cfg["generators"]) gens.push_back(named.generator(g.get<std::string>()));
  }
  std::vector<SpanningElement> span = spanning_set(*named.algebra, gens, cap);

  struct Item {
    std::string type;
    std::string preset_name;
    PresetForm form = PresetForm::Raw;
    SubstMode mode;
    CenterItem center;
  };
  std::vector<Item> items;
  for (const auto& it : cfg["items"]) {
    Item item;
    item.type = it.value("type", "identity");
    item.mode = mode;
    if (item.type == "identity") {
      item.preset_name = it.at("preset").get<std::string>();
      std::string form = it.value("form", "raw");
      if (form == "linearized") item.form = PresetForm::Linearized;
      else if (form != "raw") fail(Errc::ConfigError, "form must be raw or linearized");
      std::string mk = it.value("mode", "");
      if (mk == "exhaustive") item.mode = SubstMode::Exhaustive;
      else if (mk == "random") item.mode = SubstMode::Random;
      else if (!mk.empty()) fail(Errc::ConfigError, "item mode must be exhaustive or random");
    } else if (item.type == "center") {
      item.center.which = it.at("which").get<std::string>();
      item.center.term = it.at("term").get<std::string>();
    } else {
      fail(Errc::ConfigError, "item type must be identity or center");
    }
    items.push_back(std::move(item));
  }

  auto run_item = [&](const Item& item) -> std::pair<ojson, bool> {
    if (item.type == "center") {
      ojson j = run_center_item(named, item.center, span);
      return {j, j["verdict"] == "PASS"};
    }
    const IdentityPreset& p = preset(item.preset_name);
    SubstReport r = verify_by_substitution(*named.algebra, p, item.form, span, item.mode, rnd);
    return {report_of(r), r.pass};
  };

  std::vector<std::pair<ojson, bool>> results(items.size());
  if (jobs > 1 && items.size() > 1) {
    std::vector<std::future<std::pair<ojson, bool>>> futs;
    for (const auto& item : items)
      futs.push_back(std::async(std::launch::async, run_item, std::cref(item)));
    for (std::size_t i = 0; i < futs.size(); ++i) results[i] = futs[i].get();
  } else {
    for (std::size_t i = 0; i < items.size(); ++i) results[i] = run_item(items[i]);
  }

  SuiteResult out;
  ojson rep;
  rep["suite"] = suite_name;
  rep["algebra"] = named.algebra->name();
  rep["cap"] = cap;
  rep["spanning_elements"] = span.size();
  rep["mode"] = mode == SubstMode::Exhaustive ? "exhaustive" : "random";
  if (mode == SubstMode::Random) rep["seed"] = rnd.seed;
  rep["items"] = ojson::array();
  for (auto& [j, pass] : results) {
    rep["items"].push_back(j);
    out.pass = out.pass && pass;
  }
  rep["verdict"] = out.pass ? "PASS" : "FAIL";
  out.report_text = rep.dump(2) + "\n";
  return out;
}

SuiteResult run_suite_file(const std::string& path, int jobs) {
  std::ifstream in(path);
  if (!in) fail(Errc::ConfigError, "cannot open suite config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return run_suite_config(ss.str(), jobs);
}

}  // namespace nalab
