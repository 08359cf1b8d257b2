// nalab: exact verification of nonassociative algebra identities, bases and
// T-ideal consequences in the vector-type realizations.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "nalab/basis.hpp"
#include "nalab/engine.hpp"
#include "nalab/error.hpp"
#include "nalab/suite.hpp"
#include "nalab/tideal.hpp"

namespace {

using nalab::Errc;
using ojson = nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) nalab::fail(Errc::ConfigError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) nalab::fail(Errc::ConfigError, "cannot write '" + out_path + "'");
    out << text;
  }
}

int cmd_verify(const std::string& config, const std::string& out_path, int jobs) {
  nalab::SuiteResult res = nalab::run_suite_file(config, jobs);
  emit(res.report_text, out_path);
  return res.pass ? 0 : 1;
}

int cmd_consequence(const std::string& defining_csv, const std::string& candidate_path, int degree,
                    bool allow6, const std::string& expect, const std::string& out_path) {
  std::vector<const nalab::IdentityPreset*> defining;
  std::stringstream ss(defining_csv);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    for (const auto* p : nalab::preset_family(name)) defining.push_back(p);
  }
  nalab::TermPoly candidate = nalab::parse_term(slurp(candidate_path));
  nalab::ConsequenceCertificate cert =
      nalab::is_consequence(candidate, defining, degree, allow6);

  bool sound = cert.verdict == "MEMBER"
                   ? nalab::verify_member_certificate(cert, candidate)
                   : nalab::verify_not_member_certificate(cert, candidate, defining, allow6);

  ojson j;
  j["degree"] = cert.degree;
  j["candidate"] = cert.candidate;
  j["verdict"] = cert.verdict;
  j["rows_generated"] = cert.rows_generated;
  j["span_rank"] = cert.span_rank;
  j["certificate_verified"] = sound;
  if (cert.verdict == "MEMBER") {
    j["parts"] = ojson::array();
    for (const auto& part : cert.parts) {
      ojson p;
      p["coeff"] = nalab::rat_text(part.coeff);
      p["description"] = part.description;
      p["row"] = part.row;
      j["parts"].push_back(p);
    }
  } else {
    ojson f = ojson::object();
    for (const auto& [col, v] : cert.functional) f[col] = nalab::rat_text(v);
    j["functional"] = f;
  }
  emit(j.dump(2) + "\n", out_path);
  if (!sound) return 1;
  if (!expect.empty() && expect != cert.verdict) return 1;
  return 0;
}

int cmd_dims(const std::string& algebra, int bound, const std::string& golden,
             const std::string& out_path) {
  nalab::DimTable t = nalab::dim_table(algebra, bound);
  std::string text = nalab::dim_table_text(algebra, t);
  emit(text, out_path);
  if (!golden.empty()) {
    std::string want = slurp(golden);
    if (want != text) {
      // report the first differing line
      std::stringstream a(text), b(want);
      std::string la, lb;
      int line = 0;
      while (true) {
        bool ga = static_cast<bool>(std::getline(a, la));
        bool gb = static_cast<bool>(std::getline(b, lb));
        ++line;
        if (!ga && !gb) break;
        if (la != lb || ga != gb) {
          std::cerr << "dims mismatch at line " << line << ": computed '" << (ga ? la : "<eof>")
                    << "' vs golden '" << (gb ? lb : "<eof>") << "'\n";
          return 1;
        }
      }
      return 1;
    }
  }
  return 0;
}

int cmd_eval(const std::string& algebra, const std::string& term_path,
             const std::string& subst_path, const std::string& out_path) {
  nalab::NamedAlgebra named = nalab::make_named(algebra);
  nalab::TermPoly f = nalab::parse_term(slurp(term_path));
  std::vector<nalab::AnyElem> subst;
  nlohmann::json sj = nlohmann::json::parse(slurp(subst_path));
  for (int v = 0; v < f.ctx()->size(); ++v) {
    const std::string& vn = f.ctx()->var_name(v);
    if (!sj.contains(vn))
      nalab::fail(Errc::ConfigError, "substitution file misses variable '" + vn + "'");
    subst.push_back(named.algebra->parse_elem(sj[vn].get<std::string>()));
  }
  nalab::AnyElem value = nalab::evaluate(*named.algebra, f, subst);
  emit(named.algebra->show(value) + "\n", out_path);
  return 0;
}

int cmd_nf(const std::string& algebra, const std::string& term_path, const std::string& out_path) {
  nalab::NamedAlgebra named = nalab::make_named(algebra);
  nalab::TermPoly f = nalab::parse_term(slurp(term_path));
  nalab::AnyElem value = nalab::normal_form(named, f);
  emit(named.algebra->show(value) + "\n", out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checker for nonassociative algebra identities and bases"};
  app.require_subcommand(1);

  int jobs = 1;
  app.add_option("--jobs", jobs, "parallel suite items")->envname("NALAB_JOBS");

  std::string config, out_path;
  auto* verify = app.add_subcommand("verify", "run a verification suite from a JSON config");
  verify->add_option("config", config, "suite config path")->required();
  verify->add_option("--out", out_path, "report output path");

  std::string defining, candidate, expect;
  int degree = 0;
  bool allow6 = false;
  auto* cons = app.add_subcommand("consequence", "multilinear T-ideal membership");
  cons->add_option("--defining", defining, "comma-separated preset/family names")->required();
  cons->add_option("--candidate", candidate, "candidate term file")->required();
  cons->add_option("--degree", degree, "multilinear degree")->required();
  cons->add_flag("--allow-degree6", allow6, "permit the degree-6 component");
  cons->add_option("--expect", expect, "MEMBER or NOT_MEMBER");
  cons->add_option("--out", out_path, "certificate output path");

  std::string algebra, golden;
  int bound = 0;
  auto* dims = app.add_subcommand("dims", "print/check a dimension table");
  dims->add_option("algebra", algebra, "algebra id")->required();
  dims->add_option("bound", bound, "total degree bound")->required();
  dims->add_option("--golden", golden, "golden file to compare against");
  dims->add_option("--out", out_path, "table output path");

  std::string term_path, subst_path;
  auto* eval = app.add_subcommand("eval", "evaluate a term under a substitution");
  eval->add_option("algebra", algebra, "algebra spec")->required();
  eval->add_option("term", term_path, "term file")->required();
  eval->add_option("subst", subst_path, "substitution JSON file")->required();
  eval->add_option("--out", out_path, "output path");

  auto* nf = app.add_subcommand("nf", "normal form of a term over the named generators");
  nf->add_option("algebra", algebra, "algebra spec")->required();
  nf->add_option("term", term_path, "term file")->required();
  nf->add_option("--out", out_path, "output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return cmd_verify(config, out_path, jobs);
    if (*cons) return cmd_consequence(defining, candidate, degree, allow6, expect, out_path);
    if (*dims) return cmd_dims(algebra, bound, golden, out_path);
    if (*eval) return cmd_eval(algebra, term_path, subst_path, out_path);
    if (*nf) return cmd_nf(algebra, term_path, out_path);
  } catch (const nalab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
