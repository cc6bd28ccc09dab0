// Batch front end: enumeration, basis expansions, module dumps (JSON or
// DOT), characteristics, indecomposability certificates, and invariant
// verification sweeps. All results go to stdout as JSON (or DOT); logs and
// diagnostics go to stderr. Exit code 0 iff every requested check passed,
// 1 on an internal invariant failure, 2 on usage errors.

#include <cstdlib>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "immaculate/analysis.hpp"
#include "immaculate/composition.hpp"
#include "immaculate/errors.hpp"
#include "immaculate/expansion.hpp"
#include "immaculate/hecke.hpp"
#include "immaculate/parallel.hpp"
#include "immaculate/serialize.hpp"
#include "immaculate/tableau.hpp"

namespace {

using namespace immaculate;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Composition parse_composition(const std::string& text) {
  try {
    return Composition::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int sweep_cap() {
  if (const char* value = std::getenv("IMMACULATE_MAX_N")) {
    try {
      return std::stoi(value);
    } catch (...) {
      throw UsageError("IMMACULATE_MAX_N is not an integer");
    }
  }
  return 7;
}

void check_sweep_size(int n) {
  const int cap = sweep_cap();
  if (n < 0) throw UsageError("sweep size must be non-negative");
  if (n > cap)
    throw UsageError("sweep size " + std::to_string(n) + " exceeds the cap " +
                     std::to_string(cap) + " (set IMMACULATE_MAX_N to raise it)");
}

HeckeModule build_module(const Composition& alpha, const std::string& kind) {
  return kind == "word" ? word_module(alpha) : quotient_module(alpha);
}

// The word-module action restricted to Y-words, reduced modulo non-Y-words,
// must agree with the quotient action under the tableau bijection.
bool quotient_consistent(const Composition& alpha) {
  const HeckeModule words = word_module(alpha);
  const HeckeModule quotient = quotient_module(alpha);
  for (int q = 0; q < quotient.dim(); ++q) {
    const int w = words.index_of_word(quotient.word(q));
    if (w < 0) return false;
    for (int i = 1; i <= words.action().generator_count(); ++i) {
      const auto moved = words.act(i, w);
      if (!moved) return false;  // word modules never kill a word
      const auto quotient_image = quotient.act(i, q);
      if (is_y_word(words.word(*moved))) {
        if (!quotient_image ||
            quotient.word(*quotient_image) != words.word(*moved))
          return false;
      } else {
        if (quotient_image) return false;
      }
    }
  }
  return true;
}

struct LevelReport {
  int n = 0;
  Json json;
  bool pass = true;
};

LevelReport verify_level(int n) {
  LevelReport report;
  report.n = n;
  const auto comps = compositions_of(n);
  struct PerComposition {
    bool relations_word = false, relations_quotient = false, closure = false;
    bool dual_immaculate_characteristic = false, induced_characteristic = false;
    bool fundamental_expansion = false, quotient_consistency = false;
  };
  const auto results = parallel_map(comps, [](const Composition& alpha) {
    PerComposition r;
    const HeckeModule words = word_module(alpha);
    const HeckeModule quotient = quotient_module(alpha);
    r.relations_word = verify_relations(words).ok;
    r.relations_quotient = verify_relations(quotient).ok;
    r.closure = nonyword_closure_check(alpha);
    const auto dual = dual_immaculate_via_kostka(alpha);
    r.dual_immaculate_characteristic =
        fundamental_to_monomial(characteristic(quotient)) == dual;
    r.induced_characteristic =
        fundamental_to_monomial(characteristic(words)) == h_in_qsym(alpha);
    r.fundamental_expansion =
        fundamental_to_monomial(dual_immaculate_via_fundamentals(alpha)) == dual;
    r.quotient_consistency = quotient_consistent(alpha);
    return r;
  });
  auto all = [&](bool PerComposition::* field) {
    bool ok = true;
    for (const auto& r : results) ok = ok && r.*field;
    return ok;
  };
  Json checks = Json::object();
  checks["hecke_relations_word"] = all(&PerComposition::relations_word);
  checks["hecke_relations_quotient"] = all(&PerComposition::relations_quotient);
  checks["nonyword_closure"] = all(&PerComposition::closure);
  checks["dual_immaculate_characteristic"] =
      all(&PerComposition::dual_immaculate_characteristic);
  checks["induced_characteristic"] = all(&PerComposition::induced_characteristic);
  checks["fundamental_expansion"] = all(&PerComposition::fundamental_expansion);
  checks["quotient_consistency"] = all(&PerComposition::quotient_consistency);
  const Rational det = kostka_table(n)->transition_matrix().determinant();
  checks["kostka_unimodular"] = det == 1 || det == -1;
  report.json = Json::object();
  report.json["n"] = n;
  report.json["compositions"] = comps.size();
  report.json["checks"] = checks;
  for (const auto& [name, ok] : checks.items()) report.pass = report.pass && ok.get<bool>();
  return report;
}

int run_kostka(const std::string& shape_text, const std::string& content_text) {
  const Composition shape = parse_composition(shape_text);
  const Composition content = parse_composition(content_text);
  if (shape.weight() != content.weight())
    throw UsageError("shape and content must have equal weights");
  std::cout << kostka(shape, content) << "\n";
  return 0;
}

int run_expand(const std::string& what, const std::string& alpha_text,
               const std::string& basis) {
  const Composition alpha = parse_composition(alpha_text);
  BasisExpansion result;
  if (what == "dual-immaculate") {
    result = basis == "F" ? dual_immaculate_via_fundamentals(alpha)
                          : dual_immaculate_via_kostka(alpha);
  } else if (what == "h") {
    result = h_in_qsym(alpha);
  } else if (what == "immaculate") {
    result = immaculate_in_h(alpha);
  } else {
    throw UsageError("unknown expansion: " + what);
  }
  std::cout << expansion_json(result).dump() << "\n";
  return 0;
}

int run_module(const std::string& alpha_text, const std::string& kind, bool dot) {
  const HeckeModule m = build_module(parse_composition(alpha_text), kind);
  if (dot) {
    std::cout << module_dot(m);
  } else {
    std::cout << module_json(m).dump() << "\n";
  }
  return 0;
}

int run_char(const std::string& alpha_text, const std::string& kind) {
  const HeckeModule m = build_module(parse_composition(alpha_text), kind);
  std::cout << expansion_json_compact(characteristic(m)).dump() << "\n";
  return 0;
}

int run_certify(const std::string& alpha_text, int all_n) {
  if (!alpha_text.empty()) {
    const auto cert = indecomposability_certificate(parse_composition(alpha_text));
    std::cout << certificate_json(cert).dump() << "\n";
    return cert.valid ? 0 : 1;
  }
  check_sweep_size(all_n);
  std::vector<Composition> comps;
  for (int n = 0; n <= all_n; ++n) {
    const auto level = compositions_of(n);
    comps.insert(comps.end(), level.begin(), level.end());
  }
  const auto certs = parallel_map(
      comps, [](const Composition& alpha) { return indecomposability_certificate(alpha); });
  Json out = Json::array();
  bool all_valid = true;
  for (const auto& cert : certs) {
    out.push_back(certificate_json(cert));
    all_valid = all_valid && cert.valid;
  }
  std::cout << out.dump() << "\n";
  return all_valid ? 0 : 1;
}

int run_verify(int all_n) {
  check_sweep_size(all_n);
  Json levels = Json::array();
  bool pass = true;
  for (int n = 0; n <= all_n; ++n) {
    LevelReport level = verify_level(n);
    pass = pass && level.pass;
    levels.push_back(std::move(level.json));
    std::cerr << "verified n=" << n << (level.pass ? "" : " (FAILED)") << "\n";
  }
  Json out = Json::object();
  out["max_n"] = all_n;
  out["levels"] = std::move(levels);
  out["pass"] = pass;
  std::cout << out.dump() << "\n";
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for immaculate tableaux, dual immaculate "
               "quasi-symmetric functions, and 0-Hecke modules"};
  app.require_subcommand(1);

  std::string shape_text, content_text;
  auto* kostka_cmd = app.add_subcommand("kostka", "Immaculate Kostka number");
  kostka_cmd->add_option("--shape", shape_text, "shape composition, e.g. [4,2,3]")->required();
  kostka_cmd->add_option("--content", content_text, "content composition")->required();

  std::string what = "dual-immaculate", alpha_text, basis = "M";
  auto* expand_cmd = app.add_subcommand("expand", "Basis expansion as JSON");
  expand_cmd->add_option("--what", what, "dual-immaculate, h, or immaculate")
      ->check(CLI::IsMember({"dual-immaculate", "h", "immaculate"}));
  expand_cmd->add_option("--alpha", alpha_text, "index composition")->required();
  expand_cmd->add_option("--basis", basis, "target basis for dual-immaculate")
      ->check(CLI::IsMember({"M", "F"}));

  std::string module_alpha, module_kind = "quotient";
  bool dot = false, json = false;
  auto* module_cmd = app.add_subcommand("module", "Module dump as JSON or DOT");
  module_cmd->add_option("--alpha", module_alpha, "content composition")->required();
  module_cmd->add_option("--kind", module_kind, "word or quotient")
      ->check(CLI::IsMember({"word", "quotient"}));
  module_cmd->add_flag("--dot", dot, "emit a DOT action graph");
  module_cmd->add_flag("--json", json, "emit JSON (default)");

  std::string char_alpha, char_kind = "quotient";
  auto* char_cmd = app.add_subcommand("char", "Characteristic in the F basis");
  char_cmd->add_option("--alpha", char_alpha, "content composition")->required();
  char_cmd->add_option("--kind", char_kind, "word or quotient")
      ->check(CLI::IsMember({"word", "quotient"}));

  std::string certify_alpha;
  int certify_all_n = -1;
  auto* certify_cmd = app.add_subcommand("certify", "Indecomposability certificates");
  auto* certify_alpha_opt = certify_cmd->add_option("--alpha", certify_alpha, "one composition");
  auto* certify_all_opt =
      certify_cmd->add_option("--all-n", certify_all_n, "sweep all compositions of 0..N");
  certify_alpha_opt->excludes(certify_all_opt);

  int verify_all_n = -1;
  auto* verify_cmd = app.add_subcommand("verify", "Invariant sweep");
  verify_cmd->add_option("--all-n", verify_all_n, "sweep all compositions of 0..N")->required();

  try {
    app.parse(argc, argv);
    if (kostka_cmd->parsed()) return run_kostka(shape_text, content_text);
    if (expand_cmd->parsed()) return run_expand(what, alpha_text, basis);
    if (module_cmd->parsed()) {
      if (dot && json) throw UsageError("--json and --dot are mutually exclusive");
      return run_module(module_alpha, module_kind, dot);
    }
    if (char_cmd->parsed()) return run_char(char_alpha, char_kind);
    if (certify_cmd->parsed()) {
      if (certify_alpha.empty() && certify_all_n < 0)
        throw UsageError("certify needs --alpha or --all-n");
      return run_certify(certify_alpha, certify_all_n);
    }
    if (verify_cmd->parsed()) return run_verify(verify_all_n);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    Json error = Json::object();
    error["error"] = e.what();
    std::cout << error.dump() << "\n";
    return 1;
  }
}
