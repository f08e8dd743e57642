#include "partialsat_cli/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "partialsat/assignment.hpp"
#include "partialsat/cnfize.hpp"
#include "partialsat/enumeration.hpp"
#include "partialsat/errors.hpp"
#include "partialsat/formula.hpp"
#include "partialsat/obdd.hpp"
#include "partialsat/partial_sat.hpp"
#include "partialsat/predabs.hpp"
#include "partialsat/quantified.hpp"
#include "partialsat/semantics.hpp"

namespace partialsat::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string formula;
  std::string file;
  std::string assign;
  std::string mode;
  std::string engine = "obdd";
  std::string order;
  std::string problem;
  std::string dimacs_out;
  bool json = false;
  bool keep_bot = false;
  bool dedup = false;
  std::size_t max_atoms = kDefaultBruteCap;
  std::size_t node_budget = kDefaultNodeBudget;
  std::size_t branch_budget = kDefaultBranchBudget;
  std::size_t expansion_cap = kDefaultExpansionCap;
};

std::optional<std::size_t> env_size(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0') {
    throw UsageError(std::string(name) + " is not a number: " + raw);
  }
  return static_cast<std::size_t>(v);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string formula_text(const Options& o) {
  if (!o.formula.empty() && !o.file.empty()) {
    throw UsageError("give either --formula or --file, not both");
  }
  if (!o.file.empty()) return read_file(o.file);
  if (o.formula.empty()) throw UsageError("a formula is required (--formula or --file)");
  return o.formula;
}

Assignment assignment(const Options& o) { return Assignment::parse(o.assign); }

std::vector<Atom> parse_order(const std::string& text) {
  std::vector<Atom> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.emplace_back(cur);
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

// Requested order followed by the remaining atoms of f in lexicographic order.
std::vector<Atom> full_order(const std::vector<Atom>& requested, const Formula& f) {
  std::vector<Atom> out = requested;
  AtomSet seen(requested.begin(), requested.end());
  if (seen.size() != requested.size()) throw UsageError("--order repeats an atom");
  for (const auto& a : atoms(f)) {
    if (!seen.contains(a)) out.push_back(a);
  }
  return out;
}

enum class CheckMode { Validates, Entails, Both };

CheckMode check_mode(const std::string& m) {
  if (m.empty() || m == "both") return CheckMode::Both;
  if (m == "validates" || m == "validating") return CheckMode::Validates;
  if (m == "entails" || m == "entailing") return CheckMode::Entails;
  throw UsageError("unknown mode '" + m + "'");
}

EnumMode enum_mode(const std::string& m, EnumMode fallback) {
  if (m.empty()) return fallback;
  if (m == "validates" || m == "validating") return EnumMode::Validating;
  if (m == "entails" || m == "entailing") return EnumMode::Entailing;
  throw UsageError("unknown mode '" + m + "'");
}

std::string cube_line(const Assignment& mu) {
  return mu.empty() ? "true" : mu.str();
}

json cubes_json(const std::vector<Assignment>& as) {
  json arr = json::array();
  for (const auto& mu : as) arr.push_back(mu.literal_strings());
  return arr;
}

void print_cubes(std::ostream& out, const std::vector<Assignment>& as,
                 const std::string& indent = "") {
  for (const auto& mu : as) out << indent << cube_line(mu) << '\n';
}

// --- verbs -----------------------------------------------------------------

int do_check(const Options& o, std::ostream& out) {
  const CheckMode mode = check_mode(o.mode);
  const ExistentialFormula ef = parse_existential(formula_text(o));
  const Assignment mu = assignment(o);
  const bool want_v = mode != CheckMode::Entails;
  const bool want_e = mode != CheckMode::Validates;

  std::optional<bool> v, e;
  std::optional<Assignment> witness;
  if (ef.quantified.empty()) {
    EntailOptions eo;
    eo.brute_cap = o.max_atoms;
    if (want_v) v = validates(mu, ef.matrix);
    if (want_e) {
      auto r = entails(mu, ef.matrix, eo);
      e = r.entails;
      witness = r.witness;
    }
  } else {
    if (want_v) v = exists_validates(mu, ef, o.max_atoms).holds;
    if (want_e) {
      auto r = exists_entails(mu, ef, o.max_atoms);
      e = r.holds;
      witness = r.falsifying;
    }
  }

  if (o.json) {
    json j;
    j["formula"] = print(ef);
    j["assignment"] = mu.literal_strings();
    if (v) j["validates"] = *v;
    if (e) j["entails"] = *e;
    if (witness) j["witness"] = witness->literal_strings();
    out << j.dump(2) << '\n';
  } else {
    if (v) out << "validates: " << (*v ? "true" : "false") << '\n';
    if (e) out << "entails: " << (*e ? "true" : "false") << '\n';
    if (witness) out << "witness: " << cube_line(*witness) << '\n';
  }
  if (mode == CheckMode::Validates) return *v ? kOk : kFalse;
  if (mode == CheckMode::Entails) return *e ? kOk : kFalse;
  return kOk;
}

int do_residual(const Options& o, std::ostream& out) {
  const Formula f = parse(formula_text(o));
  const Assignment mu = assignment(o);
  const Formula r = residual(f, mu);
  if (o.json) {
    json j;
    j["formula"] = print(f);
    j["assignment"] = mu.literal_strings();
    j["residual"] = print(r);
    j["eval3"] = std::string(to_string(eval3(f, mu)));
    out << j.dump(2) << '\n';
  } else {
    out << print(r) << '\n';
  }
  return kOk;
}

EnumResult run_engine(const Options& o, const Formula& f, Engine engine) {
  const std::vector<Atom> requested = parse_order(o.order);
  switch (engine) {
    case Engine::Obdd:
      return obdd_enumerate(
          Obdd::build(f, full_order(requested, f), o.node_budget));
    case Engine::Tableaux: {
      TableauxOptions t;
      t.branch_budget = o.branch_budget;
      t.dedup = o.dedup;
      return tableaux_enumerate(f, t);
    }
    case Engine::Dpll: {
      DpllOptions d;
      d.branch_budget = o.branch_budget;
      if (!requested.empty()) {
        d.heuristic = BranchHeuristic::FixedOrder;
        d.order = full_order(requested, f);
      }
      return dpll_enumerate(f, d);
    }
  }
  throw UsageError("unknown engine");
}

Engine parse_engine(const std::string& name) {
  if (name == "obdd") return Engine::Obdd;
  if (name == "tableaux") return Engine::Tableaux;
  if (name == "dpll") return Engine::Dpll;
  throw UsageError("unknown engine '" + name + "'");
}

int do_enumerate(const Options& o, std::ostream& out) {
  const Formula f = parse(formula_text(o));
  const Engine engine = parse_engine(o.engine);
  const EnumResult r = run_engine(o, f, engine);
  if (!o.mode.empty() && enum_mode(o.mode, r.mode) != r.mode) {
    throw UsageError(std::string("engine ") + std::string(to_string(engine)) +
                     " enumerates " + std::string(to_string(r.mode)) +
                     " assignments");
  }
  if (o.json) {
    json j;
    j["engine"] = std::string(to_string(r.engine));
    j["mode"] = std::string(to_string(r.mode));
    j["formula"] = print(f);
    j["assignments"] = cubes_json(r.assignments);
    out << j.dump(2) << '\n';
  } else {
    print_cubes(out, r.assignments);
  }
  return kOk;
}

json loss_json(const LossReport& rep) {
  json j;
  j["loss"] = rep.loss;
  json cases = json::array();
  for (const auto& c : rep.cases) {
    json jc;
    jc["delta"] = c.delta.literal_strings();
    jc["outcome"] = std::string(to_string(c.outcome));
    if (c.witness) jc["witness"] = c.witness->literal_strings();
    cases.push_back(jc);
  }
  j["cases"] = cases;
  return j;
}

void print_loss(std::ostream& out, const char* title, const LossReport& rep) {
  out << title << " loss: " << (rep.loss ? "yes" : "no") << '\n';
  for (const auto& c : rep.cases) {
    out << "  {" << c.delta.str() << "}: " << to_string(c.outcome);
    if (c.witness) out << " by {" << c.witness->str() << "}";
    out << '\n';
  }
}

int do_cnfize(const Options& o, std::ostream& out) {
  const Formula f = parse(formula_text(o));
  const TseitinResult enc = tseitin(f);
  if (!o.dimacs_out.empty()) {
    std::ofstream d(o.dimacs_out, std::ios::binary);
    if (!d) throw UsageError("cannot write " + o.dimacs_out);
    d << to_dimacs(enc.cnf);
  }

  std::optional<LossReport> vloss, eloss;
  if (!o.assign.empty()) {
    const Assignment mu = assignment(o);
    const CheckMode mode = check_mode(o.mode);
    EntailOptions eo;
    eo.brute_cap = o.max_atoms;
    if (mode != CheckMode::Entails && validates(mu, f)) {
      vloss = check_validation_loss(mu, f);
    }
    if (mode != CheckMode::Validates && entails(mu, f, eo).entails) {
      eloss = check_entailment_loss(mu, f, kDefaultFreshSweepCap, eo);
    }
  }

  if (o.json) {
    json j;
    j["formula"] = print(f);
    j["cnf"] = print(enc.cnf);
    json fresh = json::array();
    for (const auto& a : enc.fresh_atoms) fresh.push_back(a.name());
    j["fresh"] = fresh;
    json cls = json::array();
    for (const auto& c : clauses(enc.cnf)) {
      json lits = json::array();
      for (const auto& l : c) lits.push_back(l.str());
      cls.push_back(lits);
    }
    j["clauses"] = cls;
    if (vloss) j["validation"] = loss_json(*vloss);
    if (eloss) j["entailment"] = loss_json(*eloss);
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << print(enc.cnf) << '\n';
  if (vloss) print_loss(out, "validation", *vloss);
  if (eloss) print_loss(out, "entailment", *eloss);
  return kOk;
}

int do_shannon(const Options& o, std::ostream& out) {
  const ExistentialFormula ef = parse_existential(formula_text(o));
  ShannonOptions so;
  so.cap = o.expansion_cap;
  so.keep_bottom = o.keep_bot;
  const Formula g = shannon_expand(ef, so);
  if (o.json) {
    json j;
    j["formula"] = print(ef);
    j["expansion"] = print(g);
    out << j.dump(2) << '\n';
  } else {
    out << print(g) << '\n';
  }
  return kOk;
}

PredAbsProblem load_problem(const Options& o) {
  if (o.problem.empty()) throw UsageError("--problem is required");
  return parse_problem_json(read_file(o.problem));
}

int do_predabs(const Options& o, std::ostream& out) {
  const PredAbsProblem p = load_problem(o);
  const EnumMode mode = enum_mode(o.mode, EnumMode::Entailing);
  const EnumResult r = enumerate_abstraction(p, mode, {o.max_atoms});
  if (o.json) {
    json j;
    j["mode"] = std::string(to_string(mode));
    j["labels"] = json::array();
    for (const auto& a : p.labels()) j["labels"].push_back(a.name());
    j["assignments"] = cubes_json(r.assignments);
    out << j.dump(2) << '\n';
  } else {
    print_cubes(out, r.assignments);
  }
  return kOk;
}

int compare_problem(const Options& o, std::ostream& out) {
  const ModeComparison c = compare_modes(load_problem(o), {o.max_atoms});
  if (o.json) {
    json j;
    for (const auto* r : {&c.validating, &c.entailing}) {
      json side;
      side["cubes"] = r->assignments.size();
      side["literals"] = r->total_literals();
      side["assignments"] = cubes_json(r->assignments);
      j[std::string(to_string(r->mode))] = side;
    }
    j["equivalent"] = c.equivalent;
    out << j.dump(2) << '\n';
    return kOk;
  }
  for (const auto* r : {&c.validating, &c.entailing}) {
    out << to_string(r->mode) << ": " << r->assignments.size() << " cubes, "
        << r->total_literals() << " literals\n";
    print_cubes(out, r->assignments, "  ");
  }
  out << "equivalent: " << (c.equivalent ? "true" : "false") << '\n';
  return kOk;
}

int compare_engines(const Options& o, std::ostream& out) {
  const Formula f = parse(formula_text(o));
  json j;
  j["formula"] = print(f);
  std::ostringstream text;
  for (Engine e : {Engine::Obdd, Engine::Tableaux, Engine::Dpll}) {
    const EnumResult r = run_engine(o, f, e);
    const bool eq = brute_equivalent(r.disjunction(), f, o.max_atoms);
    json side;
    side["mode"] = std::string(to_string(r.mode));
    side["cubes"] = r.assignments.size();
    side["literals"] = r.total_literals();
    side["equivalent"] = eq;
    j[std::string(to_string(e))] = side;
    text << to_string(e) << ": " << r.assignments.size() << " cubes, "
         << r.total_literals() << " literals, equivalent: "
         << (eq ? "true" : "false") << '\n';
  }
  if (o.json) {
    out << j.dump(2) << '\n';
  } else {
    out << text.str();
  }
  return kOk;
}

int do_compare(const Options& o, std::ostream& out) {
  if (!o.problem.empty()) {
    if (!o.formula.empty() || !o.file.empty()) {
      throw UsageError("give either --problem or a formula, not both");
    }
    return compare_problem(o, out);
  }
  return compare_engines(o, out);
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err) {
  Options o;
  try {
    if (auto v = env_size("PARTIALSAT_MAX_ATOMS")) o.max_atoms = *v;
    if (auto v = env_size("PARTIALSAT_NODE_BUDGET")) o.node_budget = *v;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App app{"Partial satisfiability checks and enumeration", "partialsat"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-f,--formula", o.formula, "formula text");
    sub->add_option("--file", o.file, "file holding the formula (# comments allowed)");
    sub->add_option("--max-atoms", o.max_atoms, "truth-table sweep cap");
    sub->add_flag("--json", o.json, "machine-readable output");
  };

  auto* check = app.add_subcommand("check", "validation / entailment of an assignment");
  add_common(check);
  check->add_option("-a,--assign", o.assign, "literal set, e.g. \"A1, !A3\"");
  check->add_option("--mode", o.mode, "validates|entails|both");

  auto* resid = app.add_subcommand("residual", "formula after applying an assignment");
  add_common(resid);
  resid->add_option("-a,--assign", o.assign, "literal set");

  auto* enumerate = app.add_subcommand("enumerate", "list partial assignments");
  add_common(enumerate);
  enumerate->add_option("--engine", o.engine, "obdd|tableaux|dpll");
  enumerate->add_option("--order", o.order, "variable order (OBDD, DPLL)");
  enumerate->add_option("--mode", o.mode, "expected mode; must match the engine");
  enumerate->add_flag("--dedup", o.dedup, "drop duplicate tableaux branches");
  enumerate->add_option("--node-budget", o.node_budget, "OBDD node budget");
  enumerate->add_option("--branch-budget", o.branch_budget, "search branch budget");

  auto* cnfize = app.add_subcommand("cnfize", "Tseitin CNF and loss report");
  add_common(cnfize);
  cnfize->add_option("-a,--assign", o.assign, "assignment to test for loss");
  cnfize->add_option("--mode", o.mode, "validates|entails|both");
  cnfize->add_option("--dimacs-out", o.dimacs_out, "write DIMACS to this path");

  auto* shannon = app.add_subcommand("shannon", "expand `exists B . formula`");
  add_common(shannon);
  shannon->add_flag("--keep-bot-disjuncts", o.keep_bot, "keep false disjuncts");
  shannon->add_option("--expansion-cap", o.expansion_cap, "max quantified atoms");

  auto* predabs = app.add_subcommand("predabs", "predicate abstraction");
  predabs->add_option("--problem", o.problem, "problem JSON file")->required();
  predabs->add_option("--mode", o.mode, "validating|entailing");
  predabs->add_option("--max-atoms", o.max_atoms, "truth-table sweep cap");
  predabs->add_flag("--json", o.json, "machine-readable output");

  auto* compare = app.add_subcommand("compare", "compare modes or engines");
  add_common(compare);
  compare->add_option("--problem", o.problem, "problem JSON file");
  compare->add_option("--order", o.order, "variable order (OBDD, DPLL)");
  compare->add_flag("--dedup", o.dedup, "drop duplicate tableaux branches");
  compare->add_option("--node-budget", o.node_budget, "OBDD node budget");
  compare->add_option("--branch-budget", o.branch_budget, "search branch budget");

  try {
    std::vector<std::string> args(argv.rbegin(), argv.rend());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (check->parsed()) return do_check(o, out);
    if (resid->parsed()) return do_residual(o, out);
    if (enumerate->parsed()) return do_enumerate(o, out);
    if (cnfize->parsed()) return do_cnfize(o, out);
    if (shannon->parsed()) return do_shannon(o, out);
    if (predabs->parsed()) return do_predabs(o, out);
    return do_compare(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace partialsat::cli
