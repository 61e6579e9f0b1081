// Command-line front end: runs the strategies, the verifier, the oracles and
// the fuzzing campaign on problem files.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sclsim/campaign.hpp"
#include "sclsim/generator.hpp"
#include "sclsim/oracle.hpp"
#include "sclsim/simulation.hpp"
#include "sclsim/trace.hpp"

using namespace sclsim;

namespace {

constexpr int kExitSat = 0;
constexpr int kExitUnsat = 1;
constexpr int kExitError = 2;

Problem load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text << '\n';
}

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::Satisfiable: return kExitSat;
    case Verdict::Unsatisfiable: return kExitUnsat;
    case Verdict::CapExceeded: return kExitError;
  }
  return kExitError;
}

void print_model(const Problem& p, const AtomSet& model) {
  std::cout << "model: {";
  bool first = true;
  for (AtomId a : model.elements()) {
    std::cout << (first ? "" : ", ") << p.str(pos(a));
    first = false;
  }
  std::cout << "}\n";
}

int cmd_sup(const std::string& file, const std::string& trace, std::size_t max_steps) {
  Problem p = load(file);
  SupRun run = run_sup_mo(p, max_steps);
  for (std::size_t m = 0; m < run.inferences.size(); ++m) {
    const auto& inf = run.inferences[m];
    std::cout << m + 1 << ". " << to_string(inf.rule) << " (";
    for (std::size_t n = 0; n < inf.premises.size(); ++n)
      std::cout << (n ? ", " : "") << p.str(run.clauses[inf.premises[n]]);
    std::cout << ") => " << p.str(inf.conclusion) << '\n';
  }
  std::cout << "verdict: " << to_string(run.verdict) << '\n';
  if (run.verdict == Verdict::Satisfiable) print_model(p, run.model);
  if (!trace.empty()) write_file(trace, emit_trace({&p, &run, nullptr, nullptr, {}}));
  return verdict_code(run.verdict);
}

int cmd_scl(const std::string& file, const std::string& trace, std::size_t max_steps) {
  Problem p = load(file);
  SclSupRun run = run_scl_sup(p, max_steps);
  for (const auto& seq : run.sequences) {
    std::cout << to_string(seq.kind) << ':';
    for (const auto& step : seq.steps) {
      std::cout << ' ' << to_string(step.rule);
      if (step.literal) std::cout << '[' << p.str(*step.literal) << ']';
      else if (step.clause) std::cout << '[' << p.str(*step.clause) << ']';
    }
    if (seq.learned) std::cout << "  learned " << p.str(*seq.learned);
    std::cout << "  (" << seq.after.ann.index << ", " << p.str(seq.after.ann.aid) << ")\n";
  }
  std::cout << "learned:";
  for (const auto& c : run.learned) std::cout << " [" << p.str(c) << ']';
  std::cout << "\nverdict: " << to_string(run.verdict) << '\n';
  if (run.verdict == Verdict::Satisfiable)
    print_model(p, run.final_state().scl.trail.true_atoms());
  if (!trace.empty()) write_file(trace, emit_trace({&p, nullptr, &run, nullptr, {}}));
  return verdict_code(run.verdict);
}

int cmd_simulate(const std::string& file, const std::string& trace, bool strict,
                 std::size_t max_steps) {
  Problem p = load(file);
  Lockstep ls = lockstep(p, max_steps);
  const VerifyReport& r = ls.report;
  std::cout << "SUP-MO: " << to_string(r.sup_verdict) << " after " << ls.sup.inferences.size()
            << " inferences\n";
  if (ls.scl)
    std::cout << "SCL-SUP: " << to_string(ls.scl->verdict) << " after "
              << ls.scl->sequences.size() << " atomic sequences, " << ls.scl->learned.size()
              << " learned\n";
  auto failures = r.failures();
  for (const auto& f : failures) std::cout << "FAIL " << f << '\n';
  std::cout << (failures.empty() ? "simulation verified" : "simulation FAILED") << '\n';
  if (!trace.empty())
    write_file(trace, emit_trace({&p, &ls.sup, ls.scl ? &*ls.scl : nullptr, &r, {}}));
  if (strict && !failures.empty()) return 1;
  return 0;
}

int cmd_oracle(const std::string& file) {
  Problem p = load(file);
  auto model = brute_force_sat(p.clauses());
  std::cout << "verdict: " << (model ? "sat" : "unsat") << '\n';
  if (model) print_model(p, *model);
  return model ? kExitSat : kExitUnsat;
}

int cmd_check(const std::string& file, std::size_t max_steps) {
  Problem p = load(file);
  SupRun sup = run_sup_mo(p, max_steps);
  SclSupRun scl = run_scl_sup(p, max_steps);
  std::size_t redundant = 0;
  for (const auto& f : audit_redundancy(sup, scl)) {
    bool sup_side = f.source == RedundancyFinding::Source::SupConclusion;
    std::cout << (sup_side ? "sup " : "scl ") << f.step + 1 << ": " << p.str(f.clause) << "  "
              << (f.redundant ? "REDUNDANT" : "non-redundant") << '\n';
    redundant += f.redundant;
  }
  std::cout << redundant << " redundant clause(s)\n";
  return redundant == 0 ? 0 : 1;
}

int cmd_gen(const GenParams& g, const std::string& out) {
  std::string text = "# generated with seed " + std::to_string(g.seed) + "\n" +
                     print_problem(generate(g));
  if (out.empty()) std::cout << text;
  else write_file(out, text);
  return 0;
}

int cmd_fuzz(const CampaignParams& c) {
  CampaignSummary s = run_campaign(c);
  std::printf("%-18s %10s\n", "property", "failures");
  for (std::size_t n = 0; n < kCheckCount; ++n)
    std::printf("%-18s %10zu\n", std::string(to_string(static_cast<Check>(n))).c_str(),
                s.failures[n]);
  std::printf("runs %zu (sat %zu, unsat %zu), max atoms %zu, max clauses %zu, %.2f s\n", s.runs,
              s.sat, s.unsat, s.max_atoms_seen, s.max_clauses_seen, s.seconds);
  for (const auto& e : s.examples) std::printf("  %s\n", e.c_str());
  return s.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ground superposition and SCL workbench"};
  app.require_subcommand(1);

  std::string file, trace, out;
  std::size_t max_steps = kDefaultStepCap;
  bool strict = false;

  auto* sup = app.add_subcommand("sup", "Run SUP-MO");
  auto* scl = app.add_subcommand("scl", "Run SCL-SUP");
  for (auto* sub : {sup, scl}) {
    sub->add_option("file", file, "Problem file")->required();
    sub->add_option("--trace", trace, "Write a JSON trace");
    sub->add_option("--max-steps", max_steps, "Step cap")->check(CLI::PositiveNumber);
  }

  auto* sim = app.add_subcommand("simulate", "Lockstep verification of SCL-SUP against SUP-MO");
  sim->add_option("file", file, "Problem file")->required();
  sim->add_option("--trace", trace, "Write a JSON trace");
  sim->add_option("--max-steps", max_steps, "Step cap")->check(CLI::PositiveNumber);
  sim->add_flag("--strict", strict, "Exit nonzero on any failed check");

  auto* oracle = app.add_subcommand("oracle", "Brute-force satisfiability");
  oracle->add_option("file", file, "Problem file")->required();

  auto* check = app.add_subcommand("check", "Redundancy audit of all derived clauses");
  check->add_option("file", file, "Problem file")->required();

  GenParams g;
  auto* gen = app.add_subcommand("gen", "Generate a random problem");
  gen->add_option("--preds", g.predicates, "Predicate count")->required();
  gen->add_option("--consts", g.constants, "Constant count")->required();
  gen->add_option("--clauses", g.clauses, "Clause count")->required();
  gen->add_option("--max-len", g.max_length, "Maximal clause length")->required();
  gen->add_option("--seed", g.seed, "Seed")->required();
  gen->add_option("--max-arity", g.max_arity, "Maximal predicate arity");
  gen->add_option("--max-atoms", g.max_atoms, "Atom universe bound");
  gen->add_flag("--tautologies", g.allow_tautologies, "Allow tautological clauses");
  gen->add_option("--out", out, "Output file");

  CampaignParams c;
  auto* fuzz = app.add_subcommand("fuzz", "Fuzzing campaign");
  fuzz->add_option("--runs", c.runs, "Instances")->required();
  fuzz->add_option("--seed", c.seed, "Campaign seed")->required();
  fuzz->add_option("--workers", c.workers, "Worker threads");
  fuzz->add_option("--max-atoms", c.max_atoms, "Atom bound per instance");
  fuzz->add_option("--max-clauses", c.max_clauses, "Clause bound per instance");
  fuzz->add_option("--max-len", c.max_length, "Clause length bound");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sup) return cmd_sup(file, trace, max_steps);
    if (*scl) return cmd_scl(file, trace, max_steps);
    if (*sim) return cmd_simulate(file, trace, strict, max_steps);
    if (*oracle) return cmd_oracle(file);
    if (*check) return cmd_check(file, max_steps);
    if (*gen) return cmd_gen(g, out);
    if (*fuzz) return cmd_fuzz(c);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
