#include "sclsim/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <thread>

#include "sclsim/oracle.hpp"

namespace sclsim {

std::vector<RedundancyFinding> audit_redundancy(const SupRun& sup, const SclSupRun& scl) {
  std::vector<RedundancyFinding> out;
  for (std::size_t m = 0; m < sup.inferences.size(); ++m) {
    const Clause& c = sup.inferences[m].conclusion;
    out.push_back({RedundancyFinding::Source::SupConclusion, m, c,
                   is_redundant(c, sup.state(m))});
  }
  for (std::size_t n = 0; n < scl.sequences.size(); ++n) {
    const auto& seq = scl.sequences[n];
    if (!seq.learned) continue;
    out.push_back({RedundancyFinding::Source::SclLearned, n, *seq.learned,
                   is_redundant(*seq.learned, seq.before.scl.clauses())});
  }
  return out;
}

std::string_view to_string(Check c) {
  switch (c) {
    case Check::Invariants: return "invariants";
    case Check::Progress: return "progress";
    case Check::FinalState: return "final-state";
    case Check::Regularity: return "regularity";
    case Check::SimulationError: return "simulation-error";
    case Check::SupRedundancy: return "sup-redundancy";
    case Check::SclRedundancy: return "scl-redundancy";
    case Check::Verdict: return "verdict";
    case Check::Model: return "model";
    case Check::Coincidence: return "coincidence";
  }
  return "?";
}

InstanceResult check_instance(const Problem& problem, std::size_t cap) {
  InstanceResult r;
  r.atoms = problem.atoms().size();
  r.clauses = problem.clauses().size();
  auto fail = [&](Check c, std::string msg) { r.failures.emplace_back(c, std::move(msg)); };

  auto oracle = brute_force_sat(problem.clauses());
  r.oracle_sat = oracle.has_value();
  Lockstep ls = lockstep(problem, cap);
  r.sup = ls.sup.verdict;
  const VerifyReport& rep = ls.report;
  if (rep.error) {
    fail(Check::SimulationError, *rep.error);
    return r;
  }
  const SclSupRun& scl = *ls.scl;
  r.scl = scl.verdict;

  for (const auto& f : rep.initial.failures()) fail(Check::Invariants, "initial: " + f);
  for (std::size_t n = 0; n < rep.sequences.size(); ++n) {
    for (const auto& f : rep.sequences[n].invariants.failures())
      fail(Check::Invariants, "after sequence " + std::to_string(n) + ": " + f);
    if (!rep.sequences[n].progress)
      fail(Check::Progress, "sequence " + std::to_string(n) + " makes no progress");
  }
  if (!rep.final_state_ok || !rep.final_index_ok)
    fail(Check::FinalState, rep.final_state_ok ? "final annotated index differs from SUP-MO"
                                               : "final state not a refutation or a model");
  for (const auto& v : rep.regularity) fail(Check::Regularity, v.message);
  for (const auto& c : rep.coincidence) fail(Check::Coincidence, c);

  for (const auto& f : audit_redundancy(ls.sup, scl)) {
    if (!f.redundant) continue;
    bool sup_side = f.source == RedundancyFinding::Source::SupConclusion;
    fail(sup_side ? Check::SupRedundancy : Check::SclRedundancy,
         (sup_side ? "SUP-MO conclusion " : "SCL-SUP learned ") + problem.str(f.clause) +
             " is redundant");
  }

  Verdict expected = r.oracle_sat ? Verdict::Satisfiable : Verdict::Unsatisfiable;
  if (r.sup != expected || r.scl != expected)
    fail(Check::Verdict, "oracle " + std::string(to_string(expected)) + ", SUP-MO " +
                             std::string(to_string(r.sup)) + ", SCL-SUP " +
                             std::string(to_string(r.scl)));
  if (r.sup == Verdict::Satisfiable) {
    for (const auto& c : problem.clauses())
      if (!eval_herbrand(ls.sup.model, c)) fail(Check::Model, "N_I falsifies " + problem.str(c));
  }
  if (r.scl == Verdict::Satisfiable) {
    AtomSet trail_model = scl.final_state().scl.trail.true_atoms();
    for (const auto& c : problem.clauses())
      if (!eval_herbrand(trail_model, c))
        fail(Check::Model, "trail model falsifies " + problem.str(c));
  }
  return r;
}

GenParams instance_params(const CampaignParams& c, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(c.seed), static_cast<std::uint32_t>(c.seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  auto uniform = [&](unsigned lo, unsigned hi) {
    return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
  };
  GenParams g;
  g.predicates = uniform(1, std::min(3u, c.max_atoms));
  g.constants = uniform(1, 3);
  g.max_arity = uniform(0, 2);
  g.clauses = uniform(1, c.max_clauses);
  g.max_length = uniform(1, c.max_length);
  g.max_atoms = c.max_atoms;
  g.seed = rng();
  return g;
}

std::size_t CampaignSummary::total_failures() const {
  std::size_t n = 0;
  for (auto f : failures) n += f;
  return n;
}

CampaignSummary run_campaign(const CampaignParams& params) {
  auto start = std::chrono::steady_clock::now();
  CampaignSummary summary;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  constexpr std::size_t kMaxExamples = 10;

  auto worker = [&] {
    for (std::size_t i = next++; i < params.runs; i = next++) {
      GenParams g = instance_params(params, i);
      InstanceResult r;
      try {
        r = check_instance(generate(g));
      } catch (const std::exception& e) {
        r.params = g;
        r.failures.emplace_back(Check::SimulationError, e.what());
      }
      std::lock_guard lock(mu);
      ++summary.runs;
      (r.oracle_sat ? summary.sat : summary.unsat)++;
      summary.max_atoms_seen = std::max(summary.max_atoms_seen, r.atoms);
      summary.max_clauses_seen = std::max(summary.max_clauses_seen, r.clauses);
      for (const auto& [check, msg] : r.failures) {
        ++summary.failures[static_cast<std::size_t>(check)];
        if (summary.examples.size() < kMaxExamples)
          summary.examples.push_back("run " + std::to_string(i) + " (seed " +
                                     std::to_string(g.seed) + "): " +
                                     std::string(to_string(check)) + ": " + msg);
      }
    }
  };

  unsigned workers = std::max(1u, params.workers);
  std::vector<std::thread> threads;
  for (unsigned w = 1; w < workers; ++w) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  // Examples arrive in completion order; sort for reproducible output.
  std::sort(summary.examples.begin(), summary.examples.end());
  summary.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace sclsim
