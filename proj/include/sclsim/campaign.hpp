#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sclsim/generator.hpp"
#include "sclsim/simulation.hpp"

namespace sclsim {

struct RedundancyFinding {
  enum class Source { SupConclusion, SclLearned } source;
  std::size_t step;
  Clause clause;
  bool redundant;
};

/// Checks every SUP-MO conclusion against N^m and every SCL-SUP learned
/// clause against N^0 ∪ U at learn time.
std::vector<RedundancyFinding> audit_redundancy(const SupRun& sup, const SclSupRun& scl);

/// Failure categories, one per checked property.
enum class Check {
  Invariants,
  Progress,
  FinalState,
  Regularity,
  SimulationError,
  SupRedundancy,
  SclRedundancy,
  Verdict,
  Model,
  Coincidence,
};
inline constexpr std::size_t kCheckCount = 10;
std::string_view to_string(Check c);

struct InstanceResult {
  GenParams params;
  bool oracle_sat = false;
  Verdict sup = Verdict::CapExceeded;
  Verdict scl = Verdict::CapExceeded;
  std::size_t atoms = 0;
  std::size_t clauses = 0;
  std::vector<std::pair<Check, std::string>> failures;
};

/// Runs both strategies, the lockstep verifier and the oracles on one problem.
InstanceResult check_instance(const Problem& problem, std::size_t cap = kDefaultStepCap);

struct CampaignParams {
  std::size_t runs = 1000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  unsigned max_atoms = 8;
  unsigned max_clauses = 10;
  unsigned max_length = 4;
};

/// Instance parameters for run `index`; a pure function of the campaign seed.
GenParams instance_params(const CampaignParams& c, std::size_t index);

struct CampaignSummary {
  std::size_t runs = 0;
  std::size_t sat = 0;
  std::size_t unsat = 0;
  std::size_t max_atoms_seen = 0;
  std::size_t max_clauses_seen = 0;
  std::array<std::size_t, kCheckCount> failures{};
  /// The first few failures, each with its instance seed.
  std::vector<std::string> examples;
  double seconds = 0;

  std::size_t total_failures() const;
  bool ok() const { return total_failures() == 0; }
};

CampaignSummary run_campaign(const CampaignParams& params);

}  // namespace sclsim
