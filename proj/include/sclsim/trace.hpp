#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sclsim/generator.hpp"
#include "sclsim/simulation.hpp"

namespace sclsim {

/// Any of the runs may be absent; the corresponding event list is then empty.
struct TraceInput {
  const Problem* problem = nullptr;
  const SupRun* sup = nullptr;
  const SclSupRun* scl = nullptr;
  const VerifyReport* report = nullptr;
  std::optional<GenParams> params;
};

/// Serializes to JSON with top-level keys problem, ordering, sup_events,
/// scl_events, verify_events and outcome, in that order.
std::string emit_trace(const TraceInput& in, int indent = 2);

/// The outcome fields of a trace.
struct TraceSummary {
  std::string sup;
  std::string scl;
  std::size_t sup_inferences = 0;
  std::size_t scl_sequences = 0;
  std::vector<std::string> learned;
  std::optional<bool> verified;

  friend bool operator==(const TraceSummary&, const TraceSummary&) = default;
};

TraceSummary summarize(const TraceInput& in);
/// Throws std::invalid_argument on malformed input.
TraceSummary parse_trace_summary(const std::string& json);

}  // namespace sclsim
