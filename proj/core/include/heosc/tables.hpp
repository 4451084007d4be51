#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "heosc/solver.hpp"

namespace heosc {

/// One row of a quantum-number sweep.
struct SweepRecord {
  double n1, n2, n3;
  double cos_theta, tan_alpha;
  double r_bohr;
  double energy_hartree;
  double residual;
  bool converged;
};

/// Inclusive arithmetic range start:stop:step for one quantum-number axis.
struct SweepRange {
  double start = 0.5;
  double stop = 5.0;
  double step = 0.5;

  std::vector<double> values() const;
};

/// Parses "start:stop:step"; throws std::invalid_argument on malformed text.
SweepRange parse_sweep_range(const std::string& text);

/// Solves every triple of the cubed range in lexicographic order.
/// Non-converged triples are kept (converged=false) rather than dropped, so
/// the emitted table mirrors the published blank cells distinguishably.
std::vector<SweepRecord> run_sweep(const SweepRange& range,
                                   const SolverOptions& options);

SweepRecord record_of(const Solution& sol);

/// Shortest round-trip decimal representation (std::to_chars).
std::string format_double(double value);

/// Header: n1,n2,n3,cos_theta,tan_alpha,r_bohr,energy_hartree,residual,converged
void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& rows);

// ---------------------------------------------------------------------------
// Fixture regression against the published tables.
// ---------------------------------------------------------------------------

struct FixtureEntry {
  enum class Quantity { r, cos_theta, tan_alpha, energy, residual };

  double n1, n2, n3;
  Quantity quantity;
  double value;      // tabulated value
  double tolerance;  // absolute for angles/ratio, relative for r and energy,
                     // multiplier for residual (pass if computed <= tol*value)
};

FixtureEntry::Quantity parse_quantity(const std::string& name);
std::string quantity_name(FixtureEntry::Quantity q);

/// CSV lines `n1,n2,n3,quantity,value,tolerance`, `#` comments and blank
/// lines skipped. Throws std::runtime_error naming the 1-based line number
/// on malformed input.
std::vector<FixtureEntry> parse_fixtures(std::istream& in);

/// The embedded regression set: >= 40 entries sampled from all five
/// published tables across every n1 block.
const std::vector<FixtureEntry>& embedded_fixtures();
extern const char* const embedded_fixtures_csv;

struct FixtureResult {
  FixtureEntry entry;
  double computed;
  double deviation;  // same semantics as the tolerance
  bool passed;
};

struct VerifyReport {
  std::vector<FixtureResult> results;
  bool all_passed = true;
};

/// Solves each unique triple once (cached) and checks every entry.
VerifyReport run_fixtures(const std::vector<FixtureEntry>& entries,
                          const SolverOptions& options);

}  // namespace heosc
