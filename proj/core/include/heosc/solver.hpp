#pragma once

#include <array>
#include <optional>
#include <stdexcept>

#include "heosc/model.hpp"
#include "heosc/spectrum.hpp"

namespace heosc {

/// No grid node yielded a defined residual.
class AllUndefinedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The three radius surfaces and the intersection residual at one
/// configuration. A surface is undefined where its mode has c_hat ~ 0 or a
/// zero eigenvalue; one undefined surface makes the residual undefined.
struct SurfaceSample {
  enum class Tag { ok, undefined_radius, spectrum_error };

  AngularConfig config;
  std::array<std::optional<double>, 3> radii;  // units of a
  std::optional<double> residual;              // units of a
  Tag tag = Tag::ok;
};

/// Scan window. Ranges must stay inside the published global domain
/// cos_theta in [-0.99999, 0.99999], tan_alpha in [1.00001, 10].
struct SearchDomain {
  double cos_lo = -0.99999;
  double cos_hi = 0.99999;
  double tan_lo = 1.00001;
  double tan_hi = 10.0;
  int resolution = 1000;  // grid nodes per axis, endpoints inclusive
};

inline constexpr SearchDomain global_domain{};

struct SolverOptions {
  int resolution = 1000;
  int max_iterations = 15;       // refinement scan cap
  double range_tolerance = 1e-6; // stop once both window widths fall below
  unsigned threads = 0;          // 0 = hardware concurrency (OSC_THREADS caps)
};

/// Minimal-residual grid node; indices follow the scan axes, used by the
/// deterministic tie-break (smaller cos index, then smaller tan index).
struct GridCell {
  AngularConfig config;
  double residual;
  int cos_index;
  int tan_index;
};

/// Which lambda_hat received which quantum number, and the negative-mode
/// bookkeeping of the imaginary-N convention.
struct ModeAssignment {
  std::array<double, 3> lambda_hat;  // slot i paired with n_{i+1}
  std::array<bool, 3> negative;
  int negative_count = 0;
};

struct Solution {
  enum class Status {
    converged,
    residual_above_tolerance,
    boundary_stuck,
    all_undefined,
  };

  QuantumNumbers quantum_numbers;
  AngularConfig config;
  double r = 0.0;               // units of a, mean of the three surfaces
  double energy_hartree = 0.0;
  double residual = 0.0;
  int iterations = 0;           // grid scans performed
  bool converged = false;
  Status status = Status::all_undefined;
  ModeAssignment mode_assignment;
};

/// Radius surface s(theta, alpha; n) in units of a for one mode:
/// s = rho^3 n^2 |lambda_hat|^3 / (4 c_hat^4). Negative-lambda modes carry
/// imaginary quantum numbers, so N^2 lambda^3 = n^2 |lambda|^3 and the
/// surface stays positive for every mode. Undefined when |c_hat| < 1e-13 or
/// lambda_hat = 0.
std::optional<double> radius_surface(const Mode& mode, double n,
                                     const AngularConfig& config);

/// Spectrum (general or ridge branch), mode assignment, three surfaces,
/// residual. Spectrum failures yield an all-undefined sample with the
/// spectrum_error tag rather than an exception.
SurfaceSample sample_surfaces(const AngularConfig& config,
                              const QuantumNumbers& n);

/// Evaluates every node of the inclusive uniform grid and returns the node
/// of minimal defined residual. Node evaluation is pure and the reduction
/// uses the (residual, cos index, tan index) order, so the result is
/// identical under any thread partitioning. Throws AllUndefinedError when
/// nothing is defined.
GridCell grid_scan(const SearchDomain& domain, const QuantumNumbers& n,
                   unsigned threads = 0);

/// Coarse-to-fine intersection search: scans the global domain, then
/// repeatedly shrinks each axis range tenfold around the best node (clamped
/// to the global domain) and rescans until both widths drop below
/// range_tolerance or the iteration cap. Convergence requires the final
/// residual below 1e-4 * max(1, r); a minimizer pinned to the global
/// boundary for two consecutive scans aborts the search.
Solution solve_intersection(const QuantumNumbers& n,
                            const SolverOptions& options = {});

/// Residual tolerance at radius r (units of a).
inline double convergence_tolerance(double r) {
  return 1e-4 * (r > 1.0 ? r : 1.0);
}

/// Thread count resolution: explicit request, else OSC_THREADS, else
/// hardware concurrency; always at least 1.
unsigned resolve_thread_count(unsigned requested);

}  // namespace heosc
