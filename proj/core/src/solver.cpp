#include "heosc/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>
#include <vector>

#include "heosc/energy.hpp"

namespace heosc {

namespace {

ModeSpectrum spectrum_for(const AngularConfig& config) {
  if (std::fabs(config.tan_alpha - 1.0) <= wannier_branch_epsilon) {
    return ridge_spectrum(wannier_spectrum(config.cos_theta));
  }
  return analytic_spectrum(config);
}

double grid_value(double lo, double hi, int resolution, int index) {
  if (index == 0) return lo;
  if (index == resolution - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(index) /
                  static_cast<double>(resolution - 1);
}

void validate_domain(const SearchDomain& d) {
  if (d.resolution < 2) {
    throw std::invalid_argument("grid resolution must be >= 2");
  }
  if (!(d.cos_lo <= d.cos_hi) || !(d.tan_lo <= d.tan_hi)) {
    throw std::invalid_argument("search domain ranges are inverted");
  }
  if (d.cos_lo < global_domain.cos_lo || d.cos_hi > global_domain.cos_hi ||
      d.tan_lo < global_domain.tan_lo || d.tan_hi > global_domain.tan_hi) {
    throw std::invalid_argument("search domain exceeds the global domain");
  }
}

struct BestCell {
  double residual = std::numeric_limits<double>::infinity();
  int cos_index = -1;
  int tan_index = -1;

  bool better_than(const BestCell& other) const {
    if (residual != other.residual) return residual < other.residual;
    if (cos_index != other.cos_index) return cos_index < other.cos_index;
    return tan_index < other.tan_index;
  }
};

BestCell scan_rows(const SearchDomain& d, const QuantumNumbers& n,
                   int row_begin, int row_end) {
  BestCell best;
  for (int i = row_begin; i < row_end; ++i) {
    const double cos_theta = grid_value(d.cos_lo, d.cos_hi, d.resolution, i);
    for (int j = 0; j < d.resolution; ++j) {
      const double tan_alpha = grid_value(d.tan_lo, d.tan_hi, d.resolution, j);
      const SurfaceSample sample =
          sample_surfaces(make_config(cos_theta, tan_alpha), n);
      if (!sample.residual.has_value()) continue;
      BestCell cell{*sample.residual, i, j};
      if (cell.better_than(best)) best = cell;
    }
  }
  return best;
}

}  // namespace

unsigned resolve_thread_count(unsigned requested) {
  unsigned count = requested;
  if (count == 0) {
    count = std::thread::hardware_concurrency();
    if (count == 0) count = 1;
    if (const char* env = std::getenv("OSC_THREADS")) {
      char* end = nullptr;
      const long cap = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && cap > 0) {
        count = std::min<unsigned>(count, static_cast<unsigned>(cap));
      }
    }
  }
  return std::max(1u, count);
}

std::optional<double> radius_surface(const Mode& mode, double n,
                                     const AngularConfig& config) {
  if (std::fabs(mode.c_hat) < 1e-13 || mode.lambda_hat == 0.0) {
    return std::nullopt;
  }
  const double rho3 = config.rho * config.rho * config.rho;
  const double abs_lambda = std::fabs(mode.lambda_hat);
  const double c2 = mode.c_hat * mode.c_hat;
  return rho3 * n * n * abs_lambda * abs_lambda * abs_lambda / (4.0 * c2 * c2);
}

SurfaceSample sample_surfaces(const AngularConfig& config,
                              const QuantumNumbers& n) {
  SurfaceSample sample;
  sample.config = config;

  ModeSpectrum spectrum;
  try {
    spectrum = spectrum_for(config);
  } catch (const ComplexRootsError&) {
    sample.tag = SurfaceSample::Tag::spectrum_error;
    return sample;
  } catch (const PoleError&) {
    sample.tag = SurfaceSample::Tag::spectrum_error;
    return sample;
  } catch (const DegenerateCubicError&) {
    sample.tag = SurfaceSample::Tag::spectrum_error;
    return sample;
  }

  const double nvals[3] = {n.n1, n.n2, n.n3};
  bool all_defined = true;
  for (int i = 0; i < 3; ++i) {
    sample.radii[i] = radius_surface(spectrum.modes[i], nvals[i], config);
    all_defined = all_defined && sample.radii[i].has_value();
  }
  if (all_defined) {
    const double s1 = *sample.radii[0];
    const double s2 = *sample.radii[1];
    const double s3 = *sample.radii[2];
    sample.residual =
        std::fabs(s1 - s2) + std::fabs(s1 - s3) + std::fabs(s2 - s3);
  } else {
    sample.tag = SurfaceSample::Tag::undefined_radius;
  }
  return sample;
}

GridCell grid_scan(const SearchDomain& domain, const QuantumNumbers& n,
                   unsigned threads) {
  validate_domain(domain);
  const int rows = domain.resolution;
  const unsigned count =
      std::min<unsigned>(resolve_thread_count(threads), rows);

  BestCell best;
  if (count <= 1) {
    best = scan_rows(domain, n, 0, rows);
  } else {
    std::vector<BestCell> partial(count);
    std::vector<std::thread> workers;
    workers.reserve(count);
    const int chunk = (rows + static_cast<int>(count) - 1) /
                      static_cast<int>(count);
    for (unsigned w = 0; w < count; ++w) {
      const int begin = static_cast<int>(w) * chunk;
      const int end = std::min(rows, begin + chunk);
      workers.emplace_back([&, w, begin, end] {
        partial[w] = scan_rows(domain, n, begin, end);
      });
    }
    for (auto& t : workers) t.join();
    for (const BestCell& cell : partial) {
      if (cell.better_than(best)) best = cell;
    }
  }

  if (best.cos_index < 0) {
    throw AllUndefinedError("no grid node yields a defined residual");
  }
  const double cos_theta =
      grid_value(domain.cos_lo, domain.cos_hi, domain.resolution,
                 best.cos_index);
  const double tan_alpha =
      grid_value(domain.tan_lo, domain.tan_hi, domain.resolution,
                 best.tan_index);
  return GridCell{make_config(cos_theta, tan_alpha), best.residual,
                  best.cos_index, best.tan_index};
}

Solution solve_intersection(const QuantumNumbers& n,
                            const SolverOptions& options) {
  SearchDomain domain = global_domain;
  domain.resolution = options.resolution;

  Solution sol;
  sol.quantum_numbers = n;

  GridCell best{};
  int boundary_streak = 0;
  bool stuck_on_boundary = false;

  while (true) {
    best = grid_scan(domain, n, options.threads);
    ++sol.iterations;

    const bool on_global_edge =
        (best.cos_index == 0 && domain.cos_lo == global_domain.cos_lo) ||
        (best.cos_index == domain.resolution - 1 &&
         domain.cos_hi == global_domain.cos_hi) ||
        (best.tan_index == 0 && domain.tan_lo == global_domain.tan_lo) ||
        (best.tan_index == domain.resolution - 1 &&
         domain.tan_hi == global_domain.tan_hi);
    boundary_streak = on_global_edge ? boundary_streak + 1 : 0;
    if (boundary_streak >= 2) {
      stuck_on_boundary = true;
      break;
    }

    const double cos_width = domain.cos_hi - domain.cos_lo;
    const double tan_width = domain.tan_hi - domain.tan_lo;
    if ((cos_width < options.range_tolerance &&
         tan_width < options.range_tolerance) ||
        sol.iterations >= options.max_iterations) {
      break;
    }

    // Tenfold range shrink centered on the best node. A +-2-cell window is
    // not enough: the coarse argmin can sit O(10) cells down a flat valley
    // whose floor is set by the tan-axis offset of the nearest grid row.
    const double half_cos = cos_width / 20.0;
    const double half_tan = tan_width / 20.0;
    domain.cos_lo = std::max(global_domain.cos_lo,
                             best.config.cos_theta - half_cos);
    domain.cos_hi = std::min(global_domain.cos_hi,
                             best.config.cos_theta + half_cos);
    domain.tan_lo = std::max(global_domain.tan_lo,
                             best.config.tan_alpha - half_tan);
    domain.tan_hi = std::min(global_domain.tan_hi,
                             best.config.tan_alpha + half_tan);
  }

  // Final evaluation at the winning node.
  sol.config = best.config;
  const SurfaceSample sample = sample_surfaces(best.config, n);
  const ModeSpectrum spectrum = spectrum_for(best.config);
  for (int i = 0; i < 3; ++i) {
    sol.mode_assignment.lambda_hat[i] = spectrum.modes[i].lambda_hat;
    sol.mode_assignment.negative[i] = spectrum.modes[i].lambda_hat < 0.0;
    if (sol.mode_assignment.negative[i]) ++sol.mode_assignment.negative_count;
  }
  if (!sample.residual.has_value()) {
    sol.status = Solution::Status::all_undefined;
    sol.converged = false;
    return sol;
  }
  sol.residual = *sample.residual;
  sol.r = (*sample.radii[0] + *sample.radii[1] + *sample.radii[2]) / 3.0;
  sol.energy_hartree = energy_closed_form(sol.r, sol.config);
  if (stuck_on_boundary) {
    sol.status = Solution::Status::boundary_stuck;
    sol.converged = false;
  } else if (sol.residual < convergence_tolerance(sol.r)) {
    sol.status = Solution::Status::converged;
    sol.converged = true;
  } else {
    sol.status = Solution::Status::residual_above_tolerance;
    sol.converged = false;
  }
  return sol;
}

}  // namespace heosc
