#include "mzparity/sweeps.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mzparity/errors.hpp"

namespace mzparity {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct Resolved {
  double param = 0.0;
  DiagonalCoeffs coeffs;
};

int twin_fock_n(const FamilySpec& spec, double total_mean) {
  double mean = total_mean;
  if (mean < 0.0 && spec.n >= 0) return spec.n;
  if (mean < 0.0) throw std::invalid_argument("twin-fock family needs n or total mean");
  const double half = 0.5 * mean;
  const int n = static_cast<int>(std::llround(half));
  if (std::abs(half - n) > 1e-9 || n < 0) {
    throw std::invalid_argument("twin-fock total mean must be an even integer, got " +
                                std::to_string(mean));
  }
  return n;
}

/// Build coefficients for a diagonal family at a given total mean.
Resolved resolve_diagonal(const FamilySpec& spec, double total_mean) {
  Resolved out;
  if (spec.name == "twin-fock") {
    const int n = twin_fock_n(spec, total_mean);
    out.param = n;
    out.coeffs = twin_fock_coeffs(n, n);
  } else if (spec.name == "tmsvs") {
    if (total_mean < 0.0) throw std::invalid_argument("tmsvs family needs a total mean");
    const double xi = solve_param_for_mean(StateFamily::Tmsvs, total_mean);
    out.param = xi;
    const int cutoff = std::min(tmsvs_cutoff_for(xi, spec.tail_tol), spec.max_cutoff);
    out.coeffs = tmsvs_coeffs(xi, cutoff);
  } else if (spec.name == "pcs") {
    if (total_mean < 0.0) throw std::invalid_argument("pcs family needs a total mean");
    const double zeta = solve_param_for_mean(StateFamily::Pcs, total_mean);
    out.param = zeta;
    const int cutoff = std::min(pcs_cutoff_for(zeta, spec.tail_tol), spec.max_cutoff);
    out.coeffs = pcs_coeffs(zeta, cutoff, 1.0); // bound recorded, cap respected
  } else {
    throw std::invalid_argument("family '" + spec.name + "' is not a diagonal superposition");
  }
  return out;
}

void check_grid(std::span<const double> grid, const char* what) {
  if (grid.empty()) throw std::invalid_argument(std::string(what) + ": empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] >= grid[i - 1])) {
      throw std::invalid_argument(std::string(what) + ": grid must be sorted");
    }
  }
}

} // namespace

std::vector<double> linspace(double lo, double hi, int points) {
  if (points < 1) throw std::invalid_argument("linspace: need at least one point");
  std::vector<double> out(static_cast<std::size_t>(points));
  if (points == 1) {
    out[0] = lo;
    return out;
  }
  for (int i = 0; i < points; ++i) {
    out[static_cast<std::size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
  }
  return out;
}

std::vector<ScanRecord> scan_parity(const FamilySpec& spec, std::span<const double> phi_grid) {
  check_grid(phi_grid, "scan_parity");
  std::vector<ScanRecord> records;
  records.reserve(phi_grid.size());

  if (spec.name == "noon") {
    if (spec.n < 1) throw std::invalid_argument("noon family needs n >= 1");
    for (const double phi : phi_grid) {
      ScanRecord rec;
      rec.family = spec.name;
      rec.param = spec.n;
      rec.x = phi;
      rec.columns.emplace_back("parity", parity_noon(spec.n, spec.noon_phase, phi));
      rec.cutoff = spec.n;
      records.push_back(std::move(rec));
    }
    return records;
  }
  if (spec.name == "ecs") {
    const double n_bar = spec.total_mean;
    if (n_bar < 0.0) throw std::invalid_argument("ecs family needs a mean photon number");
    for (const double phi : phi_grid) {
      ScanRecord rec;
      rec.family = spec.name;
      rec.param = n_bar;
      rec.x = phi;
      rec.columns.emplace_back("parity", parity_ecs(n_bar, phi));
      records.push_back(std::move(rec));
    }
    return records;
  }

  const Resolved res = resolve_diagonal(spec, spec.total_mean);
  const auto weights = res.coeffs.probabilities();
  std::vector<double> values(phi_grid.size()), derivs(phi_grid.size());
  parity_superposition_grid(weights, phi_grid, values, derivs);
  for (std::size_t i = 0; i < phi_grid.size(); ++i) {
    ScanRecord rec;
    rec.family = spec.name;
    rec.param = res.param;
    rec.x = phi_grid[i];
    rec.columns.emplace_back("parity", values[i]);
    rec.cutoff = res.coeffs.cutoff();
    rec.tail_bound = res.coeffs.tail_mass_bound;
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<ScanRecord> scan_uncertainty(const FamilySpec& spec,
                                         std::span<const double> total_means, double phi) {
  check_grid(total_means, "scan_uncertainty");
  if (phi == 0.0) {
    throw divergence_error("scan_uncertainty: phase uncertainty is undefined at phi = 0");
  }
  std::vector<ScanRecord> records;
  records.reserve(total_means.size());
  for (const double mean : total_means) {
    if (!(mean > 0.0)) throw std::invalid_argument("scan_uncertainty: total means must be > 0");
    const Resolved res = resolve_diagonal(spec, mean);
    ScanRecord rec;
    rec.family = spec.name;
    rec.param = res.param;
    rec.x = mean;
    rec.cutoff = res.coeffs.cutoff();
    rec.tail_bound = res.coeffs.tail_mass_bound;
    try {
      const auto pu = phase_uncertainty(res.coeffs, phi);
      rec.columns.emplace_back("delta_phi", pu.delta_phi);
    } catch (const divergence_error&) {
      rec.divergent = true;
      rec.columns.emplace_back("delta_phi", kNan);
    }
    rec.columns.emplace_back("sql", sql(mean));
    rec.columns.emplace_back("hl", hl(mean));
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<ScanRecord> scan_snr(const FamilySpec& spec, std::span<const double> total_means,
                                 double phi) {
  check_grid(total_means, "scan_snr");
  if (phi == 0.0) {
    throw divergence_error("scan_snr: SNR diverges at phi = 0 for pure inputs");
  }
  std::vector<ScanRecord> records;
  records.reserve(total_means.size());
  for (const double mean : total_means) {
    if (!(mean > 0.0)) throw std::invalid_argument("scan_snr: total means must be > 0");
    const Resolved res = resolve_diagonal(spec, mean);
    ScanRecord rec;
    rec.family = spec.name;
    rec.param = res.param;
    rec.x = mean;
    rec.cutoff = res.coeffs.cutoff();
    rec.tail_bound = res.coeffs.tail_mass_bound;
    const auto parity = parity_superposition(res.coeffs, phi);
    rec.columns.emplace_back("parity", parity.value);
    try {
      const double value = snr(res.coeffs, phi);
      rec.columns.emplace_back("snr", value);
      rec.columns.emplace_back("log10_snr", std::log10(std::abs(value)));
    } catch (const divergence_error&) {
      rec.divergent = true;
      rec.columns.emplace_back("snr", kNan);
      rec.columns.emplace_back("log10_snr", kNan);
    }
    rec.columns.emplace_back("sql", sql(mean));
    rec.columns.emplace_back("hl", hl(mean));
    records.push_back(std::move(rec));
  }
  return records;
}

JointScan export_joint(const FamilySpec& spec, JointStage stage) {
  const Resolved res = resolve_diagonal(spec, spec.total_mean);
  JointScan out;
  out.family = spec.name;
  out.param = res.param;
  out.coeff_cutoff = res.coeffs.cutoff();
  out.tail_bound = res.coeffs.tail_mass_bound;
  if (stage == JointStage::Before) {
    out.stage = "before";
    const auto w = res.coeffs.probabilities();
    out.dist.cutoff = res.coeffs.cutoff();
    const std::size_t dim = w.size();
    out.dist.p.assign(dim * dim, 0.0);
    for (std::size_t n = 0; n < dim; ++n) out.dist.p[n * dim + n] = w[n];
  } else {
    out.stage = "after";
    out.dist = joint_after_bs(res.coeffs);
  }
  return out;
}

} // namespace mzparity
