#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mzparity/closed_form.hpp"
#include "mzparity/input_states.hpp"

namespace mzparity {

/// Input-family selection for a sweep. Twin-Fock and N00N are indexed by
/// the per-mode photon number n; TMSVS and PCS by the total mean photon
/// number (the parameter is solved from it); ECS by the coherent-state
/// mean. tail_tol drives cutoff auto-selection for the diagonal
/// superposition families, capped at max_cutoff.
struct FamilySpec {
  std::string name;        // "twin-fock" | "tmsvs" | "pcs" | "noon" | "ecs"
  int n = -1;              // twin-fock / noon
  double total_mean = -1.0; // tmsvs / pcs (ecs: n_bar)
  double noon_phase = 0.0;
  double tail_tol = 1e-10;
  int max_cutoff = 2000;
};

/// One row of a sweep: abscissa, named value columns, and the truncation
/// metadata needed to reproduce it.
struct ScanRecord {
  std::string family;
  double param = 0.0; // N, |xi|, |zeta| or n_bar
  double x = 0.0;
  std::vector<std::pair<std::string, double>> columns;
  bool divergent = false;
  int cutoff = 0;
  double tail_bound = 0.0;
};

/// Parity versus phase over a sorted, nonempty grid.
std::vector<ScanRecord> scan_parity(const FamilySpec& spec, std::span<const double> phi_grid);

/// Phase uncertainty versus total mean photon number at fixed phi, with
/// sql and hl reference columns. Divergent points are flagged records.
std::vector<ScanRecord> scan_uncertainty(const FamilySpec& spec,
                                         std::span<const double> total_means, double phi);

/// SNR versus total mean photon number at fixed phi (phi != 0).
std::vector<ScanRecord> scan_snr(const FamilySpec& spec, std::span<const double> total_means,
                                 double phi);

enum class JointStage { Before, After };

struct JointScan {
  JointDistribution dist;
  std::string family;
  double param = 0.0;
  std::string stage;
  int coeff_cutoff = 0;
  double tail_bound = 0.0;
};

/// Joint photon-number distribution of a diagonal family, either the input
/// state (diagonal) or the state after the first beam splitter.
JointScan export_joint(const FamilySpec& spec, JointStage stage);

/// Uniform grid helper, endpoints included.
std::vector<double> linspace(double lo, double hi, int points);

} // namespace mzparity
