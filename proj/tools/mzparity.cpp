// Command-line front end: parity / uncertainty / snr / joint sweeps with
// CSV or JSON output, plus the cross-validation suite under `verify`.
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>

#include "mzparity/errors.hpp"
#include "mzparity/kernels.hpp"
#include "mzparity/scan_io.hpp"
#include "mzparity/sweeps.hpp"
#include "mzparity/verification.hpp"
#include "mzparity/version.hpp"

namespace {

// Flag-level validation failure: exit code 2, message names the flag.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputOptions {
  std::string path;   // empty = stdout
  std::string format = "csv";
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--out", out.path, "Output file (default: stdout)");
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

template <typename WriteFn>
void emit(const OutputOptions& out, WriteFn&& write) {
  if (out.path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream file(out.path, std::ios::binary);
  if (!file) throw usage_error("--out: cannot open '" + out.path + "' for writing");
  write(file);
  std::cerr << "wrote " << out.path << "\n";
}

struct FamilyFlags {
  std::string family;
  int n = -1;
  double total_mean = -1.0;
  double noon_phase = 0.0;
  double tail_tol = 1e-10;
  int max_cutoff = 2000;
};

void add_family_flags(CLI::App* cmd, FamilyFlags& flags, bool all_families) {
  auto* family = cmd->add_option("--family", flags.family, "Input state family");
  if (all_families) {
    family->check(CLI::IsMember({"twin-fock", "tmsvs", "pcs", "noon", "ecs"}));
  } else {
    family->check(CLI::IsMember({"twin-fock", "tmsvs", "pcs"}));
  }
  family->required();
  cmd->add_option("--n", flags.n, "Photon number per mode (twin-fock, noon)");
  cmd->add_option("--total-mean", flags.total_mean,
                  "Total mean photon number (tmsvs, pcs; 2N for twin-fock; "
                  "coherent mean for ecs)");
  cmd->add_option("--noon-phase", flags.noon_phase, "N00N relative phase Phi")
      ->capture_default_str();
  cmd->add_option("--tail-tol", flags.tail_tol, "Target truncated tail mass")
      ->capture_default_str();
  cmd->add_option("--max-cutoff", flags.max_cutoff, "Cap on the auto-selected cutoff")
      ->capture_default_str();
}

// For scans indexed by the mean grid; --n / --total-mean are not consulted.
mzparity::FamilySpec to_spec_for_means(const FamilyFlags& flags) {
  mzparity::FamilySpec spec;
  spec.name = flags.family;
  spec.tail_tol = flags.tail_tol;
  spec.max_cutoff = flags.max_cutoff;
  return spec;
}

mzparity::FamilySpec to_spec(const FamilyFlags& flags) {
  mzparity::FamilySpec spec;
  spec.name = flags.family;
  spec.n = flags.n;
  spec.total_mean = flags.total_mean;
  spec.noon_phase = flags.noon_phase;
  spec.tail_tol = flags.tail_tol;
  spec.max_cutoff = flags.max_cutoff;

  if (spec.name == "twin-fock") {
    if (spec.n < 0 && spec.total_mean < 0.0) {
      throw usage_error("--n or --total-mean is required for --family twin-fock");
    }
  } else if (spec.name == "noon") {
    if (spec.n < 1) throw usage_error("--n (>= 1) is required for --family noon");
  } else {
    if (spec.total_mean < 0.0) {
      throw usage_error("--total-mean is required for --family " + spec.name);
    }
  }
  return spec;
}

std::vector<double> mean_grid(double lo, double hi, double step) {
  if (!(step > 0.0)) throw usage_error("--mean-step must be positive");
  if (hi < lo) throw usage_error("--mean-max must be >= --mean-min");
  std::vector<double> grid;
  for (double m = lo; m <= hi + 1e-12; m += step) grid.push_back(m);
  return grid;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mach-Zehnder parity-detection interferometry sweeps"};
  app.set_version_flag("--version", mzparity::kVersion);
  app.require_subcommand(1);

  std::string kernels = "auto";
  app.add_option("--kernels", kernels, "Kernel backend")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}))
      ->capture_default_str();
  const auto apply_kernels = [&kernels] {
    if (kernels == "scalar") {
      mzparity::kernels::select(mzparity::kernels::Backend::Scalar);
    } else if (kernels == "avx2") {
      if (!mzparity::kernels::avx2_available()) {
        throw usage_error("--kernels avx2: not supported on this machine");
      }
      mzparity::kernels::select(mzparity::kernels::Backend::Avx2);
    }
  };

  // ---- parity ----
  auto* parity_cmd = app.add_subcommand("parity", "Parity expectation versus phase");
  FamilyFlags parity_family;
  add_family_flags(parity_cmd, parity_family, /*all_families=*/true);
  double phi_min = 0.0, phi_max = std::numbers::pi / 2.0;
  int points = 2001;
  parity_cmd->add_option("--phi-min", phi_min, "Grid start (radians)")->capture_default_str();
  parity_cmd->add_option("--phi-max", phi_max, "Grid end (radians)")->capture_default_str();
  parity_cmd->add_option("--points", points, "Grid size")->capture_default_str();
  OutputOptions parity_out;
  add_output_flags(parity_cmd, parity_out);
  parity_cmd->callback([&] {
    apply_kernels();
    if (points < 1) throw usage_error("--points must be >= 1");
    if (phi_max < phi_min) throw usage_error("--phi-max must be >= --phi-min");
    const auto grid = mzparity::linspace(phi_min, phi_max, points);
    const auto records = mzparity::scan_parity(to_spec(parity_family), grid);
    emit(parity_out, [&](std::ostream& os) {
      if (parity_out.format == "csv") {
        mzparity::write_scan_csv(os, records, "phi", /*with_flag=*/false);
      } else {
        mzparity::write_scan_json(os, records, "phi", /*with_flag=*/false);
      }
    });
  });

  // ---- uncertainty ----
  auto* unc_cmd = app.add_subcommand("uncertainty",
                                     "Phase uncertainty versus total mean photon number");
  FamilyFlags unc_family;
  add_family_flags(unc_cmd, unc_family, /*all_families=*/false);
  double unc_phi = 0.0;
  double unc_lo = 2.0, unc_hi = 60.0, unc_step = 2.0;
  unc_cmd->add_option("--phi", unc_phi, "Operating phase (radians)")->required();
  unc_cmd->add_option("--mean-min", unc_lo, "Smallest total mean")->capture_default_str();
  unc_cmd->add_option("--mean-max", unc_hi, "Largest total mean")->capture_default_str();
  unc_cmd->add_option("--mean-step", unc_step, "Grid step")->capture_default_str();
  OutputOptions unc_out;
  add_output_flags(unc_cmd, unc_out);
  unc_cmd->callback([&] {
    apply_kernels();
    mzparity::FamilySpec spec = to_spec_for_means(unc_family);
    const auto grid = mean_grid(unc_lo, unc_hi, unc_step);
    const auto records = mzparity::scan_uncertainty(spec, grid, unc_phi);
    emit(unc_out, [&](std::ostream& os) {
      if (unc_out.format == "csv") {
        mzparity::write_scan_csv(os, records, "total_mean", /*with_flag=*/true);
      } else {
        mzparity::write_scan_json(os, records, "total_mean", /*with_flag=*/true);
      }
    });
  });

  // ---- snr ----
  auto* snr_cmd = app.add_subcommand("snr", "Signal-to-noise ratio versus total mean");
  FamilyFlags snr_family;
  add_family_flags(snr_cmd, snr_family, /*all_families=*/false);
  double snr_phi = 0.0;
  double snr_lo = 4.0, snr_hi = 30.0, snr_step = 2.0;
  snr_cmd->add_option("--phi", snr_phi, "Operating phase (radians)")->required();
  snr_cmd->add_option("--mean-min", snr_lo, "Smallest total mean")->capture_default_str();
  snr_cmd->add_option("--mean-max", snr_hi, "Largest total mean")->capture_default_str();
  snr_cmd->add_option("--mean-step", snr_step, "Grid step")->capture_default_str();
  OutputOptions snr_out;
  add_output_flags(snr_cmd, snr_out);
  snr_cmd->callback([&] {
    apply_kernels();
    mzparity::FamilySpec spec = to_spec_for_means(snr_family);
    const auto grid = mean_grid(snr_lo, snr_hi, snr_step);
    const auto records = mzparity::scan_snr(spec, grid, snr_phi);
    emit(snr_out, [&](std::ostream& os) {
      if (snr_out.format == "csv") {
        mzparity::write_scan_csv(os, records, "total_mean", /*with_flag=*/true);
      } else {
        mzparity::write_scan_json(os, records, "total_mean", /*with_flag=*/true);
      }
    });
  });

  // ---- joint ----
  auto* joint_cmd = app.add_subcommand("joint", "Joint photon-number distribution");
  FamilyFlags joint_family;
  add_family_flags(joint_cmd, joint_family, /*all_families=*/false);
  std::string stage;
  joint_cmd->add_option("--stage", stage, "before or after the first beam splitter")
      ->check(CLI::IsMember({"before", "after"}))
      ->required();
  OutputOptions joint_out;
  add_output_flags(joint_cmd, joint_out);
  joint_cmd->callback([&] {
    apply_kernels();
    const auto spec = to_spec(joint_family);
    const auto joint = mzparity::export_joint(
        spec, stage == "before" ? mzparity::JointStage::Before : mzparity::JointStage::After);
    emit(joint_out, [&](std::ostream& os) {
      if (joint_out.format == "csv") {
        mzparity::write_joint_csv(os, joint);
      } else {
        mzparity::write_joint_json(os, joint);
      }
    });
  });

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "Run the cross-validation suite");
  mzparity::VerifyOptions verify_options;
  verify_cmd->add_option("--max-n", verify_options.max_n, "Twin-Fock range for equivalence")
      ->capture_default_str();
  verify_cmd->add_option("--tolerance", verify_options.tolerance, "Parity agreement tolerance")
      ->capture_default_str();
  bool verify_failed = false;
  verify_cmd->callback([&] {
    apply_kernels();
    const auto results = mzparity::run_verification(verify_options);
    mzparity::print_check_table(std::cout, results);
    verify_failed = !mzparity::all_passed(results);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const mzparity::divergence_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return verify_failed ? 1 : 0;
}
