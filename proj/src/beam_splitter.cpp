#include "mzparity/beam_splitter.hpp"

#include <cmath>
#include <stdexcept>

#include "mzparity/kernels.hpp"

namespace mzparity {

namespace {

// The cache holds the whole block pyramid; sum of (N+1)^2 grows cubically.
constexpr int kMaxCachedTotal = 512;

// Amplitudes this small are flushed to exact zero when scattering back,
// so large-cutoff sweeps do not wade через denormals.
constexpr double kFlushThreshold = 1e-300;

} // namespace

std::vector<double> BeamSplitterBlocks::next_block(int total, std::span<const double> prev) {
  if (total == 0) return {1.0};
  const int n1 = total;       // block dimension - 1
  const int p = total - 1;    // previous block dimension - 1
  if (prev.size() != static_cast<std::size_t>(p + 1) * (p + 1)) {
    throw std::invalid_argument("next_block: previous block has wrong size");
  }
  // One photon is split off and routed through the 2x2 transform
  // [[s, s], [-s, s]], s = 1/sqrt(2); the remaining total-1 photons use the
  // previous block. Every output entry is a bounded combination of four
  // parent entries, which keeps the recursion stable at large totals.
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<double> out(static_cast<std::size_t>(n1 + 1) * (n1 + 1), 0.0);
  std::vector<double> root(static_cast<std::size_t>(total) + 1);
  for (int k = 0; k <= total; ++k) root[static_cast<std::size_t>(k)] = std::sqrt(static_cast<double>(k));
  const double inv_total = 1.0 / static_cast<double>(total);
  for (int m = 0; m <= n1; ++m) {
    for (int n = 0; n <= n1; ++n) {
      double acc = 0.0;
      if (m >= 1 && n >= 1) acc += root[m] * root[n] * s * prev[static_cast<std::size_t>(m - 1) * (p + 1) + (n - 1)];
      if (m >= 1 && n <= p) acc += root[m] * root[total - n] * s * prev[static_cast<std::size_t>(m - 1) * (p + 1) + n];
      if (m <= p && n >= 1) acc -= root[total - m] * root[n] * s * prev[static_cast<std::size_t>(m) * (p + 1) + (n - 1)];
      if (m <= p && n <= p) acc += root[total - m] * root[total - n] * s * prev[static_cast<std::size_t>(m) * (p + 1) + n];
      out[static_cast<std::size_t>(m) * (n1 + 1) + n] = acc * inv_total;
    }
  }
  return out;
}

BeamSplitterBlocks::BeamSplitterBlocks(int max_total) : max_total_(max_total) {
  if (max_total < 0) throw std::invalid_argument("BeamSplitterBlocks: max_total must be >= 0");
  if (max_total > kMaxCachedTotal) {
    throw std::invalid_argument(
        "BeamSplitterBlocks: max_total too large to cache; use the streaming overload");
  }
  offsets_.resize(static_cast<std::size_t>(max_total) + 2);
  std::size_t off = 0;
  for (int t = 0; t <= max_total; ++t) {
    offsets_[static_cast<std::size_t>(t)] = off;
    off += static_cast<std::size_t>(t + 1) * (t + 1);
  }
  offsets_[static_cast<std::size_t>(max_total) + 1] = off;
  storage_.resize(off);

  std::vector<double> cur = {1.0};
  std::copy(cur.begin(), cur.end(), storage_.begin());
  for (int t = 1; t <= max_total; ++t) {
    cur = next_block(t, cur);
    std::copy(cur.begin(), cur.end(), storage_.begin() + static_cast<std::ptrdiff_t>(offsets_[static_cast<std::size_t>(t)]));
  }
}

std::span<const double> BeamSplitterBlocks::block(int total) const {
  if (total < 0 || total > max_total_) {
    throw std::invalid_argument("BeamSplitterBlocks: total outside table");
  }
  const std::size_t lo = offsets_[static_cast<std::size_t>(total)];
  const std::size_t hi = offsets_[static_cast<std::size_t>(total) + 1];
  return {storage_.data() + lo, hi - lo};
}

namespace {

// Phase cycles: i^k and (-i)^k acting on (re, im).
inline void mul_i_pow(int k, double& re, double& im) {
  switch (k & 3) {
    case 0: break;
    case 1: { const double t = re; re = -im; im = t; break; }
    case 2: re = -re; im = -im; break;
    default: { const double t = re; re = im; im = -t; break; }
  }
}

inline void mul_minus_i_pow(int k, double& re, double& im) { mul_i_pow(4 - (k & 3), re, im); }

// Highest n_a + n_b with a nonzero amplitude; -1 for the zero state.
int max_occupied_total(const TwoModeState& state) {
  const int c = state.cutoff();
  const std::size_t d = state.dim();
  int best = -1;
  for (int total = 2 * c; total >= 0; --total) {
    const int lo = std::max(0, total - c);
    const int hi = std::min(total, c);
    for (int m = lo; m <= hi; ++m) {
      const std::size_t idx = static_cast<std::size_t>(m) * d + (total - m);
      if (state.re()[idx] != 0.0 || state.im()[idx] != 0.0) return total;
    }
  }
  return best;
}

struct BlockApplier {
  const TwoModeState& in;
  TwoModeState& out;
  BeamSplitterKind kind;
  double lost_mass = 0.0;

  std::vector<double> xre, xim, yre, yim;

  explicit BlockApplier(const TwoModeState& in_, TwoModeState& out_, BeamSplitterKind kind_)
      : in(in_), out(out_), kind(kind_) {
    const std::size_t maxdim = 2 * in.dim();
    xre.resize(maxdim);
    xim.resize(maxdim);
    yre.resize(maxdim);
    yim.resize(maxdim);
  }

  // Apply one total-photon block. `mat` is the (total+1)^2 real table.
  void apply(int total, std::span<const double> mat) {
    const int c = in.cutoff();
    const int lo = std::max(0, total - c);
    const int hi = std::min(total, c);
    const std::size_t dim = static_cast<std::size_t>(total) + 1;

    bool any = false;
    for (int m = 0; m <= total; ++m) {
      double re = 0.0, im = 0.0;
      if (m >= lo && m <= hi) {
        const auto amp = in.amplitude(m, total - m);
        re = amp.real();
        im = amp.imag();
        any = any || re != 0.0 || im != 0.0;
      }
      if (kind == BeamSplitterKind::Second) mul_minus_i_pow(m, re, im);
      xre[static_cast<std::size_t>(m)] = re;
      xim[static_cast<std::size_t>(m)] = im;
    }
    if (!any) return;

    kernels::active().matvec_dual(mat.data(), dim, xre.data(), xim.data(), yre.data(), yim.data());

    for (int m = 0; m <= total; ++m) {
      double re = yre[static_cast<std::size_t>(m)];
      double im = yim[static_cast<std::size_t>(m)];
      if (kind == BeamSplitterKind::Second) mul_i_pow(m, re, im);
      if (m < lo || m > hi) {
        lost_mass += re * re + im * im;
        continue;
      }
      if (std::abs(re) < kFlushThreshold) re = 0.0;
      if (std::abs(im) < kFlushThreshold) im = 0.0;
      out.set_amplitude(m, total - m, {re, im});
    }
  }
};

} // namespace

TwoModeState apply_beam_splitter(const TwoModeState& state, BeamSplitterKind kind) {
  const int top = max_occupied_total(state);
  TwoModeState out(state.cutoff());
  BlockApplier applier(state, out, kind);
  std::vector<double> cur = {1.0};
  if (top >= 0) applier.apply(0, cur);
  for (int total = 1; total <= top; ++total) {
    cur = BeamSplitterBlocks::next_block(total, cur);
    applier.apply(total, cur);
  }
  out.set_tail_mass_bound(state.tail_mass_bound() + applier.lost_mass);
  return out;
}

TwoModeState apply_beam_splitter(const TwoModeState& state, BeamSplitterKind kind,
                                 const BeamSplitterBlocks& blocks) {
  const int top = max_occupied_total(state);
  if (blocks.max_total() < top) {
    throw std::invalid_argument("apply_beam_splitter: block table smaller than occupied totals");
  }
  TwoModeState out(state.cutoff());
  BlockApplier applier(state, out, kind);
  for (int total = 0; total <= top; ++total) {
    applier.apply(total, blocks.block(total));
  }
  out.set_tail_mass_bound(state.tail_mass_bound() + applier.lost_mass);
  return out;
}

} // namespace mzparity
