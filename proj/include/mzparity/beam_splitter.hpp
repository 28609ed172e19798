#pragma once

#include <span>
#include <vector>

#include "mzparity/two_mode_state.hpp"

namespace mzparity {

/// 50:50 beam splitter conventions.
/// First:  a' = (a + b)/sqrt(2), b' = (b - a)/sqrt(2) — no reflection phase.
/// Second: a'' = (a' + i b')/sqrt(2), b'' = (i a' + b')/sqrt(2) — pi/2
/// reflection phase.
enum class BeamSplitterKind { First, Second };

/// Precomputed Fock-basis blocks of the beam splitter, one dense real
/// (N+1)x(N+1) matrix per total photon number N. A single real table serves
/// both conventions: the First kind is the table itself, and the Second is
/// the table conjugated by the phases i^m on output and (-i)^n on input.
/// Read-only after construction; safe to share across threads.
class BeamSplitterBlocks {
public:
  explicit BeamSplitterBlocks(int max_total);

  int max_total() const { return max_total_; }

  /// Row-major (total+1)^2 block for one total photon number.
  std::span<const double> block(int total) const;

  /// One step of the block recursion: given the block for total-1, produce
  /// the block for total. `prev` is ignored for total = 0.
  static std::vector<double> next_block(int total, std::span<const double> prev);

private:
  int max_total_;
  std::vector<double> storage_;
  std::vector<std::size_t> offsets_;
};

/// Apply the chosen 50:50 beam splitter exactly, block-by-block in total
/// photon number. Blocks are streamed (built and discarded) unless a
/// precomputed table covering the occupied totals is supplied. Amplitude
/// pushed beyond the grid by a truncated block is discarded and added to
/// the state's tail mass bound.
TwoModeState apply_beam_splitter(const TwoModeState& state, BeamSplitterKind kind);
TwoModeState apply_beam_splitter(const TwoModeState& state, BeamSplitterKind kind,
                                 const BeamSplitterBlocks& blocks);

} // namespace mzparity
