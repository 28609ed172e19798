#pragma once
#include <stdexcept>

namespace mzparity {

/// Thrown where a phase-uncertainty or SNR evaluation has no finite value
/// (stationary fringe point, or zero parity noise). Sweeps convert these
/// into flagged records instead of aborting.
class divergence_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

} // namespace mzparity
