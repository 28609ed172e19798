#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "mzparity/sweeps.hpp"

namespace mzparity {

/// One double rendered with 17 significant digits ("%.17g"), enough for an
/// exact round trip and byte-stable golden files.
std::string format_double(double v);

/// CSV with one header line, LF endings. Column order: x, value columns in
/// record order, optional flag ("ok"/"divergent"), cutoff, tail_bound.
void write_scan_csv(std::ostream& os, std::span<const ScanRecord> records,
                    const std::string& x_name, bool with_flag);

/// JSON document {"meta": {...}, "rows": [...]}; columns are emitted as
/// name/value pairs in record order so a parse reproduces records exactly.
void write_scan_json(std::ostream& os, std::span<const ScanRecord> records,
                     const std::string& x_name, bool with_flag);

/// Inverse of write_scan_json, for round-trip checks and downstream tools.
std::vector<ScanRecord> read_scan_json(std::istream& is);

/// Joint distributions as (n1, n2, p) triples over the full grid.
void write_joint_csv(std::ostream& os, const JointScan& joint);
void write_joint_json(std::ostream& os, const JointScan& joint);

} // namespace mzparity
