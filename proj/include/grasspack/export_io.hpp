#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "grasspack/packing.hpp"

namespace grasspack {

/// JSON export record, format_version "1":
///   { meta, family: {name,i,m,n,N}, subspaces: [{rows, sqrt2_exponent}],
///     summary: {min_d2, histogram, rankin_bound, meets_rankin_bound} }
/// Exact rationals are rendered as "p/q" strings; no timestamps anywhere,
/// so identical inputs export byte-identically.
nlohmann::json packing_to_json(const Packing& packing, const std::string& family, int level,
                               int threads = 0);

/// Inverse of packing_to_json; the reconstructed packing has identical
/// canonical projectors.
Packing packing_from_json(const nlohmann::json& j);

/// Flat CSV: one line per generator row, "subspace_index,row_index,entries...".
void packing_to_csv(std::ostream& os, const Packing& packing);

}  // namespace grasspack
