#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quandles/group.hpp"

namespace quandlescope {

/// One concrete group to process: either a single catalog entry
/// ("symmetric:4") or a two-factor product ("cyclic:3 x dihedral:8").
struct CatalogEntry {
  std::string spec;                // display form
  std::vector<std::string> parts;  // one or two "family:param" factors
};

/// Group order of a "family:param" spec, without building the group.
std::uint64_t catalog_order(const std::string& part);

/// Builds the group for a spec: "family:param" or "A x B" with catalog
/// factors. Throws UnknownFamily or ParameterOutOfRange on bad input.
quandles::FiniteGroup make_catalog_group(const std::string& spec,
                                         std::uint64_t bound);

quandles::FiniteGroup realize(const CatalogEntry& entry, std::uint64_t bound);

/// Expands survey shorthand into concrete entries, capped by max_order:
///   symmetric:4            itself (kept even above the cap; callers filter)
///   cyclic                 cyclic:2 .. cyclic:max_order
///   dihedral               dihedral:6, dihedral:8, .. max_order
///   symmetric              symmetric:3 .. while n! fits
///   alternating            alternating:4 .. while n!/2 fits
///   products               pairwise products of all single entries, within
///                          the cap (unordered pairs, repeats allowed)
///   standard               cyclic dihedral symmetric alternating products
/// Duplicate specs are dropped, first occurrence wins.
std::vector<CatalogEntry> expand_catalog(const std::vector<std::string>& specs,
                                         std::uint64_t max_order);

}  // namespace quandlescope
