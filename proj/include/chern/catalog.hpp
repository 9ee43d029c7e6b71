#ifndef CHERN_CATALOG_HPP
#define CHERN_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "chern/spaces.hpp"

namespace chern {

struct CatalogEntry {
    PolarizedSpace space;
    std::vector<std::string> tags;  // family plus derived attributes ("cy", "fano", ...)
};

/// Built-in spaces: P^1..P^6, a ladder of hypersurfaces and complete
/// intersections, and products of projective spaces.
const std::vector<CatalogEntry>& builtin_catalog();

std::vector<std::string> derive_tags(const PolarizedSpace& space);

/// Resolves a space selector:
///   catalog name        quintic_threefold
///   P:<n>               P:3            (also projective:3)
///   hypersurface:<n>,<d>
///   ci:<n>,<d1>,<d2>,...
///   file:<path>
/// Returns nullopt for an unknown catalog name; throws on malformed
/// parameters or file errors.
std::optional<PolarizedSpace> find_space(const std::string& selector);

}  // namespace chern

#endif
