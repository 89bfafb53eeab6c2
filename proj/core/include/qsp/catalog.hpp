#pragma once

#include "qsp/satake.hpp"

#include <string>
#include <vector>

namespace qsp {

/* Built-in desk-scale symmetric pairs.  Every entry is rank <= 2, so the
 * whole battery of checks stays well inside interactive runtimes.
 */
struct CatalogEntry {
  std::string name;
  std::string summary;
  SatakeDiagram diagram;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace qsp
