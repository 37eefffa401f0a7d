#ifndef TGS_CATALOG_HPP
#define TGS_CATALOG_HPP

#include <string>
#include <vector>

#include "tgs/group.hpp"

namespace tgs {

struct CatalogEntry {
  std::string name;
  unsigned degree;
  unsigned long long order;
  std::vector<std::string> generators;  // cycle notation
};

// The bundled groups; "C<n>" cyclic groups are synthesized on demand and do
// not appear here.
const std::vector<CatalogEntry>& catalog_entries();

// Case-insensitive catalog lookup, with the entry's expected order checked
// after construction.
Group load_catalog(const std::string& name);

// "catalog:NAME" or a group file path.
Group load_group(const std::string& spec);

}  // namespace tgs

#endif
