#ifndef TGS_PARSE_HPP
#define TGS_PARSE_HPP

#include <optional>
#include <string>
#include <vector>

#include "tgs/group.hpp"
#include "tgs/perm.hpp"

namespace tgs {

// Disjoint-cycle notation over 1-based points, whitespace tolerant:
// "(1,2,3)(4,5)".  "()" is the identity.  Throws on malformed syntax,
// out-of-range points, and repeated points.
Perm parse_cycles(const std::string& text, unsigned degree);

// Canonical form: cycles opened at their least point, ordered by least
// point, fixed points omitted; identity prints as "()".
std::string print_cycles(const Perm& g);

struct GroupFile {
  unsigned degree = 0;
  std::vector<std::string> generator_text;
  std::optional<unsigned long long> expected_order;
};

// Text format: first line "degree N", then one generator per line in cycle
// notation, optionally a line "order M" anywhere after the first.
GroupFile parse_group_file(const std::string& contents);

// Build the group and check the expected order when present.
Group group_from_file(const GroupFile& file);

Group load_group_path(const std::string& path);

}  // namespace tgs

#endif
