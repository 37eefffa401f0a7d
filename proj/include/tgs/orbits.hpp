#ifndef TGS_ORBITS_HPP
#define TGS_ORBITS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "tgs/group.hpp"
#include "tgs/perm.hpp"

namespace tgs {

// Subgroups of order <= kSmallSubgroupCap are keyed by their full sorted
// element list; larger ones by (order, cycle types of a canonically chosen
// generating set), refined by explicit equality checks on collision.
inline constexpr unsigned long long kSmallSubgroupCap = 512;

// Closure of a small generating set, as a flattened sorted list of image
// arrays.  Throws cap_exceeded if the closure grows past cap.
std::vector<uint16_t> small_closure_elements(unsigned degree,
                                             const std::vector<Perm>& gens,
                                             unsigned long long cap);

// A generating set chosen canonically from the subgroup as a set (greedy
// over elements in lexicographic order), so that equal subgroups produce
// equal results regardless of how they were generated.
std::vector<Perm> canonical_generating_set(const Group& h);

uint64_t subgroup_key(unsigned degree, const std::vector<Perm>& gens,
                      unsigned long long order);

struct ConjugationOrbit {
  unsigned long long orbit_size = 0;
  Group stabilizer;                       // = N_G(H), with H's generators seeded
  std::vector<std::vector<Perm>> member_gens;
  std::vector<Perm> conjugators;          // H^(conjugators[i]) = member i
};

// Orbit of the subgroup H under conjugation by G, with the stabilizer
// recovered from Schreier generators (orbit-stabilizer identity is checked
// exactly).  Throws cap_exceeded when the orbit grows past orbit_cap.
ConjugationOrbit conjugation_orbit(const Group& g, const Group& h,
                                   unsigned long long orbit_cap);

struct ElementOrbit {
  unsigned long long orbit_size = 0;
  Group stabilizer;                       // = C_G(x)
  std::vector<Perm> members;
  std::vector<Perm> conjugators;
};

ElementOrbit element_conjugation_orbit(const Group& g, const Perm& x,
                                       unsigned long long orbit_cap);

}  // namespace tgs

#endif
