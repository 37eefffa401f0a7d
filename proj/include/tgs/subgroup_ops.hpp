#ifndef TGS_SUBGROUP_OPS_HPP
#define TGS_SUBGROUP_OPS_HPP

#include <vector>

#include "tgs/group.hpp"
#include "tgs/orbits.hpp"

namespace tgs {

struct Caps {
  unsigned long long enum_cap = 10'000'000;     // element enumeration
  unsigned long long orbit_cap = 10'000'000;    // conjugation orbits
  unsigned long long scan_cap = 1'000'000;      // intersection element scan
  unsigned long long subgroup_cap = 6561;       // |S| for lattice enumeration (3^8)
  unsigned long long quotient_cap = 10'000;     // coset actions
  unsigned long long state_budget = 100'000'000;  // chain-closure states
  unsigned long long pair_cap = 10'000;         // exhaustive weak-hom check, |G|
};

// Sylow p-subgroup: grow the p-part of a pseudo-random element by climbing
// normalizers until the subgroup is Sylow in its own normalizer.
// Deterministic for fixed inputs.  Returns the trivial group when p does not
// divide |G|.
Group sylow(const Group& g, unsigned p, const Caps& caps = {});

// N_G(H), from the conjugation orbit stabilizer.
Group normalizer(const Group& g, const Group& h, const Caps& caps = {});

// C_G(x), from the element conjugation orbit stabilizer.
Group centralizer(const Group& g, const Perm& x, const Caps& caps = {});

// Smallest normal subgroup of G containing H.
Group normal_closure(const Group& g, const Group& h);

Group derived_subgroup(const Group& g);

// O^{p'}(H): the normal closure in H of a Sylow p-subgroup of H; the unique
// smallest normal subgroup with p'-quotient.
Group o_p_prime_residual(const Group& h, unsigned p, const Caps& caps = {});

// A cap B, by enumerating the smaller subgroup and filtering by membership
// in the larger.
Group intersection(const Group& a, const Group& b, const Caps& caps = {});

// True iff distinct conjugates of the Sylow subgroup S intersect trivially.
bool is_ti_sylow(const Group& g, const Group& s, const Caps& caps = {});

// All subgroups of the p-group S (bottom-up: cyclic subgroups, then closure
// under joins).  Deterministic order; index 0 is always the trivial subgroup.
struct SubgroupLattice {
  std::vector<Group> subgroups;
  std::vector<std::vector<uint16_t>> elements;  // flattened sorted image arrays
};
SubgroupLattice subgroup_lattice(const Group& s, const Caps& caps = {});

struct SubgroupClassList {
  Group ambient;                    // S
  Group normalizer;                 // N_G(S)
  std::vector<Group> reps;          // one per N_G(S)-class of nontrivial Q <= S
  std::vector<unsigned long long> class_sizes;
  // full lattice bookkeeping for callers that need every subgroup
  SubgroupLattice lattice;          // includes the trivial subgroup
  std::vector<int> class_of;        // lattice index -> class index (-1 for trivial)
  std::vector<Perm> to_rep;         // conjugator: lattice member ^ to_rep = rep? see below
};

// N_G(S)-conjugacy classes of the nontrivial subgroups of S.
// to_rep[i] is an element n of N_G(S) with rep(class_of[i]) ^ n = lattice[i].
SubgroupClassList subgroup_classes_in_sylow(const Group& g, const Group& s,
                                            const Group& n_g_s,
                                            const Caps& caps = {});

unsigned long long p_part_of(unsigned long long n, unsigned p);

}  // namespace tgs

#endif
