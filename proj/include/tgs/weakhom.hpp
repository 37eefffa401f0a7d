#ifndef TGS_WEAKHOM_HPP
#define TGS_WEAKHOM_HPP

#include <unordered_map>
#include <utility>
#include <vector>

#include "tgs/kgroup.hpp"
#include "tgs/structure.hpp"

namespace tgs {

// A function G -> Z/m standing in for a weak homomorphism into the p'-roots
// of unity; residue 0 is the identity root.
struct WeakCharacter {
  unsigned modulus = 1;
  std::unordered_map<Perm, unsigned, PermHash> values;

  unsigned at(const Perm& g) const;
};

using CharacterTable = std::unordered_map<Perm, unsigned, PermHash>;

// g = x_1 ... x_r z with z in N_G(S), each x_i a p-element of N_G(Q_i) and
// the seed subgroup dragged through: seed^{x_1...x_{i-1}} <= Q_i.
struct AlperinChain {
  Group seed;
  std::vector<std::pair<Perm, Group>> steps;  // (x_i, Q_i)
  Perm tail;
  Perm target;
};

// Recompute every invariant of the chain; throws on violation.
void validate_chain(const Group& g, const Group& s, unsigned p,
                    const AlperinChain& chain);

// Exhaustive check of the three weak-homomorphism axioms:
//   rho(g) = 0 when S cap S^g = 1;
//   rho(x) = 0 when x is a p-element normalizing a nontrivial subgroup of S;
//   rho(x) + rho(y) = rho(xy) whenever S cap S^y cap S^{xy} != 1.
bool is_weak_homomorphism(const Group& g, const Group& s, unsigned p,
                          const WeakCharacter& rho, const Caps& caps = {});

// Find a chain for `target` dragging the nontrivial seed A <= S cap S^{g^-1},
// by BFS over (image subgroup, accumulated product) states.
AlperinChain alperin_decompose(const Group& g, const Group& s, unsigned p,
                               const Perm& target, const Group& seed,
                               const Caps& caps = {});

// The weak extension of a character table chi on N_G(S): 0 on the trivial
// Sylow-intersection locus, chi of the chain tail elsewhere.
WeakCharacter weak_extension(const Group& g, const Group& s, unsigned p,
                             const CharacterTable& chi, unsigned modulus,
                             const Caps& caps = {});

// For every character of (N_G(S)/K)^ab into Z/exponent: extend, verify the
// axioms, restrict back, and count.  True iff every character round-trips,
// extensions are pairwise distinct, and the count is |(N/K)^ab|.
bool restriction_roundtrip_check(const Group& g, unsigned p,
                                 const Caps& caps = {});

}  // namespace tgs

#endif
