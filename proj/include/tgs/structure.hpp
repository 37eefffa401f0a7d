#ifndef TGS_STRUCTURE_HPP
#define TGS_STRUCTURE_HPP

#include <unordered_map>
#include <vector>

#include "tgs/subgroup_ops.hpp"

namespace tgs {

// G/N as a concrete permutation group: the right regular action of the
// quotient on the cosets of N.  Cosets are identified by the lexicographically
// least element, so the construction is deterministic.
class Quotient {
 public:
  Quotient(const Group& g, const Group& n, const Caps& caps = {});

  const Group& group() const { return group_; }
  unsigned long long size() const { return group_.order(); }
  const std::vector<Perm>& reps() const { return reps_; }
  const std::vector<Perm>& gen_images() const { return gen_images_; }

  // index of the coset Ng
  uint32_t coset_of(const Perm& g) const;
  // the quotient element Ng, as a permutation of cosets
  Perm image(const Perm& g) const;

 private:
  Group group_;
  std::vector<Perm> reps_;
  std::vector<Perm> gen_images_;
  std::vector<Perm> normal_elements_;
  std::vector<Perm> coset_elems_;  // coset index -> quotient group element
  std::unordered_map<Perm, uint32_t, PermHash> coset_index_;  // min element -> index
};

Quotient abelianization(const Group& g, const Caps& caps = {});

// Elementary divisors of G^ab, as an ascending list of prime powers.
// Computed from element-order statistics of the abelianization, which
// determine a finite abelian group up to isomorphism.
std::vector<unsigned long long> abelian_invariants(const Group& g,
                                                   const Caps& caps = {});

// Independent generators of a finite abelian group A, with A the internal
// direct sum of the cyclic subgroups they generate.  `elements` lists all of
// A with `exponents[i]` the coordinates of elements[i] in the basis.
struct AbelianBasis {
  std::vector<Perm> gens;
  std::vector<unsigned long long> orders;
  std::vector<Perm> elements;
  std::vector<std::vector<unsigned>> exponents;

  const std::vector<unsigned>& coordinates(const Perm& x) const;
};

AbelianBasis abelian_basis(const Group& a, const Caps& caps = {});

}  // namespace tgs

#endif
