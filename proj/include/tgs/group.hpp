#ifndef TGS_GROUP_HPP
#define TGS_GROUP_HPP

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "tgs/perm.hpp"

namespace tgs {

// A finite permutation group given by generators, indexed by a stabilizer
// chain (deterministic Schreier-Sims with a verification pass).  Immutable
// after construction and safe to share across threads.
class Group {
public:
  Group(unsigned degree, std::vector<Perm> generators);

  // default-constructed groups are the trivial group on one point
  Group() : Group(1, {}) {}

  static Group trivial(unsigned degree) { return Group(degree, {}); }

  unsigned degree() const { return degree_; }
  unsigned long long order() const { return order_; }
  const std::vector<Perm>& generators() const { return generators_; }

  bool is_trivial() const { return order_ == 1; }

  // Membership: g sifts to the identity through the chain.
  bool contains(const Perm& g) const;

  // All generators of H lie in this group.
  bool contains_group(const Group& h) const;

  // Every element exactly once, in a deterministic order (lexicographic
  // over chain transversal indices, transversals ordered by orbit point).
  // Throws cap_exceeded when order() > cap.
  std::vector<Perm> elements(unsigned long long cap = kDefaultEnumCap) const;

  // Uniformly random element, drawn from the chain transversals.
  Perm random_element(std::mt19937_64& rng) const;

  bool is_abelian() const;
  bool is_p_group(unsigned p) const;
  bool is_cyclic() const;

  // True iff N is normalized by every generator of this group.
  bool normalizes(const Group& n) const;

  static constexpr unsigned long long kDefaultEnumCap = 10'000'000ull;

private:
  struct Level {
    unsigned base_point = 0;
    // strong generators first engaging at this level (they fix the base
    // points of every shallower level); the generating set of the level-i
    // stabilizer is the union of gens over levels i and deeper
    std::vector<Perm> gens;
    std::vector<int> orbit_pos;        // point -> index into orbit, or -1
    std::vector<unsigned> orbit;       // in discovery order
    std::vector<Perm> transversal;     // transversal[k] maps base_point to orbit[k]
  };

  void build_chain();
  // Sift g through levels starting at `from`; returns the residue and the
  // level it got stuck at (== levels_.size() if it sifted to identity).
  std::pair<Perm, size_t> sift(const Perm& g, size_t from = 0) const;
  // Insert a non-identity strong generator at the first level whose base
  // point it moves, creating a level when it fixes all current base points,
  // and refresh the orbits it can touch.
  void register_generator(const Perm& g);
  std::vector<const Perm*> stabilizer_gens(size_t i) const;
  void recompute_orbit(size_t i);
  void verify_chain() const;

  unsigned degree_;
  std::vector<Perm> generators_;
  std::vector<Level> levels_;
  unsigned long long order_ = 1;
};

}  // namespace tgs

#endif
