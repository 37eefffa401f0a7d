#include "tgs/group.hpp"

#include <algorithm>
#include <cassert>

namespace tgs {

Group::Group(unsigned degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree == 0)
    throw error("group degree must be positive");
  for (const Perm& g : generators_)
    if (g.degree() != degree_)
      throw error("generator degree mismatch");
  build_chain();
  verify_chain();
}

std::pair<Perm, size_t> Group::sift(const Perm& g, size_t from) const {
  Perm h = g;
  for (size_t i = from; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    unsigned img = h[lv.base_point];
    int k = lv.orbit_pos[img];
    if (k < 0)
      return {h, i};
    h = h * lv.transversal[static_cast<size_t>(k)].inverse();
    if (h.is_identity())
      return {h, levels_.size()};
  }
  return {h, levels_.size()};
}

std::vector<const Perm*> Group::stabilizer_gens(size_t i) const {
  // generators registered at level i or deeper fix the base points of all
  // levels before i, so together they generate the level-i stabilizer
  std::vector<const Perm*> out;
  for (size_t j = i; j < levels_.size(); ++j)
    for (const Perm& g : levels_[j].gens)
      out.push_back(&g);
  return out;
}

void Group::recompute_orbit(size_t i) {
  Level& lv = levels_[i];
  std::vector<const Perm*> gens = stabilizer_gens(i);
  lv.orbit_pos.assign(degree_, -1);
  lv.orbit.clear();
  lv.transversal.clear();
  lv.orbit.push_back(lv.base_point);
  lv.transversal.push_back(Perm(degree_));
  lv.orbit_pos[lv.base_point] = 0;
  // breadth-first over generator images; orbit order is deterministic given
  // generator order
  for (size_t qi = 0; qi < lv.orbit.size(); ++qi) {
    unsigned pt = lv.orbit[qi];
    for (const Perm* g : gens) {
      unsigned img = (*g)[pt];
      if (lv.orbit_pos[img] < 0) {
        lv.orbit_pos[img] = static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(img);
        lv.transversal.push_back(lv.transversal[qi] * *g);
      }
    }
  }
}

void Group::register_generator(const Perm& g) {
  size_t i = 0;
  while (i < levels_.size() && g[levels_[i].base_point] == levels_[i].base_point)
    ++i;
  if (i == levels_.size()) {
    Level lv;
    lv.base_point = degree_;
    for (unsigned pt = 0; pt < degree_; ++pt)
      if (g[pt] != pt) {
        lv.base_point = pt;
        break;
      }
    assert(lv.base_point < degree_);
    levels_.push_back(std::move(lv));
  }
  levels_[i].gens.push_back(g);
  // the new generator can extend this orbit and any shallower one
  for (size_t j = 0; j <= i; ++j)
    recompute_orbit(j);
}

void Group::build_chain() {
  for (const Perm& g : generators_)
    if (!g.is_identity())
      register_generator(g);

  // close every level under Schreier generators, registering residues until
  // a full pass makes no change; residues always engage strictly deeper than
  // the level that produced them, so the pass terminates
  bool changed = !levels_.empty();
  while (changed) {
    changed = false;
    for (size_t i = 0; i < levels_.size(); ++i) {
      // registering a residue reallocates level storage, so restart the
      // level scan whenever one is added; the outer pass reruns until clean
      bool dirty = true;
      while (dirty) {
        dirty = false;
        for (size_t qi = 0; qi < levels_[i].orbit.size() && !dirty; ++qi) {
          for (size_t j = i; j < levels_.size() && !dirty; ++j) {
            for (size_t si = 0; si < levels_[j].gens.size() && !dirty; ++si) {
              const Perm s = levels_[j].gens[si];
              const Level& lv = levels_[i];
              unsigned img = s[lv.orbit[qi]];
              Perm schreier =
                  lv.transversal[qi] * s *
                  lv.transversal[static_cast<size_t>(lv.orbit_pos[img])]
                      .inverse();
              if (schreier.is_identity())
                continue;
              auto [res, lvl] = sift(schreier, i + 1);
              if (lvl < levels_.size() || !res.is_identity()) {
                register_generator(res);
                changed = true;
                dirty = true;
              }
            }
          }
        }
      }
    }
  }

  order_ = 1;
  for (const Level& lv : levels_)
    order_ *= lv.transversal.size();
}

void Group::verify_chain() const {
  // strong-generator test: every Schreier generator at every level sifts to
  // the identity
  for (size_t i = 0; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    std::vector<const Perm*> gens = stabilizer_gens(i);
    for (size_t qi = 0; qi < lv.orbit.size(); ++qi) {
      for (const Perm* s : gens) {
        unsigned img = (*s)[lv.orbit[qi]];
        Perm schreier =
            lv.transversal[qi] * *s *
            lv.transversal[static_cast<size_t>(lv.orbit_pos[img])].inverse();
        auto [res, j] = sift(schreier, i + 1);
        if (j < levels_.size() || !res.is_identity())
          throw error("stabilizer chain verification failed");
      }
    }
  }
  for (const Perm& g : generators_)
    if (!contains(g))
      throw error("stabilizer chain rejects a generator");
}

bool Group::contains(const Perm& g) const {
  if (g.degree() != degree_)
    throw error("degree mismatch in membership test");
  if (g.is_identity())
    return true;
  auto [res, j] = sift(g);
  return j == levels_.size() && res.is_identity();
}

bool Group::contains_group(const Group& h) const {
  for (const Perm& g : h.generators())
    if (!contains(g))
      return false;
  return true;
}

std::vector<Perm> Group::elements(unsigned long long cap) const {
  if (order_ > cap)
    throw cap_exceeded("element enumeration cap exceeded");
  std::vector<Perm> out;
  out.reserve(static_cast<size_t>(order_));
  // transversal indices ordered by orbit point for determinism
  std::vector<std::vector<size_t>> order_by_point(levels_.size());
  for (size_t i = 0; i < levels_.size(); ++i) {
    std::vector<size_t> idx(levels_[i].orbit.size());
    for (size_t k = 0; k < idx.size(); ++k)
      idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
      return levels_[i].orbit[a] < levels_[i].orbit[b];
    });
    order_by_point[i] = std::move(idx);
  }
  std::vector<Perm> stack;
  stack.push_back(Perm(degree_));
  // iterative depth-first product over levels, deepest level varies fastest
  struct Frame {
    size_t level;
    size_t pos;
  };
  std::vector<Frame> frames;
  frames.push_back({0, 0});
  if (levels_.empty()) {
    out.push_back(Perm(degree_));
    return out;
  }
  while (!frames.empty()) {
    Frame& f = frames.back();
    if (f.pos >= order_by_point[f.level].size()) {
      frames.pop_back();
      stack.pop_back();
      if (!frames.empty())
        ++frames.back().pos;
      continue;
    }
    size_t k = order_by_point[f.level][f.pos];
    Perm prod = levels_[f.level].transversal[k] * stack.back();
    if (f.level + 1 == levels_.size()) {
      out.push_back(prod);
      ++f.pos;
    } else {
      stack.push_back(std::move(prod));
      frames.push_back({f.level + 1, 0});
    }
  }
  return out;
}

Perm Group::random_element(std::mt19937_64& rng) const {
  Perm g(degree_);
  for (const Level& lv : levels_) {
    std::uniform_int_distribution<size_t> dist(0, lv.transversal.size() - 1);
    g = lv.transversal[dist(rng)] * g;
  }
  return g;
}

bool Group::is_abelian() const {
  for (size_t i = 0; i < generators_.size(); ++i)
    for (size_t j = i + 1; j < generators_.size(); ++j)
      if (!(generators_[i] * generators_[j] == generators_[j] * generators_[i]))
        return false;
  return true;
}

bool Group::is_p_group(unsigned p) const {
  unsigned long long n = order_;
  while (n % p == 0)
    n /= p;
  return n == 1;
}

bool Group::is_cyclic() const {
  if (order_ == 1)
    return true;
  // a finite group is cyclic iff some element has order |G|; for the small
  // groups this is asked of, scan generators first, then elements
  for (const Perm& g : generators_)
    if (g.order() == order_)
      return true;
  if (!is_abelian())
    return false;
  for (const Perm& g : elements())
    if (g.order() == order_)
      return true;
  return false;
}

bool Group::normalizes(const Group& n) const {
  for (const Perm& g : generators_)
    for (const Perm& h : n.generators())
      if (!n.contains(h.conjugated_by(g)))
        return false;
  return true;
}

}  // namespace tgs
