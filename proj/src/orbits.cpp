#include "tgs/orbits.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace tgs {

namespace {

uint64_t fnv64(const void* data, size_t n, uint64_t seed = 1469598103934665603ull) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  uint64_t h = seed;
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

constexpr unsigned long long kCanonicalGenEnumCap = 1'000'000;

}  // namespace

std::vector<uint16_t> small_closure_elements(unsigned degree,
                                             const std::vector<Perm>& gens,
                                             unsigned long long cap) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> queue;
  Perm id(degree);
  seen.insert(id);
  queue.push_back(id);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    for (const Perm& g : gens) {
      Perm x = queue[qi] * g;
      if (seen.insert(x).second) {
        if (seen.size() > cap)
          throw cap_exceeded("subgroup closure cap exceeded");
        queue.push_back(std::move(x));
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  std::vector<uint16_t> flat;
  flat.reserve(queue.size() * degree);
  for (const Perm& x : queue)
    flat.insert(flat.end(), x.images().begin(), x.images().end());
  return flat;
}

std::vector<Perm> canonical_generating_set(const Group& h) {
  std::vector<Perm> els = h.elements(kCanonicalGenEnumCap);
  std::sort(els.begin(), els.end());
  std::vector<Perm> gens;
  Group cur = Group::trivial(h.degree());
  for (const Perm& x : els) {
    if (cur.order() == h.order())
      break;
    if (!cur.contains(x)) {
      gens.push_back(x);
      std::vector<Perm> g2 = gens;
      cur = Group(h.degree(), std::move(g2));
    }
  }
  return gens;
}

uint64_t subgroup_key(unsigned degree, const std::vector<Perm>& gens,
                      unsigned long long order) {
  if (order <= kSmallSubgroupCap) {
    std::vector<uint16_t> flat = small_closure_elements(degree, gens, order);
    return fnv64(flat.data(), flat.size() * sizeof(uint16_t));
  }
  Group h(degree, gens);
  std::vector<std::vector<unsigned>> types;
  for (const Perm& g : canonical_generating_set(h))
    types.push_back(g.cycle_type());
  std::sort(types.begin(), types.end());
  uint64_t key = fnv64(&order, sizeof(order));
  for (const auto& t : types)
    key = fnv64(t.data(), t.size() * sizeof(unsigned), key);
  return key;
}

namespace {

// Shared orbit-with-stabilizer driver.  Members are identified by a 64-bit
// key plus an exact equality test supplied by the caller.
struct OrbitDedup {
  std::unordered_map<uint64_t, std::vector<uint32_t>> buckets;

  // find returns index or -1; insert registers a new index.
  template <typename EqualFn>
  int find(uint64_t key, const EqualFn& equal) const {
    auto it = buckets.find(key);
    if (it == buckets.end())
      return -1;
    for (uint32_t idx : it->second)
      if (equal(idx))
        return static_cast<int>(idx);
    return -1;
  }
  void insert(uint64_t key, uint32_t idx) { buckets[key].push_back(idx); }
};

}  // namespace

ConjugationOrbit conjugation_orbit(const Group& g, const Group& h,
                                   unsigned long long orbit_cap) {
  if (g.degree() != h.degree())
    throw error("degree mismatch in conjugation orbit");
  if (!g.contains_group(h))
    throw error("conjugation orbit requires H <= G");
  const unsigned degree = g.degree();
  const unsigned long long h_order = h.order();
  const bool small = h_order <= kSmallSubgroupCap;

  ConjugationOrbit out{0, Group::trivial(degree), {}, {}};
  std::vector<std::vector<uint16_t>> member_elements;  // small case only
  std::vector<Group> member_groups;                    // large case only
  OrbitDedup dedup;

  auto add_member = [&](std::vector<Perm> gens, Perm conj) -> int {
    uint64_t key;
    std::vector<uint16_t> flat;
    if (small) {
      flat = small_closure_elements(degree, gens, h_order);
      key = fnv64(flat.data(), flat.size() * sizeof(uint16_t));
      int found = dedup.find(key, [&](uint32_t idx) {
        return member_elements[idx] == flat;
      });
      if (found >= 0)
        return found;
    } else {
      key = subgroup_key(degree, gens, h_order);
      int found = dedup.find(key, [&](uint32_t idx) {
        const Group& cand = member_groups[idx];
        for (const Perm& x : gens)
          if (!cand.contains(x))
            return false;
        return true;
      });
      if (found >= 0)
        return found;
    }
    uint32_t idx = static_cast<uint32_t>(out.member_gens.size());
    if (out.member_gens.size() >= orbit_cap)
      throw cap_exceeded("conjugation orbit cap exceeded");
    dedup.insert(key, idx);
    if (small)
      member_elements.push_back(std::move(flat));
    else
      member_groups.emplace_back(degree, gens);
    out.member_gens.push_back(std::move(gens));
    out.conjugators.push_back(std::move(conj));
    return -1;
  };

  add_member(h.generators(), Perm(degree));
  const std::vector<Perm>& ggens = g.generators();
  // edges[i*ngens+k] = target member of conjugating member i by generator k
  std::vector<uint32_t> edges;
  for (size_t qi = 0; qi < out.member_gens.size(); ++qi) {
    for (const Perm& x : ggens) {
      std::vector<Perm> conj_gens;
      conj_gens.reserve(out.member_gens[qi].size());
      for (const Perm& y : out.member_gens[qi])
        conj_gens.push_back(y.conjugated_by(x));
      int found = add_member(std::move(conj_gens), out.conjugators[qi] * x);
      edges.push_back(found >= 0
                          ? static_cast<uint32_t>(found)
                          : static_cast<uint32_t>(out.member_gens.size() - 1));
    }
  }
  out.orbit_size = out.member_gens.size();
  if (g.order() % out.orbit_size != 0)
    throw error("orbit size does not divide the group order");
  const unsigned long long target = g.order() / out.orbit_size;

  // stabilizer from Schreier generators, seeded with H itself (H <= N_G(H))
  std::vector<Perm> stab_gens = h.generators();
  Group stab(degree, stab_gens);
  size_t e = 0;
  for (size_t qi = 0; qi < out.orbit_size && stab.order() < target; ++qi) {
    for (size_t k = 0; k < ggens.size() && stab.order() < target; ++k, ++e) {
      uint32_t m = edges[qi * ggens.size() + k];
      Perm schreier =
          out.conjugators[qi] * ggens[k] * out.conjugators[m].inverse();
      if (!stab.contains(schreier)) {
        stab_gens.push_back(std::move(schreier));
        std::vector<Perm> g2 = stab_gens;
        stab = Group(degree, std::move(g2));
      }
    }
  }
  if (stab.order() != target)
    throw error("orbit-stabilizer identity violated in conjugation orbit");
  out.stabilizer = std::move(stab);
  return out;
}

ElementOrbit element_conjugation_orbit(const Group& g, const Perm& x,
                                       unsigned long long orbit_cap) {
  if (!g.contains(x))
    throw error("element conjugation orbit requires x in G");
  const unsigned degree = g.degree();
  ElementOrbit out{0, Group::trivial(degree), {}, {}};
  std::unordered_map<Perm, uint32_t, PermHash> index;
  out.members.push_back(x);
  out.conjugators.push_back(Perm(degree));
  index.emplace(x, 0);
  const std::vector<Perm>& ggens = g.generators();
  std::vector<uint32_t> edges;
  for (size_t qi = 0; qi < out.members.size(); ++qi) {
    for (const Perm& t : ggens) {
      Perm y = out.members[qi].conjugated_by(t);
      auto [it, inserted] =
          index.emplace(y, static_cast<uint32_t>(out.members.size()));
      if (inserted) {
        if (out.members.size() >= orbit_cap)
          throw cap_exceeded("element conjugation orbit cap exceeded");
        out.members.push_back(std::move(y));
        out.conjugators.push_back(out.conjugators[qi] * t);
      }
      edges.push_back(it->second);
    }
  }
  out.orbit_size = out.members.size();
  if (g.order() % out.orbit_size != 0)
    throw error("orbit size does not divide the group order");
  const unsigned long long target = g.order() / out.orbit_size;

  std::vector<Perm> stab_gens = {x};  // x centralizes itself
  Group stab(degree, stab_gens);
  for (size_t qi = 0; qi < out.orbit_size && stab.order() < target; ++qi) {
    for (size_t k = 0; k < ggens.size() && stab.order() < target; ++k) {
      uint32_t m = edges[qi * ggens.size() + k];
      Perm schreier =
          out.conjugators[qi] * ggens[k] * out.conjugators[m].inverse();
      if (!stab.contains(schreier)) {
        stab_gens.push_back(std::move(schreier));
        std::vector<Perm> g2 = stab_gens;
        stab = Group(degree, std::move(g2));
      }
    }
  }
  if (stab.order() != target)
    throw error("orbit-stabilizer identity violated in element orbit");
  out.stabilizer = std::move(stab);
  return out;
}

}  // namespace tgs
