#include "tgs/subgroup_ops.hpp"

#include <algorithm>
#include <unordered_map>

namespace tgs {

unsigned long long p_part_of(unsigned long long n, unsigned p) {
  unsigned long long r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

namespace {

constexpr uint64_t kSylowSeed = 0x53796c6f77ull;  // fixed: sylow() is deterministic
constexpr int kSampleTries = 4096;

// A p-element of G whose p-part lies outside `avoid` (pass nullptr to accept
// any nontrivial p-part).  Uniform chain sampling with a deterministic seed,
// exhaustive scan as fallback.
Perm find_p_element(const Group& g, unsigned p, const Group* avoid,
                    const Caps& caps) {
  std::mt19937_64 rng(kSylowSeed);
  for (int t = 0; t < kSampleTries; ++t) {
    Perm x = p_part(g.random_element(rng), p);
    if (x.is_identity())
      continue;
    if (avoid == nullptr || !avoid->contains(x))
      return x;
  }
  for (const Perm& e : g.elements(caps.enum_cap)) {
    Perm x = p_part(e, p);
    if (x.is_identity())
      continue;
    if (avoid == nullptr || !avoid->contains(x))
      return x;
  }
  throw error("no suitable p-element found");
}

}  // namespace

Group sylow(const Group& g, unsigned p, const Caps& caps) {
  const unsigned long long target = p_part_of(g.order(), p);
  if (target == 1)
    return Group::trivial(g.degree());
  if (target == g.order())
    return g;
  std::vector<Perm> pgens = {find_p_element(g, p, nullptr, caps)};
  Group pgrp(g.degree(), pgens);
  while (pgrp.order() < target) {
    Group n = normalizer(g, pgrp, caps);
    // a p-subgroup that is not Sylow grows inside its own normalizer
    if (p_part_of(n.order(), p) <= pgrp.order())
      throw error("sylow climb stalled; normalizer has no p-growth");
    pgens.push_back(find_p_element(n, p, &pgrp, caps));
    std::vector<Perm> g2 = pgens;
    pgrp = Group(g.degree(), std::move(g2));
    if (!pgrp.is_p_group(p))
      throw error("sylow climb produced a non-p-group");
  }
  return pgrp;
}

Group normalizer(const Group& g, const Group& h, const Caps& caps) {
  if (g.normalizes(h))
    return g;
  return conjugation_orbit(g, h, caps.orbit_cap).stabilizer;
}

Group centralizer(const Group& g, const Perm& x, const Caps& caps) {
  if (x.is_identity())
    return g;
  return element_conjugation_orbit(g, x, caps.orbit_cap).stabilizer;
}

Group normal_closure(const Group& g, const Group& h) {
  std::vector<Perm> gens = h.generators();
  Group cur(g.degree(), gens);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> fresh;
    for (const Perm& c : cur.generators())
      for (const Perm& x : g.generators()) {
        Perm y = c.conjugated_by(x);
        if (!cur.contains(y))
          fresh.push_back(std::move(y));
      }
    if (!fresh.empty()) {
      gens.insert(gens.end(), fresh.begin(), fresh.end());
      std::vector<Perm> g2 = gens;
      cur = Group(g.degree(), std::move(g2));
      grew = true;
    }
  }
  return cur;
}

Group derived_subgroup(const Group& g) {
  std::vector<Perm> comms;
  const auto& gens = g.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = 0; j < gens.size(); ++j) {
      if (i == j)
        continue;
      Perm c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
      if (!c.is_identity())
        comms.push_back(std::move(c));
    }
  if (comms.empty())
    return Group::trivial(g.degree());
  return normal_closure(g, Group(g.degree(), std::move(comms)));
}

Group o_p_prime_residual(const Group& h, unsigned p, const Caps& caps) {
  Group s = sylow(h, p, caps);
  if (s.is_trivial())
    return s;
  return normal_closure(h, s);
}

Group intersection(const Group& a, const Group& b, const Caps& caps) {
  if (a.degree() != b.degree())
    throw error("degree mismatch in intersection");
  const Group& small = a.order() <= b.order() ? a : b;
  const Group& large = a.order() <= b.order() ? b : a;
  if (large.contains_group(small))
    return small;
  if (small.order() > caps.scan_cap)
    throw cap_exceeded("intersection element-scan cap exceeded");
  std::vector<Perm> kept;
  Group cur = Group::trivial(a.degree());
  for (const Perm& x : small.elements(caps.scan_cap)) {
    if (!large.contains(x) || cur.contains(x))
      continue;
    kept.push_back(x);
    std::vector<Perm> g2 = kept;
    cur = Group(a.degree(), std::move(g2));
  }
  return cur;
}

bool is_ti_sylow(const Group& g, const Group& s, const Caps& caps) {
  if (s.is_trivial() || s.order() == g.order())
    return true;
  ConjugationOrbit orb = conjugation_orbit(g, s, caps.orbit_cap);
  // member 0 is S itself; all others are distinct Sylow subgroups
  std::vector<Perm> s_els = s.elements(caps.enum_cap);
  std::sort(s_els.begin(), s_els.end());
  for (size_t i = 1; i < orb.orbit_size; ++i) {
    std::vector<uint16_t> flat = small_closure_elements(
        g.degree(), orb.member_gens[i],
        std::max<unsigned long long>(s.order(), kSmallSubgroupCap));
    const unsigned d = g.degree();
    for (size_t k = 0; k < flat.size(); k += d) {
      std::vector<uint16_t> img(flat.begin() + k, flat.begin() + k + d);
      Perm x(std::move(img));
      if (x.is_identity())
        continue;
      if (std::binary_search(s_els.begin(), s_els.end(), x))
        return false;  // nontrivial intersection with a distinct conjugate
    }
  }
  return true;
}

SubgroupLattice subgroup_lattice(const Group& s, const Caps& caps) {
  if (s.order() > caps.subgroup_cap)
    throw cap_exceeded("subgroup enumeration cap exceeded");
  const unsigned degree = s.degree();
  SubgroupLattice lat;
  std::unordered_map<uint64_t, std::vector<size_t>> index;
  auto key_of = [](const std::vector<uint16_t>& flat) {
    uint64_t h = 1469598103934665603ull;
    for (uint16_t v : flat) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  };
  auto lookup = [&](const std::vector<uint16_t>& flat) -> int {
    auto it = index.find(key_of(flat));
    if (it == index.end())
      return -1;
    for (size_t idx : it->second)
      if (lat.elements[idx] == flat)
        return static_cast<int>(idx);
    return -1;
  };
  auto add = [&](std::vector<Perm> gens) -> bool {
    std::vector<uint16_t> flat =
        small_closure_elements(degree, gens, s.order());
    if (lookup(flat) >= 0)
      return false;
    index[key_of(flat)].push_back(lat.subgroups.size());
    lat.subgroups.emplace_back(degree, std::move(gens));
    lat.elements.push_back(std::move(flat));
    return true;
  };

  add({});  // trivial subgroup at index 0
  std::vector<Perm> els = s.elements(caps.subgroup_cap);
  std::vector<size_t> cyclic_idx;
  for (const Perm& x : els) {
    if (x.is_identity())
      continue;
    size_t before = lat.subgroups.size();
    if (add({x}))
      cyclic_idx.push_back(before);
  }
  // closure under joins with cyclic subgroups
  for (size_t i = 0; i < lat.subgroups.size(); ++i) {
    if (lat.subgroups[i].order() == s.order())
      continue;
    for (size_t c : cyclic_idx) {
      if (lat.subgroups[c].order() == 1)
        continue;
      if (lat.subgroups[i].contains_group(lat.subgroups[c]))
        continue;
      std::vector<Perm> gens = lat.subgroups[i].generators();
      const auto& cg = lat.subgroups[c].generators();
      gens.insert(gens.end(), cg.begin(), cg.end());
      add(std::move(gens));
    }
  }
  return lat;
}

SubgroupClassList subgroup_classes_in_sylow(const Group& g, const Group& s,
                                            const Group& n_g_s,
                                            const Caps& caps) {
  SubgroupClassList out{s, n_g_s, {}, {}, subgroup_lattice(s, caps), {}, {}};
  const SubgroupLattice& lat = out.lattice;
  const unsigned degree = s.degree();
  std::unordered_map<uint64_t, std::vector<size_t>> index;
  auto key_of = [](const std::vector<uint16_t>& flat) {
    uint64_t h = 1469598103934665603ull;
    for (uint16_t v : flat) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  };
  for (size_t i = 0; i < lat.subgroups.size(); ++i)
    index[key_of(lat.elements[i])].push_back(i);
  auto lookup = [&](const std::vector<uint16_t>& flat) -> size_t {
    for (size_t idx : index.at(key_of(flat)))
      if (lat.elements[idx] == flat)
        return idx;
    throw error("conjugate subgroup escaped the lattice");
  };

  out.class_of.assign(lat.subgroups.size(), -1);
  out.to_rep.assign(lat.subgroups.size(), Perm(degree));
  for (size_t i = 0; i < lat.subgroups.size(); ++i) {
    if (lat.subgroups[i].is_trivial() || out.class_of[i] >= 0)
      continue;
    int cls = static_cast<int>(out.reps.size());
    out.reps.push_back(lat.subgroups[i]);
    // orbit of lattice index i under conjugation by N_G(S)
    std::vector<size_t> orbit = {i};
    out.class_of[i] = cls;
    out.to_rep[i] = Perm(degree);
    for (size_t qi = 0; qi < orbit.size(); ++qi) {
      for (const Perm& n : n_g_s.generators()) {
        std::vector<Perm> conj_gens;
        for (const Perm& y : lat.subgroups[orbit[qi]].generators())
          conj_gens.push_back(y.conjugated_by(n));
        size_t m = lookup(small_closure_elements(degree, conj_gens, s.order()));
        if (out.class_of[m] < 0) {
          out.class_of[m] = cls;
          out.to_rep[m] = out.to_rep[orbit[qi]] * n;
          orbit.push_back(m);
        }
      }
    }
    out.class_sizes.push_back(orbit.size());
  }
  return out;
}

}  // namespace tgs
