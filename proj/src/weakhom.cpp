#include "tgs/weakhom.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace tgs {

unsigned WeakCharacter::at(const Perm& g) const {
  auto it = values.find(g);
  if (it == values.end())
    throw error("weak character has no value for this element");
  return it->second;
}

namespace {

std::vector<Perm> nontrivial_elements(const Group& s, const Caps& caps) {
  std::vector<Perm> out;
  for (Perm& x : s.elements(caps.enum_cap))
    if (!x.is_identity())
      out.push_back(std::move(x));
  return out;
}

constexpr unsigned long long kPelementEnumCap = 100'000;

// p-elements of nq sufficient for chain transitions: all of them when nq is
// enumerable, otherwise Sylow generators and their conjugates accumulated
// until they generate O^{p'}(nq)
std::vector<Perm> transition_p_elements(const Group& nq, unsigned p,
                                        const Caps& caps) {
  if (nq.order() <= kPelementEnumCap) {
    std::vector<Perm> out;
    for (Perm& x : nq.elements(kPelementEnumCap))
      if (!x.is_identity() && is_p_element(x, p))
        out.push_back(std::move(x));
    return out;
  }
  const unsigned long long target = o_p_prime_residual(nq, p, caps).order();
  std::vector<Perm> pool = sylow(nq, p, caps).generators();
  std::unordered_set<Perm, PermHash> seen(pool.begin(), pool.end());
  Group span(nq.degree(), pool);
  while (span.order() < target) {
    std::vector<Perm> fresh;
    for (const Perm& f : pool)
      for (const Perm& c : nq.generators()) {
        Perm y = f.conjugated_by(c);
        if (seen.insert(y).second)
          fresh.push_back(std::move(y));
      }
    if (fresh.empty())
      throw error("transition pool stalled below the p-prime residual");
    pool.insert(pool.end(), fresh.begin(), fresh.end());
    std::vector<Perm> g2 = pool;
    span = Group(nq.degree(), std::move(g2));
  }
  return pool;
}

uint64_t flat_hash(const std::vector<uint16_t>& flat) {
  uint64_t h = 1469598103934665603ull;
  for (uint16_t v : flat) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

// shared machinery for repeated decompositions against one (G, S, p)
struct DecomposeContext {
  const Group& g;
  const Group& s;
  unsigned p;
  Caps caps;
  Group n;
  SubgroupLattice lat;
  std::unordered_map<uint64_t, std::vector<uint32_t>> lat_index;
  std::vector<std::vector<uint32_t>> supersets;  // lattice indices containing j
  std::vector<std::vector<Perm>> families;       // lazy, keyed by lattice index
  std::vector<char> family_ready;

  DecomposeContext(const Group& g_, const Group& s_, unsigned p_,
                   const Caps& caps_)
      : g(g_), s(s_), p(p_), caps(caps_), n(normalizer(g_, s_, caps_)),
        lat(subgroup_lattice(s_, caps_)) {
    for (uint32_t j = 0; j < lat.subgroups.size(); ++j)
      lat_index[flat_hash(lat.elements[j])].push_back(j);
    supersets.resize(lat.subgroups.size());
    for (uint32_t j = 0; j < lat.subgroups.size(); ++j)
      for (uint32_t q = 0; q < lat.subgroups.size(); ++q)
        if (!lat.subgroups[q].is_trivial() &&
            lat.subgroups[q].contains_group(lat.subgroups[j]))
          supersets[j].push_back(q);
    families.resize(lat.subgroups.size());
    family_ready.assign(lat.subgroups.size(), 0);
  }

  uint32_t lookup(const std::vector<uint16_t>& flat) const {
    auto it = lat_index.find(flat_hash(flat));
    if (it != lat_index.end())
      for (uint32_t j : it->second)
        if (lat.elements[j] == flat)
          return j;
    throw error("subgroup is not in the lattice of S");
  }

  const std::vector<Perm>& family(uint32_t q) {
    if (!family_ready[q]) {
      families[q] =
          transition_p_elements(normalizer(g, lat.subgroups[q], caps), p, caps);
      family_ready[q] = 1;
    }
    return families[q];
  }
};

AlperinChain decompose_impl(DecomposeContext& ctx, const Perm& target,
                            const Group& seed) {
  if (seed.is_trivial())
    throw error("chain seed must be nontrivial");
  if (!ctx.s.contains_group(seed))
    throw error("chain seed must lie in S");
  for (const Perm& a : seed.generators())
    if (!ctx.s.contains(a.conjugated_by(target)))
      throw error("chain seed must lie in S conjugated by the target inverse");

  struct State {
    uint32_t b;       // lattice index of the dragged seed image
    uint32_t w;       // interned accumulated product
    int parent;       // state index, -1 at the root
    Perm x;           // transition applied to reach this state
    uint32_t q;       // lattice index of the transition's subgroup
  };
  std::vector<Perm> ws = {Perm(ctx.g.degree())};
  std::unordered_map<Perm, uint32_t, PermHash> wsi = {{ws[0], 0}};
  std::vector<State> states;
  std::unordered_set<uint64_t> visited;
  uint32_t seed_idx = ctx.lookup(small_closure_elements(
      ctx.g.degree(), seed.generators(), ctx.s.order()));

  int accept_at = -1;
  auto push = [&](State st) {
    uint64_t key = (static_cast<uint64_t>(st.b) << 32) | st.w;
    if (!visited.insert(key).second)
      return;
    if (states.size() >= ctx.caps.state_budget)
      throw cap_exceeded("chain search state cap exceeded");
    states.push_back(std::move(st));
    if (accept_at < 0 &&
        ctx.n.contains(ws[states.back().w].inverse() * target))
      accept_at = static_cast<int>(states.size()) - 1;
  };
  push({seed_idx, 0, -1, Perm(ctx.g.degree()), 0});
  for (size_t qi = 0; qi < states.size() && accept_at < 0; ++qi) {
    const uint32_t b = states[qi].b;
    const uint32_t w = states[qi].w;
    for (uint32_t q : ctx.supersets[b]) {
      for (const Perm& x : ctx.family(q)) {
        std::vector<Perm> conj;
        for (const Perm& y : ctx.lat.subgroups[b].generators())
          conj.push_back(y.conjugated_by(x));
        uint32_t b2 = ctx.lookup(small_closure_elements(
            ctx.g.degree(), conj, ctx.s.order()));
        Perm w2 = ws[w] * x;
        auto [it, inserted] =
            wsi.emplace(w2, static_cast<uint32_t>(ws.size()));
        if (inserted)
          ws.push_back(std::move(w2));
        push({b2, it->second, static_cast<int>(qi), x, q});
        if (accept_at >= 0)
          break;
      }
      if (accept_at >= 0)
        break;
    }
  }
  if (accept_at < 0)
    throw cap_exceeded("no chain found within the search frontier");

  AlperinChain chain{seed, {}, ws[states[accept_at].w].inverse() * target,
                     target};
  for (int i = accept_at; states[i].parent >= 0; i = states[i].parent)
    chain.steps.emplace_back(states[i].x, ctx.lat.subgroups[states[i].q]);
  std::reverse(chain.steps.begin(), chain.steps.end());
  validate_chain(ctx.g, ctx.s, ctx.p, chain);
  return chain;
}

}  // namespace

void validate_chain(const Group& g, const Group& s, unsigned p,
                    const AlperinChain& chain) {
  if (chain.seed.is_trivial() || !s.contains_group(chain.seed))
    throw error("chain seed invalid");
  Perm acc(g.degree());
  std::vector<Perm> image = chain.seed.generators();
  for (const auto& [x, q] : chain.steps) {
    if (x.is_identity() || !is_p_element(x, p))
      throw error("chain step is not a nontrivial p-element");
    if (q.is_trivial() || !s.contains_group(q))
      throw error("chain subgroup is not a nontrivial subgroup of S");
    for (const Perm& y : q.generators())
      if (!q.contains(y.conjugated_by(x)))
        throw error("chain step does not normalize its subgroup");
    for (const Perm& y : image)
      if (!q.contains(y))
        throw error("dragged seed escapes the chain subgroup");
    for (Perm& y : image)
      y = y.conjugated_by(x);
    acc = acc * x;
  }
  if (!(acc * chain.tail == chain.target))
    throw error("chain product does not reach the target");
  Group n = normalizer(g, s);
  if (!n.contains(chain.tail))
    throw error("chain tail is not in N_G(S)");
}

AlperinChain alperin_decompose(const Group& g, const Group& s, unsigned p,
                               const Perm& target, const Group& seed,
                               const Caps& caps) {
  DecomposeContext ctx(g, s, p, caps);
  return decompose_impl(ctx, target, seed);
}

bool is_weak_homomorphism(const Group& g, const Group& s, unsigned p,
                          const WeakCharacter& rho, const Caps& caps) {
  if (g.order() > caps.pair_cap)
    throw cap_exceeded("exhaustive pair cap exceeded");
  std::vector<Perm> s_els = nontrivial_elements(s, caps);
  if (s_els.size() > 64)
    throw cap_exceeded("Sylow subgroup too large for bitmask intersections");
  std::vector<Perm> els = g.elements(caps.pair_cap);
  std::unordered_map<Perm, uint32_t, PermHash> idx;
  for (uint32_t i = 0; i < els.size(); ++i)
    idx.emplace(els[i], i);
  const unsigned m = rho.modulus;

  std::vector<unsigned> vals(els.size());
  std::vector<uint64_t> masks(els.size());  // bit i: s_els[i] lies in S^x
  for (uint32_t i = 0; i < els.size(); ++i) {
    vals[i] = rho.at(els[i]);
    if (vals[i] >= m)
      return false;
    Perm inv = els[i].inverse();
    uint64_t mask = 0;
    for (size_t k = 0; k < s_els.size(); ++k)
      if (s.contains(s_els[k].conjugated_by(inv)))
        mask |= 1ull << k;
    masks[i] = mask;
  }

  for (uint32_t i = 0; i < els.size(); ++i)
    if (masks[i] == 0 && vals[i] != 0)
      return false;

  SubgroupLattice lat = subgroup_lattice(s, caps);
  for (uint32_t i = 0; i < els.size(); ++i) {
    if (vals[i] == 0 || !is_p_element(els[i], p))
      continue;
    for (const Group& q : lat.subgroups) {
      if (q.is_trivial())
        continue;
      bool normal = true;
      for (const Perm& y : q.generators())
        if (!q.contains(y.conjugated_by(els[i]))) {
          normal = false;
          break;
        }
      if (normal)
        return false;  // p-element normalizing a nontrivial Q needs value 0
    }
  }

  for (uint32_t xi = 0; xi < els.size(); ++xi)
    for (uint32_t yi = 0; yi < els.size(); ++yi) {
      uint32_t zi = idx.at(els[xi] * els[yi]);
      if ((masks[yi] & masks[zi]) == 0)
        continue;
      if ((vals[xi] + vals[yi]) % m != vals[zi])
        return false;
    }
  return true;
}

WeakCharacter weak_extension(const Group& g, const Group& s, unsigned p,
                             const CharacterTable& chi, unsigned modulus,
                             const Caps& caps) {
  if (modulus % p == 0)
    throw error("weak character modulus must be coprime to p");
  WeakCharacter rho;
  rho.modulus = modulus;
  DecomposeContext ctx(g, s, p, caps);
  std::vector<Perm> s_els = nontrivial_elements(s, caps);
  for (const Perm& x : g.elements(caps.enum_cap)) {
    std::vector<Perm> seed_gens;
    for (const Perm& t : s_els)
      if (s.contains(t.conjugated_by(x)))
        seed_gens.push_back(t);  // t in S cap S^{x^-1}
    if (seed_gens.empty()) {
      rho.values.emplace(x, 0);
      continue;
    }
    AlperinChain chain =
        decompose_impl(ctx, x, Group(g.degree(), std::move(seed_gens)));
    auto it = chi.find(chain.tail);
    if (it == chi.end())
      throw error("character table does not cover the chain tail");
    rho.values.emplace(x, it->second % modulus);
  }
  return rho;
}

bool restriction_roundtrip_check(const Group& g, unsigned p,
                                 const Caps& caps) {
  KPipeline pipe = make_pipeline(g, p, caps);
  Group k = chain_closure_k(pipe);
  Quotient nk(pipe.n, k, caps);
  Quotient ab = abelianization(nk.group(), caps);
  AbelianBasis basis = abelian_basis(ab.group(), caps);
  unsigned long long m = 1;
  for (unsigned long long o : basis.orders)
    m = std::lcm(m, o);

  std::vector<Perm> n_els = pipe.n.elements(caps.enum_cap);
  std::vector<std::vector<unsigned>> coords;
  for (const Perm& x : n_els)
    coords.push_back(basis.coordinates(ab.image(nk.image(x))));

  unsigned long long expected = 1;
  for (unsigned long long o : basis.orders)
    expected *= o;

  std::set<std::vector<unsigned>> distinct;
  std::vector<Perm> g_els = g.elements(caps.enum_cap);
  std::vector<unsigned> tuple(basis.orders.size(), 0);
  for (unsigned long long c = 0; c < expected; ++c) {
    CharacterTable chi;
    for (size_t i = 0; i < n_els.size(); ++i) {
      unsigned long long v = 0;
      for (size_t j = 0; j < tuple.size(); ++j)
        v += coords[i][j] * tuple[j] * (m / basis.orders[j]);
      chi.emplace(n_els[i], static_cast<unsigned>(v % m));
    }
    WeakCharacter rho =
        weak_extension(g, pipe.s, p, chi, static_cast<unsigned>(m), caps);
    if (!is_weak_homomorphism(g, pipe.s, p, rho, caps))
      return false;
    for (size_t i = 0; i < n_els.size(); ++i)
      if (rho.at(n_els[i]) != chi.at(n_els[i]))
        return false;
    std::vector<unsigned> table;
    for (const Perm& x : g_els)
      table.push_back(rho.at(x));
    distinct.insert(std::move(table));
    for (size_t j = 0; j < tuple.size(); ++j) {
      if (++tuple[j] < basis.orders[j])
        break;
      tuple[j] = 0;
    }
  }
  return distinct.size() == expected;
}

}  // namespace tgs
