#include "tgs/kgroup.hpp"

#include <chrono>
#include <unordered_map>
#include <unordered_set>

namespace tgs {

const char* tag_name(ProofTag tag) {
  switch (tag) {
    case ProofTag::SN: return "SN";
    case ProofTag::KCIRC: return "KCIRC";
    case ProofTag::TI: return "TI";
    case ProofTag::R2: return "R2";
    case ProofTag::NNC: return "NNC";
    case ProofTag::AUTOCENT: return "AUTOCENT";
    case ProofTag::BFS_EXACT: return "BFS_EXACT";
    case ProofTag::UNDETERMINED: return "UNDETERMINED";
  }
  return "UNDETERMINED";
}

KPipeline make_pipeline(const Group& g, unsigned p, const Caps& caps) {
  Group s = sylow(g, p, caps);
  if (s.is_trivial())
    throw error("prime does not divide the group order");
  Group n = normalizer(g, s, caps);
  KPipeline pipe{g, p, caps, std::move(s), std::move(n)};
  try {
    pipe.classes = subgroup_classes_in_sylow(pipe.g, pipe.s, pipe.n, caps);
  } catch (const cap_exceeded&) {
    return pipe;
  }
  pipe.have_classes = true;
  for (const Group& q : pipe.classes.reps) {
    Group nq = normalizer(pipe.g, q, caps);
    pipe.rep_residuals.push_back(o_p_prime_residual(nq, p, caps));
    pipe.rep_normalizers.push_back(std::move(nq));
  }
  return pipe;
}

Group k_circle(const KPipeline& pipe) {
  if (!pipe.have_classes)
    throw cap_exceeded("subgroup lattice unavailable for k_circle");
  std::vector<Perm> gens = pipe.s.generators();
  for (const Group& res : pipe.rep_residuals) {
    Group meet = intersection(pipe.n, res, pipe.caps);
    const auto& mg = meet.generators();
    gens.insert(gens.end(), mg.begin(), mg.end());
  }
  std::vector<Perm> g2 = gens;
  return normal_closure(pipe.n, Group(pipe.g.degree(), std::move(g2)));
}

Group chain_closure_k(const KPipeline& pipe) {
  if (!pipe.have_classes)
    throw cap_exceeded("subgroup lattice unavailable for exact closure");
  if (pipe.g.order() > pipe.caps.state_budget / pipe.s.order())
    throw cap_exceeded("chain-closure state budget exceeded");
  const unsigned degree = pipe.g.degree();

  std::vector<Perm> witnesses;
  for (Perm& x : pipe.s.elements(pipe.caps.enum_cap))
    if (!x.is_identity())
      witnesses.push_back(std::move(x));
  std::unordered_map<Perm, uint32_t, PermHash> widx;
  for (uint32_t i = 0; i < witnesses.size(); ++i)
    widx.emplace(witnesses[i], i);

  const SubgroupLattice& lat = pipe.classes.lattice;
  // one transition family per lattice subgroup, carried over from its class
  // representative: O^{p'}(N_G(Q^c)) = O^{p'}(N_G(Q))^c
  std::vector<std::vector<Perm>> family(lat.subgroups.size());
  std::vector<std::vector<uint32_t>> containing(witnesses.size());
  for (size_t j = 0; j < lat.subgroups.size(); ++j) {
    if (lat.subgroups[j].is_trivial())
      continue;
    const Perm& c = pipe.classes.to_rep[j];
    for (const Perm& f :
         pipe.rep_residuals[pipe.classes.class_of[j]].generators())
      family[j].push_back(f.conjugated_by(c));
    const auto& flat = lat.elements[j];
    for (size_t k = 0; k < flat.size(); k += degree) {
      Perm t(std::vector<uint16_t>(flat.begin() + k, flat.begin() + k + degree));
      if (!t.is_identity())
        containing[widx.at(t)].push_back(static_cast<uint32_t>(j));
    }
  }
  // legal moves at witness t: any generator of O^{p'}(N_G(Q)) for Q
  // containing t; such a move keeps the dragged witness inside Q
  std::vector<std::vector<Perm>> moves(witnesses.size());
  for (size_t t = 0; t < witnesses.size(); ++t) {
    std::unordered_set<Perm, PermHash> seen;
    for (uint32_t j : containing[t])
      for (const Perm& f : family[j])
        if (seen.insert(f).second)
          moves[t].push_back(f);
  }

  // spanning transversal u per connected component of the witness walk, with
  // the vertex group grown from Schreier generators
  std::vector<int> comp(witnesses.size(), -1);
  std::vector<Perm> u(witnesses.size(), Perm(degree));
  std::vector<Group> vertex_groups;
  for (uint32_t b = 0; b < witnesses.size(); ++b) {
    if (comp[b] >= 0)
      continue;
    int cid = static_cast<int>(vertex_groups.size());
    comp[b] = cid;
    std::vector<uint32_t> queue = {b};
    std::vector<Perm> wgens;
    Group w = Group::trivial(degree);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      uint32_t t = queue[qi];
      for (const Perm& x : moves[t]) {
        uint32_t t2 = widx.at(witnesses[t].conjugated_by(x));
        if (comp[t2] < 0) {
          comp[t2] = cid;
          u[t2] = u[t] * x;
          queue.push_back(t2);
        } else {
          Perm schreier = u[t] * x * u[t2].inverse();
          if (!schreier.is_identity() && !w.contains(schreier)) {
            wgens.push_back(std::move(schreier));
            std::vector<Perm> g2 = wgens;
            w = Group(degree, std::move(g2));
          }
        }
      }
    }
    vertex_groups.push_back(std::move(w));
  }

  // g in N_G(S) is a chain product iff dragging some witness y to y^g stays
  // in one component and the loop part lands in that vertex group
  std::vector<Perm> accepted = {Perm(degree)};
  for (Perm& g : pipe.n.elements(pipe.caps.enum_cap)) {
    if (g.is_identity())
      continue;
    for (uint32_t y = 0; y < witnesses.size(); ++y) {
      uint32_t t2 = widx.at(witnesses[y].conjugated_by(g));
      if (comp[t2] != comp[y])
        continue;
      if (vertex_groups[comp[y]].contains(u[y] * g * u[t2].inverse())) {
        accepted.push_back(std::move(g));
        break;
      }
    }
  }
  std::vector<Perm> kgens;
  Group k = Group::trivial(degree);
  for (const Perm& x : accepted)
    if (!k.contains(x)) {
      kgens.push_back(x);
      std::vector<Perm> g2 = kgens;
      k = Group(degree, std::move(g2));
    }
  if (k.order() != accepted.size())
    throw error("chain closure accepted set is not a subgroup");
  return k;
}

namespace {

bool nnc_condition(const KPipeline& pipe) {
  for (size_t c = 0; c < pipe.classes.reps.size(); ++c) {
    unsigned long long q = pipe.classes.reps[c].order();
    if (q <= pipe.prime || q >= pipe.s.order())
      continue;
    if (!pipe.s.contains_group(pipe.rep_residuals[c]))
      return false;
  }
  return true;
}

}  // namespace

ResolveResult resolve_k(const KPipeline& pipe, ResolveMode mode) {
  ResolveResult r;
  const Group& s = pipe.s;
  const Group& n = pipe.n;

  Group kc;
  bool have_kc = pipe.have_classes;
  if (have_kc)
    kc = k_circle(pipe);

  if (mode == ResolveMode::bfs) {
    try {
      r.k = chain_closure_k(pipe);
      r.tag = ProofTag::BFS_EXACT;
      r.determined = true;
      return r;
    } catch (const cap_exceeded& e) {
      r.failed_criteria.push_back(std::string("BFS: ") + e.what());
    }
    r.k = have_kc ? kc : s;
    return r;
  }

  if (s.is_cyclic()) {
    // cyclic Sylow forces K = S; the tag records which criterion covers it
    if (have_kc && kc.order() != s.order())
      throw error("k_circle exceeds S for a cyclic Sylow subgroup");
    if (n.order() == s.order()) {
      r.tag = ProofTag::SN;
    } else if (s.order() == static_cast<unsigned long long>(pipe.prime) *
                                pipe.prime) {
      r.tag = ProofTag::R2;
    } else if (s.order() == pipe.prime ||
               (have_kc && nnc_condition(pipe))) {
      r.tag = ProofTag::NNC;
    } else {
      r.tag = ProofTag::BFS_EXACT;
      r.k = chain_closure_k(pipe);
      if (r.k.order() != s.order())
        throw error("exact closure disagrees with the cyclic Sylow law");
    }
    r.k = s;
    r.determined = true;
    return r;
  }

  if (n.order() == s.order()) {
    r.determined = true;
    r.k = n;
    r.tag = ProofTag::SN;
    return r;
  }
  r.failed_criteria.push_back("SN: Sylow subgroup is not self-normalizing");

  if (have_kc) {
    if (kc.order() == n.order()) {
      r.determined = true;
      r.k = n;
      r.tag = ProofTag::KCIRC;
      return r;
    }
    r.failed_criteria.push_back("KCIRC: K_circle is proper in N_G(S)");
  } else {
    r.failed_criteria.push_back("KCIRC: subgroup lattice cap exceeded");
  }

  try {
    if (is_ti_sylow(pipe.g, s, pipe.caps)) {
      r.determined = true;
      r.k = s;
      r.tag = ProofTag::TI;
      return r;
    }
    r.failed_criteria.push_back(
        "TI: distinct Sylow conjugates intersect nontrivially");
  } catch (const cap_exceeded& e) {
    r.failed_criteria.push_back(std::string("TI: ") + e.what());
  }

  if (s.order() ==
          static_cast<unsigned long long>(pipe.prime) * pipe.prime &&
      have_kc) {
    r.determined = true;
    r.k = kc;
    r.tag = ProofTag::R2;
    return r;
  }
  r.failed_criteria.push_back("R2: |S| is not p^2");

  if (have_kc && nnc_condition(pipe)) {
    r.determined = true;
    r.k = kc;
    r.tag = ProofTag::NNC;
    return r;
  }
  r.failed_criteria.push_back(
      "NNC: O^{p'}(N_G(Q)) escapes S for some intermediate Q");

  if (mode == ResolveMode::automatic) {
    try {
      r.determined = true;
      r.k = chain_closure_k(pipe);
      r.tag = ProofTag::BFS_EXACT;
      return r;
    } catch (const cap_exceeded& e) {
      r.determined = false;
      r.failed_criteria.push_back(std::string("BFS: ") + e.what());
    }
  } else {
    r.failed_criteria.push_back("BFS: disabled in criteria-only mode");
  }
  r.k = have_kc ? kc : s;
  return r;
}

bool autocent_filter(const Group& g, const Group& s, unsigned p,
                     const Perm& x, const std::vector<Perm>& witnesses,
                     const Caps& caps) {
  std::vector<Perm> cs;
  for (const Perm& t : s.elements(caps.enum_cap))
    if (t * x == x * t)
      cs.push_back(t);
  for (const Perm& z : witnesses) {
    Group cz = centralizer(g, z, caps);
    if (o_p_prime_residual(cz, p, caps).order() != cz.order())
      throw error("witness centralizer is not its own p-prime residual");
    ElementOrbit orb = element_conjugation_orbit(g, z, caps.orbit_cap);
    std::unordered_set<Perm, PermHash> cls(orb.members.begin(),
                                           orb.members.end());
    for (const Perm& t : cs)
      if (cls.count(t))
        return true;
  }
  return false;
}

KReport t_group_report(const Group& g, unsigned p, const std::string& name,
                       ResolveMode mode, const Caps& caps) {
  auto t0 = std::chrono::steady_clock::now();
  KReport rep;
  rep.group_name = name;
  rep.prime = p;
  rep.group_order = g.order();

  KPipeline pipe = make_pipeline(g, p, caps);
  rep.sylow_order = pipe.s.order();
  rep.normalizer_order = pipe.n.order();

  Group kc;
  bool have_kc = pipe.have_classes;
  if (have_kc) {
    kc = k_circle(pipe);
    rep.k_circle_order = kc.order();
    if (!kc.contains_group(pipe.s))
      throw error("k_circle does not contain S");
    if (!pipe.n.normalizes(kc))
      throw error("k_circle is not normal in N_G(S)");
    if ((pipe.n.order() / kc.order()) % p == 0)
      throw error("p divides [N_G(S) : k_circle]");
  }

  ResolveResult res = resolve_k(pipe, mode);
  rep.tag = res.tag;
  rep.failed_criteria = res.failed_criteria;
  if (res.determined) {
    const Group& k = res.k;
    if (!k.contains_group(pipe.s) || !pipe.n.contains_group(k))
      throw error("K violates the tower S <= K <= N_G(S)");
    if (have_kc && !k.contains_group(kc))
      throw error("K does not contain k_circle");
    if (!pipe.n.normalizes(k))
      throw error("K is not normal in N_G(S)");
    if ((pipe.n.order() / k.order()) % p == 0)
      throw error("p divides [N_G(S) : K]");
    rep.k_determined = true;
    rep.k_order = k.order();
    rep.k_lower = rep.k_upper = k.order();
    rep.t_invariants =
        abelian_invariants(Quotient(pipe.n, k, caps).group(), caps);
  } else {
    rep.k_lower = res.k.order();
    rep.k_upper = pipe.n.order();
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

}  // namespace tgs
