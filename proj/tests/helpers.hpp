#ifndef TGS_TEST_HELPERS_HPP
#define TGS_TEST_HELPERS_HPP

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tgs/kgroup.hpp"
#include "tgs/subgroup_ops.hpp"

namespace tgs_test {

// A x B acting on disjoint point sets.
inline tgs::Group direct_product(const tgs::Group& a, const tgs::Group& b) {
  const unsigned da = a.degree(), db = b.degree();
  std::vector<tgs::Perm> gens;
  auto embed = [&](const tgs::Perm& g, bool left) {
    std::vector<uint16_t> img(da + db);
    for (unsigned i = 0; i < da + db; ++i)
      img[i] = static_cast<uint16_t>(i);
    if (left)
      for (unsigned i = 0; i < da; ++i)
        img[i] = g[i];
    else
      for (unsigned i = 0; i < db; ++i)
        img[da + i] = static_cast<uint16_t>(da + g[i]);
    return tgs::Perm(std::move(img));
  };
  for (const tgs::Perm& g : a.generators())
    gens.push_back(embed(g, true));
  for (const tgs::Perm& g : b.generators())
    gens.push_back(embed(g, false));
  return tgs::Group(da + db, std::move(gens));
}

// Isomorphism test for small groups: a generator tuple of A maps to an image
// tuple in B extending to an isomorphism iff the diagonal embedding on
// disjoint points generates a group of order |A|.
inline bool is_isomorphic(const tgs::Group& a, const tgs::Group& b) {
  if (a.order() != b.order())
    return false;
  if (a.order() == 1)
    return true;
  std::vector<tgs::Perm> agens = tgs::canonical_generating_set(a);
  std::vector<tgs::Perm> bels = b.elements();
  const unsigned da = a.degree(), db = b.degree();
  auto pair_perm = [&](const tgs::Perm& x, const tgs::Perm& y) {
    std::vector<uint16_t> img(da + db);
    for (unsigned i = 0; i < da; ++i)
      img[i] = x[i];
    for (unsigned i = 0; i < db; ++i)
      img[da + i] = static_cast<uint16_t>(da + y[i]);
    return tgs::Perm(std::move(img));
  };
  std::vector<size_t> pick(agens.size(), 0);
  while (true) {
    bool orders_match = true;
    for (size_t i = 0; i < agens.size() && orders_match; ++i)
      orders_match = agens[i].order() == bels[pick[i]].order();
    if (orders_match) {
      std::vector<tgs::Perm> gens;
      for (size_t i = 0; i < agens.size(); ++i)
        gens.push_back(pair_perm(agens[i], bels[pick[i]]));
      tgs::Group sub(da + db, std::move(gens));
      if (sub.order() == a.order()) {
        // graph of a bijective homomorphism; check surjectivity onto B
        std::vector<tgs::Perm> bgens;
        for (size_t i = 0; i < agens.size(); ++i)
          bgens.push_back(bels[pick[i]]);
        if (tgs::Group(db, std::move(bgens)).order() == b.order())
          return true;
      }
    }
    size_t j = 0;
    while (j < pick.size() && ++pick[j] == bels.size()) {
      pick[j] = 0;
      ++j;
    }
    if (j == pick.size())
      return false;
  }
}

// Literal breadth-first closure of the chain definition of K: states are
// (dragged witness, accumulated product) with single-element moves drawn
// from the full O^{p'}(N_G(Q)).  Exponential in spirit, for small groups
// only; an independent oracle for chain_closure_k.
inline std::vector<tgs::Perm> naive_k_elements(const tgs::Group& g,
                                               unsigned p) {
  using namespace tgs;
  Caps caps;
  Group s = sylow(g, p, caps);
  Group n = normalizer(g, s, caps);
  SubgroupLattice lat = subgroup_lattice(s, caps);
  const unsigned degree = g.degree();

  std::vector<std::vector<Perm>> ops(lat.subgroups.size());
  for (size_t j = 0; j < lat.subgroups.size(); ++j) {
    if (lat.subgroups[j].is_trivial())
      continue;
    Group nq = normalizer(g, lat.subgroups[j], caps);
    ops[j] = o_p_prime_residual(nq, p, caps).elements();
  }
  auto member_of = [&](const Perm& t, size_t j) {
    const auto& flat = lat.elements[j];
    for (size_t k = 0; k < flat.size(); k += degree) {
      bool eq = true;
      for (unsigned i = 0; i < degree; ++i)
        if (flat[k + i] != t[i]) {
          eq = false;
          break;
        }
      if (eq)
        return true;
    }
    return false;
  };

  struct StateHash {
    size_t operator()(const std::pair<Perm, Perm>& st) const {
      return st.first.hash() * 1000003u ^ st.second.hash();
    }
  };
  std::unordered_set<std::pair<Perm, Perm>, StateHash> seen;
  std::vector<std::pair<Perm, Perm>> queue;
  for (Perm& y : s.elements())
    if (!y.is_identity()) {
      std::pair<Perm, Perm> st{y, Perm(degree)};
      if (seen.insert(st).second)
        queue.push_back(std::move(st));
    }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    const auto [t, w] = queue[qi];
    for (size_t j = 0; j < lat.subgroups.size(); ++j) {
      if (ops[j].empty() || !member_of(t, j))
        continue;
      for (const Perm& x : ops[j]) {
        std::pair<Perm, Perm> st{t.conjugated_by(x), w * x};
        if (seen.insert(st).second)
          queue.push_back(std::move(st));
      }
    }
  }
  std::unordered_set<Perm, PermHash> accepted;
  accepted.insert(Perm(degree));
  for (const auto& [t, w] : seen)
    if (n.contains(w))
      accepted.insert(w);
  std::vector<Perm> out(accepted.begin(), accepted.end());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<tgs::Perm> sorted_elements(const tgs::Group& g) {
  std::vector<tgs::Perm> els = g.elements();
  std::sort(els.begin(), els.end());
  return els;
}

}  // namespace tgs_test

#endif
