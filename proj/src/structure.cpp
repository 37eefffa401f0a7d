#include "tgs/structure.hpp"

#include <algorithm>
#include <unordered_set>

namespace tgs {

namespace {

Perm min_coset_element(const std::vector<Perm>& normal_elements,
                       const Perm& g) {
  Perm best = normal_elements[0] * g;
  for (size_t i = 1; i < normal_elements.size(); ++i) {
    Perm cand = normal_elements[i] * g;
    if (cand < best)
      best = std::move(cand);
  }
  return best;
}

}  // namespace

Quotient::Quotient(const Group& g, const Group& n, const Caps& caps)
    : group_(Group::trivial(1)) {
  if (g.degree() != n.degree())
    throw error("degree mismatch in quotient");
  if (!g.contains_group(n))
    throw error("quotient requires N <= G");
  if (!g.normalizes(n))
    throw error("quotient requires N normal in G");
  if (g.order() / n.order() > caps.quotient_cap)
    throw cap_exceeded("quotient coset cap exceeded");
  normal_elements_ = n.elements(caps.enum_cap);

  const std::vector<Perm>& gens = g.generators();
  reps_.push_back(min_coset_element(normal_elements_, Perm(g.degree())));
  coset_index_.emplace(reps_[0], 0);
  std::vector<uint32_t> edges;
  for (size_t i = 0; i < reps_.size(); ++i) {
    for (const Perm& x : gens) {
      Perm key = min_coset_element(normal_elements_, reps_[i] * x);
      auto [it, inserted] =
          coset_index_.emplace(std::move(key), static_cast<uint32_t>(reps_.size()));
      if (inserted)
        reps_.push_back(it->first);
      edges.push_back(it->second);
    }
  }
  const size_t ncosets = reps_.size();
  if (ncosets * n.order() != g.order())
    throw error("coset enumeration does not match the group order");

  for (size_t k = 0; k < gens.size(); ++k) {
    std::vector<uint16_t> img(ncosets);
    for (size_t i = 0; i < ncosets; ++i)
      img[i] = static_cast<uint16_t>(edges[i * gens.size() + k]);
    gen_images_.emplace_back(std::move(img));
  }
  group_ = Group(static_cast<unsigned>(ncosets), gen_images_);
  if (group_.order() != ncosets)
    throw error("quotient action is not regular");

  // coset_elems_[i] is the quotient element of reps_[i]; it sends coset 0
  // to coset i, so the regular action pins it down
  coset_elems_.assign(ncosets, Perm(static_cast<unsigned>(ncosets)));
  std::vector<char> done(ncosets, 0);
  done[0] = 1;
  std::vector<uint32_t> queue = {0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    uint32_t i = queue[qi];
    for (size_t k = 0; k < gens.size(); ++k) {
      uint32_t m = edges[i * gens.size() + k];
      if (!done[m]) {
        done[m] = 1;
        coset_elems_[m] = coset_elems_[i] * gen_images_[k];
        queue.push_back(m);
      }
    }
  }
}

uint32_t Quotient::coset_of(const Perm& g) const {
  auto it = coset_index_.find(min_coset_element(normal_elements_, g));
  if (it == coset_index_.end())
    throw error("element is not in the quotient's group");
  return it->second;
}

Perm Quotient::image(const Perm& g) const { return coset_elems_[coset_of(g)]; }

Quotient abelianization(const Group& g, const Caps& caps) {
  return Quotient(g, derived_subgroup(g), caps);
}

std::vector<unsigned long long> abelian_invariants(const Group& g,
                                                   const Caps& caps) {
  Quotient ab = abelianization(g, caps);
  std::vector<unsigned long long> orders;
  for (const Perm& x : ab.group().elements(caps.quotient_cap))
    orders.push_back(x.order());
  unsigned long long n = ab.size();

  std::vector<unsigned long long> divisors;
  for (unsigned long long p = 2, rest = n; rest > 1; ++p) {
    if (p * p > rest)
      p = rest;
    if (rest % p != 0)
      continue;
    unsigned mult = 0;
    while (rest % p == 0) {
      rest /= p;
      ++mult;
    }
    // f[k] = log_p of the number of elements killed by p^k; the differences
    // count cyclic factors of exponent at least k
    std::vector<unsigned> f(mult + 1, 0);
    for (unsigned k = 0; k <= mult; ++k) {
      unsigned long long pk = 1;
      for (unsigned j = 0; j < k; ++j)
        pk *= p;
      unsigned long long cnt = 0;
      for (unsigned long long o : orders)
        if (pk % o == 0)
          ++cnt;
      unsigned e = 0;
      while (cnt % p == 0) {
        cnt /= p;
        ++e;
      }
      if (cnt != 1)
        throw error("element-order census is not consistent with an abelian group");
      f[k] = e;
    }
    for (unsigned k = 1; k <= mult; ++k) {
      unsigned at_least_k = f[k] - f[k - 1];
      unsigned at_least_next = k < mult ? f[k + 1] - f[k] : 0;
      unsigned long long pk = 1;
      for (unsigned j = 0; j < k; ++j)
        pk *= p;
      for (unsigned c = at_least_next; c < at_least_k; ++c)
        divisors.push_back(pk);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

namespace {

std::vector<Perm> set_closure(const std::vector<Perm>& gens, unsigned degree) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> queue = {Perm(degree)};
  seen.insert(queue[0]);
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (const Perm& g : gens) {
      Perm x = queue[qi] * g;
      if (seen.insert(x).second)
        queue.push_back(std::move(x));
    }
  std::sort(queue.begin(), queue.end());
  return queue;
}

// direct-sum decomposition of an abelian p-group given as a sorted element
// list: peel a cyclic factor of maximal order, recurse into a complement
void peel_basis(unsigned degree, std::vector<Perm> els,
                std::vector<Perm>& gens,
                std::vector<unsigned long long>& orders) {
  if (els.size() <= 1)
    return;
  const Perm* a = nullptr;
  unsigned long long max_ord = 1;
  for (const Perm& x : els)
    if (x.order() > max_ord) {
      max_ord = x.order();
      a = &x;
    }
  std::unordered_set<Perm, PermHash> apows;
  Perm pw(degree);
  for (unsigned long long k = 0; k < max_ord; ++k) {
    apows.insert(pw);
    pw = pw * *a;
  }
  // a greedy maximal subgroup meeting <a> trivially is a complement, because
  // a has maximal order
  std::vector<Perm> bgens;
  std::vector<Perm> bels = {Perm(degree)};
  for (const Perm& x : els) {
    if (std::binary_search(bels.begin(), bels.end(), x))
      continue;
    std::vector<Perm> cand_gens = bgens;
    cand_gens.push_back(x);
    std::vector<Perm> cand = set_closure(cand_gens, degree);
    bool clean = true;
    for (const Perm& y : cand)
      if (!y.is_identity() && apows.count(y)) {
        clean = false;
        break;
      }
    if (clean) {
      bgens = std::move(cand_gens);
      bels = std::move(cand);
    }
  }
  if (max_ord * bels.size() != els.size())
    throw error("cyclic complement search failed in abelian basis");
  gens.push_back(*a);
  orders.push_back(max_ord);
  peel_basis(degree, std::move(bels), gens, orders);
}

}  // namespace

const std::vector<unsigned>& AbelianBasis::coordinates(const Perm& x) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == x)
      return exponents[i];
  throw error("element is outside the abelian group");
}

AbelianBasis abelian_basis(const Group& a, const Caps& caps) {
  if (!a.is_abelian())
    throw error("abelian basis requires an abelian group");
  AbelianBasis out;
  const unsigned degree = a.degree();
  std::vector<Perm> els = a.elements(caps.quotient_cap);
  std::sort(els.begin(), els.end());

  std::vector<unsigned long long> primes;
  for (unsigned long long p = 2, rest = a.order(); rest > 1; ++p) {
    if (p * p > rest)
      p = rest;
    if (rest % p != 0)
      continue;
    primes.push_back(p);
    while (rest % p == 0)
      rest /= p;
  }
  for (unsigned long long p : primes) {
    // the p-primary component is the set of elements of p-power order
    std::vector<Perm> comp;
    for (const Perm& x : els) {
      unsigned long long o = x.order();
      while (o % p == 0)
        o /= p;
      if (o == 1)
        comp.push_back(x);
    }
    peel_basis(degree, std::move(comp), out.gens, out.orders);
  }

  // enumerate the group as exponent tuples over the basis
  unsigned long long total = 1;
  for (unsigned long long o : out.orders)
    total *= o;
  if (total != a.order())
    throw error("abelian basis does not span the group");
  std::vector<unsigned> exp(out.orders.size(), 0);
  for (unsigned long long c = 0; c < total; ++c) {
    Perm x(degree);
    for (size_t i = 0; i < out.gens.size(); ++i)
      x = x * perm_pow(out.gens[i], exp[i]);
    out.elements.push_back(std::move(x));
    out.exponents.push_back(exp);
    for (size_t i = 0; i < exp.size(); ++i) {
      if (++exp[i] < out.orders[i])
        break;
      exp[i] = 0;
    }
  }
  std::unordered_set<Perm, PermHash> distinct(out.elements.begin(),
                                              out.elements.end());
  if (distinct.size() != out.elements.size())
    throw error("abelian basis coordinates are not unique");
  return out;
}

}  // namespace tgs
