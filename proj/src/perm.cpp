#include "tgs/perm.hpp"

#include <algorithm>
#include <numeric>

namespace tgs {

Perm::Perm(std::vector<uint16_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (uint16_t v : images_) {
    if (v >= images_.size() || seen[v])
      throw error("image array is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::inverse() const {
  std::vector<uint16_t> inv(degree());
  for (unsigned i = 0; i < degree(); ++i)
    inv[images_[i]] = static_cast<uint16_t>(i);
  Perm r(degree());
  r.images_ = std::move(inv);
  return r;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw error("degree mismatch in composition");
  Perm r(a.degree());
  for (unsigned i = 0; i < a.degree(); ++i)
    r.images_[i] = b.images_[a.images_[i]];
  return r;
}

Perm Perm::conjugated_by(const Perm& x) const {
  // (x^-1 * this * x)[i]: follow i back through x, through this, forward.
  if (degree() != x.degree())
    throw error("degree mismatch in conjugation");
  Perm xi = x.inverse();
  Perm r(degree());
  for (unsigned i = 0; i < degree(); ++i)
    r.images_[i] = x.images_[images_[xi.images_[i]]];
  return r;
}

unsigned long long Perm::order() const {
  unsigned long long ord = 1;
  std::vector<bool> seen(degree(), false);
  for (unsigned i = 0; i < degree(); ++i) {
    if (seen[i])
      continue;
    unsigned long long len = 0;
    unsigned j = i;
    do {
      seen[j] = true;
      j = images_[j];
      ++len;
    } while (j != i);
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::vector<unsigned> Perm::cycle_type() const {
  std::vector<unsigned> lens;
  std::vector<bool> seen(degree(), false);
  for (unsigned i = 0; i < degree(); ++i) {
    if (seen[i])
      continue;
    unsigned len = 0;
    unsigned j = i;
    do {
      seen[j] = true;
      j = images_[j];
      ++len;
    } while (j != i);
    if (len > 1)
      lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

Perm perm_pow(const Perm& g, unsigned long long e) {
  Perm acc(g.degree());
  Perm base = g;
  while (e > 0) {
    if (e & 1)
      acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Perm p_part(const Perm& g, unsigned p) {
  unsigned long long m = g.order();
  unsigned long long q = 1;  // the p-power part of the order
  while (m % p == 0) {
    m /= p;
    q *= p;
  }
  if (q == 1)
    return Perm(g.degree());
  // exponent divisible by the p'-part and congruent to 1 mod q, so the
  // result is the p-component of g rather than an arbitrary p-power
  unsigned long long e = m;
  while (e % q != 1)
    e += m;
  return perm_pow(g, e);
}

bool is_p_element(const Perm& g, unsigned p) {
  unsigned long long m = g.order();
  while (m % p == 0)
    m /= p;
  return m == 1;
}

}  // namespace tgs
