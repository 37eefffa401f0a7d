#ifndef TGS_PERM_HPP
#define TGS_PERM_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tgs {

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Thrown when a configured cap (enumeration, orbit, state budget, ...) is hit.
// Callers such as resolve_k catch this and degrade instead of crashing.
class cap_exceeded : public error {
public:
  using error::error;
};

// A bijection on the points 0..degree-1, stored as an image array.
// Composition is left-to-right: (a*b) maps i to b[a[i]], so conjugation
// reads y^x = x^-1 * y * x.
class Perm {
public:
  explicit Perm(unsigned degree) : images_(degree) {
    for (unsigned i = 0; i < degree; ++i)
      images_[i] = static_cast<uint16_t>(i);
  }

  explicit Perm(std::vector<uint16_t> images);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  uint16_t operator[](unsigned i) const { return images_[i]; }
  const std::vector<uint16_t>& images() const { return images_; }

  bool is_identity() const {
    for (unsigned i = 0; i < degree(); ++i)
      if (images_[i] != i)
        return false;
    return true;
  }

  Perm inverse() const;

  // this^x = x^-1 * this * x
  Perm conjugated_by(const Perm& x) const;

  unsigned long long order() const;

  // Sorted lengths of all nontrivial cycles.
  std::vector<unsigned> cycle_type() const;

  friend Perm operator*(const Perm& a, const Perm& b);

  bool operator==(const Perm& o) const { return images_ == o.images_; }
  bool operator<(const Perm& o) const { return images_ < o.images_; }

  size_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (uint16_t v : images_) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }

private:
  std::vector<uint16_t> images_;
};

struct PermHash {
  size_t operator()(const Perm& p) const { return p.hash(); }
};

// g^e by repeated squaring
Perm perm_pow(const Perm& g, unsigned long long e);

// The p-part of g: g^m where m is the p'-part of order(g).  Identity when
// p does not divide the order.
Perm p_part(const Perm& g, unsigned p);

bool is_p_element(const Perm& g, unsigned p);

}  // namespace tgs

#endif
