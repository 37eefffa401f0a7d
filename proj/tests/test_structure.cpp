#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "helpers.hpp"
#include "tgs/catalog.hpp"
#include "tgs/parse.hpp"
#include "tgs/structure.hpp"

using namespace tgs;
using tgs_test::direct_product;
using tgs_test::is_isomorphic;

namespace {

Group cat(const char* name) { return load_catalog(name); }

}  // namespace

TEST_CASE("coset quotients") {
  Group s4 = cat("S4");
  Group v4(4, {parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4)});
  Quotient q(s4, v4);
  CHECK(q.size() == 6);
  CHECK(!q.group().is_abelian());
  CHECK(is_isomorphic(q.group(), cat("S3")));

  Quotient q2(s4, derived_subgroup(s4));
  CHECK(q2.size() == 2);

  // the induced map is a homomorphism
  std::vector<Perm> els = s4.elements();
  for (size_t i = 0; i < els.size(); i += 5)
    for (size_t j = 0; j < els.size(); j += 7)
      CHECK(q.image(els[i] * els[j]) == q.image(els[i]) * q.image(els[j]));
  CHECK(q.image(Perm(4)).is_identity());
  for (const Perm& n : v4.elements())
    CHECK(q.image(n).is_identity());
}

TEST_CASE("quotient rejects bad input") {
  Group s4 = cat("S4");
  Group c3(4, {parse_cycles("(1,2,3)", 4)});
  CHECK_THROWS_AS(Quotient(s4, c3), error);  // not normal
  Caps tight;
  tight.quotient_cap = 2;
  CHECK_THROWS_AS(Quotient(s4, Group::trivial(4), tight), cap_exceeded);
}

TEST_CASE("abelian invariants") {
  CHECK(abelian_invariants(cat("S4")) ==
        std::vector<unsigned long long>{2});
  CHECK(abelian_invariants(cat("A4")) ==
        std::vector<unsigned long long>{3});
  CHECK(abelian_invariants(cat("A5")).empty());
  CHECK(abelian_invariants(cat("Q8")) ==
        std::vector<unsigned long long>{2, 2});
  CHECK(abelian_invariants(cat("SD16")) ==
        std::vector<unsigned long long>{2, 2});
  CHECK(abelian_invariants(cat("C12")) ==
        std::vector<unsigned long long>{3, 4});
  CHECK(abelian_invariants(direct_product(cat("C2"), cat("C6"))) ==
        std::vector<unsigned long long>{2, 2, 3});
  CHECK(abelian_invariants(cat("SL23")) ==
        std::vector<unsigned long long>{3});
}

TEST_CASE("abelian basis spans with unique coordinates") {
  for (const char* name : {"C12", "C8", "C30"}) {
    Group g = cat(name);
    AbelianBasis basis = abelian_basis(g);
    unsigned long long prod = 1;
    for (unsigned long long o : basis.orders)
      prod *= o;
    CHECK(prod == g.order());
  }
  Group mixed = direct_product(direct_product(cat("C2"), cat("C4")),
                               cat("C3"));
  AbelianBasis basis = abelian_basis(mixed);
  CHECK(basis.elements.size() == mixed.order());
  for (const Perm& x : mixed.elements()) {
    const auto& e = basis.coordinates(x);
    Perm rebuilt(mixed.degree());
    for (size_t i = 0; i < basis.gens.size(); ++i)
      rebuilt = rebuilt * perm_pow(basis.gens[i], e[i]);
    CHECK(rebuilt == x);
  }
}

TEST_CASE("invariants against an exhaustive order census") {
  // in a direct sum of C_{m_i}, the solutions of x^d = 1 number
  // prod_i gcd(d, m_i); check the reported invariants reproduce the census
  std::vector<Group> samples = {
      cat("C12"),
      direct_product(cat("C2"), cat("C2")),
      direct_product(cat("C2"), direct_product(cat("C4"), cat("C4"))),
      direct_product(cat("C9"), cat("C3")),
      direct_product(cat("C6"), cat("C10")),
  };
  for (const Group& g : samples) {
    CAPTURE(g.order());
    auto inv = abelian_invariants(g);
    unsigned long long prod = 1;
    for (auto m : inv)
      prod *= m;
    REQUIRE(prod == g.order());
    std::vector<Perm> els = g.elements();
    for (unsigned long long d = 1; d <= g.order(); ++d) {
      if (g.order() % d != 0)
        continue;
      unsigned long long direct = 0;
      for (const Perm& x : els)
        if (d % x.order() == 0)
          ++direct;
      unsigned long long formula = 1;
      for (auto m : inv)
        formula *= std::gcd(d, m);
      CHECK(direct == formula);
    }
  }
}

TEST_CASE("abelianization of a nonabelian quotient") {
  // N_G(S) for M11 at p=3 has order 144 with derived quotient C2 x C2
  Group m11 = cat("M11");
  Group s = sylow(m11, 3);
  Group n = normalizer(m11, s);
  REQUIRE(n.order() == 144);
  CHECK(abelian_invariants(Quotient(n, s).group()) ==
        std::vector<unsigned long long>{2, 2});
}
