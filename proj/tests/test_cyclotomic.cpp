#include "doctest.h"
#include "gpqv/cyclotomic.hpp"

#include <set>

using namespace gpqv;

namespace {

// Gauss period: sum of zeta_p^(v*x*s) over s in the subgroup <u> of Z_p^*.
Cyclotomic gauss_period(long p, long u, long v, long x) {
  Cyclotomic sum;
  long s = 1;
  do {
    sum = sum + Cyclotomic::root_of_unity(p, v * x % p * s % p);
    s = s * u % p;
  } while (s != 1);
  return sum;
}

}  // namespace

TEST_SUITE("cyclotomic") {

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<Integer>{1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
  // phi_p = 1 + x + ... + x^(p-1)
  CHECK(cyclotomic_polynomial(7) == std::vector<Integer>(7, 1));
  CHECK(static_cast<long>(cyclotomic_polynomial(105).size()) == euler_phi(105) + 1);
}

TEST_CASE("euler phi and prime helpers") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(21) == 12);
  CHECK(euler_phi(110) == 40);
  CHECK(is_prime_long(13));
  CHECK_FALSE(is_prime_long(21));
  CHECK(prime_factors(126) == std::vector<long>{2, 3, 7});
  CHECK(is_prime_power_order(1, true));
  CHECK_FALSE(is_prime_power_order(1, false));
  CHECK(is_prime_power_order(27, true));
  CHECK_FALSE(is_prime_power_order(21, true));
  CHECK(smallest_primitive_root(7) == 3);
  CHECK(smallest_primitive_root(13) == 2);
  CHECK(multiplicative_order(4, 7) == 3);
}

TEST_CASE("roots of unity basics") {
  // zeta_4^2 = -1
  CHECK(Cyclotomic::root_of_unity(4, 2) == Cyclotomic(-1));
  // sum of nontrivial 7th roots = -1
  Cyclotomic sum;
  for (long k = 1; k <= 6; ++k) sum = sum + Cyclotomic::root_of_unity(7, k);
  CHECK(sum == Cyclotomic(-1));
  // zeta_n^n = 1
  for (long n : {2, 3, 5, 12}) {
    Cyclotomic z = Cyclotomic::root_of_unity(n, 1);
    Cyclotomic pw(1);
    for (long k = 0; k < n; ++k) pw = pw * z;
    CHECK(pw == Cyclotomic(1));
  }
}

TEST_CASE("gauss periods for p=7") {
  // <u> = {1, 2, 4} whichever generator-of-order-3 is used; v1 = 1, v2 = 3
  Cyclotomic s11 = gauss_period(7, 2, 1, 1);
  Cyclotomic s21 = gauss_period(7, 2, 3, 1);
  CHECK(s11 + s21 == Cyclotomic(-1));
  CHECK(s11 * s21 == Cyclotomic(2));
  // same subgroup via u = 4
  CHECK(gauss_period(7, 4, 1, 1) == s11);
}

TEST_CASE("conjugation") {
  Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
  CHECK(z3.conjugate() == Cyclotomic::root_of_unity(3, 2));
  CHECK(Cyclotomic(make_rational(5, 3)).conjugate() == Cyclotomic(make_rational(5, 3)));
  // involution
  Cyclotomic w = Cyclotomic::root_of_unity(12, 5) + Cyclotomic(2) * Cyclotomic::root_of_unity(12, 7);
  CHECK(w.conjugate().conjugate() == w);
  // real_double fixed by conjugation
  Cyclotomic d = w.real_double();
  CHECK(d.conjugate() == d);
}

TEST_CASE("galois commutes with ring operations") {
  std::vector<Cyclotomic> vals;
  for (long k = 0; k < 12; ++k) vals.push_back(Cyclotomic::root_of_unity(21, 2 * k + 1) +
                                               Cyclotomic(make_rational(k, 5)));
  for (long k : {2, 5, 10}) {  // units mod 21
    for (size_t a = 0; a < vals.size(); a += 3)
      for (size_t b = 1; b < vals.size(); b += 4) {
        CHECK((vals[a] + vals[b]).galois(k) == vals[a].galois(k) + vals[b].galois(k));
        CHECK((vals[a] * vals[b]).galois(k) == vals[a].galois(k) * vals[b].galois(k));
      }
  }
}

TEST_CASE("rationality detection") {
  Cyclotomic s;
  for (long k = 1; k <= 4; ++k) s = s + Cyclotomic::root_of_unity(5, k);
  CHECK(s.is_rational());
  CHECK(s.as_rational().value() == -1);
  CHECK_FALSE(Cyclotomic::root_of_unity(3, 1).is_rational());
  CHECK(Cyclotomic(3).is_nonneg_integer());
  CHECK_FALSE(Cyclotomic(-3).is_nonneg_integer());
  CHECK_FALSE(Cyclotomic(make_rational(1, 2)).is_nonneg_integer());
}

TEST_CASE("embedding round trip preserves values") {
  Cyclotomic z = Cyclotomic::root_of_unity(7, 3) + Cyclotomic(1);
  Cyclotomic e = z.embedded(21).embedded(42);
  CHECK(e == z);
  CHECK(e.conductor() == 42);
  // equality across conductors is conductor-insensitive
  CHECK(Cyclotomic::root_of_unity(6, 3) == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(6, 2) == Cyclotomic::root_of_unity(3, 1));
}

TEST_CASE("field inverse") {
  Cyclotomic z = Cyclotomic::root_of_unity(7, 1) + Cyclotomic(2);
  CHECK(z * z.inverse() == Cyclotomic(1));
  Cyclotomic w = gauss_period(7, 2, 1, 1);  // algebraic of degree 2
  CHECK(w * w.inverse() == Cyclotomic(1));
  CHECK_THROWS_AS(Cyclotomic().inverse(), std::domain_error);
  CHECK(Cyclotomic(make_rational(-2, 3)).inverse() == Cyclotomic(make_rational(-3, 2)));
}

TEST_CASE("total order is consistent") {
  std::set<Cyclotomic, CyclotomicLess> pool;
  for (long k = 0; k < 10; ++k) pool.insert(Cyclotomic::root_of_unity(10, k));
  pool.insert(Cyclotomic(0));
  pool.insert(Cyclotomic(1));
  CHECK(pool.size() == 11);  // zeta^0 == 1 dedupes
  for (const Cyclotomic& a : pool)
    for (const Cyclotomic& b : pool) {
      int c1 = Cyclotomic::compare(a, b);
      int c2 = Cyclotomic::compare(b, a);
      CHECK(c1 == -c2);
    }
}

TEST_CASE("rendering") {
  CHECK(Cyclotomic(make_rational(-7, 2)).str() == "-7/2");
  Cyclotomic z = Cyclotomic::root_of_unity(5, 1);
  CHECK(z.str() == "z5");
  CHECK((Cyclotomic(2) * z * z).str() == "2*z5^2");
}

}  // TEST_SUITE
