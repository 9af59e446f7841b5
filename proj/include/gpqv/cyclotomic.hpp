#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace gpqv {

using Integer = mpz_class;
using Rational = mpq_class;

// mpq_class(n, d) does not canonicalize on its own.
Rational make_rational(long num, long den = 1);

long euler_phi(long n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);
bool is_prime_long(long n);
std::vector<long> prime_factors(long n);
bool is_prime_power_order(long n, bool count_one = true);
long power_mod(long base, long exp, long mod);
long multiplicative_order(long a, long mod);
long smallest_primitive_root(long p);

// n-th cyclotomic polynomial, monic, coefficients low -> high, degree phi(n).
const std::vector<Integer>& cyclotomic_polynomial(long n);

// An element of Q(zeta_n), stored in the power basis {1, zeta, ..., zeta^(phi(n)-1)}
// after reduction modulo the n-th cyclotomic polynomial. Values are immutable.
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_(1, Rational(0)) {}
  Cyclotomic(long value) : n_(1), c_(1, Rational(value)) {}
  Cyclotomic(const Rational& value) : n_(1), c_(1, value) {}

  static Cyclotomic root_of_unity(long n, long k);
  // Builds sum_k poly[k] * zeta_n^k (poly indices taken mod n) and reduces.
  static Cyclotomic from_powers(long n, const std::vector<Rational>& poly);

  long conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  // Embeds into Q(zeta_m); requires n | m.
  Cyclotomic embedded(long m) const;
  // Galois automorphism zeta -> zeta^k; requires gcd(k, n) = 1.
  Cyclotomic galois(long k) const;
  Cyclotomic conjugate() const;
  // z + conj(z), fixed by conjugation.
  Cyclotomic real_double() const { return *this + conjugate(); }

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rational> as_rational() const;
  bool is_integer() const;
  bool is_nonneg_integer() const;

  Cyclotomic inverse() const;  // throws std::domain_error on zero

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Rational& s, const Cyclotomic& a);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Total order after normalization to a common conductor: (conductor, coeffs lex).
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

  std::string str() const;  // rendered as sum of c_k zeta_n^k

 private:
  long n_;
  std::vector<Rational> c_;  // size phi(n_)

  Cyclotomic(long n, std::vector<Rational> reduced) : n_(n), c_(std::move(reduced)) {}
};

struct CyclotomicLess {
  bool operator()(const Cyclotomic& a, const Cyclotomic& b) const {
    return Cyclotomic::compare(a, b) < 0;
  }
  bool operator()(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
      int c = Cyclotomic::compare(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

}  // namespace gpqv
