#include "gpqv/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gpqv {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

long gcd_long(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

bool is_prime_long(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

bool is_prime_power_order(long n, bool count_one) {
  if (n == 1) return count_one;
  return prime_factors(n).size() == 1;
}

long power_mod(long base, long exp, long mod) {
  base %= mod;
  if (base < 0) base += mod;
  long result = 1 % mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

long multiplicative_order(long a, long mod) {
  a %= mod;
  if (a < 0) a += mod;
  if (gcd_long(a, mod) != 1) throw std::domain_error("multiplicative_order: not a unit");
  long x = a % mod, k = 1;
  while (x != 1 % mod) {
    x = x * a % mod;
    ++k;
  }
  return k;
}

long smallest_primitive_root(long p) {
  if (!is_prime_long(p)) throw std::domain_error("smallest_primitive_root: p not prime");
  if (p == 2) return 1;
  for (long v = 2; v < p; ++v)
    if (multiplicative_order(v, p) == p - 1) return v;
  throw std::logic_error("smallest_primitive_root: none found");
}

namespace {

// Exact division of integer polynomials; divisor must be monic and divide exactly.
std::vector<Integer> int_poly_divexact(std::vector<Integer> num, const std::vector<Integer>& den) {
  long dn = static_cast<long>(num.size()) - 1;
  long dd = static_cast<long>(den.size()) - 1;
  if (den.back() != 1) throw std::logic_error("int_poly_divexact: divisor not monic");
  std::vector<Integer> quot(dn - dd + 1, Integer(0));
  for (long i = dn; i >= dd; --i) {
    Integer c = num[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (long j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (const Integer& c : num)
    if (c != 0) throw std::logic_error("int_poly_divexact: nonzero remainder");
  return quot;
}

// Remainder of a rational polynomial modulo a monic integer polynomial.
std::vector<Rational> poly_mod(std::vector<Rational> num, const std::vector<Integer>& den) {
  long dd = static_cast<long>(den.size()) - 1;
  long dn = static_cast<long>(num.size()) - 1;
  for (long i = dn; i >= dd; --i) {
    if (num[i] == 0) continue;
    Rational c = num[i];
    for (long j = 0; j <= dd; ++j) num[i - dd + j] -= c * Rational(den[j]);
  }
  num.resize(dd);
  return num;
}

long poly_degree(const std::vector<Rational>& p) {
  for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

// Quotient and remainder over Q[x].
void poly_divmod(const std::vector<Rational>& num, const std::vector<Rational>& den,
                 std::vector<Rational>& quot, std::vector<Rational>& rem) {
  long dd = poly_degree(den);
  if (dd < 0) throw std::domain_error("poly_divmod: division by zero polynomial");
  rem = num;
  long dn = poly_degree(rem);
  quot.assign(std::max<long>(dn - dd + 1, 1), Rational(0));
  for (long i = dn; i >= dd; --i) {
    if (rem[i] == 0) continue;
    Rational c = rem[i] / den[dd];
    quot[i - dd] = c;
    for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= c * den[j];
  }
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(long n) {
  static std::map<long, std::vector<Integer>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Integer> phi;
  if (n == 1) {
    phi = {Integer(-1), Integer(1)};  // x - 1
  } else {
    std::vector<Integer> poly(n + 1, Integer(0));  // x^n - 1
    poly[0] = -1;
    poly[n] = 1;
    for (long d = 1; d < n; ++d)
      if (n % d == 0) poly = int_poly_divexact(std::move(poly), cyclotomic_polynomial(d));
    phi = std::move(poly);
  }
  return cache.emplace(n, std::move(phi)).first->second;
}

Cyclotomic Cyclotomic::from_powers(long n, const std::vector<Rational>& poly) {
  std::vector<Rational> folded(n, Rational(0));
  for (size_t e = 0; e < poly.size(); ++e) {
    if (poly[e] == 0) continue;
    long k = static_cast<long>(e % n);
    folded[k] += poly[e];
  }
  folded = poly_mod(std::move(folded), cyclotomic_polynomial(n));
  return Cyclotomic(n, std::move(folded));
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
  if (n < 1) throw std::domain_error("root_of_unity: n must be positive");
  k %= n;
  if (k < 0) k += n;
  std::vector<Rational> poly(k + 1, Rational(0));
  poly[k] = Rational(1);
  return from_powers(n, poly);
}

Cyclotomic Cyclotomic::embedded(long m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw std::domain_error("embedded: target conductor not a multiple");
  long stride = m / n_;
  std::vector<Rational> poly(static_cast<size_t>(c_.size() - 1) * stride + 1, Rational(0));
  for (size_t e = 0; e < c_.size(); ++e) poly[e * stride] = c_[e];
  return from_powers(m, poly);
}

Cyclotomic Cyclotomic::galois(long k) const {
  k %= n_;
  if (k < 0) k += n_;
  if (gcd_long(k, n_) != 1) throw std::domain_error("galois: exponent not coprime to conductor");
  std::vector<Rational> poly(n_, Rational(0));
  for (size_t e = 0; e < c_.size(); ++e) poly[(e * k) % n_] += c_[e];
  return from_powers(n_, poly);
}

Cyclotomic Cyclotomic::conjugate() const {
  if (n_ <= 2) return *this;
  return galois(n_ - 1);
}

bool Cyclotomic::is_zero() const {
  for (const Rational& c : c_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return c_[0];
}

bool Cyclotomic::is_integer() const {
  return is_rational() && c_[0].get_den() == 1;
}

bool Cyclotomic::is_nonneg_integer() const { return is_integer() && c_[0] >= 0; }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("Cyclotomic::inverse: zero value");
  if (is_rational()) return Cyclotomic(Rational(1) / c_[0]).embedded(n_);
  // Extended Euclid against Phi_n, which is irreducible, so gcd is a nonzero constant.
  const std::vector<Integer>& phi = cyclotomic_polynomial(n_);
  std::vector<Rational> r0(phi.size());
  for (size_t i = 0; i < phi.size(); ++i) r0[i] = Rational(phi[i]);
  std::vector<Rational> r1 = c_;
  std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};
  while (poly_degree(r1) > 0) {
    std::vector<Rational> q, r;
    poly_divmod(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    // s_next = s0 - q * s1
    std::vector<Rational> s2(std::max(s0.size(), q.size() + s1.size()), Rational(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  long d = poly_degree(r1);
  if (d != 0) throw std::logic_error("Cyclotomic::inverse: gcd not constant");
  Rational c = r1[d];
  for (Rational& v : s1) v /= c;
  return from_powers(n_, s1);
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> c = c_;
  for (Rational& v : c) v = -v;
  return Cyclotomic(n_, std::move(c));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == b.n_) {
    std::vector<Rational> c = a.c_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
    return Cyclotomic(a.n_, std::move(c));
  }
  long m = lcm_long(a.n_, b.n_);
  return a.embedded(m) + b.embedded(m);
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) {
    long m = lcm_long(a.n_, b.n_);
    return a.embedded(m) * b.embedded(m);
  }
  // Fast paths: zero and rational operands avoid polynomial multiplication.
  if (a.is_zero() || b.is_zero()) return Cyclotomic(a.n_, std::vector<Rational>(a.c_.size(), Rational(0)));
  if (a.is_rational()) return a.c_[0] * b;
  if (b.is_rational()) return b.c_[0] * a;
  std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Cyclotomic::from_powers(a.n_, prod);
}

Cyclotomic operator*(const Rational& s, const Cyclotomic& a) {
  std::vector<Rational> c = a.c_;
  for (Rational& v : c) v *= s;
  return Cyclotomic(a.n_, std::move(c));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return Cyclotomic::compare(a, b) == 0;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) {
    long m = lcm_long(a.n_, b.n_);
    return compare(a.embedded(m), b.embedded(m));
  }
  for (size_t i = 0; i < a.c_.size(); ++i) {
    int c = cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Cyclotomic::str() const {
  if (is_rational()) return c_[0].get_str();
  std::ostringstream out;
  bool first = true;
  for (long e = static_cast<long>(c_.size()) - 1; e >= 0; --e) {
    const Rational& v = c_[e];
    if (v == 0) continue;
    Rational av = v < 0 ? Rational(-v) : v;
    if (first) {
      if (v < 0) out << "-";
      first = false;
    } else {
      out << (v < 0 ? " - " : " + ");
    }
    if (e == 0) {
      out << av.get_str();
    } else {
      if (av != 1) out << av.get_str() << "*";
      out << "z" << n_;
      if (e > 1) out << "^" << e;
    }
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace gpqv
