#include "gpqv/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gpqv/cyclotomic.hpp"

namespace gpqv {

namespace {

std::string fmt_pow(const std::string& sym, long e) {
  if (e == 0) return "";
  if (e == 1) return sym;
  std::ostringstream out;
  out << sym << "^" << e;
  return out.str();
}

std::string join_or_one(const std::string& a, const std::string& b) {
  if (a.empty() && b.empty()) return "1";
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + " " + b;
}

}  // namespace

FiniteGroup::FiniteGroup()
    : n_(1), mul_{0}, inv_{0}, id_(0), labels_{"1"} {
  analyze();
}

int FiniteGroup::power(int x, long k) const {
  long o = orders_[x];
  k %= o;
  if (k < 0) k += o;
  int result = id_;
  for (long s = 0; s < k; ++s) result = mul(result, x);
  return result;
}

std::vector<int> FiniteGroup::real_class_members(int rc) const {
  const RealClass& r = real_classes_[rc];
  std::vector<int> out = classes_[r.c1].members;
  if (r.c2 != r.c1) {
    out.insert(out.end(), classes_[r.c2].members.begin(), classes_[r.c2].members.end());
    std::sort(out.begin(), out.end());
  }
  return out;
}

FiniteGroup FiniteGroup::from_table(std::vector<int> mul, std::vector<std::string> labels,
                                    std::vector<int> generators) {
  FiniteGroup G;
  size_t n2 = mul.size();
  int n = 0;
  while (static_cast<size_t>(n + 1) * (n + 1) <= n2) ++n;
  if (static_cast<size_t>(n) * n != n2 || n == 0)
    throw GroupError("from_table: multiplication table is not square");
  G.n_ = n;
  G.mul_ = std::move(mul);
  for (int v : G.mul_)
    if (v < 0 || v >= n) throw GroupError("from_table: entry out of range");

  // identity
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = G.mul(e, x) == x && G.mul(x, e) == x;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw GroupError("from_table: no identity element");
  G.id_ = id;

  // inverses
  G.inv_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (G.mul(x, y) == id && G.mul(y, x) == id) {
        G.inv_[x] = y;
        break;
      }
    }
    if (G.inv_[x] < 0) throw GroupError("from_table: element without two-sided inverse");
  }

  if (labels.empty()) {
    labels.resize(n);
    for (int x = 0; x < n; ++x) labels[x] = "e" + std::to_string(x);
  }
  if (static_cast<int>(labels.size()) != n) throw GroupError("from_table: label count mismatch");
  G.labels_ = std::move(labels);
  G.gens_ = std::move(generators);
  G.validate();
  G.analyze();
  return G;
}

void FiniteGroup::validate() const {
  int n = n_;
  // Ensure the declared generators generate; find a generating set if none given.
  std::vector<int> gens = gens_;
  {
    auto closure_of = [&](const std::vector<int>& gset) {
      std::vector<char> in(n, 0);
      std::vector<int> elems{id_};
      in[id_] = 1;
      for (size_t i = 0; i < elems.size(); ++i)
        for (int g : gset) {
          int y = mul(elems[i], g);
          if (!in[y]) {
            in[y] = 1;
            elems.push_back(y);
          }
        }
      return elems;
    };
    if (gens.empty()) {
      std::vector<char> in(n, 0);
      in[id_] = 1;
      int covered = 1;
      for (int x = 0; x < n && covered < n; ++x) {
        if (in[x]) continue;
        gens.push_back(x);
        std::vector<int> closed = closure_of(gens);
        std::fill(in.begin(), in.end(), 0);
        for (int y : closed) in[y] = 1;
        covered = static_cast<int>(closed.size());
      }
    } else {
      if (static_cast<int>(closure_of(gens).size()) != n)
        throw GroupError("from_table: generators do not generate the group");
    }
    // Light's associativity test over a generating set.
    for (int g : gens)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (mul(mul(x, g), y) != mul(x, mul(g, y)))
            throw GroupError("from_table: multiplication table is not associative");
    const_cast<FiniteGroup*>(this)->gens_ = gens;
  }
}

void FiniteGroup::analyze() {
  int n = n_;
  orders_.assign(n, 1);
  exponent_ = 1;
  for (int x = 0; x < n; ++x) {
    long o = 1;
    int y = x;
    while (y != id_) {
      y = mul(y, x);
      ++o;
    }
    orders_[x] = o;
    exponent_ = lcm_long(exponent_, o);
  }
  abelian_ = true;
  for (int x = 0; x < n && abelian_; ++x)
    for (int y = x + 1; y < n; ++y)
      if (mul(x, y) != mul(y, x)) {
        abelian_ = false;
        break;
      }

  // conjugacy classes
  std::vector<char> seen(n, 0);
  std::vector<ConjugacyClass> classes;
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    ConjugacyClass cl;
    std::vector<int> members;
    for (int g = 0; g < n; ++g) {
      int y = conjugate(g, x);
      if (!seen[y]) {
        seen[y] = 1;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    cl.representative = members.front();
    cl.members = std::move(members);
    cl.element_order = orders_[x];
    if (n % cl.size() != 0) throw GroupError("analyze: class size does not divide group order");
    cl.centralizer_order = n / cl.size();
    classes.push_back(std::move(cl));
  }
  std::sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    if (a.element_order != b.element_order) return a.element_order < b.element_order;
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members.front() < b.members.front();
  });
  classes_ = std::move(classes);
  class_of_.assign(n, -1);
  for (int c = 0; c < static_cast<int>(classes_.size()); ++c)
    for (int x : classes_[c].members) class_of_[x] = c;

  inv_class_.assign(classes_.size(), -1);
  for (int c = 0; c < static_cast<int>(classes_.size()); ++c)
    inv_class_[c] = class_of_[inv_[classes_[c].representative]];

  real_classes_.clear();
  real_of_class_.assign(classes_.size(), -1);
  for (int c = 0; c < static_cast<int>(classes_.size()); ++c) {
    if (real_of_class_[c] >= 0) continue;
    int partner = inv_class_[c];
    int rc = static_cast<int>(real_classes_.size());
    real_classes_.push_back({c, partner});
    real_of_class_[c] = rc;
    real_of_class_[partner] = rc;
  }
}

// ---------------------------------------------------------------------------
// constructors

namespace {

FiniteGroup make_cyclic(long n) {
  if (n < 1) throw GroupError("cyclic: order must be positive");
  int N = static_cast<int>(n);
  std::vector<int> mul(static_cast<size_t>(N) * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) mul[static_cast<size_t>(i) * N + j] = (i + j) % N;
  std::vector<std::string> labels(N);
  for (int i = 0; i < N; ++i) labels[i] = i == 0 ? "1" : fmt_pow("g", i);
  std::vector<int> gens;
  if (N > 1) gens.push_back(1);
  return FiniteGroup::from_table(std::move(mul), std::move(labels), std::move(gens));
}

// b^eps a^j with a^n = b^2 = 1, b a b = a^-1; index = eps*n + j
FiniteGroup make_dihedral(long n) {
  if (n < 1) throw GroupError("dihedral: parameter must be positive");
  int N = static_cast<int>(n);
  int order = 2 * N;
  auto idx = [N](int eps, int j) { return eps * N + j; };
  std::vector<int> mul(static_cast<size_t>(order) * order);
  for (int e1 = 0; e1 < 2; ++e1)
    for (int j1 = 0; j1 < N; ++j1)
      for (int e2 = 0; e2 < 2; ++e2)
        for (int j2 = 0; j2 < N; ++j2) {
          int eps = (e1 + e2) % 2;
          int j = ((e2 ? -j1 : j1) + j2) % N;
          if (j < 0) j += N;
          mul[static_cast<size_t>(idx(e1, j1)) * order + idx(e2, j2)] = idx(eps, j);
        }
  std::vector<std::string> labels(order);
  for (int e = 0; e < 2; ++e)
    for (int j = 0; j < N; ++j)
      labels[idx(e, j)] = join_or_one(e ? "b" : "", fmt_pow("a", j));
  std::vector<int> gens;
  if (N > 1) gens.push_back(idx(0, 1));
  gens.push_back(idx(1, 0));
  return FiniteGroup::from_table(std::move(mul), std::move(labels), std::move(gens));
}

// b^m c^k with b^p = c^q = 1, c b c^-1 = b^u; index = m*q + k
FiniteGroup make_frobenius(long p, long q) {
  if (!is_prime_long(p) || !is_prime_long(q)) throw GroupError("frobenius: p, q must be prime");
  if (q < 2 || (p - 1) % q != 0) throw GroupError("frobenius: q must divide p-1");
  long v = smallest_primitive_root(p);
  if (v % q == 0) v += p;
  long u = power_mod(v, (p - 1) / q, p);
  int P = static_cast<int>(p), Q = static_cast<int>(q);
  int order = P * Q;
  auto idx = [Q](long m, long k) { return static_cast<int>(m * Q + k); };
  // (m,k)(m',k') = (m + m' u^k, k + k')
  std::vector<long> upow(Q);
  upow[0] = 1;
  for (int k = 1; k < Q; ++k) upow[k] = upow[k - 1] * u % p;
  std::vector<int> mul(static_cast<size_t>(order) * order);
  for (int m1 = 0; m1 < P; ++m1)
    for (int k1 = 0; k1 < Q; ++k1)
      for (int m2 = 0; m2 < P; ++m2)
        for (int k2 = 0; k2 < Q; ++k2)
          mul[static_cast<size_t>(idx(m1, k1)) * order + idx(m2, k2)] =
              idx((m1 + m2 * upow[k1]) % p, (k1 + k2) % q);
  std::vector<std::string> labels(order);
  for (int m = 0; m < P; ++m)
    for (int k = 0; k < Q; ++k)
      labels[idx(m, k)] = join_or_one(fmt_pow("b", m), fmt_pow("c", k));
  return FiniteGroup::from_table(std::move(mul), std::move(labels), {idx(1, 0), idx(0, 1)});
}

long gpq_twist(long p, long q) {
  long v = smallest_primitive_root(p);
  if (v % q == 0) v += p;
  return power_mod(v, (p - 1) * (q - 1) / q, p * q);
}

FiniteGroup make_gpq(long p, long q) {
  if (!is_prime_long(p) || !is_prime_long(q) || p % 2 == 0)
    throw GroupError("gpq: p and q must be odd primes");
  if (q == 2) throw GroupError("gpq: q = 2 rejected (the construction is not an Oliver group)");
  if (q % 2 == 0 || (p - 1) % q != 0) throw GroupError("gpq: q must divide p-1");
  long i = gpq_twist(p, q);
  int order = static_cast<int>(2 * p * q * q);
  std::vector<int> mul(static_cast<size_t>(order) * order);
  for (int e1 = 0; e1 < 2; ++e1)
    for (int l1 = 0; l1 < p * q; ++l1)
      for (int m1 = 0; m1 < q; ++m1) {
        GpqTriple x{e1, l1, m1};
        int xi = gpq_triple_index(x, p, q);
        for (int e2 = 0; e2 < 2; ++e2)
          for (int l2 = 0; l2 < p * q; ++l2)
            for (int m2 = 0; m2 < q; ++m2) {
              GpqTriple y{e2, l2, m2};
              GpqTriple z = gpq_triple_mul(x, y, p, q, i);
              mul[static_cast<size_t>(xi) * order + gpq_triple_index(y, p, q)] =
                  gpq_triple_index(z, p, q);
            }
      }
  std::vector<std::string> labels(order);
  for (int e = 0; e < 2; ++e)
    for (int l = 0; l < p * q; ++l)
      for (int m = 0; m < q; ++m) {
        std::string dpart = join_or_one(e ? "b" : "", fmt_pow("a", l));
        std::string cpart = m == 0 ? "1" : fmt_pow("c", m);
        labels[gpq_triple_index({e, l, m}, p, q)] = "(" + dpart + "," + cpart + ")";
      }
  std::vector<int> gens{gpq_triple_index({0, 1, 0}, p, q), gpq_triple_index({1, 0, 0}, p, q),
                        gpq_triple_index({0, 0, 1}, p, q)};
  return FiniteGroup::from_table(std::move(mul), std::move(labels), std::move(gens));
}

FiniteGroup make_product(const FiniteGroup& A, const FiniteGroup& B) {
  int na = A.order(), nb = B.order();
  int order = na * nb;
  auto idx = [nb](int ia, int ib) { return ia * nb + ib; };
  std::vector<int> mul(static_cast<size_t>(order) * order);
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int a2 = 0; a2 < na; ++a2)
        for (int b2 = 0; b2 < nb; ++b2)
          mul[static_cast<size_t>(idx(a1, b1)) * order + idx(a2, b2)] =
              idx(A.mul(a1, a2), B.mul(b1, b2));
  std::vector<std::string> labels(order);
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b) labels[idx(a, b)] = "(" + A.label(a) + "," + B.label(b) + ")";
  std::vector<int> gens;
  for (int g : A.generators()) gens.push_back(idx(g, B.identity()));
  for (int g : B.generators()) gens.push_back(idx(A.identity(), g));
  return FiniteGroup::from_table(std::move(mul), std::move(labels), std::move(gens));
}

// Extends generator images to a full map via word decomposition, then checks
// that the result is an automorphism.
std::vector<int> automorphism_from_gen_images(const FiniteGroup& N, const std::vector<int>& gens,
                                              const std::vector<int>& images) {
  int n = N.order();
  std::vector<int> img(n, -1);
  img[N.identity()] = N.identity();
  std::vector<int> queue{N.identity()};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      int y = N.mul(x, gens[gi]);
      if (img[y] < 0) {
        img[y] = N.mul(img[x], images[gi]);
        queue.push_back(y);
      }
    }
  }
  for (int x = 0; x < n; ++x)
    if (img[x] < 0) throw GroupError("semidirect: action generators do not generate N");
  std::vector<char> hit(n, 0);
  for (int x = 0; x < n; ++x) {
    if (hit[img[x]]) throw GroupError("semidirect: action is not a bijection");
    hit[img[x]] = 1;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (img[N.mul(x, y)] != N.mul(img[x], img[y]))
        throw GroupError("semidirect: action is not an automorphism");
  return img;
}

FiniteGroup make_semidirect(const FiniteGroup& N, long q, const std::string& action) {
  if (q < 1) throw GroupError("semidirect: cyclic part must have positive order");
  const std::vector<int>& gens = N.generators();
  std::vector<int> images;
  if (action.rfind("apow:", 0) == 0) {
    long k = std::stol(action.substr(5));
    if (gens.empty()) throw GroupError("semidirect: N has no generators");
    images = gens;
    long e = k % N.element_order(gens[0]);
    if (e < 0) e += N.element_order(gens[0]);
    images[0] = N.power(gens[0], e);
  } else if (action == "rot3") {
    if (gens.size() != 2) throw GroupError("semidirect: rot3 needs exactly two generators");
    images = {gens[1], N.mul(gens[0], gens[1])};
  } else {
    throw GroupError("semidirect: unknown action '" + action + "'");
  }
  std::vector<int> tau = automorphism_from_gen_images(N, gens, images);
  // tau^q must be the identity for the pairing to define a group.
  std::vector<int> tq(N.order());
  std::iota(tq.begin(), tq.end(), 0);
  for (long s = 0; s < q; ++s) {
    std::vector<int> next(N.order());
    for (int x = 0; x < N.order(); ++x) next[x] = tau[tq[x]];
    tq = std::move(next);
  }
  for (int x = 0; x < N.order(); ++x)
    if (tq[x] != x) throw GroupError("semidirect: action order does not divide q");

  std::vector<std::vector<int>> taupow(q);
  taupow[0].resize(N.order());
  std::iota(taupow[0].begin(), taupow[0].end(), 0);
  for (long k = 1; k < q; ++k) {
    taupow[k].resize(N.order());
    for (int x = 0; x < N.order(); ++x) taupow[k][x] = tau[taupow[k - 1][x]];
  }

  int nn = N.order();
  int Q = static_cast<int>(q);
  int order = nn * Q;
  auto idx = [Q](int x, int k) { return x * Q + k; };
  std::vector<int> mul(static_cast<size_t>(order) * order);
  for (int x1 = 0; x1 < nn; ++x1)
    for (int k1 = 0; k1 < Q; ++k1)
      for (int x2 = 0; x2 < nn; ++x2)
        for (int k2 = 0; k2 < Q; ++k2)
          mul[static_cast<size_t>(idx(x1, k1)) * order + idx(x2, k2)] =
              idx(N.mul(x1, taupow[k1][x2]), (k1 + k2) % Q);
  std::vector<std::string> labels(order);
  for (int x = 0; x < nn; ++x)
    for (int k = 0; k < Q; ++k)
      labels[idx(x, k)] = "(" + N.label(x) + "," + (k == 0 ? "1" : fmt_pow("c", k)) + ")";
  std::vector<int> gens2;
  for (int g : N.generators()) gens2.push_back(idx(g, 0));
  if (Q > 1) gens2.push_back(idx(N.identity(), 1));
  return FiniteGroup::from_table(std::move(mul), std::move(labels), std::move(gens2));
}

std::pair<long, long> parse_two_longs(const std::string& s, const std::string& what) {
  size_t comma = s.find(',');
  if (comma == std::string::npos) throw GroupError(what + ": expected two parameters");
  try {
    return {std::stol(s.substr(0, comma)), std::stol(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw GroupError(what + ": malformed parameters '" + s + "'");
  }
}

}  // namespace

GpqTriple gpq_triple_mul(const GpqTriple& x, const GpqTriple& y, long p, long q, long i) {
  long pq = p * q;
  auto in_range = [&](const GpqTriple& t) {
    return t.eps >= 0 && t.eps <= 1 && t.l >= 0 && t.l < pq && t.m >= 0 && t.m < q;
  };
  if (!in_range(x) || !in_range(y)) throw GroupError("gpq_triple_mul: component out of range");
  long im = power_mod(i, x.m, pq);
  long l = ((y.eps ? -x.l : x.l) + y.l * im) % pq;
  if (l < 0) l += pq;
  return {(x.eps + y.eps) % 2, static_cast<int>(l), static_cast<int>((x.m + y.m) % q)};
}

int gpq_triple_index(const GpqTriple& t, long p, long q) {
  return static_cast<int>((t.eps * p * q + t.l) * q + t.m);
}

FiniteGroup construct_group(const std::string& spec) {
  if (spec.rfind("cyclic:", 0) == 0) {
    try {
      return make_cyclic(std::stol(spec.substr(7)));
    } catch (const GroupError&) {
      throw;
    } catch (const std::exception&) {
      throw GroupError("cyclic: malformed parameter in '" + spec + "'");
    }
  }
  if (spec.rfind("dihedral:", 0) == 0) {
    try {
      return make_dihedral(std::stol(spec.substr(9)));
    } catch (const GroupError&) {
      throw;
    } catch (const std::exception&) {
      throw GroupError("dihedral: malformed parameter in '" + spec + "'");
    }
  }
  if (spec.rfind("frobenius:", 0) == 0) {
    auto [p, q] = parse_two_longs(spec.substr(10), "frobenius");
    return make_frobenius(p, q);
  }
  if (spec.rfind("gpq:", 0) == 0) {
    auto [p, q] = parse_two_longs(spec.substr(4), "gpq");
    return make_gpq(p, q);
  }
  if (spec.rfind("product:", 0) == 0) {
    std::string rest = spec.substr(8);
    // split at the first 'x' where both halves parse
    for (size_t pos = rest.find('x'); pos != std::string::npos; pos = rest.find('x', pos + 1)) {
      try {
        FiniteGroup A = construct_group(rest.substr(0, pos));
        FiniteGroup B = construct_group(rest.substr(pos + 1));
        return make_product(A, B);
      } catch (const GroupError&) {
        continue;
      }
    }
    throw GroupError("product: could not parse '" + spec + "'");
  }
  if (spec.rfind("semidirect:", 0) == 0) {
    std::string rest = spec.substr(11);
    size_t c2 = rest.rfind(',');
    if (c2 == std::string::npos) throw GroupError("semidirect: expected N-spec,cyclic:q,action");
    std::string action = rest.substr(c2 + 1);
    std::string head = rest.substr(0, c2);
    size_t c1 = head.rfind(',');
    if (c1 == std::string::npos) throw GroupError("semidirect: expected N-spec,cyclic:q,action");
    std::string hspec = head.substr(c1 + 1);
    std::string nspec = head.substr(0, c1);
    if (hspec.rfind("cyclic:", 0) != 0)
      throw GroupError("semidirect: acting group must be cyclic:q");
    long q = 0;
    try {
      q = std::stol(hspec.substr(7));
    } catch (const std::exception&) {
      throw GroupError("semidirect: malformed cyclic order");
    }
    FiniteGroup N = construct_group(nspec);
    return make_semidirect(N, q, action);
  }
  throw GroupError("unknown group spec '" + spec + "'");
}

}  // namespace gpqv
