#include "doctest.h"
#include "gpqv/group.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace gpqv;

namespace {

std::multiset<long> subgroup_orders(const std::vector<Subgroup>& subs) {
  std::multiset<long> orders;
  for (const Subgroup& s : subs) orders.insert(s.order());
  return orders;
}

// (element order, class size) -> number of classes
std::map<std::pair<long, long>, int> class_census(const FiniteGroup& G) {
  std::map<std::pair<long, long>, int> census;
  for (const ConjugacyClass& c : G.classes()) census[{c.element_order, c.size()}]++;
  return census;
}

long count_order(const FiniteGroup& G, long k) {
  long n = 0;
  for (int x = 0; x < G.order(); ++x)
    if (G.element_order(x) == k) ++n;
  return n;
}

}  // namespace

TEST_SUITE("group") {

TEST_CASE("cyclic construction") {
  FiniteGroup C3 = construct_group("cyclic:3");
  CHECK(C3.order() == 3);
  CHECK(C3.is_abelian());
  CHECK(C3.class_count() == 3);
  for (const ConjugacyClass& c : C3.classes()) CHECK(c.size() == 1);
  // nontrivial classes pair up under inversion
  CHECK(C3.inverse_class(C3.identity_class()) == C3.identity_class());
  CHECK(C3.real_classes().size() == 2);
}

TEST_CASE("dihedral construction") {
  FiniteGroup D42 = construct_group("dihedral:21");
  CHECK(D42.order() == 42);
  CHECK_FALSE(D42.is_abelian());
  CHECK(count_order(D42, 2) == 21);
  CHECK(D42.exponent() == 42);
}

TEST_CASE("frobenius construction and classes") {
  FiniteGroup F = construct_group("frobenius:7,3");
  CHECK(F.order() == 21);
  CHECK_FALSE(F.is_abelian());
  auto census = class_census(F);
  CHECK(census.size() == 3);
  CHECK(census[{1, 1}] == 1);
  CHECK(census[{7, 3}] == 2);
  CHECK(census[{3, 7}] == 2);
}

TEST_CASE("product construction") {
  FiniteGroup G = construct_group("product:cyclic:3xfrobenius:7,3");
  CHECK(G.order() == 63);
  CHECK_FALSE(G.is_abelian());
  FiniteGroup V4 = construct_group("product:cyclic:2xcyclic:2");
  CHECK(V4.order() == 4);
  CHECK(V4.exponent() == 2);
}

TEST_CASE("malformed specs are rejected") {
  CHECK_THROWS_AS(construct_group("cyclic:x"), GroupError);
  CHECK_THROWS_AS(construct_group("frobenius:7,5"), GroupError);  // q does not divide p-1
  CHECK_THROWS_AS(construct_group("frobenius:8,3"), GroupError);
  CHECK_THROWS_AS(construct_group("gpq:7,2"), GroupError);
  CHECK_THROWS_AS(construct_group("nonsense:1"), GroupError);
}

TEST_CASE("gpq triple product law") {
  long p = 7, q = 3, i = 4;
  GpqTriple e{0, 0, 0};
  GpqTriple r = gpq_triple_mul(e, e, p, q, i);
  CHECK((r.eps == 0 && r.l == 0 && r.m == 0));
  // b * a = b a^(pq-1), forced by bab^-1 = a^-1
  GpqTriple b{1, 0, 0}, a{0, 1, 0};
  r = gpq_triple_mul(b, a, p, q, i);
  CHECK((r.eps == 1 && r.l == p * q - 1 && r.m == 0));
  // c * a = a^i c
  GpqTriple c{0, 0, 1};
  r = gpq_triple_mul(c, a, p, q, i);
  CHECK((r.eps == 0 && r.l == 4 && r.m == 1));
  CHECK_THROWS_AS(gpq_triple_mul(GpqTriple{2, 0, 0}, e, p, q, i), GroupError);
}

TEST_CASE("gpq group agrees with generic semidirect under the canonical bijection") {
  FiniteGroup G = construct_group("gpq:7,3");
  FiniteGroup S = construct_group("semidirect:dihedral:21,cyclic:3,apow:4");
  REQUIRE(G.order() == S.order());
  // (eps, l, m) -> ((eps, l), m) is the identity on indices with these layouts
  for (int x = 0; x < G.order(); ++x)
    for (int y = 0; y < G.order(); ++y) CHECK(G.mul(x, y) == S.mul(x, y));
}

TEST_CASE("gpq order and exponent") {
  FiniteGroup G = construct_group("gpq:7,3");
  CHECK(G.order() == 126);
  CHECK(G.exponent() == 42);  // 2pq
  FiniteGroup G13 = construct_group("gpq:13,3");
  CHECK(G13.order() == 234);
  CHECK(G13.exponent() == 78);
}

TEST_CASE("gpq:7,3 class census") {
  FiniteGroup G = construct_group("gpq:7,3");
  CHECK(G.class_count() == 12);
  auto census = class_census(G);
  CHECK(census[{1, 1}] == 1);
  CHECK(census[{2, 21}] == 1);
  CHECK(census[{7, 6}] == 1);
  CHECK(census[{3, 7}] == 2);
  CHECK(census[{3, 14}] == 2);
  CHECK(census[{3, 2}] == 1);
  CHECK(census[{6, 21}] == 2);
  CHECK(census[{21, 6}] == 2);
  long total = 0;
  for (const ConjugacyClass& c : G.classes()) total += c.size();
  CHECK(total == 126);
}

TEST_CASE("class equation and centralizer-orbit identity") {
  for (const char* spec : {"cyclic:12", "dihedral:7", "frobenius:7,3", "gpq:7,3",
                           "product:cyclic:2xcyclic:6"}) {
    FiniteGroup G = construct_group(spec);
    long total = 0;
    for (const ConjugacyClass& c : G.classes()) {
      total += c.size();
      CHECK(c.centralizer_order * c.size() == G.order());
      // all members share the element order
      for (int x : c.members) CHECK(G.element_order(x) == c.element_order);
    }
    CHECK(total == G.order());
  }
}

TEST_CASE("subgroup enumeration") {
  CHECK(all_subgroups(construct_group("cyclic:6")).size() == 4);
  CHECK(all_subgroups(construct_group("dihedral:3")).size() == 6);
  FiniteGroup C2C2 = construct_group("product:cyclic:2xcyclic:2");
  CHECK(all_subgroups(C2C2).size() == 5);
}

TEST_CASE("subgroup lattice orbits are closed under conjugation") {
  FiniteGroup G = construct_group("dihedral:6");
  SubgroupLattice latt = subgroup_lattice(G);
  for (const Subgroup& H : latt.subgroups) {
    for (int g = 0; g < G.order(); ++g) {
      Subgroup C = conjugate_subgroup(G, H, g);
      CHECK(latt.index_of(C.elems) >= 0);
    }
  }
  // trivial and full subgroups present
  CHECK(latt.subgroups.front().order() == 1);
  CHECK(latt.subgroups.back().order() == G.order());
}

TEST_CASE("subgroup bound is enforced") {
  FiniteGroup G = construct_group("cyclic:30");
  CHECK_THROWS_AS(subgroup_lattice(G, 10), GroupError);
}

TEST_CASE("normal subgroups of gpq:7,3") {
  FiniteGroup G = construct_group("gpq:7,3");
  std::vector<Subgroup> normals = normal_subgroups(G);
  CHECK(normals.size() == 8);
  CHECK(subgroup_orders(normals) == std::multiset<long>{1, 3, 7, 21, 21, 42, 63, 126});
}

TEST_CASE("normal subgroups of frobenius and cyclic groups") {
  FiniteGroup F = construct_group("frobenius:7,3");
  std::vector<Subgroup> normals = normal_subgroups(F);
  bool has7 = false, has3 = false;
  for (const Subgroup& N : normals) {
    if (N.order() == 7) has7 = true;
    if (N.order() == 3) has3 = true;
  }
  CHECK(has7);
  CHECK_FALSE(has3);
  // abelian: everything normal
  FiniteGroup C12 = construct_group("cyclic:12");
  CHECK(normal_subgroups(C12).size() == all_subgroups(C12).size());
}

TEST_CASE("quotients") {
  FiniteGroup G = construct_group("gpq:7,3");
  SubgroupLattice latt = subgroup_lattice(G);
  // G/G is trivial
  QuotientResult full = quotient(G, full_subgroup(G));
  CHECK(full.group.order() == 1);

  std::vector<Subgroup> normals = normal_subgroups(G, latt);
  const Subgroup* N21_cyclic = nullptr;  // N^1_pq = <a>, cyclic of order 21
  const Subgroup* N7 = nullptr;
  for (const Subgroup& N : normals) {
    if (N.order() == 21) {
      RealizedSubgroup R = realize(G, N);
      if (is_cyclic(R.group)) N21_cyclic = &N;
    }
    if (N.order() == 7) N7 = &N;
  }
  REQUIRE(N21_cyclic != nullptr);
  REQUIRE(N7 != nullptr);
  QuotientResult q1 = quotient(G, *N21_cyclic);
  CHECK(is_isomorphic(q1.group, construct_group("cyclic:6")));
  QuotientResult q2 = quotient(G, *N7);
  CHECK(is_isomorphic(q2.group, construct_group("product:cyclic:3xdihedral:3")));

  // projection is a homomorphism with kernel N
  long kernel = 0;
  for (int x = 0; x < G.order(); ++x) {
    for (int y = 0; y < G.order(); ++y)
      CHECK(q2.projection[G.mul(x, y)] ==
            q2.group.mul(q2.projection[x], q2.projection[y]));
    if (q2.projection[x] == q2.group.identity()) ++kernel;
  }
  CHECK(kernel == 7);

  // non-normal subgroup is rejected
  FiniteGroup S3 = construct_group("dihedral:3");
  Subgroup refl = subgroup_closure(S3, {3});  // a single reflection
  REQUIRE(refl.order() == 2);
  CHECK_THROWS_AS(quotient(S3, refl), GroupError);
}

TEST_CASE("isomorphism testing") {
  CHECK(is_isomorphic(construct_group("cyclic:6"), construct_group("cyclic:6")));
  CHECK(is_isomorphic(construct_group("cyclic:6"), construct_group("product:cyclic:2xcyclic:3")));
  CHECK_FALSE(is_isomorphic(construct_group("cyclic:4"), construct_group("product:cyclic:2xcyclic:2")));
  CHECK_FALSE(is_isomorphic(construct_group("dihedral:3"), construct_group("cyclic:6")));

  // the witness is a verified bijective homomorphism
  FiniteGroup A = construct_group("dihedral:5");
  FiniteGroup B = construct_group("semidirect:cyclic:5,cyclic:2,apow:4");
  auto iso = isomorphism(A, B);
  REQUIRE(iso.has_value());
  Homomorphism h{&A, &B, *iso};
  CHECK(h.verify());
  CHECK(h.is_bijective());
}

TEST_CASE("N_63 inside gpq:7,3 is C3 x F21") {
  FiniteGroup G = construct_group("gpq:7,3");
  std::vector<Subgroup> normals = normal_subgroups(G);
  const Subgroup* N63 = nullptr;
  for (const Subgroup& N : normals)
    if (N.order() == 63) N63 = &N;
  REQUIRE(N63 != nullptr);
  RealizedSubgroup R = realize(G, *N63);
  CHECK(is_isomorphic(R.group, construct_group("product:cyclic:3xfrobenius:7,3")));
}

TEST_CASE("residuals") {
  FiniteGroup N63 = construct_group("product:cyclic:3xfrobenius:7,3");
  Subgroup o3 = residual_p(N63, 3);
  CHECK(o3.order() == 7);
  Subgroup o7 = residual_p(N63, 7);
  CHECK(o7.order() == 63);

  FiniteGroup G = construct_group("gpq:7,3");
  Subgroup gnil = residual_nil(G);
  CHECK(gnil.order() == 21);
  CHECK(is_cyclic(realize(G, gnil).group));  // N^1_pq = <a>

  // residual minimality: every normal N with p-power quotient contains O^p(G)
  std::vector<Subgroup> normals = normal_subgroups(G);
  for (long p : {2L, 3L, 7L}) {
    Subgroup res = residual_p(G, p, normals);
    for (const Subgroup& N : normals) {
      long index = G.order() / N.order();
      bool ppow = true;
      long t = index;
      while (t % p == 0) t /= p;
      ppow = (t == 1);
      if (ppow) CHECK(N.contains_set(res));
    }
  }
}

TEST_CASE("large subgroups") {
  FiniteGroup G = construct_group("gpq:7,3");
  SubgroupLattice latt = subgroup_lattice(G);
  std::vector<Subgroup> large = large_subgroups(G, latt);
  CHECK(subgroup_orders(large) == std::multiset<long>{42, 63, 126});

  FiniteGroup N63 = construct_group("product:cyclic:3xfrobenius:7,3");
  Subgroup Np = residual_p(N63, 3);
  for (const Subgroup& L : large_subgroups(N63)) CHECK(L.contains_set(Np));

  FiniteGroup triv = construct_group("cyclic:1");
  std::vector<Subgroup> lt = large_subgroups(triv);
  CHECK(lt.size() == 1);
  CHECK(lt[0].order() == 1);
}

TEST_CASE("oliver predicate") {
  CHECK(is_oliver(construct_group("gpq:7,3")).oliver);
  for (long n : {2, 3, 8, 12, 30, 60}) {
    OliverResult r = is_oliver(construct_group("cyclic:" + std::to_string(n)));
    CHECK_FALSE(r.oliver);
  }
  OliverResult d = is_oliver(construct_group("dihedral:21"));
  CHECK_FALSE(d.oliver);
  // disqualifying chain: 1 <| C_21 <| D_42
  CHECK(d.chain_P.size() == 1);
  CHECK(d.chain_H.size() == 21);
  // A4 = (C2 x C2) x| C3 is not Oliver
  FiniteGroup A4 = construct_group("semidirect:product:cyclic:2xcyclic:2,cyclic:3,rot3");
  CHECK(A4.order() == 12);
  CHECK_FALSE(is_oliver(A4).oliver);
}

TEST_CASE("predicates") {
  FiniteGroup G = construct_group("gpq:7,3");
  GroupPredicates P = predicates(G);
  CHECK(P.solvable);
  CHECK_FALSE(P.nilpotent);
  CHECK_FALSE(has_element_of_order_divisible_by(G, 8));

  CHECK(has_element_of_order_divisible_by(construct_group("cyclic:8"), 8));

  GroupPredicates PF = predicates(construct_group("frobenius:7,3"));
  CHECK(PF.solvable);
  CHECK_FALSE(PF.nilpotent);

  CHECK(predicates(construct_group("cyclic:12")).nilpotent);
  CHECK(predicates(construct_group("product:cyclic:2xcyclic:4")).nilpotent);
}

TEST_CASE("quotient functoriality on a small group") {
  FiniteGroup G = construct_group("dihedral:6");
  for (const Subgroup& N : normal_subgroups(G)) {
    QuotientResult q = quotient(G, N);
    for (int x = 0; x < G.order(); ++x)
      for (int y = 0; y < G.order(); ++y)
        CHECK(q.projection[G.mul(x, y)] == q.group.mul(q.projection[x], q.projection[y]));
  }
}

TEST_CASE("centralizer") {
  FiniteGroup G = construct_group("gpq:7,3");
  // (b,1) is element (1*21+0)*3+0 = 63; its centralizer has order 2q = 6
  GpqTriple b{1, 0, 0};
  int bi = gpq_triple_index(b, 7, 3);
  Subgroup C = centralizer(G, bi);
  CHECK(C.order() == 6);
  CHECK(is_cyclic(realize(G, C).group));
}

TEST_CASE("realize keeps class fusion consistent") {
  FiniteGroup G = construct_group("dihedral:6");
  SubgroupLattice latt = subgroup_lattice(G);
  for (const Subgroup& H : latt.subgroups) {
    RealizedSubgroup R = realize(G, H);
    CHECK(R.group.order() == H.order());
    for (int c = 0; c < R.group.class_count(); ++c) {
      int parent_class = R.class_fusion[c];
      for (int x : R.group.classes()[c].members)
        CHECK(G.class_of(R.to_parent[x]) == parent_class);
    }
  }
}

}  // TEST_SUITE
