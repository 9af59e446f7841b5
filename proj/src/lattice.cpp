#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gpqv/cyclotomic.hpp"
#include "gpqv/group.hpp"

namespace gpqv {

bool Subgroup::contains_set(const Subgroup& other) const {
  for (int x : other.elems)
    if (!member[x]) return false;
  return true;
}

namespace {

Subgroup make_subgroup(const FiniteGroup& G, std::vector<int> elems, std::vector<int> gens) {
  Subgroup H;
  H.parent = &G;
  std::sort(elems.begin(), elems.end());
  H.elems = std::move(elems);
  H.member.assign(G.order(), 0);
  for (int x : H.elems) H.member[x] = 1;
  H.gens = std::move(gens);
  return H;
}

std::vector<int> closure_elements(const FiniteGroup& G, const std::vector<int>& gens) {
  std::vector<char> in(G.order(), 0);
  std::vector<int> elems{G.identity()};
  in[G.identity()] = 1;
  for (size_t i = 0; i < elems.size(); ++i)
    for (int g : gens) {
      int y = G.mul(elems[i], g);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  return elems;
}

std::vector<int> greedy_generators(const FiniteGroup& G, const std::vector<int>& elems) {
  std::vector<int> gens;
  std::vector<char> in(G.order(), 0);
  in[G.identity()] = 1;
  size_t covered = 1;
  for (int x : elems) {
    if (in[x]) continue;
    gens.push_back(x);
    std::vector<int> closed = closure_elements(G, gens);
    std::fill(in.begin(), in.end(), 0);
    for (int y : closed) in[y] = 1;
    covered = closed.size();
    if (covered == elems.size()) break;
  }
  return gens;
}

}  // namespace

Subgroup subgroup_closure(const FiniteGroup& G, std::vector<int> generators) {
  std::vector<int> elems = closure_elements(G, generators);
  return make_subgroup(G, std::move(elems), std::move(generators));
}

Subgroup trivial_subgroup(const FiniteGroup& G) {
  return make_subgroup(G, {G.identity()}, {});
}

Subgroup full_subgroup(const FiniteGroup& G) {
  std::vector<int> all(G.order());
  std::iota(all.begin(), all.end(), 0);
  return make_subgroup(G, std::move(all), G.generators());
}

Subgroup conjugate_subgroup(const FiniteGroup& G, const Subgroup& H, int g) {
  std::vector<int> elems, gens;
  elems.reserve(H.elems.size());
  for (int x : H.elems) elems.push_back(G.conjugate(g, x));
  for (int x : H.gens) gens.push_back(G.conjugate(g, x));
  return make_subgroup(G, std::move(elems), std::move(gens));
}

Subgroup intersect(const Subgroup& A, const Subgroup& B) {
  if (A.parent != B.parent) throw GroupError("intersect: different parent groups");
  std::vector<int> elems;
  for (int x : A.elems)
    if (B.member[x]) elems.push_back(x);
  const FiniteGroup& G = *A.parent;
  std::vector<int> gens = greedy_generators(G, elems);
  return make_subgroup(G, std::move(elems), std::move(gens));
}

Subgroup centralizer(const FiniteGroup& G, int x) {
  std::vector<int> elems;
  for (int g = 0; g < G.order(); ++g)
    if (G.mul(g, x) == G.mul(x, g)) elems.push_back(g);
  std::vector<int> gens = greedy_generators(G, elems);
  return make_subgroup(G, std::move(elems), std::move(gens));
}

int SubgroupLattice::index_of(const std::vector<int>& elems) const {
  auto cmp = [](const Subgroup& s, const std::vector<int>& key) {
    if (s.elems.size() != key.size()) return s.elems.size() < key.size();
    return s.elems < key;
  };
  auto it = std::lower_bound(subgroups.begin(), subgroups.end(), elems, cmp);
  if (it == subgroups.end() || it->elems != elems) return -1;
  return static_cast<int>(it - subgroups.begin());
}

SubgroupLattice subgroup_lattice(const FiniteGroup& G, int bound) {
  if (G.order() > bound) throw GroupError("subgroup_lattice: group order exceeds bound");
  std::map<std::vector<int>, int> seen;
  std::vector<Subgroup> subs;
  auto add = [&](Subgroup S) -> int {
    auto it = seen.find(S.elems);
    if (it != seen.end()) return -1;
    int id = static_cast<int>(subs.size());
    seen.emplace(S.elems, id);
    subs.push_back(std::move(S));
    return id;
  };

  add(trivial_subgroup(G));
  std::vector<int> cyclic_ids;
  for (int x = 0; x < G.order(); ++x) {
    Subgroup C = subgroup_closure(G, {x});
    auto it = seen.find(C.elems);
    int id = it == seen.end() ? add(std::move(C)) : it->second;
    if (id >= 0) cyclic_ids.push_back(id);
  }

  // Every subgroup is a join of cyclic subgroups.
  std::vector<int> queue(subs.size());
  std::iota(queue.begin(), queue.end(), 0);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int si = queue[qi];
    for (int ci : cyclic_ids) {
      if (subs[si].contains_set(subs[ci])) continue;
      std::vector<int> gens = subs[si].gens;
      gens.insert(gens.end(), subs[ci].gens.begin(), subs[ci].gens.end());
      Subgroup J = subgroup_closure(G, std::move(gens));
      if (seen.find(J.elems) == seen.end()) {
        int id = add(std::move(J));
        queue.push_back(id);
      }
    }
  }

  SubgroupLattice latt;
  latt.subgroups = std::move(subs);
  std::sort(latt.subgroups.begin(), latt.subgroups.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  });

  latt.orbit_of.assign(latt.subgroups.size(), -1);
  for (int i = 0; i < static_cast<int>(latt.subgroups.size()); ++i) {
    if (latt.orbit_of[i] >= 0) continue;
    int orb = static_cast<int>(latt.orbits.size());
    std::set<int> members;
    for (int g = 0; g < G.order(); ++g) {
      Subgroup C = conjugate_subgroup(G, latt.subgroups[i], g);
      int j = latt.index_of(C.elems);
      if (j < 0) throw GroupError("subgroup_lattice: conjugate missing (enumeration bug)");
      members.insert(j);
    }
    latt.orbits.emplace_back(members.begin(), members.end());
    for (int j : latt.orbits.back()) latt.orbit_of[j] = orb;
  }
  return latt;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& G, int bound) {
  return subgroup_lattice(G, bound).subgroups;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& G, const SubgroupLattice& latt) {
  std::vector<Subgroup> out;
  for (size_t i = 0; i < latt.subgroups.size(); ++i)
    if (latt.is_normal(static_cast<int>(i))) out.push_back(latt.subgroups[i]);
  return out;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& G) {
  return normal_subgroups(G, subgroup_lattice(G, G.order()));
}

namespace {

bool is_normal_in(const FiniteGroup& G, const Subgroup& N) {
  // Conjugation by a generating set suffices.
  for (int g : G.generators())
    for (int x : N.elems)
      if (!N.member[G.conjugate(g, x)]) return false;
  return true;
}

}  // namespace

QuotientResult quotient(const FiniteGroup& G, const Subgroup& N) {
  if (N.parent != &G) throw GroupError("quotient: subgroup of a different group");
  if (!is_normal_in(G, N)) throw GroupError("quotient: subgroup is not normal");
  int n = G.order();
  std::vector<int> coset_rep(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset_rep[x] >= 0) continue;
    reps.push_back(x);
    for (int h : N.elems) coset_rep[G.mul(x, h)] = x;
  }
  int q = static_cast<int>(reps.size());
  std::map<int, int> rep_index;
  for (int i = 0; i < q; ++i) rep_index[reps[i]] = i;
  std::vector<int> proj(n);
  for (int x = 0; x < n; ++x) proj[x] = rep_index[coset_rep[x]];
  std::vector<int> mul(static_cast<size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) mul[static_cast<size_t>(i) * q + j] = proj[G.mul(reps[i], reps[j])];
  std::vector<std::string> labels(q);
  for (int i = 0; i < q; ++i) labels[i] = "[" + G.label(reps[i]) + "]";
  std::vector<int> gens;
  for (int g : G.generators()) {
    int im = proj[g];
    if (im != proj[G.identity()] && std::find(gens.begin(), gens.end(), im) == gens.end())
      gens.push_back(im);
  }
  QuotientResult result{FiniteGroup::from_table(std::move(mul), std::move(labels), std::move(gens)),
                        std::move(proj)};
  return result;
}

RealizedSubgroup realize(const FiniteGroup& G, const Subgroup& H) {
  if (H.parent != &G) throw GroupError("realize: subgroup of a different group");
  int m = H.order();
  RealizedSubgroup R;
  R.to_parent = H.elems;
  R.from_parent.assign(G.order(), -1);
  for (int i = 0; i < m; ++i) R.from_parent[H.elems[i]] = i;
  std::vector<int> mul(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int z = R.from_parent[G.mul(H.elems[i], H.elems[j])];
      if (z < 0) throw GroupError("realize: element set not closed");
      mul[static_cast<size_t>(i) * m + j] = z;
    }
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = G.label(H.elems[i]);
  std::vector<int> gens;
  for (int g : H.gens) gens.push_back(R.from_parent[g]);
  R.group = FiniteGroup::from_table(std::move(mul), std::move(labels), std::move(gens));
  R.class_fusion.assign(R.group.class_count(), -1);
  for (int c = 0; c < R.group.class_count(); ++c)
    R.class_fusion[c] = G.class_of(R.to_parent[R.group.classes()[c].representative]);
  return R;
}

bool Homomorphism::verify() const {
  if (!source || !target) return false;
  if (static_cast<int>(images.size()) != source->order()) return false;
  if (images[source->identity()] != target->identity()) return false;
  for (int x = 0; x < source->order(); ++x)
    for (int y = 0; y < source->order(); ++y)
      if (images[source->mul(x, y)] != target->mul(images[x], images[y])) return false;
  return true;
}

bool Homomorphism::is_bijective() const {
  if (!source || !target || source->order() != target->order()) return false;
  std::vector<char> hit(target->order(), 0);
  for (int im : images) {
    if (hit[im]) return false;
    hit[im] = 1;
  }
  return true;
}

namespace {

struct WordDecomposition {
  std::vector<int> bfs_order;  // identity first
  std::vector<int> parent;     // index of previous element
  std::vector<int> via_gen;    // generator index used
};

WordDecomposition decompose(const FiniteGroup& G, const std::vector<int>& gens) {
  WordDecomposition W;
  int n = G.order();
  W.parent.assign(n, -1);
  W.via_gen.assign(n, -1);
  std::vector<char> seen(n, 0);
  seen[G.identity()] = 1;
  W.bfs_order.push_back(G.identity());
  for (size_t i = 0; i < W.bfs_order.size(); ++i) {
    int x = W.bfs_order[i];
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      int y = G.mul(x, gens[gi]);
      if (!seen[y]) {
        seen[y] = 1;
        W.parent[y] = x;
        W.via_gen[y] = static_cast<int>(gi);
        W.bfs_order.push_back(y);
      }
    }
  }
  return W;
}

// Multiset invariants used to screen non-isomorphic groups quickly.
std::vector<std::pair<long, long>> element_profile(const FiniteGroup& G) {
  std::vector<std::pair<long, long>> prof;
  prof.reserve(G.order());
  for (int x = 0; x < G.order(); ++x)
    prof.emplace_back(G.element_order(x), G.classes()[G.class_of(x)].size());
  std::sort(prof.begin(), prof.end());
  return prof;
}

bool extend_isomorphism(const FiniteGroup& A, const FiniteGroup& B, const std::vector<int>& gens,
                        size_t next_gen, std::vector<int>& gen_images,
                        std::vector<int>& final_images) {
  if (next_gen == gens.size()) {
    WordDecomposition W = decompose(A, gens);
    std::vector<int> img(A.order(), -1);
    img[A.identity()] = B.identity();
    for (size_t i = 1; i < W.bfs_order.size(); ++i) {
      int y = W.bfs_order[i];
      img[y] = B.mul(img[W.parent[y]], gen_images[W.via_gen[y]]);
    }
    for (int v : img)
      if (v < 0) return false;
    std::vector<char> hit(B.order(), 0);
    for (int v : img) {
      if (hit[v]) return false;
      hit[v] = 1;
    }
    for (int x = 0; x < A.order(); ++x)
      for (int y = 0; y < A.order(); ++y)
        if (img[A.mul(x, y)] != B.mul(img[x], img[y])) return false;
    final_images = std::move(img);
    return true;
  }
  int g = gens[next_gen];
  long go = A.element_order(g);
  long gcs = A.classes()[A.class_of(g)].size();
  for (int cand = 0; cand < B.order(); ++cand) {
    if (B.element_order(cand) != go) continue;
    if (B.classes()[B.class_of(cand)].size() != gcs) continue;
    gen_images[next_gen] = cand;
    // partial consistency: the subgroup generated so far must map coherently
    std::vector<int> partial_gens(gens.begin(), gens.begin() + next_gen + 1);
    WordDecomposition W = decompose(A, partial_gens);
    std::vector<int> img(A.order(), -1);
    img[A.identity()] = B.identity();
    bool ok = true;
    for (size_t i = 1; i < W.bfs_order.size() && ok; ++i) {
      int y = W.bfs_order[i];
      if (W.parent[y] < 0) continue;
      img[y] = B.mul(img[W.parent[y]], gen_images[W.via_gen[y]]);
    }
    // order and closure spot-checks within the generated subgroup
    for (size_t i = 0; i < W.bfs_order.size() && ok; ++i) {
      int x = W.bfs_order[i];
      if (img[x] >= 0 && A.element_order(x) != B.element_order(img[x])) ok = false;
    }
    if (ok && extend_isomorphism(A, B, gens, next_gen + 1, gen_images, final_images)) return true;
  }
  gen_images[next_gen] = -1;
  return false;
}

}  // namespace

std::optional<std::vector<int>> isomorphism(const FiniteGroup& A, const FiniteGroup& B) {
  if (A.order() != B.order()) return std::nullopt;
  if (A.is_abelian() != B.is_abelian()) return std::nullopt;
  if (A.exponent() != B.exponent()) return std::nullopt;
  if (A.class_count() != B.class_count()) return std::nullopt;
  if (element_profile(A) != element_profile(B)) return std::nullopt;

  std::vector<int> all(A.order());
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> gens = greedy_generators(A, all);
  if (gens.empty()) {  // trivial group
    return std::vector<int>{B.identity()};
  }
  std::vector<int> gen_images(gens.size(), -1);
  std::vector<int> final_images;
  if (extend_isomorphism(A, B, gens, 0, gen_images, final_images)) return final_images;
  return std::nullopt;
}

bool is_isomorphic(const FiniteGroup& A, const FiniteGroup& B) {
  return isomorphism(A, B).has_value();
}

// ---------------------------------------------------------------------------
// residuals, large subgroups, Oliver, predicates

namespace {

bool order_is_p_power(long n, long p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

Subgroup residual_p(const FiniteGroup& G, long p, const std::vector<Subgroup>& normals) {
  Subgroup result = full_subgroup(G);
  for (const Subgroup& N : normals) {
    long index = G.order() / N.order();
    if (order_is_p_power(index, p)) result = intersect(result, N);
  }
  long index = G.order() / result.order();
  if (!order_is_p_power(index, p))
    throw GroupError("residual_p: intersection lost the p-power quotient property");
  return result;
}

Subgroup residual_p(const FiniteGroup& G, long p) { return residual_p(G, p, normal_subgroups(G)); }

Subgroup residual_nil(const FiniteGroup& G, const std::vector<Subgroup>& normals) {
  Subgroup result = full_subgroup(G);
  for (const Subgroup& N : normals) {
    if (is_nilpotent(quotient(G, N).group)) result = intersect(result, N);
  }
  if (!is_nilpotent(quotient(G, result).group))
    throw GroupError("residual_nil: intersection quotient is not nilpotent");
  return result;
}

Subgroup residual_nil(const FiniteGroup& G) { return residual_nil(G, normal_subgroups(G)); }

std::vector<int> large_subgroup_indices(const FiniteGroup& G, const SubgroupLattice& latt) {
  std::vector<Subgroup> normals = normal_subgroups(G, latt);
  std::vector<Subgroup> stored;
  for (long p : prime_factors(G.order())) stored.push_back(residual_p(G, p, normals));
  if (G.order() == 1) stored.push_back(trivial_subgroup(G));
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(latt.subgroups.size()); ++i) {
    for (const Subgroup& R : stored)
      if (latt.subgroups[i].contains_set(R)) {
        out.push_back(i);
        break;
      }
  }
  return out;
}

std::vector<Subgroup> large_subgroups(const FiniteGroup& G, const SubgroupLattice& latt) {
  std::vector<Subgroup> out;
  for (int i : large_subgroup_indices(G, latt)) out.push_back(latt.subgroups[i]);
  return out;
}

std::vector<Subgroup> large_subgroups(const FiniteGroup& G) {
  SubgroupLattice latt = subgroup_lattice(G, G.order());
  return large_subgroups(G, latt);
}

OliverResult is_oliver(const FiniteGroup& G, bool trivial_is_prime_power) {
  std::vector<Subgroup> normals = normal_subgroups(G);
  for (const Subgroup& H : normals) {
    long index = G.order() / H.order();
    if (!is_prime_power_order(index, trivial_is_prime_power)) continue;
    RealizedSubgroup R = realize(G, H);
    for (const Subgroup& P : normal_subgroups(R.group)) {
      if (!is_prime_power_order(P.order(), trivial_is_prime_power)) continue;
      if (is_cyclic(quotient(R.group, P).group)) {
        OliverResult res;
        res.oliver = false;
        for (int x : P.elems) res.chain_P.push_back(R.to_parent[x]);
        res.chain_H = H.elems;
        return res;
      }
    }
  }
  return OliverResult{};
}

Subgroup derived_subgroup(const FiniteGroup& G) {
  std::set<int> comms;
  for (int x = 0; x < G.order(); ++x)
    for (int y = 0; y < G.order(); ++y)
      comms.insert(G.mul(G.mul(x, y), G.inv(G.mul(y, x))));
  return subgroup_closure(G, std::vector<int>(comms.begin(), comms.end()));
}

bool is_solvable(const FiniteGroup& G) {
  FiniteGroup current = G;
  while (current.order() > 1) {
    Subgroup D = derived_subgroup(current);
    if (D.order() == current.order()) return false;  // perfect, nontrivial
    current = realize(current, D).group;
  }
  return true;
}

bool is_nilpotent(const FiniteGroup& G) {
  if (G.order() == 1) return true;
  SubgroupLattice latt = subgroup_lattice(G, G.order());
  for (long p : prime_factors(G.order())) {
    long ppart = 1;
    long n = G.order();
    while (n % p == 0) {
      ppart *= p;
      n /= p;
    }
    bool found = false;
    for (int i = 0; i < static_cast<int>(latt.subgroups.size()); ++i)
      if (latt.subgroups[i].order() == ppart && latt.is_normal(i)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool is_cyclic(const FiniteGroup& G) { return G.exponent() == G.order(); }

GroupPredicates predicates(const FiniteGroup& G) {
  GroupPredicates P;
  P.solvable = is_solvable(G);
  P.nilpotent = is_nilpotent(G);
  for (int x = 0; x < G.order(); ++x) P.order_census[G.element_order(x)]++;
  return P;
}

bool has_element_of_order_divisible_by(const FiniteGroup& G, long k) {
  for (int x = 0; x < G.order(); ++x)
    if (G.element_order(x) % k == 0) return true;
  return false;
}

}  // namespace gpqv
