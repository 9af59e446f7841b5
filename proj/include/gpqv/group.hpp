#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gpqv {

class GroupError : public std::exception {
 public:
  explicit GroupError(std::string msg) : msg_(std::move(msg)) {}
  const char* what() const noexcept override { return msg_.c_str(); }

 private:
  std::string msg_;
};

struct ConjugacyClass {
  int representative = 0;
  std::vector<int> members;  // sorted
  long element_order = 1;
  long centralizer_order = 1;
  long size() const { return static_cast<long>(members.size()); }
};

// A finite group given by its full multiplication table. All derived structure
// (element orders, conjugacy classes, real pairing, exponent) is computed once
// at construction; instances are immutable afterwards.
class FiniteGroup {
 public:
  FiniteGroup();  // the trivial group
  static FiniteGroup from_table(std::vector<int> mul, std::vector<std::string> labels = {},
                                std::vector<int> generators = {});

  int order() const { return n_; }
  int mul(int x, int y) const { return mul_[static_cast<size_t>(x) * n_ + y]; }
  int inv(int x) const { return inv_[x]; }
  int identity() const { return id_; }
  int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int power(int x, long k) const;

  long element_order(int x) const { return orders_[x]; }
  long exponent() const { return exponent_; }
  bool is_abelian() const { return abelian_; }

  const std::vector<int>& generators() const { return gens_; }
  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Classes in canonical order: (element order, size, smallest member).
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  int class_of(int x) const { return class_of_[x]; }
  int class_count() const { return static_cast<int>(classes_.size()); }
  // Class containing the inverses of class c (the real pairing involution).
  int inverse_class(int c) const { return inv_class_[c]; }
  int identity_class() const { return class_of_[id_]; }

  // Real classes (g)^± as pairs {c, inverse_class(c)} with c <= partner,
  // listed in canonical class order.
  struct RealClass {
    int c1;
    int c2;  // == c1 when the class is self-inverse
  };
  const std::vector<RealClass>& real_classes() const { return real_classes_; }
  int real_class_of_class(int c) const { return real_of_class_[c]; }
  std::vector<int> real_class_members(int rc) const;

 private:
  int n_ = 1;
  std::vector<int> mul_;
  std::vector<int> inv_;
  int id_ = 0;
  std::vector<std::string> labels_;
  std::vector<int> gens_;
  std::vector<long> orders_;
  long exponent_ = 1;
  bool abelian_ = true;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
  std::vector<int> inv_class_;
  std::vector<RealClass> real_classes_;
  std::vector<int> real_of_class_;

  void analyze();
  void validate() const;
};

// Group-spec mini-language:
//   cyclic:n | dihedral:n | frobenius:p,q | gpq:p,q | product:<spec>x<spec>
//   | semidirect:<N-spec>,cyclic:q,<action>     action = apow:k | rot3
FiniteGroup construct_group(const std::string& spec);

// The closed-form product on (eps, l, m) triples of gpq:p,q; i is the twist.
struct GpqTriple {
  int eps, l, m;
};
GpqTriple gpq_triple_mul(const GpqTriple& x, const GpqTriple& y, long p, long q, long i);
int gpq_triple_index(const GpqTriple& t, long p, long q);

struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<int> elems;     // sorted
  std::vector<char> member;   // indicator over parent elements
  std::vector<int> gens;      // some generating set

  int order() const { return static_cast<int>(elems.size()); }
  bool contains(int x) const { return member[x] != 0; }
  bool contains_set(const Subgroup& other) const;
  bool operator==(const Subgroup& o) const { return parent == o.parent && elems == o.elems; }
};

Subgroup subgroup_closure(const FiniteGroup& G, std::vector<int> generators);
Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup full_subgroup(const FiniteGroup& G);
Subgroup conjugate_subgroup(const FiniteGroup& G, const Subgroup& H, int g);
Subgroup intersect(const Subgroup& A, const Subgroup& B);
Subgroup centralizer(const FiniteGroup& G, int x);

struct SubgroupLattice {
  std::vector<Subgroup> subgroups;        // canonical order: (order, elems lex)
  std::vector<std::vector<int>> orbits;   // conjugacy orbits, each sorted; reps = front
  std::vector<int> orbit_of;              // subgroup index -> orbit index
  int index_of(const std::vector<int>& elems) const;
  bool is_normal(int i) const { return orbits[orbit_of[i]].size() == 1; }
};

// Complete subgroup enumeration by closure-joins of cyclic subgroups.
SubgroupLattice subgroup_lattice(const FiniteGroup& G, int bound = 1000);
std::vector<Subgroup> all_subgroups(const FiniteGroup& G, int bound = 1000);
std::vector<Subgroup> normal_subgroups(const FiniteGroup& G);
std::vector<Subgroup> normal_subgroups(const FiniteGroup& G, const SubgroupLattice& latt);

struct QuotientResult {
  FiniteGroup group;
  std::vector<int> projection;  // parent element -> quotient element
};
QuotientResult quotient(const FiniteGroup& G, const Subgroup& N);

// A subgroup materialized as a standalone group, with maps back to the parent.
struct RealizedSubgroup {
  FiniteGroup group;
  std::vector<int> to_parent;    // local element -> parent element
  std::vector<int> from_parent;  // parent element -> local element or -1
  std::vector<int> class_fusion; // local class -> parent class
};
RealizedSubgroup realize(const FiniteGroup& G, const Subgroup& H);

struct Homomorphism {
  const FiniteGroup* source = nullptr;
  const FiniteGroup* target = nullptr;
  std::vector<int> images;
  bool verify() const;
  bool is_bijective() const;
};

std::optional<std::vector<int>> isomorphism(const FiniteGroup& A, const FiniteGroup& B);
bool is_isomorphic(const FiniteGroup& A, const FiniteGroup& B);

// O^p(G): smallest normal subgroup with p-group quotient.
Subgroup residual_p(const FiniteGroup& G, long p, const std::vector<Subgroup>& normals);
Subgroup residual_p(const FiniteGroup& G, long p);
// G^nil: smallest normal subgroup with nilpotent quotient.
Subgroup residual_nil(const FiniteGroup& G, const std::vector<Subgroup>& normals);
Subgroup residual_nil(const FiniteGroup& G);

std::vector<Subgroup> large_subgroups(const FiniteGroup& G, const SubgroupLattice& latt);
std::vector<Subgroup> large_subgroups(const FiniteGroup& G);
// Indices into latt.subgroups of the large subgroups.
std::vector<int> large_subgroup_indices(const FiniteGroup& G, const SubgroupLattice& latt);

struct OliverResult {
  bool oliver = true;
  // When oliver == false, a disqualifying chain P <| H <| G (element lists in G).
  std::vector<int> chain_P, chain_H;
};
OliverResult is_oliver(const FiniteGroup& G, bool trivial_is_prime_power = true);

bool is_solvable(const FiniteGroup& G);
bool is_nilpotent(const FiniteGroup& G);
bool is_cyclic(const FiniteGroup& G);
Subgroup derived_subgroup(const FiniteGroup& G);

struct GroupPredicates {
  bool solvable = false;
  bool nilpotent = false;
  std::map<long, long> order_census;  // element order -> count
};
GroupPredicates predicates(const FiniteGroup& G);
bool has_element_of_order_divisible_by(const FiniteGroup& G, long k);

}  // namespace gpqv
