#ifndef PFUSION_GROUP_HPP
#define PFUSION_GROUP_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "perm.hpp"

namespace pfusion
{

inline constexpr std::size_t default_element_limit = 100000u;

// An immutable permutation group with all of its elements materialized.
//
// Copies are cheap (shared storage). Equality compares element sets, so two
// groups built from different generating sets compare equal whenever they
// contain the same permutations. A subgroup is just a Group; operations that
// need an ambient group take it as an explicit argument and check containment.
class Group
{
public:
  // Trivial group of degree 1.
  Group();

  // Closure of the generators. Throws DegreeMismatch if a generator has the
  // wrong degree and SizeLimitExceeded if the closure outgrows `limit`.
  Group(unsigned degree, std::vector<Perm> const &generators,
        std::size_t limit = default_element_limit);

  static Group trivial(unsigned degree);

  // Wraps a set of permutations already known to be closed under
  // multiplication; a small generating set is derived from it.
  static Group from_elements(unsigned degree, std::vector<Perm> elements);

  unsigned degree() const;
  std::size_t order() const;
  std::vector<Perm> const &generators() const;

  // Sorted ascending; the identity is always first.
  std::vector<Perm> const &elements() const;

  bool contains(Perm const &x) const;

  // Position of x in elements(), or npos.
  std::size_t index_of(Perm const &x) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Perm identity() const { return Perm(degree()); }

  bool is_trivial() const { return order() == 1u; }
  bool is_abelian() const;
  bool is_subgroup_of(Group const &other) const;

  std::size_t hash() const;

  friend bool operator==(Group const &lhs, Group const &rhs);

private:
  struct Data
  {
    unsigned degree = 1u;
    std::vector<Perm> generators;
    std::vector<Perm> elements;
    std::size_t hash = 0u;
  };

  explicit Group(std::shared_ptr<Data const> data) : _data(std::move(data)) {}

  std::shared_ptr<Data const> _data;
};

struct GroupHash
{
  std::size_t operator()(Group const &g) const noexcept { return g.hash(); }
};

// build_group with an explicit degree so that the empty generating set is
// meaningful.
Group build_group(unsigned degree, std::vector<Perm> const &generators,
                  std::size_t limit = default_element_limit);

Group subgroup_generated(Group const &ambient, std::vector<Perm> const &gens);

// H^g = { g^-1 h g : h in H }
Group conjugate_subgroup(Group const &ambient, Group const &H, Perm const &g);

// True if H^g = H (no containment checks).
bool normalizes(Perm const &g, Group const &H);

Group normalizer(Group const &G, Group const &H);
Group centralizer(Group const &G, Group const &H);
Group center(Group const &G);

// H <= G and H^g = H for all g in G.
bool is_normal(Group const &G, Group const &H);

// Smallest normal subgroup of G containing the given elements.
Group normal_closure(Group const &G, std::vector<Perm> const &gens);

// [H, K] = < [h, k] : h in H, k in K >; H and K must have equal degree.
Group commutator_subgroup(Group const &H, Group const &K);
Group derived_subgroup(Group const &B);

// [A, b] = < [a, b] : a in A >
Group commutator_with_element(Group const &ambient, Group const &A, Perm const &b);

// Intersection and join; both throw AmbientMismatch on a degree mismatch.
Group meet(Group const &H, Group const &K);
Group join(Group const &H, Group const &K);

bool is_prime(unsigned long long n);

// Largest power of p dividing n.
unsigned long long p_part(unsigned long long n, unsigned p);
bool is_power_of(unsigned long long n, unsigned p);

// Every element has p-power order.
bool is_p_group(Group const &H, unsigned p);

// A Sylow p-subgroup of G, grown from a p-element by repeatedly extending
// inside the normalizer. Trivial when p does not divide |G|.
Group sylow_subgroup(Group const &G, unsigned p);

// O_p(G): the intersection of all Sylow p-subgroups.
Group p_core(Group const &G, unsigned p);

// < x in G : ord(x) coprime to p >
Group p_prime_generated(Group const &G, unsigned p);

// The conjugation action of N on the elements of a subgroup Q it normalizes,
// as a permutation group on Q's element list.
class ActionImage
{
public:
  // Throws DoesNotNormalize unless every element of N normalizes Q.
  ActionImage(Group const &source, Group const &target);

  Group const &source() const { return _source; }

  // Q's elements; point i of the image group is target_points()[i].
  std::vector<Perm> const &target_points() const { return _points.elements(); }

  Group const &image() const { return _image; }

  // Image of g in N / C_N(Q).
  Perm project(Perm const &g) const;

private:
  Group _source;
  Group _points;
  Group _image;
};

inline ActionImage induced_action(Group const &N, Group const &Q)
{
  return ActionImage(N, Q);
}

} // namespace pfusion

#endif // PFUSION_GROUP_HPP
