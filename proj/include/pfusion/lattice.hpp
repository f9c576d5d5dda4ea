#ifndef PFUSION_LATTICE_HPP
#define PFUSION_LATTICE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "group.hpp"

namespace pfusion
{

// Largest |P| = p^e accepted by enumerate_subgroups: e = 5 for p = 3 and
// e = 4 otherwise, unless overridden.
unsigned default_lattice_exponent(unsigned p);

// All subgroups of a p-group P, with inclusion, normality in P and
// P-conjugacy classes.
class SubgroupLattice
{
public:
  // Throws NotAPGroup or LatticeTooLarge.
  explicit SubgroupLattice(Group const &P,
                           std::optional<unsigned> max_exponent = std::nullopt);

  Group const &group() const { return _P; }

  // 0 for the trivial group.
  unsigned prime() const { return _p; }

  std::size_t size() const { return _subgroups.size(); }

  // Sorted by order, then by element list; index 0 is the trivial
  // subgroup and the last index is P.
  std::vector<Group> const &subgroups() const { return _subgroups; }
  Group const &operator[](std::size_t i) const { return _subgroups[i]; }

  // subgroups()[i] <= subgroups()[j]
  bool includes(std::size_t i, std::size_t j) const
  {
    return _inclusion[i * size() + j];
  }

  bool is_normal(std::size_t i) const { return _normal[i]; }

  // P-conjugacy class id of subgroup i (ids are the smallest member index).
  std::size_t class_of(std::size_t i) const { return _class[i]; }

  // One subgroup per P-conjugacy class, the smallest index in each class.
  std::vector<std::size_t> class_representatives() const;

  std::vector<std::size_t> normal_subgroups() const;

  std::size_t index_of(Group const &H) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  Group _P;
  unsigned _p = 0u;
  std::vector<Group> _subgroups;
  std::vector<bool> _inclusion;
  std::vector<bool> _normal;
  std::vector<std::size_t> _class;
};

inline SubgroupLattice enumerate_subgroups(Group const &P,
                                           std::optional<unsigned> max_exponent = std::nullopt)
{
  return SubgroupLattice(P, max_exponent);
}

enum class FamilyKind
{
  AllAbelian,
  MaxAbelian,
  MaxElementaryAbelian,
  Custom
};

char const *family_kind_name(FamilyKind kind);

// Throws InvalidArgument for unknown tags.
FamilyKind parse_family_kind(std::string const &tag);

// A set of abelian subgroups of a fixed p-group P.
class AbelianFamily
{
public:
  // Members must be abelian subgroups of P (NotAbelian / NotInP otherwise).
  // Duplicates by element set are dropped; members are kept sorted.
  AbelianFamily(Group P, std::vector<Group> members, std::string label = "custom");

  Group const &group() const { return _P; }
  std::vector<Group> const &members() const { return _members; }
  std::string const &label() const { return _label; }

  bool empty() const { return _members.empty(); }
  std::size_t size() const { return _members.size(); }
  bool contains(Group const &A) const;

private:
  Group _P;
  std::vector<Group> _members;
  std::string _label;
};

// Custom families are built with the AbelianFamily constructor directly.
AbelianFamily build_family(SubgroupLattice const &lattice, FamilyKind kind);

// J_A: the join of all members (trivial for the empty family).
Group family_join(AbelianFamily const &family);

// I_A: the intersection of all members, trivial for the empty family.
Group family_meet(AbelianFamily const &family);

// A|Q: the members contained in Q.
AbelianFamily family_restrict(AbelianFamily const &family, Group const &Q);

// J(P), generated by the abelian subgroups of maximal order, and Z(J(P)).
Group thompson_J(SubgroupLattice const &lattice);
Group thompson_ZJ(SubgroupLattice const &lattice);

// Length of the lower central series; nullopt if H is not nilpotent.
std::optional<unsigned> nilpotency_class(Group const &H);

// Normal subgroups of P of class at most two.
std::vector<Group> normal_class_le2_subgroups(SubgroupLattice const &lattice);

} // namespace pfusion

#endif // PFUSION_LATTICE_HPP
