#include "pfusion/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "pfusion/error.hpp"

namespace pfusion
{

namespace
{

bool group_less(Group const &a, Group const &b)
{
  if (a.order() != b.order())
    return a.order() < b.order();
  return a.elements() < b.elements();
}

std::size_t find_root(std::vector<std::size_t> &parent, std::size_t i)
{
  while (parent[i] != i)
    i = parent[i] = parent[parent[i]];
  return i;
}

} // anonymous namespace

unsigned default_lattice_exponent(unsigned p)
{
  return p == 3u ? 5u : 4u;
}

SubgroupLattice::SubgroupLattice(Group const &P, std::optional<unsigned> max_exponent)
: _P(P)
{
  auto n = P.order();
  if (n > 1u) {
    unsigned p = 2u;
    while (n % p != 0u)
      ++p;
    if (!is_power_of(n, p))
      throw Error(ErrorCode::NotAPGroup,
                  "order " + std::to_string(n) + " is not a prime power");
    _p = p;

    unsigned e = max_exponent.value_or(default_lattice_exponent(p));
    unsigned long long bound = 1u;
    for (unsigned i = 0u; i < e; ++i)
      bound *= p;
    if (n > bound)
      throw Error(ErrorCode::LatticeTooLarge,
                  "|P| = " + std::to_string(n) + " exceeds the lattice bound " +
                  std::to_string(p) + "^" + std::to_string(e));
  }

  // Cyclic subgroups, then close under joining with cyclic subgroups. Every
  // subgroup <x1, ..., xk> is reached through the chain <x1> < <x1, x2> < ...
  std::unordered_map<Group, std::size_t, GroupHash> seen;
  std::vector<Group> found;
  auto add = [&](Group const &H) {
    if (seen.emplace(H, found.size()).second) {
      found.push_back(H);
      return true;
    }
    return false;
  };

  add(Group::trivial(P.degree()));

  std::vector<Group> cyclic;
  for (auto const &x : P.elements()) {
    if (x.is_identity())
      continue;
    Group C(P.degree(), {x});
    if (add(C))
      cyclic.push_back(C);
  }

  for (std::size_t i = 1u; i < found.size(); ++i) {
    for (auto const &C : cyclic) {
      Group H = found[i];
      if (C.is_subgroup_of(H))
        continue;
      add(join(H, C));
    }
  }

  std::sort(found.begin(), found.end(), group_less);
  _subgroups = std::move(found);

  std::size_t m = _subgroups.size();
  _inclusion.assign(m * m, false);
  for (std::size_t i = 0u; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      if (_subgroups[i].is_subgroup_of(_subgroups[j]))
        _inclusion[i * m + j] = true;
    }
  }

  _normal.assign(m, false);
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0u);

  for (std::size_t i = 0u; i < m; ++i) {
    _normal[i] = pfusion::is_normal(P, _subgroups[i]);
    if (_normal[i])
      continue;
    for (auto const &g : P.generators()) {
      auto j = index_of(conjugate_subgroup(P, _subgroups[i], g));
      auto a = find_root(parent, i), b = find_root(parent, j);
      if (a != b)
        parent[std::max(a, b)] = std::min(a, b);
    }
  }

  _class.resize(m);
  for (std::size_t i = 0u; i < m; ++i)
    _class[i] = find_root(parent, i);
}

std::vector<std::size_t> SubgroupLattice::class_representatives() const
{
  std::vector<std::size_t> res;
  for (std::size_t i = 0u; i < size(); ++i) {
    if (_class[i] == i)
      res.push_back(i);
  }
  return res;
}

std::vector<std::size_t> SubgroupLattice::normal_subgroups() const
{
  std::vector<std::size_t> res;
  for (std::size_t i = 0u; i < size(); ++i) {
    if (_normal[i])
      res.push_back(i);
  }
  return res;
}

std::size_t SubgroupLattice::index_of(Group const &H) const
{
  auto it = std::lower_bound(_subgroups.begin(), _subgroups.end(), H, group_less);
  if (it == _subgroups.end() || !(*it == H))
    return npos;
  return static_cast<std::size_t>(it - _subgroups.begin());
}

char const *family_kind_name(FamilyKind kind)
{
  switch (kind) {
  case FamilyKind::AllAbelian:           return "all-abelian";
  case FamilyKind::MaxAbelian:           return "max-abelian";
  case FamilyKind::MaxElementaryAbelian: return "max-elementary-abelian";
  case FamilyKind::Custom:               return "custom";
  }
  return "custom";
}

FamilyKind parse_family_kind(std::string const &tag)
{
  for (auto kind : {FamilyKind::AllAbelian, FamilyKind::MaxAbelian,
                    FamilyKind::MaxElementaryAbelian, FamilyKind::Custom}) {
    if (tag == family_kind_name(kind))
      return kind;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family kind '" + tag + "'");
}

AbelianFamily::AbelianFamily(Group P, std::vector<Group> members, std::string label)
: _P(std::move(P)),
  _label(std::move(label))
{
  for (auto const &A : members) {
    if (!A.is_subgroup_of(_P))
      throw Error(ErrorCode::NotInP, "family member is not a subgroup of P");
    if (!A.is_abelian())
      throw Error(ErrorCode::NotAbelian, "family member is not abelian");
  }

  std::sort(members.begin(), members.end(), group_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  _members = std::move(members);
}

bool AbelianFamily::contains(Group const &A) const
{
  return std::binary_search(_members.begin(), _members.end(), A, group_less);
}

AbelianFamily build_family(SubgroupLattice const &lattice, FamilyKind kind)
{
  std::vector<Group> abelian;
  for (auto const &H : lattice.subgroups()) {
    if (H.is_abelian())
      abelian.push_back(H);
  }

  std::vector<Group> members;
  switch (kind) {
  case FamilyKind::AllAbelian:
    members = abelian;
    break;
  case FamilyKind::MaxAbelian: {
    std::size_t best = 0u;
    for (auto const &A : abelian)
      best = std::max(best, A.order());
    for (auto const &A : abelian) {
      if (A.order() == best)
        members.push_back(A);
    }
    break;
  }
  case FamilyKind::MaxElementaryAbelian: {
    unsigned p = lattice.prime();
    std::vector<Group> elementary;
    for (auto const &A : abelian) {
      bool exp_p = std::all_of(A.generators().begin(), A.generators().end(),
                               [&](Perm const &x) { return x.pow(p).is_identity(); });
      if (exp_p)
        elementary.push_back(A);
    }
    std::size_t best = 0u;
    for (auto const &A : elementary)
      best = std::max(best, A.order());
    for (auto const &A : elementary) {
      if (A.order() == best)
        members.push_back(A);
    }
    break;
  }
  case FamilyKind::Custom:
    break;
  }

  return AbelianFamily(lattice.group(), std::move(members), family_kind_name(kind));
}

Group family_join(AbelianFamily const &family)
{
  Group res = Group::trivial(family.group().degree());
  for (auto const &A : family.members())
    res = join(res, A);
  return res;
}

Group family_meet(AbelianFamily const &family)
{
  if (family.empty())
    return Group::trivial(family.group().degree());

  Group res = family.members().front();
  for (auto const &A : family.members())
    res = meet(res, A);
  return res;
}

AbelianFamily family_restrict(AbelianFamily const &family, Group const &Q)
{
  if (!Q.is_subgroup_of(family.group()))
    throw Error(ErrorCode::AmbientMismatch, "restriction subgroup is not contained in P");

  std::vector<Group> kept;
  for (auto const &A : family.members()) {
    if (A.is_subgroup_of(Q))
      kept.push_back(A);
  }
  return AbelianFamily(family.group(), std::move(kept), family.label());
}

Group thompson_J(SubgroupLattice const &lattice)
{
  return family_join(build_family(lattice, FamilyKind::MaxAbelian));
}

Group thompson_ZJ(SubgroupLattice const &lattice)
{
  return center(thompson_J(lattice));
}

std::optional<unsigned> nilpotency_class(Group const &H)
{
  unsigned c = 0u;
  Group term = H;
  while (!term.is_trivial()) {
    Group next = commutator_subgroup(term, H);
    if (next == term)
      return std::nullopt;
    term = std::move(next);
    ++c;
  }
  return c;
}

std::vector<Group> normal_class_le2_subgroups(SubgroupLattice const &lattice)
{
  std::vector<Group> res;
  for (auto i : lattice.normal_subgroups()) {
    auto c = nilpotency_class(lattice[i]);
    if (c && *c <= 2u)
      res.push_back(lattice[i]);
  }
  return res;
}

} // namespace pfusion
