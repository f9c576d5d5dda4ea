#ifndef PFUSION_TEST_ORACLES_HPP
#define PFUSION_TEST_ORACLES_HPP

// Brute-force reference computations for the tests. Nothing in here calls
// into the library beyond Perm arithmetic and Group element lists, so the
// results are independent of the algorithms under test.

#include <set>
#include <vector>

#include "pfusion/group.hpp"
#include "pfusion/perm.hpp"

namespace oracle
{

using pfusion::Perm;
using PermSet = std::set<Perm>;

// Fixpoint of "multiply every pair" starting from gens and the identity.
PermSet closure(unsigned degree, std::vector<Perm> const &gens);

PermSet as_set(pfusion::Group const &G);

PermSet normalizer(pfusion::Group const &G, PermSet const &H);
PermSet centralizer(pfusion::Group const &G, PermSet const &H);

// Elements of p-power order (including the identity).
PermSet p_elements(pfusion::Group const &G, unsigned p);

// All subgroups of G generated by at most max_gens elements.
std::set<PermSet> subgroups(pfusion::Group const &G, unsigned max_gens);

// G is p-nilpotent iff its p'-elements form a subgroup of order |G|/|G|_p.
bool is_p_nilpotent(pfusion::Group const &G, unsigned p);

// Largest normal p-subgroup, by scanning all subgroups.
PermSet p_core(pfusion::Group const &G, unsigned p, unsigned max_gens);

// The same, as the subgroup generated by all conjugacy classes that
// generate p-groups; no subgroup enumeration.
PermSet p_core_by_classes(pfusion::Group const &G, unsigned p);

} // namespace oracle

namespace fixture
{

using pfusion::Group;
using pfusion::Perm;

Group make(unsigned degree, std::vector<char const *> const &gens);

Group S3();
Group S4();
Group A4();
Group V4_in_S4();
Group SL23();
Group C3xC3();
Group heisenberg27();  // 3^{1+2}, exponent 3
Group C3wrC3();
Group C7C3();
Group extraspecial27_exp9();
Group C3cubed();
Group C5xC5();
Group C9();
Group C3wrC2();

} // namespace fixture

#endif // PFUSION_TEST_ORACLES_HPP
