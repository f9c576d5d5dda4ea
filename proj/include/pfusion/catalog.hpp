#ifndef PFUSION_CATALOG_HPP
#define PFUSION_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "group_file.hpp"

namespace pfusion
{

// Built-in permutation representations of small groups: C1..C30,
// D6..D30 (D2n of order 2n), S2..S6, A3..A6, elementary abelian 3- and
// 5-groups of rank 2 and 3, both extraspecial groups of order 27,
// C3wrC3, C3wrC2, SL(2,3), ASL(2,3), C7:C3, C13:C3 and PSL(2,7).
std::vector<GroupFile> const &builtin_catalog();

std::optional<GroupFile> find_in_catalog(std::string const &name);

// A catalog name or the path of a group file. Throws UnknownGroup.
GroupFile resolve_group(std::string const &name_or_path);

} // namespace pfusion

#endif // PFUSION_CATALOG_HPP
