#ifndef PFUSION_GROUP_FILE_HPP
#define PFUSION_GROUP_FILE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "group.hpp"
#include "perm.hpp"

namespace pfusion
{

// Line-oriented group description:
//
//   # comment
//   name <string>
//   degree <n>
//   gen <cycles>        one line per generator, "gen ()" for the identity
struct GroupFile
{
  std::string name;
  unsigned degree = 0u;
  std::vector<Perm> generators;

  Group group(std::size_t max_order = 100000u) const;

  friend bool operator==(GroupFile const &, GroupFile const &) = default;
};

// Throws ParseError (message carries the line number) or InvalidCycle.
GroupFile parse_group_file(std::string_view text);

std::string serialize_group_file(GroupFile const &file);

// Reads and parses a file; the name defaults to the file stem.
GroupFile read_group_file(std::string const &path);

} // namespace pfusion

#endif // PFUSION_GROUP_FILE_HPP
