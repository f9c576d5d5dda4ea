#include "pfusion/group_file.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pfusion/error.hpp"

namespace pfusion
{

namespace
{

std::string_view trim(std::string_view s)
{
  auto const ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1u);
}

[[noreturn]] void fail(ErrorCode code, std::size_t line, std::string const &what)
{
  throw Error(code, "line " + std::to_string(line) + ": " + what);
}

} // anonymous namespace

Group GroupFile::group(std::size_t max_order) const
{
  return Group(degree, generators, max_order);
}

GroupFile parse_group_file(std::string_view text)
{
  GroupFile res;
  bool have_degree = false;
  std::size_t lineno = 0u;

  while (!text.empty()) {
    auto nl = text.find('\n');
    auto raw = text.substr(0u, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1u);
    ++lineno;

    auto line = trim(raw);
    if (line.empty() || line.front() == '#')
      continue;

    auto sp = line.find_first_of(" \t");
    auto key = line.substr(0u, sp);
    auto value = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));

    if (key == "name") {
      if (value.empty())
        fail(ErrorCode::ParseError, lineno, "empty name");
      res.name = value;
    } else if (key == "degree") {
      if (have_degree)
        fail(ErrorCode::ParseError, lineno, "degree given twice");
      unsigned n = 0u;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
      if (ec != std::errc() || ptr != value.data() + value.size() || n == 0u || n > 65535u)
        fail(ErrorCode::ParseError, lineno, "invalid degree '" + std::string(value) + "'");
      res.degree = n;
      have_degree = true;
    } else if (key == "gen") {
      if (!have_degree)
        fail(ErrorCode::ParseError, lineno, "generator before degree");
      if (value.empty())
        fail(ErrorCode::ParseError, lineno, "empty generator; write \"gen ()\" for the identity");
      try {
        res.generators.push_back(parse_perm(res.degree, value));
      } catch (Error const &e) {
        fail(e.code(), lineno, e.what());
      }
    } else {
      fail(ErrorCode::ParseError, lineno, "unknown keyword '" + std::string(key) + "'");
    }
  }

  if (!have_degree)
    throw Error(ErrorCode::ParseError, "missing degree");
  return res;
}

std::string serialize_group_file(GroupFile const &file)
{
  std::ostringstream os;
  if (!file.name.empty())
    os << "name " << file.name << '\n';
  os << "degree " << file.degree << '\n';
  for (auto const &g : file.generators)
    os << "gen " << g.str() << '\n';
  return os.str();
}

GroupFile read_group_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::UnknownGroup, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();

  auto res = parse_group_file(ss.str());
  if (res.name.empty())
    res.name = std::filesystem::path(path).stem().string();
  return res;
}

} // namespace pfusion
