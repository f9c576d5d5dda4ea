#include "pfusion/perm.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "pfusion/error.hpp"

namespace pfusion
{

Perm::Perm(unsigned degree)
: _images(degree)
{
  std::iota(_images.begin(), _images.end(), Point{0});
}

Perm::Perm(unsigned degree, std::vector<std::vector<unsigned>> const &cycles)
: Perm(degree)
{
  std::vector<bool> seen(degree, false);

  for (auto const &cycle : cycles) {
    for (unsigned x : cycle) {
      if (x < 1u || x > degree)
        throw Error(ErrorCode::InvalidCycle,
                    "point " + std::to_string(x) + " out of range 1.." +
                    std::to_string(degree));
      if (seen[x - 1u])
        throw Error(ErrorCode::InvalidCycle,
                    "point " + std::to_string(x) + " repeated");
      seen[x - 1u] = true;
    }

    for (std::size_t i = 0u; i < cycle.size(); ++i) {
      unsigned from = cycle[i] - 1u;
      unsigned to = cycle[(i + 1u) % cycle.size()] - 1u;
      _images[from] = static_cast<Point>(to);
    }
  }
}

Perm Perm::from_images(std::vector<Point> images)
{
  std::vector<bool> seen(images.size(), false);
  for (Point x : images) {
    if (x >= images.size() || seen[x])
      throw Error(ErrorCode::InvalidCycle, "image list is not a bijection");
    seen[x] = true;
  }

  Perm res;
  res._images = std::move(images);
  return res;
}

bool Perm::is_identity() const
{
  for (std::size_t i = 0u; i < _images.size(); ++i) {
    if (_images[i] != i)
      return false;
  }
  return true;
}

Perm Perm::inverse() const
{
  Perm res(degree());
  for (std::size_t i = 0u; i < _images.size(); ++i)
    res._images[_images[i]] = static_cast<Point>(i);
  return res;
}

Perm Perm::pow(long long e) const
{
  Perm base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e)
                               : static_cast<unsigned long long>(e);

  Perm res(degree());
  while (n > 0u) {
    if (n & 1u)
      res *= base;
    base *= base;
    n >>= 1u;
  }
  return res;
}

unsigned long long Perm::order() const
{
  unsigned long long res = 1u;
  for (auto const &cycle : cycles())
    res = std::lcm(res, static_cast<unsigned long long>(cycle.size()));
  return res;
}

std::vector<std::vector<unsigned>> Perm::cycles() const
{
  std::vector<std::vector<unsigned>> res;
  std::vector<bool> done(_images.size(), false);

  for (std::size_t start = 0u; start < _images.size(); ++start) {
    if (done[start] || _images[start] == start)
      continue;

    std::vector<unsigned> cycle;
    for (std::size_t x = start; !done[x]; x = _images[x]) {
      done[x] = true;
      cycle.push_back(static_cast<unsigned>(x) + 1u);
    }
    res.push_back(std::move(cycle));
  }

  return res;
}

std::string Perm::str() const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";

  std::ostringstream ss;
  for (auto const &cycle : cs) {
    ss << '(';
    for (std::size_t i = 0u; i < cycle.size(); ++i)
      ss << (i == 0u ? "" : " ") << cycle[i];
    ss << ')';
  }
  return ss.str();
}

Perm &Perm::operator*=(Perm const &rhs)
{
  if (degree() != rhs.degree())
    throw Error(ErrorCode::DegreeMismatch, "multiplying permutations of degree " +
                std::to_string(degree()) + " and " + std::to_string(rhs.degree()));

  std::vector<Point> res(_images.size());
  for (std::size_t i = 0u; i < res.size(); ++i)
    res[i] = rhs._images[_images[i]];
  _images = std::move(res);
  return *this;
}

std::ostream &operator<<(std::ostream &os, Perm const &perm)
{
  return os << perm.str();
}

Perm conjugate(Perm const &x, Perm const &g)
{
  return g.inverse() * x * g;
}

Perm commutator(Perm const &a, Perm const &b)
{
  return a.inverse() * b.inverse() * a * b;
}

Perm parse_perm(unsigned degree, std::string_view text)
{
  std::vector<std::vector<unsigned>> cycles;
  std::vector<unsigned> cycle;
  bool in_cycle = false;

  std::size_t i = 0u;
  while (i < text.size()) {
    char c = text[i];

    if (std::isspace(static_cast<unsigned char>(c)) || (in_cycle && c == ',')) {
      ++i;
    } else if (c == '(') {
      if (in_cycle)
        throw Error(ErrorCode::ParseError, "nested '(' in \"" + std::string(text) + "\"");
      in_cycle = true;
      cycle.clear();
      ++i;
    } else if (c == ')') {
      if (!in_cycle)
        throw Error(ErrorCode::ParseError, "unmatched ')' in \"" + std::string(text) + "\"");
      in_cycle = false;
      if (!cycle.empty())
        cycles.push_back(cycle);
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!in_cycle)
        throw Error(ErrorCode::ParseError, "point outside of a cycle in \"" + std::string(text) + "\"");
      unsigned long value = 0u;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10u + static_cast<unsigned long>(text[i] - '0');
        if (value > 65535u)
          throw Error(ErrorCode::InvalidCycle, "point too large in \"" + std::string(text) + "\"");
        ++i;
      }
      cycle.push_back(static_cast<unsigned>(value));
    } else {
      throw Error(ErrorCode::ParseError,
                  std::string("unexpected character '") + c + "' in \"" + std::string(text) + "\"");
    }
  }

  if (in_cycle)
    throw Error(ErrorCode::ParseError, "unterminated cycle in \"" + std::string(text) + "\"");

  return Perm(degree, cycles);
}

std::size_t PermHash::operator()(Perm const &perm) const noexcept
{
  // FNV-1a over the image list.
  std::size_t h = 1469598103934665603ull;
  for (Point x : perm.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace pfusion
