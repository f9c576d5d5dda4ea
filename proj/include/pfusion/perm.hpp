#ifndef PFUSION_PERM_HPP
#define PFUSION_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace pfusion
{

using Point = std::uint16_t;

// A permutation of {1, ..., degree}, stored 0-based.
//
// Permutations act from the right: i^(ab) = (i^a)^b, so the product a * b
// applies a first. Conjugation and commutators follow the same convention:
// x^g = g^-1 x g and [a, b] = a^-1 b^-1 a b.
class Perm
{
public:
  Perm() = default;

  explicit Perm(unsigned degree);

  // Cycles are given with 1-based points, e.g. {{1, 2, 3}, {4, 5}}.
  Perm(unsigned degree, std::vector<std::vector<unsigned>> const &cycles);

  // 0-based image list; throws InvalidCycle if it is not a bijection.
  static Perm from_images(std::vector<Point> images);

  unsigned degree() const { return static_cast<unsigned>(_images.size()); }
  Point operator[](std::size_t i) const { return _images[i]; }
  std::vector<Point> const &images() const { return _images; }

  bool is_identity() const;
  Perm inverse() const;
  Perm pow(long long e) const;
  unsigned long long order() const;

  // Non-trivial cycles with 1-based points, each starting at its smallest
  // point, sorted by that point.
  std::vector<std::vector<unsigned>> cycles() const;

  // Cycle notation, "()" for the identity.
  std::string str() const;

  Perm &operator*=(Perm const &rhs);

  friend Perm operator*(Perm lhs, Perm const &rhs) { return lhs *= rhs; }
  friend bool operator==(Perm const &, Perm const &) = default;
  friend std::strong_ordering operator<=>(Perm const &lhs, Perm const &rhs)
  {
    return lhs._images <=> rhs._images;
  }

private:
  std::vector<Point> _images;
};

std::ostream &operator<<(std::ostream &os, Perm const &perm);

// g^-1 x g
Perm conjugate(Perm const &x, Perm const &g);

// a^-1 b^-1 a b
Perm commutator(Perm const &a, Perm const &b);

// Parses "(1 2 3)(4 5)" or "()" into a permutation of the given degree.
// Commas between points are accepted. Throws ParseError / InvalidCycle.
Perm parse_perm(unsigned degree, std::string_view text);

struct PermHash
{
  std::size_t operator()(Perm const &perm) const noexcept;
};

} // namespace pfusion

template<>
struct std::hash<pfusion::Perm>
{
  std::size_t operator()(pfusion::Perm const &perm) const noexcept
  {
    return pfusion::PermHash()(perm);
  }
};

#endif // PFUSION_PERM_HPP
