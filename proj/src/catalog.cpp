#include "pfusion/catalog.hpp"

#include <filesystem>

#include "pfusion/error.hpp"

namespace pfusion
{

namespace
{

GroupFile entry(std::string name, unsigned degree, std::vector<char const *> const &gens)
{
  GroupFile f{std::move(name), degree, {}};
  for (auto g : gens)
    f.generators.push_back(parse_perm(degree, g));
  return f;
}

Perm cycle(unsigned degree, unsigned from, unsigned to)
{
  std::vector<unsigned> c;
  for (unsigned i = from; i <= to; ++i)
    c.push_back(i);
  return Perm(degree, {c});
}

GroupFile cyclic(unsigned n)
{
  return {"C" + std::to_string(n), n, {cycle(n, 1u, n)}};
}

GroupFile dihedral(unsigned n)
{
  std::vector<Point> refl(n);
  for (unsigned i = 0u; i < n; ++i)
    refl[i] = Point((n - i) % n);
  return {"D" + std::to_string(2u * n), n, {cycle(n, 1u, n), Perm::from_images(refl)}};
}

GroupFile symmetric(unsigned n)
{
  if (n == 2u)
    return {"S2", 2u, {Perm(2u, {{1u, 2u}})}};
  return {"S" + std::to_string(n), n, {cycle(n, 1u, n), Perm(n, {{1u, 2u}})}};
}

GroupFile alternating(unsigned n)
{
  GroupFile f{"A" + std::to_string(n), n, {}};
  for (unsigned k = 3u; k <= n; ++k)
    f.generators.push_back(Perm(n, {{1u, 2u, k}}));
  return f;
}

GroupFile elementary(unsigned p, unsigned rank)
{
  GroupFile f{"C" + std::to_string(p), p * rank, {}};
  for (unsigned i = 1u; i < rank; ++i)
    f.name += "xC" + std::to_string(p);
  for (unsigned i = 0u; i < rank; ++i)
    f.generators.push_back(cycle(p * rank, i * p + 1u, i * p + p));
  return f;
}

// x -> x + 1 and x -> a x on Z/n, n prime, a of order k.
GroupFile frobenius(unsigned n, unsigned a, std::string name)
{
  std::vector<Point> shift(n), mult(n);
  for (unsigned x = 0u; x < n; ++x) {
    shift[x] = Point((x + 1u) % n);
    mult[x] = Point((a * x) % n);
  }
  return {std::move(name), n, {Perm::from_images(shift), Perm::from_images(mult)}};
}

// On the projective line over F_7: points 0..6 and infinity (index 7).
GroupFile psl27()
{
  unsigned const q = 7u, inf = 7u;
  std::vector<Point> t(8), m(8), s(8);
  for (unsigned x = 0u; x < q; ++x) {
    t[x] = Point((x + 1u) % q);
    m[x] = Point((2u * x) % q);
    unsigned inv = 1u;
    while (x != 0u && (inv * x) % q != 1u)
      ++inv;
    s[x] = x == 0u ? Point(inf) : Point((q - inv) % q);  // -1/x
  }
  t[inf] = m[inf] = Point(inf);
  s[inf] = 0u;
  return {"PSL(2,7)", 8u, {Perm::from_images(t), Perm::from_images(m), Perm::from_images(s)}};
}

// Affine maps of F_3^2 on 9 points, (x, y) -> 3x + y.
GroupFile asl23()
{
  auto affine = [](unsigned a, unsigned b, unsigned c, unsigned d, unsigned tx) {
    std::vector<Point> img(9);
    for (unsigned x = 0u; x < 3u; ++x)
      for (unsigned y = 0u; y < 3u; ++y)
        img[3u * x + y] = Point(3u * ((a * x + b * y + tx) % 3u) + (c * x + d * y) % 3u);
    return Perm::from_images(img);
  };
  return {"ASL(2,3)", 9u, {affine(1, 1, 0, 1, 0), affine(1, 0, 1, 1, 0), affine(1, 0, 0, 1, 1)}};
}

std::vector<GroupFile> build()
{
  std::vector<GroupFile> res;
  res.push_back({"C1", 1u, {Perm(1u)}});
  for (unsigned n = 2u; n <= 30u; ++n)
    res.push_back(cyclic(n));
  for (unsigned n = 3u; n <= 15u; ++n)
    res.push_back(dihedral(n));
  for (unsigned n = 2u; n <= 6u; ++n)
    res.push_back(symmetric(n));
  for (unsigned n = 3u; n <= 6u; ++n)
    res.push_back(alternating(n));

  for (unsigned p : {3u, 5u})
    for (unsigned r : {2u, 3u})
      res.push_back(elementary(p, r));

  res.push_back(entry("3^1+2", 9u, {"(1 4 7)(2 5 8)(3 6 9)", "(1 2 3)(4 5 6)(7 8 9)",
                                    "(4 5 6)(7 9 8)"}));
  res.push_back(entry("3^1+2:9", 9u, {"(1 2 3 4 5 6 7 8 9)", "(2 5 8)(3 9 6)"}));
  res.push_back(entry("C3wrC3", 9u, {"(1 2 3)", "(1 4 7)(2 5 8)(3 6 9)"}));
  res.push_back(entry("C3wrC2", 6u, {"(1 2 3)", "(1 4)(2 5)(3 6)"}));
  res.push_back(entry("SL(2,3)", 8u, {"(3 4 5)(6 8 7)", "(1 4 7)(2 8 5)"}));
  res.push_back(asl23());
  res.push_back(frobenius(7u, 2u, "C7:C3"));
  res.push_back(frobenius(13u, 3u, "C13:C3"));
  res.push_back(psl27());
  return res;
}

} // anonymous namespace

std::vector<GroupFile> const &builtin_catalog()
{
  static auto const catalog = build();
  return catalog;
}

std::optional<GroupFile> find_in_catalog(std::string const &name)
{
  for (auto const &f : builtin_catalog()) {
    if (f.name == name)
      return f;
  }
  return std::nullopt;
}

GroupFile resolve_group(std::string const &name_or_path)
{
  if (auto f = find_in_catalog(name_or_path))
    return *f;

  std::error_code ec;
  if (std::filesystem::is_regular_file(name_or_path, ec))
    return read_group_file(name_or_path);

  throw Error(ErrorCode::UnknownGroup, "no catalog group or file named '" + name_or_path + "'");
}

} // namespace pfusion
