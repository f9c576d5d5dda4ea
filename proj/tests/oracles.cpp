#include "oracles.hpp"

#include <map>
#include <numeric>

namespace oracle
{

PermSet closure(unsigned degree, std::vector<Perm> const &gens)
{
  PermSet res{Perm(degree)};
  std::vector<Perm> frontier{Perm(degree)};

  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (auto const &x : frontier)
      for (auto const &g : gens)
        if (res.insert(x * g).second)
          next.push_back(x * g);
    frontier = std::move(next);
  }
  return res;
}

PermSet as_set(pfusion::Group const &G)
{
  return PermSet(G.elements().begin(), G.elements().end());
}

PermSet normalizer(pfusion::Group const &G, PermSet const &H)
{
  PermSet res;
  for (auto const &g : G.elements()) {
    PermSet conj;
    for (auto const &h : H)
      conj.insert(g.inverse() * h * g);
    if (conj == H)
      res.insert(g);
  }
  return res;
}

PermSet centralizer(pfusion::Group const &G, PermSet const &H)
{
  PermSet res;
  for (auto const &g : G.elements()) {
    bool ok = true;
    for (auto const &h : H)
      ok = ok && g * h == h * g;
    if (ok)
      res.insert(g);
  }
  return res;
}

PermSet p_elements(pfusion::Group const &G, unsigned p)
{
  PermSet res;
  for (auto const &g : G.elements()) {
    auto o = g.order();
    while (o % p == 0u)
      o /= p;
    if (o == 1u)
      res.insert(g);
  }
  return res;
}

std::set<PermSet> subgroups(pfusion::Group const &G, unsigned max_gens)
{
  std::map<PermSet, std::vector<Perm>> all{{PermSet{G.identity()}, {}}};
  std::vector<PermSet> layer{PermSet{G.identity()}};

  for (unsigned d = 0u; d < max_gens; ++d) {
    std::vector<PermSet> next;
    for (auto const &H : layer) {
      auto const gensH = all.at(H);
      for (auto const &x : G.elements()) {
        if (H.count(x))
          continue;
        auto gens = gensH;
        gens.push_back(x);
        auto K = closure(G.degree(), gens);
        if (all.emplace(K, gens).second)
          next.push_back(K);
      }
    }
    layer = std::move(next);
  }

  std::set<PermSet> res;
  for (auto const &[H, gens] : all)
    res.insert(H);
  return res;
}

bool is_p_nilpotent(pfusion::Group const &G, unsigned p)
{
  PermSet comp;
  for (auto const &g : G.elements()) {
    if (g.order() % p != 0u)
      comp.insert(g);
  }

  auto n = G.order();
  unsigned long long pp = 1u;
  while (n % p == 0u) {
    n /= p;
    pp *= p;
  }
  if (comp.size() != G.order() / pp)
    return false;

  for (auto const &a : comp)
    for (auto const &b : comp)
      if (!comp.count(a * b))
        return false;
  return true;
}

PermSet p_core(pfusion::Group const &G, unsigned p, unsigned max_gens)
{
  PermSet best{G.identity()};
  for (auto const &H : subgroups(G, max_gens)) {
    auto n = H.size();
    while (n % p == 0u)
      n /= p;
    if (n != 1u || H.size() <= best.size())
      continue;
    if (normalizer(G, H).size() == G.order())
      best = H;
  }
  return best;
}

PermSet p_core_by_classes(pfusion::Group const &G, unsigned p)
{
  std::vector<Perm> gens;
  PermSet seen;
  for (auto const &x : G.elements()) {
    if (seen.count(x))
      continue;
    std::vector<Perm> cls;
    for (auto const &g : G.elements()) {
      auto y = g.inverse() * x * g;
      if (seen.insert(y).second)
        cls.push_back(y);
    }

    auto n = closure(G.degree(), cls).size();
    while (n % p == 0u)
      n /= p;
    if (n == 1u)
      gens.insert(gens.end(), cls.begin(), cls.end());
  }
  return closure(G.degree(), gens);
}

} // namespace oracle

namespace fixture
{

Group make(unsigned degree, std::vector<char const *> const &gens)
{
  std::vector<Perm> ps;
  for (auto const *g : gens)
    ps.push_back(pfusion::parse_perm(degree, g));
  return Group(degree, ps);
}

Group S3() { return make(3, {"(1 2 3)", "(1 2)"}); }
Group S4() { return make(4, {"(1 2 3 4)", "(1 2)"}); }
Group A4() { return make(4, {"(1 2 3)", "(1 2)(3 4)"}); }
Group V4_in_S4() { return make(4, {"(1 2)(3 4)", "(1 3)(2 4)"}); }
Group SL23() { return make(8, {"(3 4 5)(6 8 7)", "(1 4 7)(2 8 5)"}); }
Group C3xC3() { return make(6, {"(1 2 3)", "(4 5 6)"}); }

// Affine maps (x, y) -> (x + a, y + c x + b) of F_3^2, point (x, y) = 3x + y + 1.
Group heisenberg27()
{
  return make(9, {"(1 4 7)(2 5 8)(3 6 9)", "(1 2 3)(4 5 6)(7 8 9)",
                  "(4 5 6)(7 9 8)"});
}

Group C3wrC3()
{
  return make(9, {"(1 2 3)", "(1 4 7)(2 5 8)(3 6 9)"});
}

// i -> u i + v on Z/9 with u in {1, 4, 7}.
Group extraspecial27_exp9()
{
  return make(9, {"(1 2 3 4 5 6 7 8 9)", "(2 5 8)(3 9 6)"});
}

Group C3cubed() { return make(9, {"(1 2 3)", "(4 5 6)", "(7 8 9)"}); }
Group C5xC5() { return make(10, {"(1 2 3 4 5)", "(6 7 8 9 10)"}); }
Group C9() { return make(9, {"(1 2 3 4 5 6 7 8 9)"}); }
Group C3wrC2() { return make(6, {"(1 2 3)", "(1 4)(2 5)(3 6)"}); }

Group C7C3() { return make(7, {"(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"}); }

} // namespace fixture
