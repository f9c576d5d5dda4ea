#include "pfusion/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_set>

#include "pfusion/error.hpp"

namespace pfusion
{

namespace
{

std::vector<Perm> closure(unsigned degree,
                          std::vector<Perm> const &gens,
                          std::vector<Perm> const &seed,
                          std::size_t limit)
{
  std::unordered_set<Perm> seen(seed.begin(), seed.end());
  std::deque<Perm> queue(seed.begin(), seed.end());

  Perm id(degree);
  if (seen.insert(id).second)
    queue.push_back(id);

  while (!queue.empty()) {
    Perm x = std::move(queue.front());
    queue.pop_front();

    for (auto const &s : gens) {
      Perm y = x * s;
      if (seen.insert(y).second) {
        if (seen.size() > limit)
          throw Error(ErrorCode::SizeLimitExceeded,
                      "group closure exceeds " + std::to_string(limit) + " elements");
        queue.push_back(std::move(y));
      }
    }
  }

  std::vector<Perm> res(seen.begin(), seen.end());
  std::sort(res.begin(), res.end());
  return res;
}

std::size_t hash_elements(std::vector<Perm> const &elements)
{
  std::size_t h = elements.size();
  PermHash ph;
  for (auto const &x : elements)
    h = h * 1000003u ^ ph(x);
  return h;
}

void check_degree(unsigned degree, Perm const &x)
{
  if (x.degree() != degree)
    throw Error(ErrorCode::DegreeMismatch,
                "expected degree " + std::to_string(degree) + ", got " +
                std::to_string(x.degree()) + " for " + x.str());
}

void check_member(Group const &ambient, Perm const &x, char const *what)
{
  if (x.degree() != ambient.degree() || !ambient.contains(x))
    throw Error(ErrorCode::NotInAmbient, std::string(what) + " " + x.str() +
                " is not in the ambient group");
}

void check_subgroup(Group const &ambient, Group const &H, char const *what)
{
  if (H.degree() != ambient.degree() || !H.is_subgroup_of(ambient))
    throw Error(ErrorCode::NotInAmbient,
                std::string(what) + " is not a subgroup of the ambient group");
}

} // anonymous namespace

Group::Group()
: Group(trivial(1u))
{}

Group::Group(unsigned degree, std::vector<Perm> const &generators, std::size_t limit)
{
  if (degree == 0u)
    throw Error(ErrorCode::DegreeMismatch, "degree must be positive");

  auto data = std::make_shared<Data>();
  data->degree = degree;

  for (auto const &g : generators) {
    check_degree(degree, g);
    if (!g.is_identity() &&
        std::find(data->generators.begin(), data->generators.end(), g) == data->generators.end())
      data->generators.push_back(g);
  }

  data->elements = closure(degree, data->generators, {}, limit);
  data->hash = hash_elements(data->elements);
  _data = std::move(data);
}

Group Group::trivial(unsigned degree)
{
  auto data = std::make_shared<Data>();
  data->degree = degree;
  data->elements = {Perm(degree)};
  data->hash = hash_elements(data->elements);
  return Group(std::move(data));
}

Group Group::from_elements(unsigned degree, std::vector<Perm> elements)
{
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  if (elements.empty() || !elements.front().is_identity())
    throw Error(ErrorCode::PreconditionViolated, "element set lacks the identity");

  auto data = std::make_shared<Data>();
  data->degree = degree;

  // Greedy generating set: take the largest element not yet covered.
  std::vector<Perm> covered = {Perm(degree)};
  for (auto it = elements.rbegin(); it != elements.rend() && covered.size() < elements.size(); ++it) {
    check_degree(degree, *it);
    if (std::binary_search(covered.begin(), covered.end(), *it))
      continue;
    data->generators.push_back(*it);
    covered = closure(degree, data->generators, covered, elements.size());
  }

  if (covered != elements)
    throw Error(ErrorCode::PreconditionViolated, "element set is not closed");

  data->elements = std::move(elements);
  data->hash = hash_elements(data->elements);
  return Group(std::move(data));
}

unsigned Group::degree() const { return _data->degree; }
std::size_t Group::order() const { return _data->elements.size(); }
std::vector<Perm> const &Group::generators() const { return _data->generators; }
std::vector<Perm> const &Group::elements() const { return _data->elements; }
std::size_t Group::hash() const { return _data->hash; }

bool Group::contains(Perm const &x) const
{
  return x.degree() == degree() &&
         std::binary_search(_data->elements.begin(), _data->elements.end(), x);
}

std::size_t Group::index_of(Perm const &x) const
{
  auto const &els = _data->elements;
  auto it = std::lower_bound(els.begin(), els.end(), x);
  if (it == els.end() || *it != x)
    return npos;
  return static_cast<std::size_t>(it - els.begin());
}

bool Group::is_abelian() const
{
  auto const &gens = generators();
  for (std::size_t i = 0u; i < gens.size(); ++i) {
    for (std::size_t j = i + 1u; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i])
        return false;
    }
  }
  return true;
}

bool Group::is_subgroup_of(Group const &other) const
{
  if (degree() != other.degree() || other.order() % order() != 0u)
    return false;

  return std::all_of(generators().begin(), generators().end(),
                     [&](Perm const &g) { return other.contains(g); });
}

bool operator==(Group const &lhs, Group const &rhs)
{
  if (lhs._data == rhs._data)
    return true;
  return lhs.degree() == rhs.degree() && lhs.hash() == rhs.hash() &&
         lhs.elements() == rhs.elements();
}

Group build_group(unsigned degree, std::vector<Perm> const &generators, std::size_t limit)
{
  return Group(degree, generators, limit);
}

Group subgroup_generated(Group const &ambient, std::vector<Perm> const &gens)
{
  for (auto const &g : gens)
    check_member(ambient, g, "generator");
  return Group(ambient.degree(), gens, ambient.order());
}

Group conjugate_subgroup(Group const &ambient, Group const &H, Perm const &g)
{
  check_member(ambient, g, "conjugating element");
  check_subgroup(ambient, H, "H");

  Perm gi = g.inverse();
  std::vector<Perm> els;
  els.reserve(H.order());
  for (auto const &h : H.elements())
    els.push_back(gi * h * g);
  return Group::from_elements(H.degree(), std::move(els));
}

bool normalizes(Perm const &g, Group const &H)
{
  Perm gi = g.inverse();
  return std::all_of(H.generators().begin(), H.generators().end(),
                     [&](Perm const &h) { return H.contains(gi * h * g); });
}

Group normalizer(Group const &G, Group const &H)
{
  check_subgroup(G, H, "H");

  std::vector<Perm> els;
  for (auto const &g : G.elements()) {
    if (normalizes(g, H))
      els.push_back(g);
  }
  return Group::from_elements(G.degree(), std::move(els));
}

Group centralizer(Group const &G, Group const &H)
{
  check_subgroup(G, H, "H");

  std::vector<Perm> els;
  for (auto const &g : G.elements()) {
    bool commutes = std::all_of(H.generators().begin(), H.generators().end(),
                                [&](Perm const &h) { return g * h == h * g; });
    if (commutes)
      els.push_back(g);
  }
  return Group::from_elements(G.degree(), std::move(els));
}

Group center(Group const &G)
{
  return centralizer(G, G);
}

bool is_normal(Group const &G, Group const &H)
{
  if (!H.is_subgroup_of(G))
    return false;
  return std::all_of(G.generators().begin(), G.generators().end(),
                     [&](Perm const &g) { return normalizes(g, H); });
}

Group normal_closure(Group const &G, std::vector<Perm> const &gens)
{
  for (auto const &g : gens)
    check_member(G, g, "generator");

  std::vector<Perm> current(gens);
  Group N(G.degree(), current, G.order());

  for (;;) {
    std::vector<Perm> missing;
    for (auto const &n : N.generators()) {
      for (auto const &g : G.generators()) {
        Perm c = conjugate(n, g);
        if (!N.contains(c) &&
            std::find(missing.begin(), missing.end(), c) == missing.end())
          missing.push_back(std::move(c));
      }
    }
    if (missing.empty())
      return N;

    current = N.generators();
    current.insert(current.end(), missing.begin(), missing.end());
    N = Group(G.degree(), current, G.order());
  }
}

Group commutator_subgroup(Group const &H, Group const &K)
{
  if (H.degree() != K.degree())
    throw Error(ErrorCode::AmbientMismatch, "commutator of groups of different degree");

  std::vector<Perm> comms;
  for (auto const &h : H.generators()) {
    for (auto const &k : K.generators()) {
      Perm c = commutator(h, k);
      if (!c.is_identity())
        comms.push_back(std::move(c));
    }
  }
  // [H, K] is normal in <H, K> and is the normal closure of the generator
  // commutators there.
  return normal_closure(join(H, K), comms);
}

Group derived_subgroup(Group const &B)
{
  return commutator_subgroup(B, B);
}

Group commutator_with_element(Group const &ambient, Group const &A, Perm const &b)
{
  check_member(ambient, b, "element");
  check_subgroup(ambient, A, "A");

  std::vector<Perm> comms;
  for (auto const &a : A.elements())
    comms.push_back(commutator(a, b));
  return Group(ambient.degree(), comms, ambient.order());
}

Group meet(Group const &H, Group const &K)
{
  if (H.degree() != K.degree())
    throw Error(ErrorCode::AmbientMismatch, "meet of groups of different degree");

  std::vector<Perm> els;
  std::set_intersection(H.elements().begin(), H.elements().end(),
                        K.elements().begin(), K.elements().end(),
                        std::back_inserter(els));
  return Group::from_elements(H.degree(), std::move(els));
}

Group join(Group const &H, Group const &K)
{
  if (H.degree() != K.degree())
    throw Error(ErrorCode::AmbientMismatch, "join of groups of different degree");

  if (K.is_subgroup_of(H))
    return H;
  if (H.is_subgroup_of(K))
    return K;

  std::vector<Perm> gens(H.generators());
  gens.insert(gens.end(), K.generators().begin(), K.generators().end());
  return Group(H.degree(), gens);
}

bool is_prime(unsigned long long n)
{
  if (n < 2u)
    return false;
  for (unsigned long long d = 2u; d * d <= n; ++d) {
    if (n % d == 0u)
      return false;
  }
  return true;
}

unsigned long long p_part(unsigned long long n, unsigned p)
{
  unsigned long long res = 1u;
  while (n % p == 0u) {
    n /= p;
    res *= p;
  }
  return res;
}

bool is_power_of(unsigned long long n, unsigned p)
{
  return n >= 1u && p_part(n, p) == n;
}

bool is_p_group(Group const &H, unsigned p)
{
  return is_power_of(H.order(), p);
}

Group sylow_subgroup(Group const &G, unsigned p)
{
  if (!is_prime(p))
    throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");

  auto target = p_part(G.order(), p);
  if (target == 1u)
    return Group::trivial(G.degree());

  // Seed with a p-element of largest order.
  Perm seed = G.identity();
  unsigned long long seed_order = 1u;
  for (auto const &x : G.elements()) {
    auto o = x.order();
    if (is_power_of(o, p) && o > seed_order) {
      seed = x;
      seed_order = o;
    }
  }

  Group Q(G.degree(), {seed});

  while (Q.order() < target) {
    // Q is not Sylow, so p divides |N_G(Q) : Q| and some coset xQ has order p.
    Group N = normalizer(G, Q);

    Perm const *ext = nullptr;
    for (auto const &x : N.elements()) {
      if (!Q.contains(x) && Q.contains(x.pow(p))) {
        ext = &x;
        break;
      }
    }
    if (!ext)
      throw Error(ErrorCode::PropertyFailure, "Sylow climbing found no extension");

    std::vector<Perm> gens(Q.generators());
    gens.push_back(*ext);
    Q = Group(G.degree(), gens);
  }

  return Q;
}

Group p_core(Group const &G, unsigned p)
{
  Group P = sylow_subgroup(G, p);

  std::vector<Perm> core(P.elements());
  for (auto const &g : G.elements()) {
    Perm gi = g.inverse();
    // x lies in P^g iff g x g^-1 lies in P.
    std::erase_if(core, [&](Perm const &x) { return !P.contains(g * x * gi); });
    if (core.size() == 1u)
      break;
  }
  return Group::from_elements(G.degree(), std::move(core));
}

Group p_prime_generated(Group const &G, unsigned p)
{
  std::vector<Perm> gens;
  for (auto const &x : G.elements()) {
    if (x.order() % p != 0u && !x.is_identity())
      gens.push_back(x);
  }
  return Group(G.degree(), gens, G.order());
}

ActionImage::ActionImage(Group const &source, Group const &target)
: _source(source),
  _points(target)
{
  if (source.degree() != target.degree())
    throw Error(ErrorCode::AmbientMismatch, "action between groups of different degree");

  for (auto const &g : source.generators()) {
    if (!normalizes(g, target))
      throw Error(ErrorCode::DoesNotNormalize,
                  g.str() + " does not normalize the acted-on subgroup");
  }

  std::vector<Perm> gens;
  for (auto const &g : source.generators())
    gens.push_back(project(g));

  unsigned n = static_cast<unsigned>(target.order());
  _image = Group(n, gens, source.order());
}

Perm ActionImage::project(Perm const &g) const
{
  auto const &pts = _points.elements();
  Perm gi = g.inverse();

  std::vector<Point> images(pts.size());
  for (std::size_t i = 0u; i < pts.size(); ++i) {
    auto j = _points.index_of(gi * pts[i] * g);
    if (j == Group::npos)
      throw Error(ErrorCode::DoesNotNormalize,
                  g.str() + " does not normalize the acted-on subgroup");
    images[i] = static_cast<Point>(j);
  }
  return Perm::from_images(std::move(images));
}

} // namespace pfusion
