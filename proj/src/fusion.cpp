#include "pfusion/fusion.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pfusion/error.hpp"

namespace pfusion
{

namespace
{

using MapKey = std::vector<Perm>;

void check_in_P(FusionContext const &ctx, Group const &Q, char const *what)
{
  if (Q.degree() != ctx.P().degree() || !Q.is_subgroup_of(ctx.P()))
    throw Error(ErrorCode::NotInP, std::string(what) + " is not a subgroup of P");
}

// Q^g <= R, tested on generators.
bool conjugates_into(Group const &Q, Perm const &g, Group const &R)
{
  Perm gi = g.inverse();
  return std::all_of(Q.generators().begin(), Q.generators().end(),
                     [&](Perm const &q) { return R.contains(gi * q * g); });
}

std::vector<Perm> images_under(Group const &Q, Perm const &g)
{
  Perm gi = g.inverse();
  std::vector<Perm> res;
  res.reserve(Q.order());
  for (auto const &q : Q.elements())
    res.push_back(gi * q * g);
  return res;
}

// Dedup key of the map Q -> Q^g: its full graph, or with the BrokenDedup
// fault only its image set.
MapKey map_key(FusionContext const &ctx, std::vector<Perm> images)
{
  if (ctx.config().fault == Fault::BrokenDedup)
    std::sort(images.begin(), images.end());
  return images;
}

// Keys of the maps Q -> target induced by elements of `by`.
std::set<MapKey> induced_maps(FusionContext const &ctx, Group const &Q,
                              Group const &by, Group const &target)
{
  std::set<MapKey> res;
  for (auto const &g : by.elements()) {
    if (conjugates_into(Q, g, target))
      res.insert(map_key(ctx, images_under(Q, g)));
  }
  return res;
}

std::vector<std::size_t> quantified_subgroups(FusionContext const &ctx, bool reduce)
{
  if (reduce)
    return ctx.lattice().class_representatives();

  std::vector<std::size_t> all(ctx.lattice().size());
  for (std::size_t i = 0u; i < all.size(); ++i)
    all[i] = i;
  return all;
}

} // anonymous namespace

FusionContext::FusionContext(Group G, unsigned p, Config config)
: FusionContext(G, p, [&] {
    if (!is_prime(p))
      throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    return sylow_subgroup(G, p);
  }(), config)
{}

FusionContext::FusionContext(Group G, unsigned p, Group P, Config config)
: _G(std::move(G)),
  _p(p),
  _P(std::move(P)),
  _config(config)
{
  if (!is_prime(p))
    throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  if (!_P.is_subgroup_of(_G) || _P.order() != p_part(_G.order(), p))
    throw Error(ErrorCode::InvalidArgument, "P is not a Sylow subgroup of G");

  _lattice = std::make_shared<SubgroupLattice const>(_P, config.lattice_exponent);
}

FusionContext::FusionContext(Group G, unsigned p, Group P,
                             std::shared_ptr<SubgroupLattice const> lattice, Config config)
: _G(std::move(G)),
  _p(p),
  _P(std::move(P)),
  _lattice(std::move(lattice)),
  _config(config)
{}

FusionContext FusionContext::restricted_to(Group H) const
{
  if (!_P.is_subgroup_of(H) || !H.is_subgroup_of(_G))
    throw Error(ErrorCode::InvalidArgument, "subgroup does not lie between P and G");
  return FusionContext(std::move(H), _p, _P, _lattice, _config);
}

Perm FusionMorphism::operator()(Perm const &x) const
{
  auto i = source.index_of(x);
  if (i == Group::npos)
    throw Error(ErrorCode::NotInAmbient, x.str() + " is not in the morphism's source");
  return images[i];
}

bool FusionMorphism::is_identity() const
{
  return images == source.elements();
}

std::vector<Group> f_conjugates(FusionContext const &ctx, Group const &Q)
{
  check_in_P(ctx, Q, "Q");

  std::set<std::vector<Perm>> seen;
  std::vector<Group> res;
  for (auto const &g : ctx.G().elements()) {
    if (!conjugates_into(Q, g, ctx.P()))
      continue;
    auto els = images_under(Q, g);
    std::sort(els.begin(), els.end());
    if (seen.insert(els).second)
      res.push_back(Group::from_elements(Q.degree(), std::move(els)));
  }
  return res;
}

std::vector<FusionMorphism> hom_F(FusionContext const &ctx, Group const &Q, Group const &R)
{
  check_in_P(ctx, Q, "Q");
  check_in_P(ctx, R, "R");

  // Elements are scanned in ascending order, so each map keeps its least
  // witness.
  std::map<MapKey, FusionMorphism> found;
  for (auto const &g : ctx.G().elements()) {
    if (!conjugates_into(Q, g, R))
      continue;
    auto images = images_under(Q, g);
    auto key = map_key(ctx, images);
    if (found.count(key))
      continue;
    found.emplace(std::move(key), FusionMorphism{Q, R, std::move(images), g});
  }

  std::vector<FusionMorphism> res;
  res.reserve(found.size());
  for (auto &[key, phi] : found)
    res.push_back(std::move(phi));
  return res;
}

std::vector<FusionMorphism> aut_F(FusionContext const &ctx, Group const &Q)
{
  return hom_F(ctx, Q, Q);
}

bool nilpotent_by_morphisms(FusionContext const &ctx, bool reduce)
{
  auto const &L = ctx.lattice();
  for (auto i : quantified_subgroups(ctx, reduce)) {
    auto from_G = induced_maps(ctx, L[i], ctx.G(), ctx.P());
    auto from_P = induced_maps(ctx, L[i], ctx.P(), ctx.P());
    if (!std::includes(from_P.begin(), from_P.end(), from_G.begin(), from_G.end()))
      return false;
  }
  return true;
}

bool nilpotent_by_automizers(FusionContext const &ctx, bool reduce)
{
  auto const &L = ctx.lattice();
  for (auto i : quantified_subgroups(ctx, reduce)) {
    Group N = normalizer(ctx.G(), L[i]);
    if (!is_p_group(induced_action(N, L[i]).image(), ctx.p()))
      return false;
  }
  return true;
}

bool is_nilpotent_fusion(FusionContext const &ctx)
{
  bool by_morphisms = nilpotent_by_morphisms(ctx);
  bool by_automizers = nilpotent_by_automizers(ctx);
  if (by_morphisms != by_automizers)
    throw Error(ErrorCode::MethodDisagreement,
                std::string("fusion nilpotency: morphism scan says ") +
                (by_morphisms ? "nilpotent" : "not nilpotent") +
                ", automizer test says " + (by_automizers ? "nilpotent" : "not nilpotent"));
  return by_morphisms;
}

std::vector<Perm> fused_in_P(FusionContext const &ctx, Perm const &x)
{
  // G-conjugacy class of x by orbit closure under the generators.
  std::set<Perm> orbit{x};
  std::vector<Perm> frontier{x};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (auto const &y : frontier) {
      for (auto const &g : ctx.G().generators()) {
        Perm z = conjugate(y, g);
        if (orbit.insert(z).second)
          next.push_back(std::move(z));
      }
    }
    frontier = std::move(next);
  }

  std::vector<Perm> res;
  for (auto const &y : orbit) {
    if (ctx.P().contains(y))
      res.push_back(y);
  }
  return res;
}

bool is_strongly_closed(FusionContext const &ctx, Group const &D)
{
  check_in_P(ctx, D, "D");

  for (auto const &u : D.elements()) {
    for (auto const &v : fused_in_P(ctx, u)) {
      if (!D.contains(v))
        return false;
    }
  }
  return true;
}

std::vector<Group> strongly_closed_subgroups(FusionContext const &ctx)
{
  auto const &P = ctx.P();
  std::vector<std::vector<Perm>> fused(P.order());
  for (std::size_t i = 0u; i < P.order(); ++i)
    fused[i] = fused_in_P(ctx, P.elements()[i]);

  std::vector<Group> res;
  for (auto const &D : ctx.lattice().subgroups()) {
    bool closed = std::all_of(D.elements().begin(), D.elements().end(), [&](Perm const &u) {
      auto const &f = fused[P.index_of(u)];
      return std::all_of(f.begin(), f.end(), [&](Perm const &v) { return D.contains(v); });
    });
    if (closed)
      res.push_back(D);
  }
  return res;
}

bool is_f_centric(FusionContext const &ctx, Group const &Q)
{
  for (auto const &R : f_conjugates(ctx, Q)) {
    if (!(centralizer(ctx.P(), R) == center(R)))
      return false;
  }
  return true;
}

bool is_normal_in_F(FusionContext const &ctx, Group const &Q)
{
  check_in_P(ctx, Q, "Q");
  if (!is_normal(ctx.P(), Q))
    return false;

  // Every map R -> P induced by G must also be induced by an element
  // normalizing Q; such an element extends the map to RQ -> SQ fixing Q.
  // P normalizes Q, so P-conjugate choices of R are equivalent.
  Group N = normalizer(ctx.G(), Q);
  auto const &L = ctx.lattice();
  for (auto i : L.class_representatives()) {
    auto from_G = induced_maps(ctx, L[i], ctx.G(), ctx.P());
    auto from_N = induced_maps(ctx, L[i], N, ctx.P());
    if (!std::includes(from_N.begin(), from_N.end(), from_G.begin(), from_G.end()))
      return false;
  }
  return true;
}

bool is_constrained(FusionContext const &ctx)
{
  auto const &L = ctx.lattice();
  for (auto i : L.normal_subgroups()) {
    if (is_f_centric(ctx, L[i]) && is_normal_in_F(ctx, L[i]))
      return true;
  }
  return false;
}

bool model_condition(FusionContext const &ctx)
{
  Group O = p_core(ctx.G(), ctx.p());
  return centralizer(ctx.G(), O).is_subgroup_of(O);
}

FusionContext normalizer_system(FusionContext const &ctx, Group const &Q)
{
  check_in_P(ctx, Q, "Q");
  if (!is_normal(ctx.P(), Q))
    throw Error(ErrorCode::NotNormalInP, "Q is not normal in P");
  return ctx.restricted_to(normalizer(ctx.G(), Q));
}

std::vector<FusionMorphism> normalizer_hom(FusionContext const &ctx, Group const &Q,
                                           Group const &R, Group const &S)
{
  check_in_P(ctx, Q, "Q");
  if (!is_normal(ctx.P(), Q))
    throw Error(ErrorCode::NotNormalInP, "Q is not normal in P");

  Group RQ = join(R, Q);
  Group SQ = join(S, Q);

  std::vector<FusionMorphism> res;
  for (auto const &phi : hom_F(ctx, R, S)) {
    bool extends = false;
    for (auto const &h : ctx.G().elements()) {
      if (!normalizes(h, Q) || !conjugates_into(RQ, h, SQ))
        continue;
      if (images_under(R, h) == phi.images) {
        extends = true;
        break;
      }
    }
    if (extends)
      res.push_back(phi);
  }
  return res;
}

} // namespace pfusion
