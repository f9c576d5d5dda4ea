#ifndef PFUSION_FUSION_HPP
#define PFUSION_FUSION_HPP

#include <memory>
#include <optional>
#include <vector>

#include "group.hpp"
#include "lattice.hpp"

namespace pfusion
{

// Deliberate defects used to check that the batch layer catches bugs.
enum class Fault
{
  None,
  BrokenDedup,    // morphisms deduplicated by image set instead of graph
  CorruptFamily   // I_A replaced after the hypothesis checks (criteria)
};

// Reading of the quantifier over A in the replacement-closure condition.
enum class Quantifier
{
  Universal,
  Existential
};

struct Config
{
  std::size_t max_order = default_element_limit;
  std::optional<unsigned> lattice_exponent;
  Quantifier quantifier = Quantifier::Universal;
  Fault fault = Fault::None;
};

// The fusion system F_P(G): a group, a prime and a Sylow p-subgroup, together
// with the subgroup lattice of P that all quantifiers over subgroups of P use.
class FusionContext
{
public:
  // P is computed with sylow_subgroup. Throws InvalidArgument if p is not
  // prime and the lattice errors if P is too large.
  FusionContext(Group G, unsigned p, Config config = {});

  // Throws InvalidArgument unless P is a Sylow p-subgroup of G.
  FusionContext(Group G, unsigned p, Group P, Config config = {});

  Group const &G() const { return _G; }
  unsigned p() const { return _p; }
  Group const &P() const { return _P; }
  SubgroupLattice const &lattice() const { return *_lattice; }
  Config const &config() const { return _config; }

  // Same P and lattice over a subgroup H of G containing P.
  FusionContext restricted_to(Group H) const;

private:
  FusionContext(Group G, unsigned p, Group P,
                std::shared_ptr<SubgroupLattice const> lattice, Config config);

  Group _G;
  unsigned _p;
  Group _P;
  std::shared_ptr<SubgroupLattice const> _lattice;
  Config _config;
};

// A morphism of F_P(G): conjugation by `witness`, restricted to `source`.
struct FusionMorphism
{
  Group source;
  Group target;
  std::vector<Perm> images;  // images[i] is the image of source.elements()[i]
  Perm witness;

  Perm operator()(Perm const &x) const;
  bool is_identity() const;
};

// All R <= P with R = Q^g for some g in G.
std::vector<Group> f_conjugates(FusionContext const &ctx, Group const &Q);

// Maps Q -> R induced by conjugation in G, one per distinct map.
std::vector<FusionMorphism> hom_F(FusionContext const &ctx, Group const &Q, Group const &R);
std::vector<FusionMorphism> aut_F(FusionContext const &ctx, Group const &Q);

// F_P(G) = F_P(P), decided twice: by comparing the maps Q -> P induced by G
// and by P, and by checking that every automizer N_G(Q)/C_G(Q) is a p-group.
// Throws MethodDisagreement if the two disagree.
bool is_nilpotent_fusion(FusionContext const &ctx);

// The two halves of is_nilpotent_fusion. With reduce set, Q runs over
// P-conjugacy class representatives only.
bool nilpotent_by_morphisms(FusionContext const &ctx, bool reduce = true);
bool nilpotent_by_automizers(FusionContext const &ctx, bool reduce = true);

// Elements of P that are G-conjugate to x (sorted).
std::vector<Perm> fused_in_P(FusionContext const &ctx, Perm const &x);

bool is_strongly_closed(FusionContext const &ctx, Group const &D);
std::vector<Group> strongly_closed_subgroups(FusionContext const &ctx);

bool is_f_centric(FusionContext const &ctx, Group const &Q);
bool is_normal_in_F(FusionContext const &ctx, Group const &Q);
bool is_constrained(FusionContext const &ctx);

// C_G(O_p(G)) <= O_p(G)
bool model_condition(FusionContext const &ctx);

// (N_G(Q), p, P) for Q normal in P; throws NotNormalInP otherwise.
FusionContext normalizer_system(FusionContext const &ctx, Group const &Q);

// Hom_{N_F(Q)}(R, S) straight from the definition: the morphisms R -> S of F
// that extend to RQ -> SQ while mapping Q onto itself. Q must be normal in P.
std::vector<FusionMorphism> normalizer_hom(FusionContext const &ctx, Group const &Q,
                                           Group const &R, Group const &S);

} // namespace pfusion

#endif // PFUSION_FUSION_HPP
