#ifndef PFUSION_CRITERIA_HPP
#define PFUSION_CRITERIA_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fusion.hpp"
#include "group.hpp"
#include "lattice.hpp"

namespace pfusion
{

// First (Q, g) with Q normal in P, g in N_G(Q) and (I_{A|Q})^g != I_{A|Q}.
struct InvarianceWitness
{
  Group Q;
  Perm g;
};

// A class-two normal subgroup B, a member A and an element b of B showing a
// failure of the normalisation or replacement-closure condition. For the
// closure condition `replacement` holds the A* that is missing from the family.
struct NormalisationWitness
{
  Group B;
  Group A;
  Perm b;
  std::optional<Group> replacement;
};

template<typename Witness>
struct ConditionResult
{
  bool holds = true;
  std::optional<Witness> witness;
};

// For every Q normal in P, I_{A|Q} is invariant under N_G(Q) (equivalently
// under Aut_F(Q)).
ConditionResult<InvarianceWitness>
check_condition_i(FusionContext const &ctx, AbelianFamily const &family);

// For every B normal in P of class <= 2: if some members contain [B, B] but
// not B, then B normalizes one of them.
ConditionResult<NormalisationWitness>
check_condition_ii_A(SubgroupLattice const &lattice, AbelianFamily const &family);

// For every B normal in P of class <= 2 and every member A with [B, B] <= A
// not normalized by B (all such A, or at least one, depending on the
// quantifier): A* = (A n A^b)[A, b] is a member for every b in
// N_B(N_P(A)) - N_B(A).
ConditionResult<NormalisationWitness>
check_condition_ii_B(SubgroupLattice const &lattice, AbelianFamily const &family,
                     Quantifier quantifier = Quantifier::Universal);

// N_B(N_P(A)) - N_B(A), ascending.
std::vector<Perm> replacement_candidates(Group const &P, Group const &B, Group const &A);

// A* = (A n A^b)[A, b]. Throws PreconditionViolated if the inputs are not a
// valid replacement triple and PropertyFailure if A* does not have the four
// replacement properties (abelian containing [B, B]; A n B < A* n B < B;
// A and A* normalize each other; |A*| = |A|) or does not lie in A A^b.
Group replacement(Group const &P, Group const &B, Group const &A, Perm const &b);

struct ReplacementTrace
{
  Group result;
  unsigned steps = 0u;
};

// Repeats the replacement, always picking b to maximize |A* n B| (least b
// on ties), until B normalizes the current subgroup.
ReplacementTrace replacement_maximal(Group const &P, Group const &B, Group const &A);

// N_G(Q)/C_G(Q) is a p-group for every Q <= P (over P-class representatives
// when reduce is set).
bool frobenius_test(FusionContext const &ctx, bool reduce = true);

// Frobenius test and the p'-generated complement oracle; throws
// MethodDisagreement if they differ.
bool is_p_nilpotent(FusionContext const &ctx);
bool is_p_nilpotent(Group const &G, unsigned p, Config const &config = {});

struct StabilityResult
{
  bool stable = true;
  bool by_shortcut = false;
  std::optional<InvarianceWitness> witness;  // (Q, g) with [Q, g, g] = 1
};

// p-stability. Abelian Sylow 2-subgroups settle it at once unless `full`
// is set, in which case every p-subgroup Q (up to P-conjugacy) and every
// g in N_G(Q) with [Q, g, g] = 1 is checked against O_p(N_G(Q)/C_G(Q)).
StabilityResult is_p_stable(FusionContext const &ctx, bool full = false);

// The same check restricted to the normal p-subgroups of G.
StabilityResult acts_p_stably_on_normal_p_subgroups(FusionContext const &ctx);

// Normal p-subgroups of G (all lie in O_p(G) <= P).
std::vector<Group> normal_p_subgroups(FusionContext const &ctx);

// Calls visit with every automorphism of G, given by the images of
// G.elements(), until it returns false. Returns false without visiting
// anything when |G| > max_order or the generator-image search exceeds
// a fixed budget.
bool for_each_automorphism(Group const &G,
                           std::function<bool(std::vector<Perm> const &)> const &visit,
                           std::size_t max_order = 200u);

std::optional<std::vector<std::vector<Perm>>>
automorphisms(Group const &G, std::size_t max_order = 200u);

// H is mapped onto itself by every automorphism in the list.
bool is_invariant_under(Group const &G, Group const &H,
                        std::vector<std::vector<Perm>> const &automorphisms);

// nullopt when the automorphism search is out of budget.
std::optional<bool> is_characteristic(Group const &G, Group const &H,
                                      std::size_t max_order = 200u);

enum class Verdict
{
  Confirmed,
  HypothesesUnmet,
  Falsified
};

char const *verdict_name(Verdict v);

// Hypothesis outcomes; a field left empty does not apply to the statement.
struct HypothesisReport
{
  std::optional<bool> p_odd;
  std::optional<bool> family_abelian;
  std::optional<bool> condition_i;
  std::optional<InvarianceWitness> condition_i_witness;
  std::string condition_ii_variant;  // "A", "B" or empty
  std::optional<bool> condition_ii;
  std::optional<NormalisationWitness> condition_ii_witness;
  std::optional<bool> strongly_closed_D;
  std::optional<bool> model_condition;
  std::optional<bool> p_stable;
  std::optional<bool> acts_p_stably;

  bool all_met() const;
};

struct Claim
{
  std::string name;
  bool holds = true;
};

struct VerificationReport
{
  std::string theorem;
  std::string group;
  unsigned prime = 0u;
  std::string family;
  std::optional<Group> D;
  HypothesisReport hypotheses;
  std::optional<bool> lhs;
  std::optional<bool> rhs;
  std::vector<Claim> claims;
  std::vector<std::string> notes;
  Verdict verdict = Verdict::HypothesesUnmet;
  double elapsed_ms = 0.0;
};

// F = F_P(P) iff N_F(I_A) = F_P(P), under conditions (i) and (ii)-A.
VerificationReport verify_theorem_A(FusionContext const &ctx, AbelianFamily const &family);

// The same with I_{A|D} for a strongly closed D, under (i) and (ii)-B.
VerificationReport verify_theorem_B(FusionContext const &ctx, AbelianFamily const &family,
                                    Group const &D);

// Normality of I_A in G (model condition, p-stable action on normal
// p-subgroups, (i), (ii)-A), plus, when D is given, of I_{A|D} and of
// I_{A|D} n B for every normal p-subgroup B (p-stable G, (i), (ii)-B).
std::vector<VerificationReport> verify_zj_normality(FusionContext const &ctx,
                                                    AbelianFamily const &family,
                                                    std::optional<Group> const &D = std::nullopt);

// Nilpotency of F_P(G) against the Frobenius test and the p'-generated
// complement (and the unreduced Frobenius test for |G| <= 200).
VerificationReport verify_frobenius(FusionContext const &ctx);

// Every replacement triple (B, A, b) in P, the existence of b whenever B
// does not normalize A, and termination of the maximal choice. Only run
// when |P| <= p^4.
VerificationReport verify_replacement(FusionContext const &ctx);

// G is p-nilpotent iff N_G(Z(J(P))) is.
VerificationReport verify_glauberman_thompson(FusionContext const &ctx);

// N_G(I) p-nilpotent => G p-nilpotent for I = I_A, or I = I_{A|D} when D is
// given (and the trivial converse).
VerificationReport verify_np_lemma(FusionContext const &ctx, AbelianFamily const &family,
                                   std::optional<Group> const &D = std::nullopt);

} // namespace pfusion

#endif // PFUSION_CRITERIA_HPP
