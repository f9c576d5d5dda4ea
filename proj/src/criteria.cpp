#include "pfusion/criteria.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>

#include "pfusion/error.hpp"

namespace pfusion
{

namespace
{

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool normalizes_group(Group const &B, Group const &A)
{
  return std::all_of(B.generators().begin(), B.generators().end(),
                     [&](Perm const &b) { return normalizes(b, A); });
}

std::optional<Perm> first_non_normalizing(Group const &B, Group const &A)
{
  for (auto const &b : B.elements()) {
    if (!normalizes(b, A))
      return b;
  }
  return std::nullopt;
}

void precondition(bool ok, std::string const &what)
{
  if (!ok)
    throw Error(ErrorCode::PreconditionViolated, what);
}

void property(bool ok, std::string const &what)
{
  if (!ok)
    throw Error(ErrorCode::PropertyFailure, "replacement: " + what);
}

bool strictly_below(Group const &H, Group const &K)
{
  return H.order() < K.order() && H.is_subgroup_of(K);
}

// Images of all elements of G under the homomorphism sending gens[i] to
// images[i], or nullopt if that assignment does not extend to an
// automorphism.
std::optional<std::vector<Perm>> extend_to_automorphism(Group const &G,
                                                        std::vector<Perm> const &images)
{
  auto const &gens = G.generators();
  std::vector<std::optional<Perm>> map(G.order());
  map[0] = G.identity();

  std::deque<std::size_t> queue{0u};
  while (!queue.empty()) {
    auto i = queue.front();
    queue.pop_front();
    Perm const &x = G.elements()[i];
    Perm const y = *map[i];

    for (std::size_t k = 0u; k < gens.size(); ++k) {
      auto j = G.index_of(x * gens[k]);
      Perm yk = y * images[k];
      if (map[j]) {
        if (*map[j] != yk)
          return std::nullopt;
      } else {
        map[j] = std::move(yk);
        queue.push_back(j);
      }
    }
  }

  std::vector<Perm> res;
  res.reserve(map.size());
  for (auto &m : map)
    res.push_back(std::move(*m));

  auto sorted = res;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return std::nullopt;
  return res;
}

// A normal subgroup of P moved by N_G(P); no family satisfying condition (i)
// can have it as its meet.
Group corrupted_meet(FusionContext const &ctx, Group const &I)
{
  Group N = normalizer(ctx.G(), ctx.P());
  auto const &L = ctx.lattice();
  for (auto i : L.normal_subgroups()) {
    if (!normalizes_group(N, L[i]))
      return L[i];
  }
  return I;
}

Verdict equivalence_verdict(HypothesisReport const &h, std::optional<bool> lhs,
                            std::optional<bool> rhs)
{
  if (!h.all_met())
    return Verdict::HypothesesUnmet;
  if (!lhs || !rhs || *lhs != *rhs)
    return Verdict::Falsified;
  return Verdict::Confirmed;
}

Verdict claims_verdict(HypothesisReport const &h, std::vector<Claim> const &claims)
{
  if (!h.all_met())
    return Verdict::HypothesesUnmet;
  bool ok = std::all_of(claims.begin(), claims.end(), [](Claim const &c) { return c.holds; });
  return ok ? Verdict::Confirmed : Verdict::Falsified;
}

bool family_is_abelian(AbelianFamily const &family)
{
  return std::all_of(family.members().begin(), family.members().end(),
                     [](Group const &A) { return A.is_abelian(); });
}

void fill_condition_i(HypothesisReport &h, FusionContext const &ctx, AbelianFamily const &family)
{
  auto res = check_condition_i(ctx, family);
  h.condition_i = res.holds;
  h.condition_i_witness = res.witness;
}

void fill_condition_ii(HypothesisReport &h, FusionContext const &ctx,
                       AbelianFamily const &family, char const *variant)
{
  h.condition_ii_variant = variant;
  auto res = std::string(variant) == "A"
    ? check_condition_ii_A(ctx.lattice(), family)
    : check_condition_ii_B(ctx.lattice(), family, ctx.config().quantifier);
  h.condition_ii = res.holds;
  h.condition_ii_witness = res.witness;
}

// rhs of the nilpotency criteria: N_F(I) = F_P(P), or nullopt when I is not
// normal in P (the normalizer system is then not a fusion system over P).
std::optional<bool> normalizer_side(FusionContext const &ctx, Group const &I,
                                    std::vector<std::string> &notes)
{
  if (!is_normal(ctx.P(), I)) {
    notes.push_back("I is not normal in P; normalizer system not formed");
    return std::nullopt;
  }
  return is_nilpotent_fusion(normalizer_system(ctx, I));
}

VerificationReport make_report(char const *theorem, FusionContext const &ctx,
                               AbelianFamily const *family)
{
  VerificationReport r;
  r.theorem = theorem;
  r.prime = ctx.p();
  if (family)
    r.family = family->label();
  return r;
}

} // anonymous namespace

ConditionResult<InvarianceWitness>
check_condition_i(FusionContext const &ctx, AbelianFamily const &family)
{
  auto const &L = ctx.lattice();
  for (auto i : L.normal_subgroups()) {
    Group const &Q = L[i];
    Group I = family_meet(family_restrict(family, Q));
    Group N = normalizer(ctx.G(), Q);
    for (auto const &g : N.generators()) {
      if (!normalizes(g, I))
        return {false, InvarianceWitness{Q, g}};
    }
  }
  return {};
}

ConditionResult<NormalisationWitness>
check_condition_ii_A(SubgroupLattice const &lattice, AbelianFamily const &family)
{
  for (auto const &B : normal_class_le2_subgroups(lattice)) {
    Group BB = derived_subgroup(B);

    std::vector<Group> S;
    for (auto const &A : family.members()) {
      if (BB.is_subgroup_of(A) && !B.is_subgroup_of(A))
        S.push_back(A);
    }
    if (S.empty())
      continue;

    bool ok = std::any_of(S.begin(), S.end(),
                          [&](Group const &A) { return normalizes_group(B, A); });
    if (!ok)
      return {false, NormalisationWitness{B, S.front(), *first_non_normalizing(B, S.front()),
                                          std::nullopt}};
  }
  return {};
}

ConditionResult<NormalisationWitness>
check_condition_ii_B(SubgroupLattice const &lattice, AbelianFamily const &family,
                     Quantifier quantifier)
{
  Group const &P = lattice.group();

  for (auto const &B : normal_class_le2_subgroups(lattice)) {
    Group BB = derived_subgroup(B);

    std::optional<NormalisationWitness> first_failure;
    bool some_closed = false;
    bool any_relevant = false;

    for (auto const &A : family.members()) {
      if (!BB.is_subgroup_of(A) || normalizes_group(B, A))
        continue;
      any_relevant = true;

      std::optional<NormalisationWitness> failure;
      for (auto const &b : replacement_candidates(P, B, A)) {
        Group star = replacement(P, B, A, b);
        if (!family.contains(star)) {
          failure = NormalisationWitness{B, A, b, star};
          break;
        }
      }

      if (!failure) {
        some_closed = true;
        if (quantifier == Quantifier::Existential)
          break;
      } else {
        if (quantifier == Quantifier::Universal)
          return {false, failure};
        if (!first_failure)
          first_failure = failure;
      }
    }

    if (quantifier == Quantifier::Existential && any_relevant && !some_closed)
      return {false, first_failure};
  }
  return {};
}

std::vector<Perm> replacement_candidates(Group const &P, Group const &B, Group const &A)
{
  Group NPA = normalizer(P, A);
  std::vector<Perm> res;
  for (auto const &b : B.elements()) {
    if (normalizes(b, NPA) && !normalizes(b, A))
      res.push_back(b);
  }
  return res;
}

Group replacement(Group const &P, Group const &B, Group const &A, Perm const &b)
{
  precondition(A.is_subgroup_of(P) && B.is_subgroup_of(P), "A and B must be subgroups of P");
  precondition(A.is_abelian(), "A is not abelian");
  precondition(is_normal(P, B), "B is not normal in P");
  precondition(B.contains(b), "b is not in B");

  Group BB = derived_subgroup(B);
  precondition(BB.is_subgroup_of(A), "[B, B] is not contained in A");

  if (P.order() % 2u == 0u)
    precondition(B.is_abelian(), "p = 2 requires B abelian");

  precondition(!normalizes(b, A), "b normalizes A");
  precondition(normalizes(b, normalizer(P, A)), "b does not normalize N_P(A)");

  Group Ab = conjugate_subgroup(P, A, b);
  Group star = join(meet(A, Ab), commutator_with_element(P, A, b));

  property(star.is_abelian(), "A* is not abelian");
  property(BB.is_subgroup_of(star), "A* does not contain [B, B]");

  Group AB = meet(A, B);
  Group starB = meet(star, B);
  property(strictly_below(AB, starB), "A* n B does not strictly contain A n B");
  property(strictly_below(starB, B), "A* n B is not a proper subgroup of B");

  property(normalizes_group(star, A) && normalizes_group(A, star),
           "A and A* do not normalize each other");
  property(star.order() == A.order(), "|A*| != |A|");
  property(star.is_subgroup_of(join(A, Ab)), "A* is not contained in A A^b");

  return star;
}

ReplacementTrace replacement_maximal(Group const &P, Group const &B, Group const &A)
{
  precondition(A.is_abelian(), "A is not abelian");
  precondition(derived_subgroup(B).is_subgroup_of(A), "[B, B] is not contained in A");

  ReplacementTrace trace{A, 0u};
  while (!normalizes_group(B, trace.result)) {
    auto candidates = replacement_candidates(P, B, trace.result);
    if (candidates.empty())
      throw Error(ErrorCode::PropertyFailure,
                  "replacement: B does not normalize A but N_B(N_P(A)) - N_B(A) is empty");

    // Candidates are ascending, so the first maximizer is the least.
    std::optional<Group> best;
    std::size_t best_size = 0u;
    for (auto const &b : candidates) {
      Group star = replacement(P, B, trace.result, b);
      auto size = meet(star, B).order();
      if (!best || size > best_size) {
        best = star;
        best_size = size;
      }
    }

    trace.result = *best;
    ++trace.steps;
  }
  return trace;
}

bool frobenius_test(FusionContext const &ctx, bool reduce)
{
  auto const &L = ctx.lattice();
  std::vector<std::size_t> subgroups;
  if (reduce) {
    subgroups = L.class_representatives();
  } else {
    for (std::size_t i = 0u; i < L.size(); ++i)
      subgroups.push_back(i);
  }

  for (auto i : subgroups) {
    auto n = normalizer(ctx.G(), L[i]).order();
    auto c = centralizer(ctx.G(), L[i]).order();
    if (!is_power_of(n / c, ctx.p()))
      return false;
  }
  return true;
}

bool is_p_nilpotent(FusionContext const &ctx)
{
  bool frobenius = frobenius_test(ctx);

  auto complement = ctx.G().order() / p_part(ctx.G().order(), ctx.p());
  bool generated = p_prime_generated(ctx.G(), ctx.p()).order() == complement;

  if (frobenius != generated)
    throw Error(ErrorCode::MethodDisagreement,
                std::string("p-nilpotency: Frobenius test says ") + (frobenius ? "yes" : "no") +
                ", p'-generated subgroup says " + (generated ? "yes" : "no"));
  return frobenius;
}

bool is_p_nilpotent(Group const &G, unsigned p, Config const &config)
{
  return is_p_nilpotent(FusionContext(G, p, config));
}

namespace
{

std::optional<InvarianceWitness> stability_violation(FusionContext const &ctx, Group const &N,
                                                     Group const &Q)
{
  ActionImage act(N, Q);
  Group O = p_core(act.image(), ctx.p());

  for (auto const &g : N.elements()) {
    bool qgg = std::all_of(Q.elements().begin(), Q.elements().end(), [&](Perm const &q) {
      return commutator(commutator(q, g), g).is_identity();
    });
    if (qgg && !O.contains(act.project(g)))
      return InvarianceWitness{Q, g};
  }
  return std::nullopt;
}

} // anonymous namespace

StabilityResult is_p_stable(FusionContext const &ctx, bool full)
{
  if (!full && sylow_subgroup(ctx.G(), 2u).is_abelian())
    return {true, true, std::nullopt};

  auto const &L = ctx.lattice();
  for (auto i : L.class_representatives()) {
    Group N = normalizer(ctx.G(), L[i]);
    if (auto w = stability_violation(ctx, N, L[i]))
      return {false, false, w};
  }
  return {true, false, std::nullopt};
}

std::vector<Group> normal_p_subgroups(FusionContext const &ctx)
{
  Group O = p_core(ctx.G(), ctx.p());
  std::vector<Group> res;
  for (auto const &H : ctx.lattice().subgroups()) {
    if (H.is_subgroup_of(O) && is_normal(ctx.G(), H))
      res.push_back(H);
  }
  return res;
}

StabilityResult acts_p_stably_on_normal_p_subgroups(FusionContext const &ctx)
{
  for (auto const &B : normal_p_subgroups(ctx)) {
    if (auto w = stability_violation(ctx, ctx.G(), B))
      return {false, false, w};
  }
  return {true, false, std::nullopt};
}

bool for_each_automorphism(Group const &G,
                           std::function<bool(std::vector<Perm> const &)> const &visit,
                           std::size_t max_order)
{
  if (G.order() > max_order)
    return false;

  auto const &gens = G.generators();
  std::vector<std::vector<Perm>> candidates(gens.size());
  double combos = 1.0;
  for (std::size_t k = 0u; k < gens.size(); ++k) {
    auto o = gens[k].order();
    for (auto const &x : G.elements()) {
      if (x.order() == o)
        candidates[k].push_back(x);
    }
    combos *= static_cast<double>(candidates[k].size());
  }
  if (combos > 1e5)
    return false;

  std::vector<Perm> images(gens.size());
  bool go_on = true;
  auto recurse = [&](auto &self, std::size_t k) -> void {
    if (k == gens.size()) {
      if (auto map = extend_to_automorphism(G, images))
        go_on = visit(*map);
      return;
    }
    for (auto const &x : candidates[k]) {
      if (!go_on)
        return;
      images[k] = x;
      self(self, k + 1u);
    }
  };
  recurse(recurse, 0u);
  return true;
}

std::optional<std::vector<std::vector<Perm>>>
automorphisms(Group const &G, std::size_t max_order)
{
  std::vector<std::vector<Perm>> res;
  bool done = for_each_automorphism(G, [&](auto const &map) {
    res.push_back(map);
    return true;
  }, max_order);
  if (!done)
    return std::nullopt;
  return res;
}

std::optional<bool> is_characteristic(Group const &G, Group const &H, std::size_t max_order)
{
  bool invariant = true;
  bool done = for_each_automorphism(G, [&](auto const &map) {
    invariant = is_invariant_under(G, H, {map});
    return invariant;
  }, max_order);
  if (!done)
    return std::nullopt;
  return invariant;
}

bool is_invariant_under(Group const &G, Group const &H,
                        std::vector<std::vector<Perm>> const &autos)
{
  for (auto const &map : autos) {
    for (auto const &h : H.generators()) {
      if (!H.contains(map[G.index_of(h)]))
        return false;
    }
  }
  return true;
}

char const *verdict_name(Verdict v)
{
  switch (v) {
  case Verdict::Confirmed:       return "confirmed";
  case Verdict::HypothesesUnmet: return "hypotheses-unmet";
  case Verdict::Falsified:       return "FALSIFIED";
  }
  return "FALSIFIED";
}

bool HypothesisReport::all_met() const
{
  for (auto const &h : {p_odd, family_abelian, condition_i, condition_ii, strongly_closed_D,
                        model_condition, p_stable, acts_p_stably}) {
    if (h && !*h)
      return false;
  }
  return true;
}

VerificationReport verify_theorem_A(FusionContext const &ctx, AbelianFamily const &family)
{
  auto start = Clock::now();
  auto r = make_report("theorem-a", ctx, &family);

  r.hypotheses.p_odd = ctx.p() != 2u;
  r.hypotheses.family_abelian = family_is_abelian(family);
  fill_condition_i(r.hypotheses, ctx, family);
  fill_condition_ii(r.hypotheses, ctx, family, "A");

  Group I = family_meet(family);
  if (ctx.config().fault == Fault::CorruptFamily)
    I = corrupted_meet(ctx, I);

  r.lhs = is_nilpotent_fusion(ctx);
  r.rhs = normalizer_side(ctx, I, r.notes);
  r.verdict = equivalence_verdict(r.hypotheses, r.lhs, r.rhs);
  r.elapsed_ms = ms_since(start);
  return r;
}

VerificationReport verify_theorem_B(FusionContext const &ctx, AbelianFamily const &family,
                                    Group const &D)
{
  auto start = Clock::now();
  auto r = make_report("theorem-b", ctx, &family);
  r.D = D;

  r.hypotheses.p_odd = ctx.p() != 2u;
  r.hypotheses.family_abelian = family_is_abelian(family);
  r.hypotheses.strongly_closed_D = is_strongly_closed(ctx, D);
  fill_condition_i(r.hypotheses, ctx, family);
  fill_condition_ii(r.hypotheses, ctx, family, "B");

  Group I = family_meet(family_restrict(family, D));
  if (ctx.config().fault == Fault::CorruptFamily)
    I = corrupted_meet(ctx, I);

  r.lhs = is_nilpotent_fusion(ctx);
  r.rhs = normalizer_side(ctx, I, r.notes);
  r.verdict = equivalence_verdict(r.hypotheses, r.lhs, r.rhs);
  r.elapsed_ms = ms_since(start);
  return r;
}

std::vector<VerificationReport> verify_zj_normality(FusionContext const &ctx,
                                                    AbelianFamily const &family,
                                                    std::optional<Group> const &D)
{
  std::vector<VerificationReport> res;
  Group const &G = ctx.G();

  bool model = model_condition(ctx);
  bool cond_i = check_condition_i(ctx, family).holds;

  {
    auto start = Clock::now();
    auto r = make_report("zj-axiomatic", ctx, &family);
    r.hypotheses.family_abelian = family_is_abelian(family);
    r.hypotheses.model_condition = model;
    r.hypotheses.acts_p_stably = acts_p_stably_on_normal_p_subgroups(ctx).stable;
    fill_condition_i(r.hypotheses, ctx, family);
    fill_condition_ii(r.hypotheses, ctx, family, "A");

    Group I = family_meet(family);
    r.claims.push_back({"I_A normal in G", is_normal(G, I)});

    if (r.hypotheses.all_met() && G != ctx.P()) {
      auto char_P = is_characteristic(ctx.P(), I);
      std::optional<bool> char_G;
      if (char_P && *char_P)
        char_G = is_characteristic(G, I);
      if (char_P && (!*char_P || char_G)) {
        r.claims.push_back({"I_A characteristic in P implies characteristic in G",
                            !*char_P || *char_G});
      } else {
        r.notes.push_back("characteristic clause skipped: automorphism search too large");
      }
    }

    r.verdict = claims_verdict(r.hypotheses, r.claims);
    r.elapsed_ms = ms_since(start);
    res.push_back(std::move(r));
  }

  if (!D)
    return res;

  bool stable = is_p_stable(ctx).stable;
  bool closed = is_strongly_closed(ctx, *D);
  Group ID = family_meet(family_restrict(family, *D));

  {
    auto start = Clock::now();
    auto r = make_report("zj-strongly-closed", ctx, &family);
    r.D = *D;
    r.hypotheses.p_odd = ctx.p() != 2u;
    r.hypotheses.family_abelian = family_is_abelian(family);
    r.hypotheses.p_stable = stable;
    r.hypotheses.model_condition = model;
    r.hypotheses.strongly_closed_D = closed;
    r.hypotheses.condition_i = cond_i;
    fill_condition_ii(r.hypotheses, ctx, family, "B");

    r.claims.push_back({"I_{A|D} normal in G", is_normal(G, ID)});
    r.verdict = claims_verdict(r.hypotheses, r.claims);
    r.elapsed_ms = ms_since(start);
    res.push_back(std::move(r));
  }

  {
    auto start = Clock::now();
    auto r = make_report("zj-intersection", ctx, &family);
    r.D = *D;
    r.hypotheses.p_odd = ctx.p() != 2u;
    r.hypotheses.family_abelian = family_is_abelian(family);
    r.hypotheses.p_stable = stable;
    r.hypotheses.strongly_closed_D = closed;
    r.hypotheses.condition_i = cond_i;
    fill_condition_ii(r.hypotheses, ctx, family, "B");

    for (auto const &B : normal_p_subgroups(ctx)) {
      r.claims.push_back({"I_{A|D} n B normal in G for |B| = " + std::to_string(B.order()),
                          is_normal(G, meet(ID, B))});
    }
    r.verdict = claims_verdict(r.hypotheses, r.claims);
    r.elapsed_ms = ms_since(start);
    res.push_back(std::move(r));
  }

  return res;
}

VerificationReport verify_frobenius(FusionContext const &ctx)
{
  auto start = Clock::now();
  auto r = make_report("frobenius", ctx, nullptr);

  r.lhs = is_nilpotent_fusion(ctx);
  r.rhs = is_p_nilpotent(ctx);
  r.claims.push_back({"fusion system nilpotent iff G p-nilpotent", *r.lhs == *r.rhs});
  if (ctx.G().order() <= 200u)
    r.claims.push_back({"unreduced Frobenius test agrees", frobenius_test(ctx, false) == *r.rhs});

  r.verdict = claims_verdict(r.hypotheses, r.claims);
  r.elapsed_ms = ms_since(start);
  return r;
}

VerificationReport verify_replacement(FusionContext const &ctx)
{
  auto start = Clock::now();
  auto r = make_report("replacement", ctx, nullptr);
  r.hypotheses.p_odd = ctx.p() != 2u;

  Group const &P = ctx.P();
  std::size_t bound = 1u;
  for (int i = 0; i < 4; ++i)
    bound *= ctx.p();
  if (P.order() > bound) {
    r.notes.push_back("scan skipped: |P| > p^4");
    r.verdict = claims_verdict(r.hypotheses, r.claims);
    r.elapsed_ms = ms_since(start);
    return r;
  }

  std::size_t triples = 0u, pairs = 0u;
  bool properties = true, existence = true, maximal = true;

  auto const &L = ctx.lattice();
  for (auto const &B : normal_class_le2_subgroups(L)) {
    Group BB = derived_subgroup(B);
    unsigned log_B = 0u;
    for (auto n = B.order(); n > 1u; n /= ctx.p())
      ++log_B;

    for (auto const &A : L.subgroups()) {
      if (!A.is_abelian() || !BB.is_subgroup_of(A))
        continue;
      ++pairs;

      auto candidates = replacement_candidates(P, B, A);
      if (normalizes_group(B, A) != candidates.empty()) {
        existence = false;
        r.notes.push_back("existence clause fails for |B| = " + std::to_string(B.order()));
        continue;
      }

      try {
        for (auto const &b : candidates) {
          ++triples;
          Group star = replacement(P, B, A, b);
          bool commute = true;
          for (auto const &a : A.generators())
            for (auto const &s : star.generators()) {
              Perm c = commutator(a, s);
              commute = commute && A.contains(c) && star.contains(c);
            }
          if (!commute) {
            properties = false;
            r.notes.push_back("[A, A*] is not contained in A n A*");
          }
        }

        auto trace = replacement_maximal(P, B, A);
        if (trace.steps > log_B || !normalizes_group(B, trace.result) ||
            trace.result.order() != A.order()) {
          maximal = false;
          r.notes.push_back("maximal replacement misbehaves for |B| = " +
                            std::to_string(B.order()));
        }
      } catch (Error const &e) {
        if (e.code() != ErrorCode::PropertyFailure)
          throw;
        properties = false;
        r.notes.push_back(e.what());
      }
    }
  }

  r.claims.push_back({"replacement properties hold on " + std::to_string(triples) + " triples",
                      properties});
  r.claims.push_back({"existence clause holds on " + std::to_string(pairs) + " pairs", existence});
  r.claims.push_back({"maximal replacement ends B-normalized within log_p|B| steps", maximal});
  r.verdict = claims_verdict(r.hypotheses, r.claims);
  r.elapsed_ms = ms_since(start);
  return r;
}

VerificationReport verify_glauberman_thompson(FusionContext const &ctx)
{
  auto start = Clock::now();
  auto r = make_report("glauberman-thompson", ctx, nullptr);

  r.hypotheses.p_odd = ctx.p() != 2u;
  Group ZJ = thompson_ZJ(ctx.lattice());

  r.lhs = is_p_nilpotent(ctx);
  r.rhs = is_p_nilpotent(ctx.restricted_to(normalizer(ctx.G(), ZJ)));
  r.verdict = equivalence_verdict(r.hypotheses, r.lhs, r.rhs);
  r.elapsed_ms = ms_since(start);
  return r;
}

VerificationReport verify_np_lemma(FusionContext const &ctx, AbelianFamily const &family,
                                   std::optional<Group> const &D)
{
  auto start = Clock::now();
  auto r = make_report(D ? "np-lemma-closed" : "np-lemma", ctx, &family);
  r.D = D;

  r.hypotheses.p_odd = ctx.p() != 2u;
  r.hypotheses.family_abelian = family_is_abelian(family);
  fill_condition_i(r.hypotheses, ctx, family);
  if (D) {
    r.hypotheses.strongly_closed_D = is_strongly_closed(ctx, *D);
    fill_condition_ii(r.hypotheses, ctx, family, "B");
  } else {
    fill_condition_ii(r.hypotheses, ctx, family, "A");
  }

  Group I = D ? family_meet(family_restrict(family, *D)) : family_meet(family);
  if (ctx.config().fault == Fault::CorruptFamily)
    I = corrupted_meet(ctx, I);

  r.lhs = is_p_nilpotent(ctx);
  if (is_normal(ctx.P(), I)) {
    r.rhs = is_p_nilpotent(ctx.restricted_to(normalizer(ctx.G(), I)));
  } else {
    r.notes.push_back("I is not normal in P; P is not Sylow in N_G(I)");
  }
  r.verdict = equivalence_verdict(r.hypotheses, r.lhs, r.rhs);
  r.elapsed_ms = ms_since(start);
  return r;
}

} // namespace pfusion
