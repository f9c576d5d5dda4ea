#include "gtest/gtest.h"

#include "oracles.hpp"
#include "pfusion/error.hpp"
#include "pfusion/fusion.hpp"

using namespace pfusion;

namespace
{

ErrorCode code_of(auto f)
{
  try { f(); } catch (Error const &e) { return e.code(); }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

struct Case
{
  char const *name;
  Group G;
  unsigned p;
};

std::vector<Case> cases()
{
  return {
    {"S3", fixture::S3(), 3u},
    {"S4", fixture::S4(), 3u},
    {"A4", fixture::A4(), 3u},
    {"SL(2,3)", fixture::SL23(), 3u},
    {"C3xC3", fixture::C3xC3(), 3u},
    {"3^{1+2}", fixture::heisenberg27(), 3u},
    {"C7:C3/3", fixture::C7C3(), 3u},
    {"C7:C3/7", fixture::C7C3(), 7u},
    {"C3wrC2", fixture::C3wrC2(), 3u},
    {"S4/2", fixture::S4(), 2u},
  };
}

} // anonymous namespace

TEST(FusionContextTest, Construction)
{
  FusionContext ctx(fixture::S4(), 3);
  EXPECT_EQ(3u, ctx.P().order());
  EXPECT_EQ(2u, ctx.lattice().size());

  EXPECT_EQ(ErrorCode::InvalidArgument, code_of([] { FusionContext(fixture::S4(), 4); }));
  EXPECT_EQ(ErrorCode::InvalidArgument,
            code_of([] { FusionContext(fixture::S4(), 2, fixture::V4_in_S4()); }));
}

TEST(FConjugatesTest, Examples)
{
  FusionContext ctx(fixture::S4(), 3);
  auto triv = f_conjugates(ctx, Group::trivial(4));
  ASSERT_EQ(1u, triv.size());
  EXPECT_TRUE(triv[0].is_trivial());

  auto conj = f_conjugates(ctx, ctx.P());
  ASSERT_EQ(1u, conj.size());
  EXPECT_EQ(ctx.P(), conj[0]);

  EXPECT_EQ(ErrorCode::NotInP, code_of([&] { f_conjugates(ctx, fixture::V4_in_S4()); }));
}

TEST(FConjugatesTest, AgreesWithConjugateScan)
{
  for (auto const &c : cases()) {
    FusionContext ctx(c.G, c.p);
    for (auto const &Q : ctx.lattice().subgroups()) {
      std::set<oracle::PermSet> expected;
      for (auto const &g : c.G.elements()) {
        oracle::PermSet conj;
        for (auto const &q : Q.elements())
          conj.insert(g.inverse() * q * g);
        bool in_P = std::all_of(conj.begin(), conj.end(),
                                [&](Perm const &x) { return ctx.P().contains(x); });
        if (in_P)
          expected.insert(conj);
      }

      std::set<oracle::PermSet> got;
      for (auto const &R : f_conjugates(ctx, Q))
        got.insert(oracle::as_set(R));
      EXPECT_EQ(expected, got) << c.name;
      EXPECT_TRUE(got.count(oracle::as_set(Q)));
    }
  }
}

TEST(HomTest, Examples)
{
  FusionContext s4(fixture::S4(), 3);
  EXPECT_EQ(2u, aut_F(s4, s4.P()).size());

  FusionContext a4(fixture::A4(), 3);
  EXPECT_EQ(1u, aut_F(a4, a4.P()).size());

  for (auto const &c : cases()) {
    FusionContext ctx(c.G, c.p);
    for (auto const &Q : ctx.lattice().subgroups()) {
      auto homs = hom_F(ctx, Q, Q);
      EXPECT_TRUE(std::any_of(homs.begin(), homs.end(),
                              [](auto const &phi) { return phi.is_identity(); }));

      auto N = oracle::normalizer(c.G, oracle::as_set(Q));
      auto C = oracle::centralizer(c.G, oracle::as_set(Q));
      EXPECT_EQ(N.size(), homs.size() * C.size()) << c.name;

      for (auto const &phi : homs) {
        for (auto const &x : Q.elements()) {
          EXPECT_EQ(conjugate(x, phi.witness), phi(x));
          for (auto const &y : Q.generators())
            EXPECT_EQ(phi(x * y), phi(x) * phi(y));
        }
      }
    }
  }
}

TEST(HomTest, MorphismCountsMatchWitnessClasses)
{
  for (auto const &c : cases()) {
    FusionContext ctx(c.G, c.p);
    for (auto const &Q : ctx.lattice().subgroups()) {
      auto C = oracle::centralizer(c.G, oracle::as_set(Q));
      std::size_t witnesses = 0u;
      for (auto const &g : c.G.elements()) {
        bool into = std::all_of(Q.elements().begin(), Q.elements().end(),
                                [&](Perm const &q) { return ctx.P().contains(conjugate(q, g)); });
        witnesses += into;
      }
      EXPECT_EQ(witnesses, hom_F(ctx, Q, ctx.P()).size() * C.size()) << c.name;
    }
  }
}

TEST(NilpotentFusionTest, Examples)
{
  EXPECT_TRUE(is_nilpotent_fusion(FusionContext(fixture::heisenberg27(), 3)));
  EXPECT_FALSE(is_nilpotent_fusion(FusionContext(fixture::S4(), 3)));
  EXPECT_TRUE(is_nilpotent_fusion(FusionContext(fixture::SL23(), 3)));
}

TEST(NilpotentFusionTest, FrobeniusEquivalenceAndReduction)
{
  for (auto const &c : cases()) {
    FusionContext ctx(c.G, c.p);
    bool nil = is_nilpotent_fusion(ctx);
    EXPECT_EQ(oracle::is_p_nilpotent(c.G, c.p), nil) << c.name;
    EXPECT_EQ(nil, nilpotent_by_morphisms(ctx, false)) << c.name;
    EXPECT_EQ(nil, nilpotent_by_automizers(ctx, false)) << c.name;
  }
}

TEST(NilpotentFusionTest, BrokenDedupIsDetected)
{
  Config cfg;
  cfg.fault = Fault::BrokenDedup;
  FusionContext ctx(fixture::S4(), 3, cfg);
  EXPECT_EQ(ErrorCode::MethodDisagreement, code_of([&] { is_nilpotent_fusion(ctx); }));
}

TEST(StrongClosureTest, Examples)
{
  FusionContext ctx(fixture::S4(), 3);
  EXPECT_TRUE(is_strongly_closed(ctx, ctx.P()));
  EXPECT_TRUE(is_strongly_closed(ctx, Group::trivial(4)));
  EXPECT_EQ(2u, strongly_closed_subgroups(ctx).size());
  EXPECT_EQ(ErrorCode::NotInP,
            code_of([&] { is_strongly_closed(ctx, fixture::V4_in_S4()); }));
}

TEST(StrongClosureTest, AgreesWithElementScanAndImpliesNormality)
{
  for (auto const &c : cases()) {
    FusionContext ctx(c.G, c.p);
    auto closed = strongly_closed_subgroups(ctx);

    for (auto const &D : ctx.lattice().subgroups()) {
      bool expected = true;
      for (auto const &u : D.elements())
        for (auto const &g : c.G.elements()) {
          Perm v = conjugate(u, g);
          if (ctx.P().contains(v) && !D.contains(v))
            expected = false;
        }

      EXPECT_EQ(expected, is_strongly_closed(ctx, D)) << c.name;
      EXPECT_EQ(expected, std::find(closed.begin(), closed.end(), D) != closed.end());
      if (expected)
        EXPECT_TRUE(is_normal(ctx.P(), D)) << c.name;
    }
  }
}

TEST(CentricNormalTest, Examples)
{
  Group H = fixture::heisenberg27();
  FusionContext pctx(H, 3);
  EXPECT_TRUE(is_f_centric(pctx, H));
  EXPECT_TRUE(is_normal_in_F(pctx, H));
  EXPECT_TRUE(is_constrained(pctx));

  // P = C3 is abelian, so every morphism (identity and inversion) has a
  // witness in N_G(P) = S3 and P is normal in F; S3 is a model.
  FusionContext s4(fixture::S4(), 3);
  EXPECT_TRUE(is_normal_in_F(s4, s4.P()));
  EXPECT_TRUE(is_constrained(s4));
  EXPECT_FALSE(model_condition(s4));

  // In C3 wr C2 the swap fuses <(1 2 3)> with <(4 5 6)>.
  FusionContext w(fixture::C3wrC2(), 3);
  EXPECT_FALSE(is_normal_in_F(w, fixture::make(6, {"(1 2 3)"})));
  EXPECT_TRUE(is_normal_in_F(w, w.P()));

  FusionContext s4_2(fixture::S4(), 2);
  EXPECT_TRUE(model_condition(s4_2));
  EXPECT_TRUE(is_normal_in_F(s4_2, fixture::V4_in_S4()));
  EXPECT_TRUE(is_f_centric(s4_2, fixture::V4_in_S4()));

  FusionContext a4(fixture::A4(), 3);
  EXPECT_FALSE(model_condition(a4));

  FusionContext frob(fixture::C7C3(), 7);
  EXPECT_TRUE(model_condition(frob));
  EXPECT_TRUE(is_constrained(frob));
}

TEST(CentricNormalTest, CentricAgainstDefinition)
{
  for (auto const &c : cases()) {
    FusionContext ctx(c.G, c.p);
    for (auto const &Q : ctx.lattice().subgroups()) {
      bool expected = true;
      for (auto const &g : c.G.elements()) {
        oracle::PermSet R;
        for (auto const &q : Q.elements())
          R.insert(conjugate(q, g));
        if (!std::all_of(R.begin(), R.end(), [&](Perm const &x) { return ctx.P().contains(x); }))
          continue;
        auto CPR = oracle::centralizer(ctx.P(), R);
        oracle::PermSet ZR;
        for (auto const &x : R)
          if (std::all_of(R.begin(), R.end(), [&](Perm const &y) { return x * y == y * x; }))
            ZR.insert(x);
        expected = expected && CPR == ZR;
      }
      EXPECT_EQ(expected, is_f_centric(ctx, Q)) << c.name;
    }
  }
}

TEST(NormalizerSystemTest, Examples)
{
  FusionContext s4(fixture::S4(), 3);
  auto same = normalizer_system(s4, Group::trivial(4));
  EXPECT_EQ(s4.G(), same.G());

  auto n = normalizer_system(s4, s4.P());
  EXPECT_EQ(6u, n.G().order());
  EXPECT_FALSE(n.G().is_abelian());
  EXPECT_EQ(s4.P(), n.P());

  FusionContext sl(fixture::SL23(), 3);
  EXPECT_EQ(6u, normalizer_system(sl, sl.P()).G().order());

  FusionContext w(fixture::C3wrC2(), 3);
  Group x = fixture::make(6, {"(1 2 3)"});
  EXPECT_NO_THROW(normalizer_system(w, x));

  FusionContext h(fixture::heisenberg27(), 3);
  Group nonnormal = fixture::make(9, {"(4 5 6)(7 9 8)"});
  EXPECT_EQ(ErrorCode::NotNormalInP, code_of([&] { normalizer_system(h, nonnormal); }));
}

TEST(NormalizerSystemTest, ExtensionDefinitionMatchesNormalizerGroup)
{
  for (auto const &c : cases()) {
    FusionContext ctx(c.G, c.p);
    auto const &L = ctx.lattice();
    for (auto q : L.normal_subgroups()) {
      auto nctx = normalizer_system(ctx, L[q]);
      for (auto const &R : L.subgroups()) {
        for (auto const &S : L.subgroups()) {
          auto by_def = normalizer_hom(ctx, L[q], R, S);
          auto by_group = hom_F(nctx, R, S);
          ASSERT_EQ(by_group.size(), by_def.size()) << c.name;
          for (std::size_t i = 0u; i < by_def.size(); ++i)
            EXPECT_EQ(by_group[i].images, by_def[i].images);
        }
      }
      if (is_nilpotent_fusion(ctx))
        EXPECT_TRUE(is_nilpotent_fusion(nctx)) << c.name;
    }
  }
}
