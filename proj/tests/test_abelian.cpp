#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>
#include <vector>

#include "negcat/abelian.hpp"

using namespace negcat;
using abelian::class_a;
using orbit::arc;

namespace {

const std::vector<arc> SA{{28, 34}, {14, 20}, {21, 27}, {1, 7}, {0, 13}};
const std::vector<arc> SB{{23, 29}, {7, 13}, {22, 35}, {1, 14}, {15, 21}};

struct models {
  orbit::arc_model M;
  abelian::ab_model A;
};

const models& big() {
  static models m = [] {
    auto M = orbit::build_arc_model(orbit::make_params(6, 5));
    auto A = abelian::from_sms(M, SA);
    return models{std::move(M), std::move(A)};
  }();
  return m;
}

abelian::ab_model small_model(int w, int n) {
  auto P = orbit::make_params(w, n);
  auto M = orbit::build_arc_model(P);
  auto arcs = orbit::admissible_arcs(P);
  std::vector<arc> sms;
  std::function<bool(std::size_t, std::vector<arc>&)> go = [&](std::size_t from,
                                                               std::vector<arc>& cur) {
    if ((int)cur.size() == P.n) return orbit::is_sms(M, cur).ok;
    for (std::size_t i = from; i < arcs.size(); ++i) {
      cur.push_back(arcs[i]);
      if (go(i + 1, cur)) return true;
      cur.pop_back();
    }
    return false;
  };
  std::vector<arc> cur;
  if (!go(0, cur)) throw std::runtime_error("no sms");
  return abelian::from_sms(M, cur);
}

std::vector<class_a> random_subsets(const abelian::ab_model& A, int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<arc> ind(A.indec_set.begin(), A.indec_set.end());
  std::vector<class_a> out;
  for (int i = 0; i < count; ++i) {
    class_a s;
    for (const arc& a : ind)
      if (rng() % 2) s.insert(a);
    out.push_back(s);
  }
  return out;
}

bool quotient_closed(const abelian::ab_model& A, const class_a& T) {
  for (const arc& t : T) {
    const auto& tab = A.sub_quot_parts(A.iv_of_arc.at(t));
    if (!tab.conclusive) return false;
    for (const auto& [su, qu] : tab.pairs)
      for (const arc& a : qu)
        if (!T.count(a)) return false;
  }
  return true;
}

bool sub_closed(const abelian::ab_model& A, const class_a& F) {
  for (const arc& f : F) {
    const auto& tab = A.sub_quot_parts(A.iv_of_arc.at(f));
    if (!tab.conclusive) return false;
    for (const auto& [su, qu] : tab.pairs)
      for (const arc& a : su)
        if (!F.count(a)) return false;
  }
  return true;
}

// The full section-two law battery on one model and one generating subset.
void check_laws(const abelian::ab_model& A, const class_a& S) {
  std::vector<class_a> lay;
  for (int i = 0; i <= 4; ++i) {
    auto lr = abelian::layers(A, S, i);
    ASSERT_TRUE(lr.conclusive);
    lay.push_back(lr.set);
  }
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n + m <= 4; ++n) {
      auto st = abelian::star_a(A, lay[m], lay[n]);
      ASSERT_TRUE(st.conclusive);
      ASSERT_EQ(st.set, lay[m + n]);
    }

  auto gen_s = abelian::gen(A, S);
  auto sub_s = abelian::sub(A, S);
  auto gen_cl = abelian::filt(A, gen_s);
  auto sub_cl = abelian::filt(A, sub_s);
  ASSERT_TRUE(gen_cl.conclusive);
  ASSERT_TRUE(sub_cl.conclusive);

  auto rp = abelian::perp_right(A, S);
  auto lp = abelian::perp_left(A, S);
  ASSERT_EQ(abelian::perp_right(A, gen_s), rp);
  ASSERT_EQ(abelian::perp_right(A, gen_cl.set), rp);
  ASSERT_EQ(abelian::perp_left(A, sub_s), lp);
  ASSERT_EQ(abelian::perp_left(A, sub_cl.set), lp);

  ASSERT_TRUE(quotient_closed(A, gen_cl.set));
  ASSERT_TRUE(sub_closed(A, sub_cl.set));

  auto tp = abelian::torsion_pair(A, gen_cl.set);
  ASSERT_EQ(tp.free, rp);
  auto tp2 = abelian::torsion_pair(A, lp);
  ASSERT_EQ(tp2.free, sub_cl.set);
}

}  // namespace

TEST(Abelian, BigModelShape) {
  const auto& A = big().A;
  EXPECT_EQ(A.indec_set.size(), 15u);
  std::vector<arc> chain{{28, 34}, {21, 27}, {14, 20}, {0, 13}, {1, 7}};
  EXPECT_EQ(A.simples, chain);
  EXPECT_EQ(A.orient, (std::vector<int>{1, 1, 1, -1}));
}

TEST(Abelian, SecondModelIndecomposables) {
  auto B = abelian::from_sms(big().M, SB);
  class_a expect = {{1, 7},   {1, 14},  {1, 21},  {1, 35},  {7, 13},
                    {15, 21}, {15, 35}, {22, 35}, {23, 29}, {29, 35}};
  EXPECT_EQ(B.indec_set, expect);
}

TEST(Abelian, MembershipRoundTrip) {
  const auto& A = big().A;
  auto r = abelian::member(A, {{1, 7}, {7, 13}, {1, 7}});
  ASSERT_TRUE(r.has_value());
  EXPECT_GT(r->total_dim(), 0);
  EXPECT_FALSE(abelian::member(A, {{23, 29}}).has_value());
  EXPECT_THROW(A.rep_of({{23, 29}}), error);
}

TEST(Abelian, IntersectionClosureMatchesLowClass) {
  const auto& A = big().A;
  auto B = abelian::from_sms(big().M, SB);
  class_a cap;
  for (const arc& a : A.indec_set)
    if (B.indec_set.count(a)) cap.insert(a);
  EXPECT_EQ(cap, (class_a{{1, 7}, {7, 13}}));
  auto e0 = abelian::filt(A, abelian::gen(A, cap));
  ASSERT_TRUE(e0.conclusive);
  EXPECT_EQ(e0.set, (class_a{{1, 7}, {7, 13}}));
}

TEST(Abelian, FrozenPerpendicularClasses) {
  const auto& A = big().A;
  class_a e0 = {{1, 7}, {7, 13}};
  class_a e0perp = abelian::perp_right(A, e0);
  class_a e0perp_exp = {{0, 13},  {0, 20},  {0, 27},  {0, 34},  {14, 20},
                        {14, 27}, {14, 34}, {21, 27}, {21, 34}, {28, 34}};
  EXPECT_EQ(e0perp, e0perp_exp);
  class_a e2lperp = abelian::perp_left(A, {{21, 27}});
  class_a e2lperp_exp = {{0, 13}, {0, 20},  {0, 34},  {1, 7},   {7, 13}, {7, 20},
                         {7, 34}, {14, 20}, {14, 34}, {21, 34}, {28, 34}};
  EXPECT_EQ(e2lperp, e2lperp_exp);
  for (const arc& a : e0) EXPECT_TRUE(e2lperp.count(a));

  auto tc = abelian::is_torsion_class(A, e0);
  EXPECT_TRUE(tc.conclusive);
  EXPECT_TRUE(tc.value);
  auto tp = abelian::torsion_pair(A, e0);
  EXPECT_EQ(tp.free, e0perp_exp);
}

TEST(Abelian, StarExample) {
  const auto& A = big().A;
  auto st = abelian::star_a(A, {{1, 7}}, {{7, 13}});
  ASSERT_TRUE(st.conclusive);
  EXPECT_EQ(st.set, (class_a{{1, 7}, {7, 13}}));
}

TEST(Abelian, TwoSimpleModelGroundTruth) {
  auto T2 = small_model(2, 2);
  ASSERT_EQ(T2.indec_set.size(), 3u);
  arc s_src = T2.orient[0] == 1 ? T2.simples[0] : T2.simples[1];
  arc s_tgt = T2.orient[0] == 1 ? T2.simples[1] : T2.simples[0];
  arc proj = T2.arc_of_iv.at({0, 1});
  EXPECT_EQ(abelian::gen(T2, {proj}), (class_a{proj, s_src}));
  EXPECT_EQ(abelian::sub(T2, {proj}), (class_a{proj, s_tgt}));
  EXPECT_FALSE(abelian::star_a(T2, {s_src}, {s_tgt}).set.count(proj));
  EXPECT_TRUE(abelian::star_a(T2, {s_tgt}, {s_src}).set.count(proj));
  EXPECT_EQ(abelian::perp_right(T2, {s_src}), (class_a{s_tgt, proj}));
  EXPECT_EQ(abelian::perp_right(T2, {s_tgt}), (class_a{s_src}));
  EXPECT_TRUE(abelian::is_torsion_class(T2, {s_src}).value);
  EXPECT_FALSE(abelian::is_torsion_class(T2, {s_tgt, proj}).value);
  EXPECT_TRUE(abelian::is_torsion_free_class(T2, {s_tgt}).value);
  EXPECT_FALSE(abelian::is_torsion_free_class(T2, {s_src, proj}).value);
  auto tp = abelian::torsion_pair(T2, {s_src});
  EXPECT_EQ(tp.free, (class_a{s_tgt, proj}));
  auto rad = abelian::radical(T2, {s_src}, T2.rep_of_iv({0, 1}));
  EXPECT_EQ(repkit::sub_as_rep(T2.rep_of_iv({0, 1}), rad).total_dim(), 0);
}

TEST(Abelian, SmallTriangleModels) {
  auto P3 = orbit::make_params(2, 3);
  auto M3 = orbit::build_arc_model(P3);
  auto F1 = abelian::from_sms(M3, {{3, 5}, {2, 7}, {0, 8}});
  auto F2 = abelian::from_sms(M3, {{2, 4}, {5, 7}, {0, 8}});
  EXPECT_EQ(F1.indec_set.size(), 6u);
  EXPECT_EQ(F2.indec_set.size(), 6u);
}

TEST(Abelian, LawSuiteTwoSimples) {
  auto A = small_model(2, 2);
  for (const auto& S : random_subsets(A, 50, 101)) check_laws(A, S);
}

TEST(Abelian, LawSuiteThreeSimples) {
  auto A = small_model(2, 3);
  for (const auto& S : random_subsets(A, 50, 202)) check_laws(A, S);
}

TEST(Abelian, LawSuiteBigModel) {
  const auto& A = big().A;
  for (const auto& S : random_subsets(A, 50, 303)) check_laws(A, S);
}

TEST(Abelian, RejectsNonMemberClass) {
  const auto& A = big().A;
  EXPECT_THROW(abelian::perp_right(A, {{23, 29}}), error);
  EXPECT_THROW(abelian::star_a(A, {{23, 29}}, {}), error);
}

TEST(Abelian, RejectsBadCollections) {
  const auto& M = big().M;
  EXPECT_THROW(abelian::from_sms(M, {{1, 7}, {7, 13}, {0, 13}, {14, 20}, {21, 27}}), error);
}
