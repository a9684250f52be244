#include <gtest/gtest.h>

#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "negcat/runner.hpp"
#include "negcat/scenario.hpp"
#include "negcat/torsion3.hpp"

using namespace negcat;
using abelian::class_a;
using orbit::arc;

namespace {

const std::vector<arc> SA{{28, 34}, {14, 20}, {21, 27}, {1, 7}, {0, 13}};
const std::vector<arc> SB{{23, 29}, {7, 13}, {22, 35}, {1, 14}, {15, 21}};

const class_a E0_EXP{{1, 7}, {7, 13}};
const class_a E1_EXP{{0, 34}, {0, 20}, {14, 20}, {14, 34}, {21, 34}, {0, 13}, {28, 34}};
const class_a E2_EXP{{21, 27}};

struct fixture {
  orbit::arc_model M;
  abelian::ab_model A;
  abelian::ab_model B;
  torsion3::torsion_data td;
};

const fixture& fix() {
  static fixture f = [] {
    auto M = orbit::build_arc_model(orbit::make_params(6, 5));
    auto A = abelian::from_sms(M, SA);
    auto B = abelian::from_sms(M, SB);
    auto td = torsion3::compute_esets(A, B);
    return fixture{std::move(M), std::move(A), std::move(B), std::move(td)};
  }();
  return f;
}

void line(int num, const char* what) {
  std::printf("[acceptance] criterion %2d: %s  (%s)\n", num,
              ::testing::Test::HasFailure() ? "FAIL" : "pass", what);
}

abelian::ab_model search_model(int w, int n) {
  auto P = orbit::make_params(w, n);
  auto M = orbit::build_arc_model(P);
  auto arcs = orbit::admissible_arcs(P);
  std::vector<arc> cur;
  std::function<bool(std::size_t)> go = [&](std::size_t from) {
    if ((int)cur.size() == P.n) return orbit::is_sms(M, cur).ok;
    for (std::size_t i = from; i < arcs.size(); ++i) {
      cur.push_back(arcs[i]);
      if (go(i + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  if (!go(0)) throw std::runtime_error("no sms");
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

void law_battery(const abelian::ab_model& A, unsigned seed) {
  for (const auto& S : random_subsets(A, 50, seed)) {
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
    ASSERT_TRUE(gen_cl.conclusive && sub_cl.conclusive);
    auto rp = abelian::perp_right(A, S);
    auto lp = abelian::perp_left(A, S);
    ASSERT_EQ(abelian::perp_right(A, gen_s), rp);
    ASSERT_EQ(abelian::perp_right(A, gen_cl.set), rp);
    ASSERT_EQ(abelian::perp_left(A, sub_s), lp);
    ASSERT_EQ(abelian::perp_left(A, sub_cl.set), lp);
    for (const arc& t : gen_cl.set) {
      const auto& tab = A.sub_quot_parts(A.iv_of_arc.at(t));
      ASSERT_TRUE(tab.conclusive);
      for (const auto& [su, qu] : tab.pairs)
        for (const arc& a : qu) ASSERT_TRUE(gen_cl.set.count(a));
    }
    for (const arc& s : sub_cl.set) {
      const auto& tab = A.sub_quot_parts(A.iv_of_arc.at(s));
      ASSERT_TRUE(tab.conclusive);
      for (const auto& [su, qu] : tab.pairs)
        for (const arc& a : su) ASSERT_TRUE(sub_cl.set.count(a));
    }
    auto tp = abelian::torsion_pair(A, gen_cl.set);
    ASSERT_EQ(tp.free, rp);
    auto tp2 = abelian::torsion_pair(A, lp);
    ASSERT_EQ(tp2.free, sub_cl.set);
  }
}

class_a shifted_class(const orbit::arc_model& M, const class_a& S, int k) {
  class_a out;
  for (const arc& a : S) out.insert(orbit::shift_arc(M, a, k));
  return out;
}

class_a star_slice(const orbit::arc_model& M, const abelian::ab_model& A, const class_a& B_ind,
                   int k1, int k2) {
  class_a U = shifted_class(M, B_ind, k1);
  class_a V = shifted_class(M, B_ind, k2);
  class_a out;
  for (const arc& a : A.indec_set) {
    auto r = orbit::star_membership(M, {a}, U, V);
    EXPECT_NE(r.status, orbit::star_status::inconclusive);
    if (r.status == orbit::star_status::witness) out.insert(a);
  }
  return out;
}

std::string bundled_scenario() {
  return std::string(NEGCAT_SOURCE_DIR) + "/examples/paper_4_2.toml";
}

}  // namespace

TEST(Acceptance, C01FiltrationClasses) {
  const auto& td = fix().td;
  EXPECT_EQ(td.E0, E0_EXP);
  EXPECT_EQ(td.E1, E1_EXP);
  EXPECT_EQ(td.E2, E2_EXP);
  line(1, "the three filtration classes match the worked example exactly");
}

TEST(Acceptance, C02UniqueFiltration) {
  const auto& td = fix().td;
  auto tp = torsion3::filter_object(td, {{7, 27}});
  EXPECT_EQ(tp.chain[1], (orbit::c_object{{7, 13}}));
  EXPECT_EQ(tp.chain[2], (orbit::c_object{{7, 20}}));
  EXPECT_EQ(tp.quotients[0], (orbit::c_object{{7, 13}}));
  EXPECT_EQ(tp.quotients[1], (orbit::c_object{{14, 20}}));
  EXPECT_EQ(tp.quotients[2], (orbit::c_object{{21, 27}}));
  auto chains = torsion3::brute_force_filtrations(td, {{7, 27}});
  EXPECT_EQ(chains.size(), 1u);
  line(2, "the worked object filters as 0 < (7,13) < (7,20) < (7,27), uniquely");
}

TEST(Acceptance, C03DisplayedTriangles) {
  const auto& f = fix();
  struct tri {
    arc x, y, z;
  };
  for (const tri& t : {tri{{7, 13}, {7, 20}, {14, 20}}, tri{{7, 20}, {7, 27}, {21, 27}}}) {
    auto mt = orbit::middle_terms(f.M, t.x, t.z);
    ASSERT_EQ(mt.size(), 1u);
    EXPECT_EQ(mt[0], (orbit::c_object{t.y}));
    const auto& tab = f.A.sub_quot_parts(f.A.iv_of_arc.at(t.y));
    ASSERT_TRUE(tab.conclusive);
    bool ses = false;
    for (const auto& [su, qu] : tab.pairs)
      if (su == orbit::c_object{t.x} && qu == orbit::c_object{t.z}) ses = true;
    EXPECT_TRUE(ses);
    EXPECT_GE(repkit::ext1_dim(f.A.rep_of({t.z}), f.A.rep_of({t.x})), 1);
  }
  line(3, "both displayed triangles appear at arc level and as exact sequences");
}

TEST(Acceptance, C04SetupVerification) {
  auto rep = torsion3::check_setup(fix().A, fix().B);
  ASSERT_EQ(rep.conditions.size(), 4u);
  for (const auto& c : rep.conditions) {
    EXPECT_TRUE(c.pass) << c.name;
    EXPECT_TRUE(c.conclusive) << c.name;
  }
  EXPECT_EQ(rep.conditions[0].max_en, 5);
  EXPECT_EQ(rep.conditions[1].max_en, 5);
  EXPECT_FALSE(rep.conditions[2].witness.empty());
  EXPECT_FALSE(rep.conditions[3].witness.empty());
  line(4, "negative-ext vanishing to depth five and both sandwich inclusions, with witnesses");
}

TEST(Acceptance, C05ExtQuiverShape) {
  const auto& A = fix().A;
  ASSERT_EQ(A.orient.size(), 4u);
  std::vector<int> fwd{1, 1, 1, -1}, rev{1, -1, -1, -1};
  EXPECT_TRUE(A.orient == fwd || A.orient == rev);
  line(5, "the extension quiver of the first collection is the 4-then-back chain");
}

TEST(Acceptance, C06CalabiYauDuality) {
  for (auto [w, n, pairs] : {std::tuple{6, 5, 10000}, {2, 3, 225}}) {
    auto P = orbit::make_params(w, n);
    auto M = orbit::build_arc_model(P);
    auto arcs = orbit::admissible_arcs(P);
    int checked = 0;
    for (const arc& x : arcs)
      for (const arc& y : arcs) {
        ASSERT_EQ(orbit::hom_dim_c(M, {x}, {y}),
                  orbit::hom_dim_c(M, {y}, {orbit::shift_arc(M, x, -w)}));
        ++checked;
      }
    EXPECT_EQ(checked, pairs);
  }
  line(6, "duality pairing exact on all 10000 + 225 arc pairs");
}

TEST(Acceptance, C07OracleEquivalence) {
  for (int n = 1; n <= 4; ++n)
    for (int a = 1; a <= n; ++a)
      for (int b = a; b <= n; ++b)
        for (int c = 1; c <= n; ++c)
          for (int e = c; e <= n; ++e)
            for (int s = -3; s <= 3; ++s)
              for (int t = -3; t <= 3; ++t) {
                derived::db_indec x{s, {a, b}}, y{t, {c, e}};
                ASSERT_EQ(derived::hom_dim_db(n, x, y), derived::hom_dim_db_oracle(n, x, y));
              }
  line(7, "closed-form morphism dimensions equal the linear-algebra oracle exhaustively");
}

TEST(Acceptance, C08LawSuite) {
  law_battery(search_model(2, 2), 11);
  law_battery(search_model(2, 3), 22);
  law_battery(fix().A, 33);
  line(8, "layer composition, perpendicular identities and torsion pairs on 150 random subsets");
}

TEST(Acceptance, C09ClassIdentities) {
  const auto& f = fix();
  class_a cap0, cap2;
  class_a b2 = shifted_class(f.M, f.B.indec_set, -2);
  for (const arc& a : f.A.indec_set) {
    if (f.B.indec_set.count(a)) cap0.insert(a);
    if (b2.count(a)) cap2.insert(a);
  }
  auto e0_perp = abelian::perp_right(f.A, f.td.E0);
  EXPECT_EQ(e0_perp, abelian::perp_right(f.A, cap0));
  EXPECT_EQ(e0_perp, star_slice(f.M, f.A, f.B.indec_set, -1, -2));
  auto e2_lperp = abelian::perp_left(f.A, f.td.E2);
  EXPECT_EQ(e2_lperp, abelian::perp_left(f.A, cap2));
  EXPECT_EQ(e2_lperp, star_slice(f.M, f.A, f.B.indec_set, 0, -1));
  for (const arc& a : f.td.E0) EXPECT_TRUE(e2_lperp.count(a));
  for (const arc& a : e2_lperp) EXPECT_TRUE(f.A.indec_set.count(a));
  line(9, "complement identities of the low and high classes, and the nested chain");
}

TEST(Acceptance, C10TripleAndBijection) {
  const auto& f = fix();
  EXPECT_TRUE(torsion3::verify_triple(f.td).pass());
  auto pairs = torsion3::phi(f.A, f.td.E0, f.td.E1, f.td.E2);
  auto trip = torsion3::phi_inv(f.A, pairs);
  EXPECT_EQ(trip.S0, f.td.E0);
  EXPECT_EQ(trip.S1, f.td.E1);
  EXPECT_EQ(trip.S2, f.td.E2);
  for (int n : {2, 3}) {
    auto T = search_model(2, n);
    auto classes = torsion3::enumerate_torsion_classes(T);
    int trips = 0;
    for (const class_a& t1 : classes)
      for (const class_a& t2 : classes) {
        bool nested = true;
        for (const arc& a : t1)
          if (!t2.count(a)) nested = false;
        if (!nested) continue;
        torsion3::nested_pairs np{
            torsion3::torsion_pair_classes{t1, abelian::perp_right(T, t1)},
            torsion3::torsion_pair_classes{t2, abelian::perp_right(T, t2)}};
        auto tr = torsion3::phi_inv(T, np);
        auto back = torsion3::phi(T, tr.S0, tr.S1, tr.S2);
        ASSERT_EQ(back[0].torsion, np[0].torsion);
        ASSERT_EQ(back[0].free, np[0].free);
        ASSERT_EQ(back[1].torsion, np[1].torsion);
        ASSERT_EQ(back[1].free, np[1].free);
        ++trips;
      }
    EXPECT_GT(trips, 0);
  }
  line(10, "triple verified; both bijection directions invert on every nested pair");
}

TEST(Acceptance, C11Recognition) {
  const auto& f = fix();
  EXPECT_TRUE(orbit::is_sms(f.M, SA).ok);
  EXPECT_TRUE(orbit::is_sms(f.M, SB).ok);
  auto shared = orbit::is_sms(f.M, {{1, 7}, {7, 13}, {0, 13}, {14, 20}, {21, 27}});
  EXPECT_FALSE(shared.ok);
  EXPECT_NE(shared.reason.find("endpoint"), std::string::npos);
  auto crossing = orbit::is_sms(f.M, {{0, 13}, {6, 19}, {21, 27}, {28, 34}, {22, 35}});
  EXPECT_FALSE(crossing.ok);
  EXPECT_NE(crossing.reason.find("crossing"), std::string::npos);

  // geometric recognition against the morphism-space characterization
  auto P = orbit::make_params(2, 3);
  auto M = orbit::build_arc_model(P);
  auto arcs = orbit::admissible_arcs(P);
  int geometric = 0, hom_based = 0;
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j)
      for (std::size_t k = j + 1; k < arcs.size(); ++k) {
        std::vector<arc> c{arcs[i], arcs[j], arcs[k]};
        bool geo = orbit::is_sms(M, c).ok;
        bool hom = true;
        for (const arc& x : c)
          for (const arc& y : c) {
            if (orbit::hom_dim_c(M, {x}, {y}) != (x == y ? 1 : 0)) hom = false;
            if (orbit::hom_dim_c(M, {x}, {orbit::shift_arc(M, y, -1)}) != 0) hom = false;
          }
        geometric += geo;
        hom_based += hom;
        EXPECT_EQ(geo, hom) << "(" << arcs[i].a << "," << arcs[i].b << ")...";
      }
  EXPECT_EQ(geometric, 30);
  EXPECT_EQ(hom_based, 30);
  line(11, "collection recognition, with reasons, equals the morphism-space enumeration");
}

TEST(Acceptance, C12Determinism) {
  auto doc = scenario::load_file(bundled_scenario());
  auto r1 = runner::run(doc);
  auto r2 = runner::run(doc);
  EXPECT_EQ(r1.exit_code, 0);
  EXPECT_EQ(r1.report.dump(2), r2.report.dump(2));
  auto reparsed = runner::json::parse(r1.report.dump(2));
  EXPECT_EQ(reparsed.dump(2), r1.report.dump(2));

  runner::detail::context c1(doc), c2(doc);
  auto svg1 = runner::make_diagram(c1.M, doc.sms, runner::detail::styles_for(c1), "arquiver",
                                   "svg");
  auto svg2 = runner::make_diagram(c2.M, doc.sms, runner::detail::styles_for(c2), "arquiver",
                                   "svg");
  EXPECT_FALSE(svg1.empty());
  EXPECT_EQ(svg1, svg2);
  line(12, "scenario report and picture are byte-identical across runs");
}
