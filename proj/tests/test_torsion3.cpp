#include <gtest/gtest.h>

#include <set>
#include <vector>

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

class_a shifted_class(const orbit::arc_model& M, const class_a& S, int k) {
  class_a out;
  for (const arc& a : S) out.insert(orbit::shift_arc(M, a, k));
  return out;
}

// Arc-level two-step extension slice: members of the big model lying in
// (shift^k1 B) * (shift^k2 B).
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

abelian::ab_model tiny_model() {
  auto P = orbit::make_params(2, 2);
  auto M = orbit::build_arc_model(P);
  for (const arc& x : orbit::admissible_arcs(P))
    for (const arc& y : orbit::admissible_arcs(P))
      if (x < y && orbit::is_sms(M, {x, y}).ok) return abelian::from_sms(M, {x, y});
  throw std::runtime_error("no sms");
}

}  // namespace

TEST(Torsion3, SetupConditionsHold) {
  auto rep = torsion3::check_setup(fix().A, fix().B);
  for (const auto& c : rep.conditions) {
    EXPECT_TRUE(c.pass) << c.name << ": " << c.witness;
    EXPECT_TRUE(c.conclusive) << c.name;
  }
  ASSERT_EQ(rep.conditions.size(), 4u);
  EXPECT_EQ(rep.conditions[0].max_en, 5);
  EXPECT_EQ(rep.conditions[1].max_en, 5);
  EXPECT_FALSE(rep.conditions[2].witness.empty());
  EXPECT_FALSE(rep.conditions[3].witness.empty());
}

TEST(Torsion3, SetupSelfPairing) { EXPECT_TRUE(torsion3::check_setup(fix().A, fix().A).pass()); }

TEST(Torsion3, SetupRejectsRotatedPartner) {
  const auto& f = fix();
  std::vector<arc> rot;
  for (const arc& a : SB) rot.push_back(orbit::rot(f.M.P, a, 1));
  auto Brot = abelian::from_sms(f.M, rot);
  auto rep = torsion3::check_setup(f.A, Brot);
  EXPECT_FALSE(rep.pass());
  bool definite = false;
  for (const auto& c : rep.conditions)
    if (!c.pass && c.conclusive) {
      definite = true;
      EXPECT_FALSE(c.witness.empty());
    }
  EXPECT_TRUE(definite);
}

TEST(Torsion3, FiltrationClassesExact) {
  const auto& td = fix().td;
  EXPECT_EQ(td.E0, E0_EXP);
  EXPECT_EQ(td.E1, E1_EXP);
  EXPECT_EQ(td.E2, E2_EXP);
  EXPECT_EQ(td.pair_low.torsion, E0_EXP);
  EXPECT_EQ(td.pair_high.free, E2_EXP);
}

TEST(Torsion3, PerpendicularIdentitiesOfTheClasses) {
  const auto& f = fix();
  class_a cap0, cap2;
  class_a b2 = shifted_class(f.M, f.B.indec_set, -2);
  for (const arc& a : f.A.indec_set) {
    if (f.B.indec_set.count(a)) cap0.insert(a);
    if (b2.count(a)) cap2.insert(a);
  }
  // right complements: of the low class and of the intersection it generates
  auto e0_perp = abelian::perp_right(f.A, f.td.E0);
  EXPECT_EQ(e0_perp, abelian::perp_right(f.A, cap0));
  EXPECT_EQ(e0_perp, star_slice(f.M, f.A, f.B.indec_set, -1, -2));
  // left complements: of the high class and of the shifted intersection
  auto e2_lperp = abelian::perp_left(f.A, f.td.E2);
  EXPECT_EQ(e2_lperp, abelian::perp_left(f.A, cap2));
  EXPECT_EQ(e2_lperp, star_slice(f.M, f.A, f.B.indec_set, 0, -1));
  // nested chain of classes
  for (const arc& a : f.td.E0) EXPECT_TRUE(e2_lperp.count(a));
  for (const arc& a : e2_lperp) EXPECT_TRUE(f.A.indec_set.count(a));
  EXPECT_EQ(f.td.pair_low.free, e0_perp);
  EXPECT_EQ(f.td.pair_high.torsion, e2_lperp);
}

TEST(Torsion3, UniqueFiltrationOfTheWorkedObject) {
  const auto& td = fix().td;
  auto tp = torsion3::filter_object(td, {{7, 27}});
  EXPECT_EQ(tp.chain[0], orbit::c_object{});
  EXPECT_EQ(tp.chain[1], (orbit::c_object{{7, 13}}));
  EXPECT_EQ(tp.chain[2], (orbit::c_object{{7, 20}}));
  EXPECT_EQ(tp.chain[3], (orbit::c_object{{7, 27}}));
  EXPECT_EQ(tp.quotients[0], (orbit::c_object{{7, 13}}));
  EXPECT_EQ(tp.quotients[1], (orbit::c_object{{14, 20}}));
  EXPECT_EQ(tp.quotients[2], (orbit::c_object{{21, 27}}));
  auto chains = torsion3::brute_force_filtrations(td, {{7, 27}});
  ASSERT_EQ(chains.size(), 1u);
  EXPECT_EQ(chains[0].x1, (orbit::c_object{{7, 13}}));
  EXPECT_EQ(chains[0].x2, (orbit::c_object{{7, 20}}));
}

TEST(Torsion3, DegenerateFiltrationShapes) {
  const auto& td = fix().td;
  auto low = torsion3::filter_object(td, {{1, 7}});
  EXPECT_EQ(low.chain[1], low.x);
  EXPECT_EQ(low.chain[2], low.x);
  auto high = torsion3::filter_object(td, {{21, 27}});
  EXPECT_TRUE(high.chain[1].empty());
  EXPECT_TRUE(high.chain[2].empty());
  auto mid = torsion3::filter_object(td, {{0, 34}});
  EXPECT_TRUE(mid.chain[1].empty());
  EXPECT_EQ(mid.chain[2], mid.x);
}

TEST(Torsion3, FiltrationUniqueEverywhere) {
  const auto& f = fix();
  for (const arc& a : f.A.indec_set) {
    auto partition = torsion3::filter_object(f.td, {a});
    auto chains = torsion3::brute_force_filtrations(f.td, {a});
    ASSERT_EQ(chains.size(), 1u) << "(" << a.a << "," << a.b << ")";
    EXPECT_EQ(chains[0].q0, partition.quotients[0]);
    EXPECT_EQ(chains[0].q1, partition.quotients[1]);
    EXPECT_EQ(chains[0].q2, partition.quotients[2]);
  }
}

TEST(Torsion3, FilterRejectsOutsideObject) {
  EXPECT_THROW(torsion3::filter_object(fix().td, {{23, 29}}), error);
}

TEST(Torsion3, TripleVerificationAndTamperDetection) {
  const auto& f = fix();
  auto vr = torsion3::verify_triple(f.td);
  EXPECT_TRUE(vr.pass());
  auto bad = torsion3::verify_triple(f.A, f.td.E2, f.td.E1, f.td.E0);
  EXPECT_FALSE(bad.hom_orth);
  EXPECT_FALSE(bad.witness.empty());
}

TEST(Torsion3, BijectionOnTheBigModel) {
  const auto& f = fix();
  auto pairs = torsion3::phi(f.A, f.td.E0, f.td.E1, f.td.E2);
  EXPECT_EQ(pairs[0].torsion, f.td.pair_low.torsion);
  EXPECT_EQ(pairs[0].free, f.td.pair_low.free);
  EXPECT_EQ(pairs[1].torsion, f.td.pair_high.torsion);
  EXPECT_EQ(pairs[1].free, f.td.pair_high.free);
  auto trip = torsion3::phi_inv(f.A, pairs);
  EXPECT_EQ(trip.S0, f.td.E0);
  EXPECT_EQ(trip.S1, f.td.E1);
  EXPECT_EQ(trip.S2, f.td.E2);
}

TEST(Torsion3, ExhaustiveRoundTripsTinyModel) {
  auto T2 = tiny_model();
  auto classes = torsion3::enumerate_torsion_classes(T2);
  EXPECT_EQ(classes.size(), 5u);
  EXPECT_EQ(torsion3::enumerate_torsion_free_classes(T2).size(), 5u);
  int trips = 0;
  for (const class_a& t1 : classes)
    for (const class_a& t2 : classes) {
      bool nested = true;
      for (const arc& a : t1)
        if (!t2.count(a)) nested = false;
      if (!nested) continue;
      torsion3::nested_pairs np{
          torsion3::torsion_pair_classes{t1, abelian::perp_right(T2, t1)},
          torsion3::torsion_pair_classes{t2, abelian::perp_right(T2, t2)}};
      auto tr = torsion3::phi_inv(T2, np);
      auto back = torsion3::phi(T2, tr.S0, tr.S1, tr.S2);
      EXPECT_EQ(back[0].torsion, np[0].torsion);
      EXPECT_EQ(back[0].free, np[0].free);
      EXPECT_EQ(back[1].torsion, np[1].torsion);
      EXPECT_EQ(back[1].free, np[1].free);
      ++trips;
    }
  EXPECT_EQ(trips, 13);
}

TEST(Torsion3, EnumerationMatchesGeneratedClosures) {
  auto T2 = tiny_model();
  auto classes = torsion3::enumerate_torsion_classes(T2);
  std::set<class_a> from_gen;
  std::vector<arc> ind(T2.indec_set.begin(), T2.indec_set.end());
  for (unsigned mask = 0; mask < (1u << ind.size()); ++mask) {
    class_a S;
    for (std::size_t i = 0; i < ind.size(); ++i)
      if (mask & (1u << i)) S.insert(ind[i]);
    auto cl = abelian::filt(T2, abelian::gen(T2, S));
    ASSERT_TRUE(cl.conclusive);
    from_gen.insert(cl.set);
  }
  EXPECT_EQ(from_gen, std::set<class_a>(classes.begin(), classes.end()));
}

TEST(Torsion3, TorsionClassesAreClosures) {
  auto T2 = tiny_model();
  for (const class_a& t : torsion3::enumerate_torsion_classes(T2)) {
    auto re = abelian::filt(T2, abelian::gen(T2, t));
    ASSERT_TRUE(re.conclusive);
    EXPECT_EQ(re.set, t);
  }
}

TEST(Torsion3, SetupRequiresMatchingParameters) {
  const auto& f = fix();
  auto P3 = orbit::make_params(2, 3);
  auto M3 = orbit::build_arc_model(P3);
  auto F1 = abelian::from_sms(M3, {{3, 5}, {2, 7}, {0, 8}});
  EXPECT_THROW(torsion3::check_setup(f.A, F1), error);
}
