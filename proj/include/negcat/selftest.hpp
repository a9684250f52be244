#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "negcat/abelian.hpp"
#include "negcat/derived.hpp"
#include "negcat/errors.hpp"
#include "negcat/orbit.hpp"
#include "negcat/repkit.hpp"
#include "negcat/torsion3.hpp"

namespace negcat::selftest {

using json = nlohmann::ordered_json;
using orbit::arc;

struct suite_result {
  std::string name;
  long checks = 0;
  long failures = 0;
  std::vector<std::string> notes;
};

namespace detail {

inline void tally(suite_result& r, bool ok, const std::string& what) {
  ++r.checks;
  if (!ok) {
    ++r.failures;
    if (r.notes.size() < 20) r.notes.push_back(what);
  }
}

// First SMS in lexicographic order on sorted arc lists.
inline std::vector<arc> find_sms(const orbit::arc_model& M) {
  std::vector<arc> all = orbit::admissible_arcs(M.P);
  std::vector<arc> cur;
  std::function<bool(std::size_t)> go = [&](std::size_t from) -> bool {
    if ((int)cur.size() == M.P.n) return orbit::is_sms(M, cur).ok;
    for (std::size_t i = from; i < all.size(); ++i) {
      bool clash = false;
      for (const arc& c : cur)
        if (orbit::crosses(c, all[i]) || c.a == all[i].a || c.a == all[i].b ||
            c.b == all[i].a || c.b == all[i].b) {
          clash = true;
          break;
        }
      if (clash) continue;
      cur.push_back(all[i]);
      if (go(i + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  if (!go(0)) fail(errc::unsupported_configuration, "no simple-minded collection found");
  return cur;
}

inline std::vector<arc> default_sms(const orbit::arc_model& M, bool second) {
  if (M.P.w == 6 && M.P.n == 5)
    return second ? std::vector<arc>{{23, 29}, {7, 13}, {22, 35}, {1, 14}, {15, 21}}
                  : std::vector<arc>{{28, 34}, {14, 20}, {21, 27}, {1, 7}, {0, 13}};
  if (M.P.w == 2 && M.P.n == 3)
    return second ? std::vector<arc>{{2, 4}, {5, 7}, {0, 8}}
                  : std::vector<arc>{{3, 5}, {2, 7}, {0, 8}};
  std::vector<arc> s = find_sms(M);
  if (second) {
    std::vector<arc> t = s;
    for (arc& x : t) x = orbit::rot(M.P, x, 1);
    if (orbit::is_sms(M, t).ok) return t;
  }
  return s;
}

inline std::vector<abelian::class_a> random_subsets(const abelian::ab_model& A, int count,
                                                    unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<arc> ind(A.indec_set.begin(), A.indec_set.end());
  std::vector<abelian::class_a> out;
  for (int i = 0; i < count; ++i) {
    abelian::class_a s;
    for (const arc& a : ind)
      if (rng() % 2) s.insert(a);
    out.push_back(s);
  }
  return out;
}

}  // namespace detail

// Closed-form morphism-space dimensions against the linear-algebra oracle.
inline suite_result suite_oracle() {
  suite_result r{"oracle"};
  for (int n = 1; n <= 4; ++n) {
    std::vector<derived::db_indec> ind;
    for (int a = 1; a <= n; ++a)
      for (int b = a; b <= n; ++b)
        for (int m = -3; m <= 3; ++m) ind.push_back({m, {a, b}});
    for (const auto& x : ind)
      for (const auto& y : ind) {
        int want = derived::hom_dim_db_oracle(n, x, y);
        int got = derived::hom_dim_db(n, x, y);
        detail::tally(r, got == want,
                      "hom mismatch at n=" + std::to_string(n) + " got " + std::to_string(got) +
                          " want " + std::to_string(want));
      }
  }
  return r;
}

// Calabi-Yau duality: hom(X, Y) == hom(Y, shift(X, -w)) for all indecomposable pairs.
inline suite_result suite_serre(const std::vector<orbit::params>& plist) {
  suite_result r{"serre"};
  for (const auto& P : plist) {
    auto M = orbit::build_arc_model(P);
    std::vector<arc> all = orbit::admissible_arcs(P);
    for (const arc& x : all)
      for (const arc& y : all) {
        int lhs = orbit::hom_dim_c(M, {x}, {y});
        int rhs = orbit::hom_dim_c(M, {y}, orbit::shift_obj(M, {x}, -P.w));
        detail::tally(r, lhs == rhs,
                      "duality mismatch at w=" + std::to_string(P.w) + ",n=" + std::to_string(P.n));
      }
  }
  return r;
}

// Extension-closure laws: layer composition and filtration fixpoints.
inline suite_result suite_star(const std::vector<orbit::params>& plist, unsigned seed = 7) {
  suite_result r{"star"};
  for (const auto& P : plist) {
    auto M = orbit::build_arc_model(P);
    auto A = abelian::from_sms(M, detail::default_sms(M, false));
    abelian::class_a full = A.indec_set;
    for (const auto& S : detail::random_subsets(A, 12, seed)) {
      bool conclusive = true;
      std::vector<abelian::class_a> lay;
      for (int i = 0; i <= 4; ++i) {
        auto lr = abelian::layers(A, S, i);
        conclusive = conclusive && lr.conclusive;
        lay.push_back(lr.set);
      }
      if (!conclusive) continue;
      for (int m = 0; m <= 4; ++m)
        for (int nn = 0; nn + m <= 4; ++nn) {
          auto lhs = abelian::star_a(A, lay[m], lay[nn]);
          if (!lhs.conclusive) continue;
          detail::tally(r, lhs.set == lay[m + nn], "layer composition failed");
        }
      auto f = abelian::filt(A, S);
      if (f.conclusive) {
        auto again = abelian::star_a(A, f.set, f.set);
        if (again.conclusive) detail::tally(r, again.set == f.set, "filtration not a fixpoint");
        detail::tally(r, std::includes(f.set.begin(), f.set.end(), S.begin(), S.end()),
                      "filtration misses a generator");
      }
    }
    auto whole = abelian::filt(A, abelian::class_a(A.sms.begin(), A.sms.end()));
    if (whole.conclusive)
      detail::tally(r, whole.set == full, "simples do not filter every object");
  }
  return r;
}

// Orthogonal-complement identities and the two torsion pairs attached to a subset.
inline suite_result suite_perp(const std::vector<orbit::params>& plist, unsigned seed = 11) {
  suite_result r{"perp"};
  for (const auto& P : plist) {
    auto M = orbit::build_arc_model(P);
    auto A = abelian::from_sms(M, detail::default_sms(M, false));
    for (const auto& S : detail::random_subsets(A, 10, seed)) {
      auto rp = abelian::perp_right(A, S);
      auto lp = abelian::perp_left(A, S);
      detail::tally(r, abelian::perp_right(A, abelian::perp_left(A, rp)) == rp,
                    "right complement not reflexive");
      detail::tally(r, abelian::perp_left(A, abelian::perp_right(A, lp)) == lp,
                    "left complement not reflexive");
      auto gen_s = abelian::gen(A, S);
      auto sub_s = abelian::sub(A, S);
      detail::tally(r, abelian::perp_right(A, gen_s) == rp, "gen changes right complement");
      detail::tally(r, abelian::perp_left(A, sub_s) == lp, "sub changes left complement");
      auto tclass = abelian::filt(A, gen_s);
      if (!tclass.conclusive) continue;
      try {
        auto tp = abelian::torsion_pair(A, tclass.set);
        detail::tally(r, tp.free == rp, "torsion-free part differs from right complement");
      } catch (const error& e) {
        detail::tally(r, false, std::string("torsion pair failed: ") + e.what());
      }
    }
  }
  return r;
}

// Torsion-pair nesting against torsion triples, both directions.
inline suite_result suite_roundtrip(const std::vector<orbit::params>& plist) {
  suite_result r{"roundtrip"};
  for (const auto& P : plist) {
    auto M = orbit::build_arc_model(P);
    auto A = abelian::from_sms(M, detail::default_sms(M, false));
    if (A.indec_set.size() > 8) {
      auto B = abelian::from_sms(M, detail::default_sms(M, true));
      auto td = torsion3::compute_esets(A, B);
      auto pairs = torsion3::phi(td.A, td.E0, td.E1, td.E2);
      auto back = torsion3::phi_inv(td.A, pairs);
      detail::tally(r, back.S0 == td.E0 && back.S1 == td.E1 && back.S2 == td.E2,
                    "triple round trip failed");
      continue;
    }
    auto classes = torsion3::enumerate_torsion_classes(A);
    std::vector<abelian::torsion_pair_t> tps;
    for (const auto& t : classes) tps.push_back(abelian::torsion_pair(A, t));
    long nested = 0;
    for (const auto& p0 : tps)
      for (const auto& p1 : tps) {
        if (!std::includes(p1.torsion.begin(), p1.torsion.end(), p0.torsion.begin(),
                           p0.torsion.end()))
          continue;
        ++nested;
        torsion3::nested_pairs np{
            torsion3::torsion_pair_classes{p0.torsion, p0.free},
            torsion3::torsion_pair_classes{p1.torsion, p1.free}};
        try {
          auto triple = torsion3::phi_inv(A, np);
          auto again = torsion3::phi(A, triple.S0, triple.S1, triple.S2);
          detail::tally(r,
                        again[0].torsion == np[0].torsion && again[0].free == np[0].free &&
                            again[1].torsion == np[1].torsion && again[1].free == np[1].free,
                        "pair round trip failed");
        } catch (const error& e) {
          detail::tally(r, false, std::string("round trip error: ") + e.what());
        }
      }
    detail::tally(r, nested > 0, "no nested pairs found");
  }
  return r;
}

struct report {
  std::vector<suite_result> suites;
  bool pass() const {
    for (const auto& s : suites)
      if (s.failures) return false;
    return true;
  }
  json to_json() const {
    json out;
    out["version"] = 1;
    json arr = json::array();
    for (const auto& s : suites) {
      json e = {{"suite", s.name}, {"checks", s.checks}, {"failures", s.failures}};
      if (!s.notes.empty()) e["notes"] = s.notes;
      arr.push_back(e);
    }
    out["suites"] = arr;
    out["status"] = pass() ? "pass" : "fail";
    return out;
  }
};

inline report run(const std::string& only, const std::optional<orbit::params>& override_p) {
  report rep;
  std::vector<orbit::params> serre_p = {orbit::make_params(6, 5), orbit::make_params(2, 3)};
  std::vector<orbit::params> small_p = {orbit::make_params(2, 3), orbit::make_params(2, 2)};
  std::vector<orbit::params> trip_p = {orbit::make_params(2, 2), orbit::make_params(2, 3),
                                       orbit::make_params(6, 5)};
  if (override_p) serre_p = small_p = trip_p = {*override_p};
  auto want = [&](const std::string& name) { return only.empty() || only == name; };
  if (want("oracle")) rep.suites.push_back(suite_oracle());
  if (want("serre")) rep.suites.push_back(suite_serre(serre_p));
  if (want("star")) rep.suites.push_back(suite_star(small_p));
  if (want("perp")) rep.suites.push_back(suite_perp(small_p));
  if (want("roundtrip")) rep.suites.push_back(suite_roundtrip(trip_p));
  if (rep.suites.empty()) fail(errc::invalid_argument, "unknown suite: " + only);
  return rep;
}

}  // namespace negcat::selftest
