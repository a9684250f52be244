#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "negcat/derived.hpp"
#include "negcat/errors.hpp"

namespace negcat::orbit {

struct params {
  int w = 0;
  int n = 0;
  int N = 0;
  auto operator<=>(const params&) const = default;
};

inline params make_params(int w, int n) {
  if (w < 1 || n < 1) fail(errc::invalid_argument, "make_params: w and n must be positive");
  int N = (w + 1) * (n + 1) - 2;
  if (N < 4) fail(errc::invalid_argument, "make_params: polygon has no proper diagonals");
  return {w, n, N};
}

// Diagonal of the N-gon with corners 0..N-1 anticlockwise, stored with a < b.
struct arc {
  int a = 0;
  int b = 0;
  auto operator<=>(const arc&) const = default;
};

using c_object = std::vector<arc>;  // multiset, kept sorted

inline c_object normalized(c_object x) {
  std::sort(x.begin(), x.end());
  return x;
}

inline bool is_admissible(const params& P, const arc& x) {
  if (!(0 <= x.a && x.a < x.b && x.b <= P.N - 1)) return false;
  if ((x.b - x.a + 1) % (P.w + 1) != 0) return false;
  int g = x.b - x.a;
  return g != 1 && g != P.N - 1;  // proper diagonal, not a polygon edge
}

inline std::vector<arc> admissible_arcs(const params& P) {
  std::vector<arc> out;
  for (int a = 0; a < P.N; ++a)
    for (int b = a + 1; b < P.N; ++b)
      if (is_admissible(P, {a, b})) out.push_back({a, b});
  return out;
}

inline bool crosses(const arc& x, const arc& y) {
  return (x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b);
}

inline bool shares_endpoint(const arc& x, const arc& y) {
  return x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b;
}

inline arc rot(const params& P, const arc& x, int k) {
  int a = ((x.a + k) % P.N + P.N) % P.N;
  int b = ((x.b + k) % P.N + P.N) % P.N;
  if (a > b) std::swap(a, b);
  return {a, b};
}

// F = Sigma^{w+1} tau, the orbit functor.
inline derived::db_indec f_map(const params& P, const derived::db_indec& x) {
  return derived::sigma(derived::tau(P.n, x), P.w + 1);
}

inline derived::db_indec f_inv(const params& P, const derived::db_indec& x) {
  return derived::tau_inv(P.n, derived::sigma(x, -(P.w + 1)));
}

using orbit_key = std::pair<int, int>;  // (interval class l, shift residue r)

class arc_model {
 public:
  params P;
  struct class_info {
    int L = 0;  // tau-cycle length of the interval shape
    int K = 0;  // F-shift period: L(w+1) - wraps
  };
  std::map<int, class_info> classes;
  std::map<orbit_key, arc> arc_of_key;
  std::map<arc, orbit_key> key_of_arc;

  bool has_arc(const arc& x) const { return key_of_arc.count(x) != 0; }

  orbit_key key_of(const arc& x) const {
    auto it = key_of_arc.find(x);
    if (it == key_of_arc.end()) fail(errc::invalid_argument, "arc not in the model");
    return it->second;
  }

  // Canonical lift Sigma^r M[1,l] of an arc's orbit class.
  derived::db_indec lift(const arc& x) const {
    auto [l, r] = key_of(x);
    return {r, {1, l}};
  }

  orbit_key reduce(const derived::db_indec& x) const {
    derived::db_indec y = x;
    for (int step = 0; step <= 2 * (P.n + 2); ++step) {
      if (y.iv.a == 1 && 2 * y.iv.b <= P.n + 1) {
        int K = classes.at(y.iv.b).K;
        return {y.iv.b, ((y.shift % K) + K) % K};
      }
      y = f_map(P, y);
    }
    fail(errc::model_convention, "orbit reduction found no canonical interval");
  }

  arc arc_of_db(const derived::db_indec& x) const { return arc_of_key.at(reduce(x)); }
};

namespace detail {

inline std::map<int, arc_model::class_info> class_table(const params& P) {
  std::map<int, arc_model::class_info> out;
  for (int l = 1; 2 * l <= P.n + 1; ++l) {
    derived::db_indec x{0, {1, l}};
    int L = 0, wraps = 0;
    do {
      if (x.iv.b == P.n) ++wraps;
      x = derived::tau(P.n, x);
      ++L;
    } while (x.iv != derived::interval{1, l});
    out[l] = {L, L * (P.w + 1) - wraps};
  }
  return out;
}

}  // namespace detail

inline int hom_dim_c_one(const arc_model& M, const arc& x, const arc& y) {
  derived::db_indec X = M.lift(x);
  derived::db_indec Y = M.lift(y);
  while (Y.shift >= X.shift) Y = f_inv(M.P, Y);
  while (Y.shift < X.shift) Y = f_map(M.P, Y);
  int tot = 0;
  while (Y.shift <= X.shift + 1) {
    tot += derived::hom_dim_db(M.P.n, X, Y);
    Y = f_map(M.P, Y);
  }
  return tot;
}

inline int hom_dim_c(const arc_model& M, const c_object& x, const c_object& y) {
  int tot = 0;
  for (const arc& xi : x)
    for (const arc& yj : y) tot += hom_dim_c_one(M, xi, yj);
  return tot;
}

inline arc shift_arc(const arc_model& M, const arc& x, int k) {
  if (!M.has_arc(x)) fail(errc::invalid_argument, "shift_arc: arc not in the model");
  return rot(M.P, x, k);
}

inline arc tau_arc(const arc_model& M, const arc& x) {
  if (!M.has_arc(x)) fail(errc::invalid_argument, "tau_arc: arc not in the model");
  return rot(M.P, x, -(M.P.w + 1));
}

inline c_object shift_obj(const arc_model& M, const c_object& x, int k) {
  c_object out;
  for (const arc& xi : x) out.push_back(shift_arc(M, xi, k));
  return normalized(out);
}

// Builds the orbit <-> arc bijection from the seed closed form and verifies
// every structural invariant; any failure is a convention error.
inline arc_model build_arc_model(const params& P) {
  arc_model M;
  M.P = P;
  M.classes = detail::class_table(P);
  std::vector<arc> arcs = admissible_arcs(P);
  if (static_cast<int>(arcs.size()) * 2 != P.N * P.n)
    fail(errc::model_convention, "arc count does not match N*n/2");
  long long orbit_count = 0;
  for (auto& [l, ci] : M.classes) orbit_count += ci.K;
  if (orbit_count * 2 != static_cast<long long>(P.N) * P.n)
    fail(errc::model_convention, "orbit count does not match arc count");
  for (auto& [l, ci] : M.classes) {
    int lo = ((P.w - (P.w + 1) * l + 1) % P.N + P.N) % P.N;
    arc seed = lo < P.w ? arc{lo, P.w} : arc{P.w, lo};
    if (!is_admissible(P, seed)) fail(errc::model_convention, "seed arc not admissible");
    for (int r = 0; r < ci.K; ++r) {
      arc a = rot(P, seed, r);
      orbit_key k{l, r};
      if (!M.key_of_arc.emplace(a, k).second)
        fail(errc::model_convention, "orbit table is not injective");
      M.arc_of_key.emplace(k, a);
    }
  }
  if (M.key_of_arc.size() != arcs.size())
    fail(errc::model_convention, "orbit table is not a bijection onto the arcs");
  for (const arc& a : arcs)
    if (!M.key_of_arc.count(a)) fail(errc::model_convention, "arc missing from the orbit table");
  // transport checks: Sigma and tau act on arcs through the table as the
  // calibrated rotations; F acts freely on representatives
  for (const auto& [a, k] : M.key_of_arc) {
    derived::db_indec X = M.lift(a);
    if (M.arc_of_db(derived::sigma(X, 1)) != rot(P, a, 1))
      fail(errc::model_convention, "sigma transport mismatch");
    if (M.arc_of_db(derived::tau(P.n, X)) != rot(P, a, -(P.w + 1)))
      fail(errc::model_convention, "tau transport mismatch");
    if (f_map(P, X) == X) fail(errc::model_convention, "F-action is not free");
  }
  return M;
}

struct sms_check {
  bool ok = false;
  std::string reason;
};

inline sms_check is_sms(const arc_model& M, const std::vector<arc>& c) {
  for (const arc& x : c)
    if (!M.has_arc(x)) fail(errc::invalid_argument, "is_sms: arc not in the model");
  std::set<arc> uniq(c.begin(), c.end());
  if (static_cast<int>(uniq.size()) != M.P.n)
    return {false, "size: expected exactly n distinct arcs"};
  std::vector<arc> v(uniq.begin(), uniq.end());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (crosses(v[i], v[j])) return {false, "crossing: two arcs cross"};
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (shares_endpoint(v[i], v[j])) return {false, "endpoint: two arcs share an endpoint"};
  return {true, ""};
}

// Indices i with hom_dim_db(Z, F^i T) = 1 together with the translate F^i T.
inline std::vector<std::pair<int, derived::db_indec>> hom_components(const params& P,
                                                                     const derived::db_indec& Z,
                                                                     const derived::db_indec& T0) {
  derived::db_indec T = T0;
  int i = 0;
  while (T.shift >= Z.shift) {
    T = f_inv(P, T);
    --i;
  }
  while (T.shift < Z.shift) {
    T = f_map(P, T);
    ++i;
  }
  std::vector<std::pair<int, derived::db_indec>> out;
  while (T.shift <= Z.shift + 1) {
    if (derived::hom_dim_db(P.n, Z, T)) out.push_back({i, T});
    T = f_map(P, T);
    ++i;
  }
  return out;
}

// Middle terms y of triangles x -> y -> z -> Sigma x, one per connecting map.
inline std::vector<c_object> middle_terms(const arc_model& M, const arc& x, const arc& z) {
  const params& P = M.P;
  derived::db_indec Z = M.lift(z);
  derived::db_indec SX = M.lift(shift_arc(M, x, 1));
  auto comps = hom_components(P, Z, SX);
  if (comps.empty()) fail(errc::no_extension, "middle_terms: connecting Hom space is zero");
  if (comps.size() >= 2)
    fail(errc::multi_component, "middle_terms: connecting Hom spans several orbit components");
  std::vector<c_object> out;
  for (auto& [i, T] : comps) {
    derived::db_object y = derived::cone(P.n, Z, T);  // cone(delta), then shift down
    c_object ys;
    for (auto& s : y) ys.push_back(M.arc_of_db(derived::sigma(s, -1)));
    ys = normalized(ys);
    if (std::find(out.begin(), out.end(), ys) == out.end()) out.push_back(ys);
  }
  return out;
}

enum class star_status { witness, absent, inconclusive };

struct star_result {
  star_status status = star_status::absent;
  c_object u, v;
  std::vector<std::pair<arc, arc>> map_components;  // (u summand, x summand)
  std::string note;
};

// Searches for a triangle u -> x -> v -> Sigma u with u in add U, v in add V.
inline star_result star_membership(const arc_model& M, const c_object& x,
                                   const std::set<arc>& U, const std::set<arc>& V) {
  const params& P = M.P;
  auto all_in = [](const c_object& obj, const std::set<arc>& S) {
    for (const arc& a : obj)
      if (!S.count(a)) return false;
    return true;
  };
  if (x.empty() || all_in(x, U)) return {star_status::witness, x, {}, {}, "degenerate: x in add U"};
  if (all_in(x, V)) return {star_status::witness, {}, x, {}, "degenerate: x in add V"};

  // candidate u-summands: elements of U with a nonzero map to x
  std::vector<arc> cand;
  for (const arc& u : U)
    if (hom_dim_c(M, {u}, x) > 0) cand.push_back(u);
  bool sound = true;
  std::string note;
  // F2 coordinates of Hom(u_cand, x): one edge per one-dimensional orbit-sum
  // component; a pair whose Hom spans several components leaves maps outside
  // this enumeration, which downgrades a miss to inconclusive
  struct edge {
    int ui = 0, xj = 0, k = 0;
  };
  std::vector<edge> edges;
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) {
      auto comps = hom_components(P, M.lift(cand[i]), M.lift(x[j]));
      if (comps.size() >= 2) {
        sound = false;
        note = "a Hom space spans several orbit components";
        continue;
      }
      for (auto& [k, T] : comps)
        edges.push_back({static_cast<int>(i), static_cast<int>(j), k});
    }
  int bound = P.n * P.n;  // composition-length bound: n * (SMS size)
  if (static_cast<int>(edges.size()) > bound || edges.size() > 20)
    return {star_status::inconclusive, {}, {}, {}, "Hom coordinate count exceeds the search bound"};
  // a connecting map is a nonzero F2 vector over the edges; its cone is
  // computed from an aligned lift of the chosen components
  for (std::uint32_t mask = 1; mask < (1u << edges.size()); ++mask) {
    std::vector<edge> chosen;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if ((mask >> e) & 1) chosen.push_back(edges[e]);
    std::vector<int> pick;  // candidate indices used by the chosen edges
    for (auto& e : chosen)
      if (std::find(pick.begin(), pick.end(), e.ui) == pick.end()) pick.push_back(e.ui);
    std::sort(pick.begin(), pick.end());
    auto pos_of = [&](int ui) {
      return static_cast<int>(std::find(pick.begin(), pick.end(), ui) - pick.begin());
    };
    // align lifts: source summand i gets F^{a_i}, target j gets F^{b_j}; a
    // chosen edge (i,j,k) needs b_j - a_i = k; solve potentials per component
    std::vector<int> apot(pick.size(), 0), bpot(x.size(), 0);
    std::vector<bool> aset(pick.size(), false), bset(x.size(), false);
    bool consistent = true;
    for (std::size_t start = 0; start < pick.size() && consistent; ++start) {
      if (aset[start]) continue;
      aset[start] = true;
      apot[start] = 0;
      bool changed = true;
      while (changed && consistent) {
        changed = false;
        for (auto& e : chosen) {
          int pi = pos_of(e.ui);
          if (aset[pi] && !bset[e.xj]) {
            bset[e.xj] = true;
            bpot[e.xj] = apot[pi] + e.k;
            changed = true;
          } else if (!aset[pi] && bset[e.xj]) {
            aset[pi] = true;
            apot[pi] = bpot[e.xj] - e.k;
            changed = true;
          } else if (aset[pi] && bset[e.xj] && bpot[e.xj] != apot[pi] + e.k)
            consistent = false;
        }
      }
    }
    if (!consistent) {
      sound = false;
      note = "a connecting map admits no aligned lift";
      continue;
    }
    // build the lifted matrix map and take its cone
    derived::db_object xs_lift, ys_lift;
    auto translate = [&](derived::db_indec L, int t) {
      for (int s = 0; s < t; ++s) L = f_map(P, L);
      for (int s = 0; s > t; --s) L = f_inv(P, L);
      return L;
    };
    for (std::size_t pi = 0; pi < pick.size(); ++pi)
      xs_lift.push_back(translate(M.lift(cand[pick[pi]]), apot[pi]));
    for (std::size_t j = 0; j < x.size(); ++j)
      ys_lift.push_back(translate(M.lift(x[j]), bpot[j]));
    std::vector<std::vector<bool>> cm(xs_lift.size(), std::vector<bool>(ys_lift.size(), false));
    for (auto& e : chosen) cm[pos_of(e.ui)][e.xj] = true;
    derived::db_object cz;
    try {
      cz = derived::cone_matrix(P.n, xs_lift, ys_lift, cm);
    } catch (const error&) {
      sound = false;
      note = "cone of an aligned lift failed";
      continue;
    }
    c_object v;
    for (auto& s : cz) v.push_back(M.arc_of_db(s));
    v = normalized(v);
    if (all_in(v, V)) {
      c_object u;
      for (int pi : pick) u.push_back(cand[pi]);
      std::vector<std::pair<arc, arc>> mc;
      for (auto& e : chosen) mc.push_back({cand[e.ui], x[e.xj]});
      return {star_status::witness, normalized(u), v, mc, ""};
    }
  }
  if (!sound) return {star_status::inconclusive, {}, {}, {}, note};
  return {star_status::absent, {}, {}, {}, ""};
}

}  // namespace negcat::orbit
