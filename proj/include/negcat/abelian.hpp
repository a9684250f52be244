#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "negcat/errors.hpp"
#include "negcat/orbit.hpp"
#include "negcat/repkit.hpp"

namespace negcat::abelian {

using orbit::arc;
using orbit::c_object;
using class_a = std::set<arc>;
using chain_iv = std::pair<int, int>;  // interval [lo..hi] in chain positions

// Proper abelian subcategory generated by an SMS, realized as representations
// of its Ext-quiver with the arc dictionary kept in sync.
struct ab_model {
  orbit::arc_model arcm;
  std::vector<arc> sms;           // as given
  std::vector<int> order;         // chain position -> sms index
  std::vector<int> orient;        // +1: arrow p -> p+1, -1: arrow p+1 -> p
  repkit::quiver q;               // vertices = chain positions
  std::vector<arc> simples;       // chain position -> arc
  std::vector<chain_iv> intervals;
  std::map<chain_iv, arc> arc_of_iv;
  std::map<arc, chain_iv> iv_of_arc;
  class_a indec_set;

  int k() const { return static_cast<int>(sms.size()); }

  repkit::rep rep_of_iv(const chain_iv& iv) const {
    std::vector<int> id(k());
    for (int i = 0; i < k(); ++i) id[i] = i;
    return repkit::interval_rep(q, id, iv.first, iv.second);
  }

  repkit::rep rep_of(const c_object& x) const {
    repkit::rep out = repkit::zero_rep(q);
    for (const arc& a : x) {
      auto it = iv_of_arc.find(a);
      if (it == iv_of_arc.end()) fail(errc::not_member, "object not in the subcategory");
      out = repkit::direct_sum(out, rep_of_iv(it->second));
    }
    return out;
  }

  chain_iv iv_of_part(const repkit::rep& part) const {
    int lo = -1, hi = -1;
    for (int v = 0; v < k(); ++v)
      if (part.dims[v]) {
        if (lo < 0) lo = v;
        hi = v;
      }
    chain_iv iv{lo, hi};
    if (lo < 0 || !arc_of_iv.count(iv)) fail(errc::model_error, "summand outside the model");
    return iv;
  }

  c_object arcs_of(const repkit::rep& r) const {
    c_object out;
    for (const repkit::rep& part : repkit::decompose(r)) out.push_back(arc_of_iv.at(iv_of_part(part)));
    return orbit::normalized(out);
  }

  // Per-interval table of (subobject parts, quotient parts) over every
  // subrepresentation, computed once and reused by the closure operations.
  struct sq_parts {
    bool conclusive = true;
    std::vector<std::pair<c_object, c_object>> pairs;
  };
  mutable std::map<chain_iv, sq_parts> sq_cache;

  const sq_parts& sub_quot_parts(const chain_iv& iv) const {
    auto it = sq_cache.find(iv);
    if (it != sq_cache.end()) return it->second;
    sq_parts e;
    repkit::rep y = rep_of_iv(iv);
    try {
      for (const repkit::subrep& u : repkit::enumerate_subreps(y))
        e.pairs.push_back({arcs_of(repkit::sub_as_rep(y, u)), arcs_of(repkit::quotient(y, u))});
    } catch (const error& err) {
      if (err.kind() != errc::bound_exceeded) throw;
      e.conclusive = false;
      e.pairs.clear();
    }
    return sq_cache.emplace(iv, std::move(e)).first->second;
  }

  mutable std::map<std::pair<chain_iv, chain_iv>, int> hom_cache;

  int hom_iv(const chain_iv& x, const chain_iv& y) const {
    auto key = std::make_pair(x, y);
    auto it = hom_cache.find(key);
    if (it != hom_cache.end()) return it->second;
    int d = repkit::hom_dim(rep_of_iv(x), rep_of_iv(y));
    return hom_cache.emplace(key, d).first->second;
  }
};

namespace detail {

// Arc-level extension closure of the SMS: repeatedly add middle terms of
// triangles between known arcs, one per orbit-sum Hom component.
inline std::set<arc> sms_closure(const orbit::arc_model& M, const std::vector<arc>& sms) {
  std::set<arc> known(sms.begin(), sms.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<arc> cur(known.begin(), known.end());
    for (const arc& z : cur)
      for (const arc& x : cur) {
        derived::db_indec Z = M.lift(z);
        derived::db_indec SX = M.lift(orbit::shift_arc(M, x, 1));
        for (auto& [i, T] : orbit::hom_components(M.P, Z, SX))
          for (auto& s : derived::cone(M.P.n, Z, T))
            if (known.insert(M.arc_of_db(derived::sigma(s, -1))).second) grew = true;
      }
  }
  return known;
}

// top/socle signature of a thin interval module over the oriented chain
inline std::pair<std::set<int>, std::set<int>> top_soc(const std::vector<int>& orient,
                                                       const chain_iv& iv) {
  std::set<int> top, soc;
  for (int v = iv.first; v <= iv.second; ++v) {
    bool into = false, out = false;
    if (v > iv.first) (orient[v - 1] == +1 ? into : out) = true;
    if (v < iv.second) (orient[v] == +1 ? out : into) = true;
    if (!into) top.insert(v);
    if (!out) soc.insert(v);
  }
  return {top, soc};
}

}  // namespace detail

inline ab_model from_sms(const orbit::arc_model& M, const std::vector<arc>& sms) {
  auto chk = orbit::is_sms(M, sms);
  if (!chk.ok) fail(errc::invalid_argument, "from_sms: not a simple-minded system: " + chk.reason);
  ab_model A;
  A.arcm = M;
  A.sms = sms;
  int k = A.k();
  std::vector<std::vector<int>> ext(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      ext[i][j] = orbit::hom_dim_c(M, {sms[i]}, {orbit::shift_arc(M, sms[j], 1)});
      if (ext[i][j] > 1)
        fail(errc::unsupported_configuration, "from_sms: an Ext space has dimension > 1");
      if (i == j && ext[i][j] != 0)
        fail(errc::unsupported_configuration, "from_sms: a simple has a self-extension");
    }
  // the undirected Ext graph must be a path (type A)
  std::vector<std::vector<int>> adj(k, std::vector<int>(k));
  std::vector<int> deg(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      adj[i][j] = ext[i][j] + ext[j][i];
      if (i < j && adj[i][j] > 1)
        fail(errc::unsupported_configuration, "from_sms: double-bonded Ext-quiver");
    }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) deg[i] += adj[i][j] ? 1 : 0;
  if (k == 1) {
    A.order = {0};
  } else {
    std::vector<int> ends;
    for (int i = 0; i < k; ++i) {
      if (deg[i] > 2) fail(errc::unsupported_configuration, "from_sms: Ext-quiver is not type A");
      if (deg[i] == 1) ends.push_back(i);
    }
    if (ends.size() != 2) fail(errc::unsupported_configuration, "from_sms: Ext-quiver is not a path");
    A.order = {std::min(ends[0], ends[1])};
    while (static_cast<int>(A.order.size()) < k) {
      int last = A.order.back();
      int prev = A.order.size() >= 2 ? A.order[A.order.size() - 2] : -1;
      int next = -1;
      for (int j = 0; j < k; ++j)
        if (j != prev && j != last && adj[last][j]) {
          if (next != -1) fail(errc::unsupported_configuration, "from_sms: Ext-quiver branches");
          next = j;
        }
      if (next == -1) fail(errc::unsupported_configuration, "from_sms: Ext-quiver is disconnected");
      A.order.push_back(next);
    }
  }
  for (int p = 0; p + 1 < k; ++p)
    A.orient.push_back(ext[A.order[p]][A.order[p + 1]] == 1 ? +1 : -1);
  A.q.nv = k;
  for (int p = 0; p + 1 < k; ++p) {
    if (A.orient[p] == +1)
      A.q.arrows.push_back({p, p + 1});
    else
      A.q.arrows.push_back({p + 1, p});
  }
  for (int p = 0; p < k; ++p) A.simples.push_back(sms[A.order[p]]);
  // realization: closure arcs matched to intervals by top/socle signature;
  // the matched set is the indec set (relations exclude the rest)
  std::map<std::pair<std::set<int>, std::set<int>>, chain_iv> iv_by_sig;
  for (int lo = 0; lo < k; ++lo)
    for (int hi = lo; hi < k; ++hi) {
      auto sig = detail::top_soc(A.orient, {lo, hi});
      if (!iv_by_sig.emplace(sig, chain_iv{lo, hi}).second)
        fail(errc::model_error, "from_sms: top/socle signature collision");
    }
  for (const arc& a : detail::sms_closure(M, sms)) {
    std::set<int> top, soc;
    for (int p = 0; p < k; ++p) {
      if (orbit::hom_dim_c(M, {a}, {A.simples[p]})) top.insert(p);
      if (orbit::hom_dim_c(M, {A.simples[p]}, {a})) soc.insert(p);
    }
    auto it = iv_by_sig.find({top, soc});
    if (it == iv_by_sig.end()) fail(errc::model_error, "from_sms: unmatched closure arc");
    if (!A.arc_of_iv.emplace(it->second, a).second)
      fail(errc::model_error, "from_sms: two closure arcs share a signature");
  }
  for (auto& [iv, a] : A.arc_of_iv) {
    for (int lo = iv.first; lo <= iv.second; ++lo)
      for (int hi = lo; hi <= iv.second; ++hi)
        if (!A.arc_of_iv.count({lo, hi}))
          fail(errc::model_error, "from_sms: indec set not closed under subintervals");
    A.iv_of_arc.emplace(a, iv);
    A.indec_set.insert(a);
    A.intervals.push_back(iv);
  }
  std::sort(A.intervals.begin(), A.intervals.end());
  for (int p = 0; p < k; ++p)
    if (A.arc_of_iv.at({p, p}) != A.simples[p])
      fail(errc::model_error, "from_sms: simple realization mismatch");
  // hard invariant: abelian Hom tables must equal triangulated Hom tables
  for (const auto& [iv1, a1] : A.arc_of_iv)
    for (const auto& [iv2, a2] : A.arc_of_iv)
      if (repkit::hom_dim(A.rep_of_iv(iv1), A.rep_of_iv(iv2)) !=
          orbit::hom_dim_c(M, {a1}, {a2}))
        fail(errc::model_error, "from_sms: Hom table mismatch between models");
  return A;
}

inline std::optional<repkit::rep> member(const ab_model& A, const c_object& x) {
  for (const arc& a : x)
    if (!A.indec_set.count(a)) return std::nullopt;
  return A.rep_of(x);
}

namespace detail {

inline void require_class(const ab_model& A, const class_a& S, const char* who) {
  for (const arc& a : S)
    if (!A.indec_set.count(a)) fail(errc::invalid_argument, std::string(who) + ": class member outside the model");
}

inline bool parts_in(const ab_model& A, const repkit::rep& r, const class_a& S) {
  for (const repkit::rep& part : repkit::decompose(r))
    if (!S.count(A.arc_of_iv.at(A.iv_of_part(part)))) return false;
  return true;
}

}  // namespace detail

inline class_a gen(const ab_model& A, const class_a& S) {
  detail::require_class(A, S, "gen");
  std::vector<repkit::rep> gens;
  for (const arc& s : S) gens.push_back(A.rep_of_iv(A.iv_of_arc.at(s)));
  class_a out;
  for (const auto& [iv, a] : A.arc_of_iv) {
    repkit::rep x = A.rep_of_iv(iv);
    if (repkit::trace(gens, x).total_dim() == x.total_dim()) out.insert(a);
  }
  return out;
}

inline class_a sub(const ab_model& A, const class_a& S) {
  detail::require_class(A, S, "sub");
  std::vector<repkit::rep> cogens;
  for (const arc& s : S) cogens.push_back(A.rep_of_iv(A.iv_of_arc.at(s)));
  class_a out;
  for (const auto& [iv, a] : A.arc_of_iv) {
    repkit::rep x = A.rep_of_iv(iv);
    if (repkit::reject(cogens, x).total_dim() == 0) out.insert(a);
  }
  return out;
}

struct class_result {
  class_a set;
  bool conclusive = true;
};

// Indecomposables y with a short exact sequence u >-> y ->> y/u, u in add X,
// y/u in add Z.
inline class_result star_a(const ab_model& A, const class_a& X, const class_a& Z) {
  detail::require_class(A, X, "star_a");
  detail::require_class(A, Z, "star_a");
  auto all_in = [](const c_object& parts, const class_a& S) {
    for (const arc& a : parts)
      if (!S.count(a)) return false;
    return true;
  };
  class_result out;
  for (const chain_iv& iv : A.intervals) {
    const ab_model::sq_parts& tab = A.sub_quot_parts(iv);
    if (!tab.conclusive) {
      out.conclusive = false;
      continue;
    }
    for (const auto& [su, qu] : tab.pairs)
      if (all_in(su, X) && all_in(qu, Z)) {
        out.set.insert(A.arc_of_iv.at(iv));
        break;
      }
  }
  return out;
}

// The class (S)_n of objects with a length-n filtration with quotients in S.
inline class_result layers(const ab_model& A, const class_a& S, int n) {
  detail::require_class(A, S, "layers");
  if (n < 0) fail(errc::invalid_argument, "layers: negative length");
  class_result out;
  if (n == 0) return out;
  out.set = S;
  for (int i = 1; i < n; ++i) {
    class_result next = star_a(A, out.set, S);
    next.conclusive = next.conclusive && out.conclusive;
    out = next;
  }
  return out;
}

// The extension closure <S>: union of the layer classes until they stabilize.
inline class_result filt(const ab_model& A, const class_a& S) {
  detail::require_class(A, S, "filt");
  class_result cur;
  cur.set = S;
  for (;;) {
    class_result next = star_a(A, cur.set, S);
    next.conclusive = next.conclusive && cur.conclusive;
    if (next.set == cur.set) return next;
    cur = next;
  }
}

inline class_a perp_right(const ab_model& A, const class_a& S) {
  detail::require_class(A, S, "perp_right");
  class_a out;
  for (const auto& [iv, a] : A.arc_of_iv) {
    bool ok = true;
    for (const arc& s : S)
      if (A.hom_iv(A.iv_of_arc.at(s), iv) != 0) {
        ok = false;
        break;
      }
    if (ok) out.insert(a);
  }
  return out;
}

inline class_a perp_left(const ab_model& A, const class_a& S) {
  detail::require_class(A, S, "perp_left");
  class_a out;
  for (const auto& [iv, a] : A.arc_of_iv) {
    bool ok = true;
    for (const arc& s : S)
      if (A.hom_iv(iv, A.iv_of_arc.at(s)) != 0) {
        ok = false;
        break;
      }
    if (ok) out.insert(a);
  }
  return out;
}

struct closure_check {
  bool value = false;
  bool conclusive = true;
};

inline closure_check is_torsion_class(const ab_model& A, const class_a& T) {
  detail::require_class(A, T, "is_torsion_class");
  closure_check out;
  // quotient closure
  for (const arc& t : T) {
    const ab_model::sq_parts& tab = A.sub_quot_parts(A.iv_of_arc.at(t));
    if (!tab.conclusive) {
      out.conclusive = false;
      continue;
    }
    for (const auto& [su, qu] : tab.pairs)
      for (const arc& a : qu)
        if (!T.count(a)) return out;
  }
  class_result ext = star_a(A, T, T);
  out.conclusive = out.conclusive && ext.conclusive;
  for (const arc& y : ext.set)
    if (!T.count(y)) return out;
  out.value = true;
  return out;
}

inline closure_check is_torsion_free_class(const ab_model& A, const class_a& F) {
  detail::require_class(A, F, "is_torsion_free_class");
  closure_check out;
  for (const arc& f : F) {
    const ab_model::sq_parts& tab = A.sub_quot_parts(A.iv_of_arc.at(f));
    if (!tab.conclusive) {
      out.conclusive = false;
      continue;
    }
    for (const auto& [su, qu] : tab.pairs)
      for (const arc& a : su)
        if (!F.count(a)) return out;
  }
  class_result ext = star_a(A, F, F);
  out.conclusive = out.conclusive && ext.conclusive;
  for (const arc& y : ext.set)
    if (!F.count(y)) return out;
  out.value = true;
  return out;
}

struct torsion_pair_t {
  class_a torsion;
  class_a free;
};

// Torsion radical: the trace of T in x, the largest subobject lying in T.
inline repkit::subrep radical(const ab_model& A, const class_a& T, const repkit::rep& x) {
  std::vector<repkit::rep> gens;
  for (const arc& t : T) gens.push_back(A.rep_of_iv(A.iv_of_arc.at(t)));
  return repkit::trace(gens, x);
}

inline torsion_pair_t torsion_pair(const ab_model& A, const class_a& T) {
  closure_check chk = is_torsion_class(A, T);
  if (!chk.conclusive) fail(errc::bound_exceeded, "torsion_pair: closure check inconclusive");
  if (!chk.value) fail(errc::not_torsion_class, "torsion_pair: T is not a torsion class");
  torsion_pair_t out{T, perp_right(A, T)};
  for (const arc& t : T)
    for (const arc& f : out.free)
      if (A.hom_iv(A.iv_of_arc.at(t), A.iv_of_arc.at(f)) != 0)
        fail(errc::model_error, "torsion_pair: Hom(T, F) does not vanish");
  // every indec splits as radical >-> x ->> x/radical with the right sides
  for (const chain_iv& iv : A.intervals) {
    repkit::rep x = A.rep_of_iv(iv);
    repkit::subrep r = radical(A, T, x);
    if (!detail::parts_in(A, repkit::sub_as_rep(x, r), T))
      fail(errc::model_error, "torsion_pair: radical not in T");
    if (!detail::parts_in(A, repkit::quotient(x, r), out.free))
      fail(errc::model_error, "torsion_pair: corad not in F");
  }
  return out;
}

}  // namespace negcat::abelian
