#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <vector>

#include "negcat/errors.hpp"
#include "negcat/repkit.hpp"

namespace negcat::derived {

// Interval module M[a,b] of the linearly oriented A_n quiver 1 -> 2 -> ... -> n.
struct interval {
  int a = 1;
  int b = 1;
  auto operator<=>(const interval&) const = default;
};

// Sigma^shift M[a,b] in D^b(kA_n).
struct db_indec {
  int shift = 0;
  interval iv;
  auto operator<=>(const db_indec&) const = default;
};

using db_object = std::vector<db_indec>;  // kept sorted as canonical form

inline void check_interval(int n, const interval& iv) {
  if (!(1 <= iv.a && iv.a <= iv.b && iv.b <= n))
    fail(errc::invalid_argument, "interval out of range");
}

inline db_object normalized(db_object x) {
  std::sort(x.begin(), x.end());
  return x;
}

inline int hom_dim_db(int n, const db_indec& x, const db_indec& y) {
  check_interval(n, x.iv);
  check_interval(n, y.iv);
  int d = y.shift - x.shift;
  int a = x.iv.a, b = x.iv.b, c = y.iv.a, e = y.iv.b;
  if (d == 0) return (c <= a && a <= e && e <= b) ? 1 : 0;
  if (d == 1) return (a + 1 <= c && c <= b + 1 && b + 1 <= e) ? 1 : 0;
  return 0;
}

inline db_indec sigma(const db_indec& x, int k) { return {x.shift + k, x.iv}; }

inline db_indec tau(int n, const db_indec& x) {
  check_interval(n, x.iv);
  if (x.iv.b < n) return {x.shift, {x.iv.a + 1, x.iv.b + 1}};
  return {x.shift - 1, {1, x.iv.a}};
}

inline db_indec tau_inv(int n, const db_indec& x) {
  check_interval(n, x.iv);
  if (x.iv.a > 1) return {x.shift, {x.iv.a - 1, x.iv.b - 1}};
  return {x.shift + 1, {x.iv.b, n}};
}

inline db_indec nakayama(int n, const db_indec& x) { return sigma(tau(n, x), 1); }

// Mapping cone of the unique nonzero map x -> y; hom_dim_db(x,y) must be 1.
inline db_object cone(int n, const db_indec& x, const db_indec& y) {
  if (hom_dim_db(n, x, y) != 1) fail(errc::no_map, "cone: zero Hom space");
  int d = y.shift - x.shift;
  db_object out;
  if (d == 0) {
    // degree-0 map [a,b] -> [c,e] with c <= a <= e <= b
    int a = x.iv.a, b = x.iv.b, c = y.iv.a, e = y.iv.b;
    if (c <= a - 1) out.push_back({y.shift, {c, a - 1}});
    if (e + 1 <= b) out.push_back({y.shift + 1, {e + 1, b}});
  } else {
    // degree-1 map M[c,e] -> Sigma M[a,b]: an extension class of M[c,e] by
    // M[a,b]; cone = Sigma(middle), middle = M[a,e] + M[c,b] per the classical
    // interval-extension rule (a <= e+1 <= b guaranteed by the Ext rule)
    int c = x.iv.a, e = x.iv.b, a = y.iv.a, b = y.iv.b;
    if (a <= e) out.push_back({y.shift, {a, e}});
    if (c <= b) out.push_back({y.shift, {c, b}});
  }
  return normalized(out);
}

inline int hom_dim_db_obj(int n, const db_object& x, const db_object& y) {
  int out = 0;
  for (const auto& xi : x)
    for (const auto& yj : y) out += hom_dim_db(n, xi, yj);
  return out;
}

// ---- repkit-backed oracle -------------------------------------------------

inline repkit::quiver linear_quiver(int n) {
  repkit::quiver q;
  q.nv = n;
  for (int v = 0; v + 1 < n; ++v) q.arrows.push_back({v, v + 1});
  return q;
}

inline repkit::rep interval_as_rep(int n, const interval& iv) {
  repkit::quiver q = linear_quiver(n);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  return repkit::interval_rep(q, order, iv.a - 1, iv.b - 1);
}

// Independent Hom computation: same shift -> module Hom, shift difference
// 1 -> Ext^1, otherwise 0 (hereditary vanishing).
inline int hom_dim_db_oracle(int n, const db_indec& x, const db_indec& y) {
  int d = y.shift - x.shift;
  if (d < 0 || d > 1) return 0;
  repkit::rep m = interval_as_rep(n, x.iv);
  repkit::rep nn = interval_as_rep(n, y.iv);
  return d == 0 ? repkit::hom_dim(m, nn) : repkit::ext1_dim(m, nn);
}

// ---- cones of matrix maps via complexes of projectives --------------------
//
// Objects of D^b(kA_n) lift to two-term complexes of projectives
// P_{b+1} -> P_a for M[a,b] (P_i = M[i,n]); chain maps between sums are
// matrices over Hom(P_i, P_j) (each at most one-dimensional), and mapping
// cones reduce to stacking.  Homology of the result is computed vertexwise
// and split into interval stalks, which is valid over a hereditary algebra.

struct proj_complex {
  // terms[d] = list of projective indices P_i sitting in cohomological
  // degree (d + deg_offset); diff[d] : terms[d] -> terms[d+1], entries in F2
  // (a nonzero entry i -> j requires j <= i, i.e. P_i -> P_j exists)
  int deg_offset = 0;
  std::vector<std::vector<int>> terms;
  std::vector<repkit::f2mat> diff;
};

// M[a,b] placed in cohomological degree -shift: complex P_{b+1} -> P_a with
// P_a in degree -shift and P_{b+1} one step left.
inline proj_complex lift_indec(int n, const db_indec& x) {
  proj_complex c;
  c.deg_offset = -x.shift - 1;
  if (x.iv.b + 1 <= n) {
    c.terms = {{x.iv.b + 1}, {x.iv.a}};
    c.diff = {repkit::f2mat(1, 1)};
    c.diff[0].set(0, 0, true);
  } else {
    c.terms = {{}, {x.iv.a}};
    c.diff = {repkit::f2mat(1, 0)};
  }
  return c;
}

inline int hom_proj(int i, int j) { return j <= i ? 1 : 0; }  // Hom(P_i, P_j)

// Direct sum of lifted indecs, tracking where each summand's terms landed.
inline proj_complex lift_object(int n, const db_object& xs, int& lo_deg, int& hi_deg) {
  lo_deg = 0;
  hi_deg = 0;
  for (const auto& x : xs) {
    lo_deg = std::min(lo_deg, -x.shift - 1);
    hi_deg = std::max(hi_deg, -x.shift);
  }
  proj_complex out;
  out.deg_offset = lo_deg;
  int len = hi_deg - lo_deg + 1;
  out.terms.assign(len, {});
  std::vector<std::vector<std::pair<int, int>>> slots(len);  // (summand, local)
  for (std::size_t s = 0; s < xs.size(); ++s) {
    proj_complex c = lift_indec(n, xs[s]);
    for (int d = 0; d < 2; ++d) {
      int g = c.deg_offset + d - lo_deg;
      for (std::size_t t = 0; t < c.terms[d].size(); ++t) {
        out.terms[g].push_back(c.terms[d][t]);
        slots[g].push_back({static_cast<int>(s), d});
      }
    }
  }
  out.diff.clear();
  for (int g = 0; g + 1 < len; ++g) {
    repkit::f2mat m(static_cast<int>(out.terms[g + 1].size()), static_cast<int>(out.terms[g].size()));
    for (std::size_t cc = 0; cc < out.terms[g].size(); ++cc)
      for (std::size_t rr = 0; rr < out.terms[g + 1].size(); ++rr)
        if (slots[g][cc].first == slots[g + 1][rr].first && slots[g][cc].second == 0 &&
            slots[g + 1][rr].second == 1)
          m.set(static_cast<int>(rr), static_cast<int>(cc), true);
    out.diff.push_back(m);
  }
  return out;
}

// Evaluate a complex of projectives at the quiver reps and split homology
// into interval stalks.
inline db_object homology_split(int n, const proj_complex& c) {
  repkit::quiver q = linear_quiver(n);
  // all terms and maps are thin over the projectives; work vertexwise
  int len = static_cast<int>(c.terms.size());
  db_object out;
  for (int d = 0; d < len; ++d) {
    // homology at degree d: ker(diff[d]) / im(diff[d-1]) vertexwise
    std::vector<std::vector<repkit::row_t>> ker(n), im(n);
    for (int v = 1; v <= n; ++v) {
      // indices of summands of terms[d] containing vertex v (P_i has support i..n)
      auto alive = [&](const std::vector<int>& t, int vv) {
        std::vector<int> idx;
        for (std::size_t s = 0; s < t.size(); ++s)
          if (t[s] <= vv) idx.push_back(static_cast<int>(s));
        return idx;
      };
      std::vector<int> cur = alive(c.terms[d], v);
      std::vector<int> nxt = d + 1 < len ? alive(c.terms[d + 1], v) : std::vector<int>{};
      std::vector<int> prv = d > 0 ? alive(c.terms[d - 1], v) : std::vector<int>{};
      // matrix of diff[d] restricted to vertex v
      repkit::f2mat md(static_cast<int>(nxt.size()), static_cast<int>(cur.size()));
      if (d < len - 1)
        for (std::size_t rr = 0; rr < nxt.size(); ++rr)
          for (std::size_t cc = 0; cc < cur.size(); ++cc)
            md.set(static_cast<int>(rr), static_cast<int>(cc), c.diff[d].get(nxt[rr], cur[cc]));
      repkit::f2mat mp(static_cast<int>(cur.size()), static_cast<int>(prv.size()));
      if (d > 0)
        for (std::size_t rr = 0; rr < cur.size(); ++rr)
          for (std::size_t cc = 0; cc < prv.size(); ++cc)
            mp.set(static_cast<int>(rr), static_cast<int>(cc), c.diff[d - 1].get(cur[rr], prv[cc]));
      ker[v - 1] = repkit::nullspace(md);
      std::vector<repkit::row_t> ims;
      for (int cc = 0; cc < mp.cols; ++cc) ims.push_back(mp.apply(repkit::row_t{1} << cc));
      im[v - 1] = repkit::rref(ims);
    }
    // homology rep: quotient of ker by im, with arrow maps induced from the
    // projective structure (arrow v -> v+1 acts as the identity inclusion on
    // each P_i summand alive at both vertices)
    repkit::rep kr = repkit::zero_rep(q);
    kr.dims.resize(n);
    // build kernel as a rep: basis of ker at vertex v expressed over alive sums;
    // arrow action: a kernel vector at v maps to the same summand-coordinates at v+1
    // (P_i's internal map is identity on support)
    std::vector<std::vector<repkit::row_t>> kbasis(n);
    for (int v = 0; v < n; ++v) kbasis[v] = ker[v];
    for (int v = 0; v < n; ++v) kr.dims[v] = static_cast<int>(kbasis[v].size());
    kr.mats.clear();
    for (std::size_t e = 0; e < q.arrows.size(); ++e) {
      auto [s, t] = q.arrows[e];
      // coordinates: alive-index sets can grow from v to v+1; a vector over
      // alive(s) reinterprets over alive(t) by index alignment
      auto alive_idx = [&](int vv) {
        std::vector<int> idx;
        for (std::size_t ss = 0; ss < c.terms[d].size(); ++ss)
          if (c.terms[d][ss] <= vv + 1) idx.push_back(static_cast<int>(ss));
        return idx;
      };
      std::vector<int> as = alive_idx(s), at = alive_idx(t);
      std::vector<int> pos_in_t(c.terms[d].size(), -1);
      for (std::size_t i2 = 0; i2 < at.size(); ++i2) pos_in_t[at[i2]] = static_cast<int>(i2);
      repkit::f2mat am(kr.dims[t], kr.dims[s]);
      for (int cc = 0; cc < kr.dims[s]; ++cc) {
        repkit::row_t v2 = kbasis[s][cc];
        repkit::row_t lifted = 0;
        for (std::size_t i2 = 0; i2 < as.size(); ++i2)
          if ((v2 >> i2) & 1) lifted |= repkit::row_t{1} << pos_in_t[as[i2]];
        // express lifted in kbasis[t] modulo im[t]: reduce both sides, then solve
        auto reduce = [&](repkit::row_t x) {
          for (repkit::row_t b2 : im[t]) {
            repkit::row_t low = b2 & -b2;
            if (x & low) x ^= b2;
          }
          return x;
        };
        repkit::row_t target = reduce(lifted);
        std::vector<repkit::row_t> rows2(kbasis[t].size()), coef2(kbasis[t].size());
        for (std::size_t i2 = 0; i2 < kbasis[t].size(); ++i2) {
          rows2[i2] = reduce(kbasis[t][i2]);
          coef2[i2] = repkit::row_t{1} << i2;
        }
        repkit::row_t sol = 0;
        for (std::size_t i2 = 0; i2 < rows2.size(); ++i2) {
          if (!rows2[i2]) continue;
          repkit::row_t low = rows2[i2] & -rows2[i2];
          for (std::size_t j2 = 0; j2 < rows2.size(); ++j2)
            if (j2 != i2 && (rows2[j2] & low)) {
              rows2[j2] ^= rows2[i2];
              coef2[j2] ^= coef2[i2];
            }
          if (target & low) {
            target ^= rows2[i2];
            sol ^= coef2[i2];
          }
        }
        if (target) fail(errc::invalid_argument, "homology arrow escapes kernel span");
        for (int rr = 0; rr < kr.dims[t]; ++rr)
          if ((sol >> rr) & 1) am.set(rr, cc, true);
      }
      kr.mats.push_back(am);
    }
    // now quotient the kernel rep by the image subrep (expressed in kernel coords)
    repkit::subrep imsub;
    imsub.basis.resize(n);
    for (int v = 0; v < n; ++v) {
      std::vector<repkit::row_t> coords;
      for (repkit::row_t ivec : im[v]) {
        // express ivec in kbasis[v] (image lies inside kernel)
        std::vector<repkit::row_t> rows2(kbasis[v].size()), coef2(kbasis[v].size());
        for (std::size_t i2 = 0; i2 < kbasis[v].size(); ++i2) {
          rows2[i2] = kbasis[v][i2];
          coef2[i2] = repkit::row_t{1} << i2;
        }
        repkit::row_t target = ivec, sol = 0;
        for (std::size_t i2 = 0; i2 < rows2.size(); ++i2) {
          if (!rows2[i2]) continue;
          repkit::row_t low = rows2[i2] & -rows2[i2];
          for (std::size_t j2 = 0; j2 < rows2.size(); ++j2)
            if (j2 != i2 && (rows2[j2] & low)) {
              rows2[j2] ^= rows2[i2];
              coef2[j2] ^= coef2[i2];
            }
          if (target & low) {
            target ^= rows2[i2];
            sol ^= coef2[i2];
          }
        }
        if (target) fail(errc::invalid_argument, "image not inside kernel");
        coords.push_back(sol);
      }
      imsub.basis[v] = repkit::rref(coords);
    }
    repkit::rep hq = repkit::quotient(kr, imsub);
    for (const repkit::rep& part : repkit::decompose(hq, 64)) {
      // part is an interval rep over the linear quiver; read off [a,b]
      int a = -1, b = -1;
      for (int v = 0; v < n; ++v)
        if (part.dims[v]) {
          if (a < 0) a = v + 1;
          b = v + 1;
        }
      out.push_back({-(d + c.deg_offset), {a, b}});
    }
  }
  return normalized(out);
}

// Cone of a chain map f : X -> Y between lifted objects, given per-summand
// components f[i][j] in Hom_D(X_i, Y_j) marked by a bit (dimensions here are
// 0/1).  Shift-difference-0 components lift to the two commuting squares of
// the projective presentations; shift-difference-1 components (Ext classes)
// lift to the single map P_{b+1} -> P_c, which is never null-homotopic since
// Hom(P_a, P_c) = 0 when c > a.
inline db_object cone_matrix(int n, const db_object& xs, const db_object& ys,
                             const std::vector<std::vector<bool>>& comp) {
  int xlo, xhi, ylo, yhi;
  proj_complex cx = lift_object(n, xs, xlo, xhi);
  proj_complex cy = lift_object(n, ys, ylo, yhi);
  // chain map: for each pair with comp set, a degree-0 map M[a,b] -> M[c,e]
  // (c <= a <= e <= b) lifts to P_a -> P_c and P_{b+1} -> P_{e+1}
  // locate summand slot positions in the lifted complexes
  auto locate = [&](const db_object& obj, const proj_complex& pc) {
    // slot (s, part): degree index and position within pc.terms
    std::vector<std::array<std::pair<int, int>, 2>> loc(obj.size());
    std::vector<std::size_t> cursor(pc.terms.size(), 0);
    for (std::size_t s = 0; s < obj.size(); ++s) {
      proj_complex one = lift_indec(n, obj[s]);
      for (int dpart = 0; dpart < 2; ++dpart) {
        int g = one.deg_offset + dpart - pc.deg_offset;
        if (one.terms[dpart].empty()) {
          loc[s][dpart] = {-1, -1};
          continue;
        }
        loc[s][dpart] = {g, static_cast<int>(cursor[g])};
        ++cursor[g];
      }
    }
    return loc;
  };
  auto locx = locate(xs, cx);
  auto locy = locate(ys, cy);
  // build chain map matrices per degree
  int len_x = static_cast<int>(cx.terms.size());
  int len_y = static_cast<int>(cy.terms.size());
  int lo = std::min(cx.deg_offset, cy.deg_offset);
  int hi = std::max(cx.deg_offset + len_x, cy.deg_offset + len_y) - 1;
  auto xterms = [&](int g) -> const std::vector<int>* {
    int d = g - cx.deg_offset;
    return (d >= 0 && d < len_x) ? &cx.terms[d] : nullptr;
  };
  auto yterms = [&](int g) -> const std::vector<int>* {
    int d = g - cy.deg_offset;
    return (d >= 0 && d < len_y) ? &cy.terms[d] : nullptr;
  };
  std::vector<repkit::f2mat> fmats;  // per global degree g in [lo..hi]
  for (int g = lo; g <= hi; ++g) {
    const auto* xt = xterms(g);
    const auto* yt = yterms(g);
    repkit::f2mat m(yt ? static_cast<int>(yt->size()) : 0, xt ? static_cast<int>(xt->size()) : 0);
    fmats.push_back(m);
  }
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (!comp[i][j]) continue;
      if (hom_dim_db(n, xs[i], ys[j]) != 1) fail(errc::no_map, "cone_matrix: zero component");
      int d = ys[j].shift - xs[i].shift;
      if (d == 0) {
        // P_a -> P_c part (degree -shift), P_{b+1} -> P_{e+1} part (one left)
        auto [gx1, px1] = locx[i][1];
        auto [gy1, py1] = locy[j][1];
        int abs_x1 = gx1 + cx.deg_offset;
        int abs_y1 = gy1 + cy.deg_offset;
        if (abs_x1 != abs_y1) fail(errc::invalid_argument, "cone_matrix: degree mismatch");
        fmats[abs_x1 - lo].set(py1, px1, true);
        auto [gx0, px0] = locx[i][0];
        auto [gy0, py0] = locy[j][0];
        if (gx0 >= 0 && gy0 >= 0) {
          int abs_x0 = gx0 + cx.deg_offset;
          fmats[abs_x0 - lo].set(py0, px0, true);
        }
      } else {
        // Ext-class component: P_{b+1} of the source hits P_c of the target
        auto [gx0, px0] = locx[i][0];
        auto [gy1, py1] = locy[j][1];
        if (gx0 < 0) fail(errc::no_map, "cone_matrix: Ext component without syzygy");
        int abs_x0 = gx0 + cx.deg_offset;
        int abs_y1 = gy1 + cy.deg_offset;
        if (abs_x0 != abs_y1) fail(errc::invalid_argument, "cone_matrix: degree mismatch");
        fmats[abs_x0 - lo].set(py1, px0, true);
      }
    }
  // cone complex: C^g = Y^g  (+)  X^{g+1}, differential [[dY, f^{g+1}], [0, -dX]]
  proj_complex cone_c;
  cone_c.deg_offset = lo - 1;
  int clen = hi - lo + 2;
  cone_c.terms.assign(clen, {});
  for (int g = lo - 1; g <= hi; ++g) {
    std::vector<int>& t = cone_c.terms[g - (lo - 1)];
    if (const auto* yt = yterms(g)) t.insert(t.end(), yt->begin(), yt->end());
    if (const auto* xt = xterms(g + 1)) t.insert(t.end(), xt->begin(), xt->end());
  }
  cone_c.diff.clear();
  for (int g = lo - 1; g < hi; ++g) {
    int rows = static_cast<int>(cone_c.terms[g + 1 - (lo - 1)].size());
    int cols = static_cast<int>(cone_c.terms[g - (lo - 1)].size());
    repkit::f2mat m(rows, cols);
    const auto* ytc = yterms(g);
    const auto* ytn = yterms(g + 1);
    const auto* xtc = xterms(g + 1);
    const auto* xtn = xterms(g + 2);
    int ync = ytc ? static_cast<int>(ytc->size()) : 0;
    int ynn = ytn ? static_cast<int>(ytn->size()) : 0;
    int xnc = xtc ? static_cast<int>(xtc->size()) : 0;
    // dY block
    if (ytc && ytn) {
      int d = g - cy.deg_offset;
      for (int r = 0; r < ynn; ++r)
        for (int c2 = 0; c2 < ync; ++c2) m.set(r, c2, cy.diff[d].get(r, c2));
    }
    // f block: X^{g+1} -> Y^{g+1}
    if (xtc && ytn) {
      const repkit::f2mat& fb = fmats[g + 1 - lo];
      for (int r = 0; r < ynn; ++r)
        for (int c2 = 0; c2 < xnc; ++c2) m.set(r, ync + c2, fb.get(r, c2));
    }
    // -dX block (sign irrelevant over F2)
    if (xtc && xtn) {
      int d = g + 1 - cx.deg_offset;
      for (std::size_t r = 0; r < xtn->size(); ++r)
        for (int c2 = 0; c2 < xnc; ++c2) m.set(ynn + static_cast<int>(r), ync + c2, cx.diff[d].get(static_cast<int>(r), c2));
    }
    cone_c.diff.push_back(m);
  }
  return homology_split(n, cone_c);
}

}  // namespace negcat::derived
