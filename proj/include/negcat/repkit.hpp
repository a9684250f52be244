#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "negcat/errors.hpp"

namespace negcat::repkit {

using row_t = std::uint64_t;

// Dense matrix over F2; rows stored as bitmasks, entry (r,c) = bit c of row r.
struct f2mat {
  int rows = 0;
  int cols = 0;
  std::vector<row_t> data;

  f2mat() = default;
  f2mat(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r), 0) {}

  static f2mat identity(int n) {
    f2mat m(n, n);
    for (int i = 0; i < n; ++i) m.data[i] = row_t{1} << i;
    return m;
  }

  bool get(int r, int c) const { return (data[r] >> c) & 1; }
  void set(int r, int c, bool v) {
    if (v)
      data[r] |= row_t{1} << c;
    else
      data[r] &= ~(row_t{1} << c);
  }

  row_t apply(row_t v) const {
    // v is a column vector over source coordinates; result over target rows
    row_t out = 0;
    for (int r = 0; r < rows; ++r)
      if (__builtin_parityll(data[r] & v)) out |= row_t{1} << r;
    return out;
  }

  friend bool operator==(const f2mat& a, const f2mat& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
  }
};

inline f2mat mul(const f2mat& a, const f2mat& b) {
  if (a.cols != b.rows) fail(errc::invalid_argument, "f2mat shape mismatch");
  f2mat out(a.rows, b.cols);
  for (int r = 0; r < a.rows; ++r)
    for (int k = 0; k < a.cols; ++k)
      if (a.get(r, k)) out.data[r] ^= b.data[k];
  return out;
}

// Row space basis in reduced row-echelon form.
inline std::vector<row_t> rref(std::vector<row_t> rows) {
  std::vector<row_t> basis;
  for (row_t v : rows) {
    for (row_t b : basis) {
      row_t low = b & -b;
      if (v & low) v ^= b;
    }
    if (v) basis.push_back(v);
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (i != j) {
        row_t low = basis[j] & -basis[j];
        if (basis[i] & low) basis[i] ^= basis[j];
      }
  std::sort(basis.begin(), basis.end(), std::greater<row_t>());
  return basis;
}

inline bool in_span(const std::vector<row_t>& basis, row_t v) {
  for (row_t b : basis) {
    row_t low = b & -b;
    if (v & low) v ^= b;
  }
  return v == 0;
}

inline int rank(const f2mat& m) { return static_cast<int>(rref(m.data).size()); }

// Basis of the right nullspace {v : M v = 0}, vectors as bitmasks over cols.
inline std::vector<row_t> nullspace(const f2mat& m) {
  std::vector<row_t> rows = m.data;
  std::vector<int> pivot_col;
  std::vector<row_t> reduced;
  for (row_t v : rows) {
    for (std::size_t i = 0; i < reduced.size(); ++i)
      if ((v >> pivot_col[i]) & 1) v ^= reduced[i];
    if (v) {
      int p = __builtin_ctzll(v);
      for (std::size_t i = 0; i < reduced.size(); ++i)
        if ((reduced[i] >> p) & 1) reduced[i] ^= v;
      reduced.push_back(v);
      pivot_col.push_back(p);
    }
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
  for (int p : pivot_col) is_pivot[p] = true;
  std::vector<row_t> out;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    row_t v = row_t{1} << c;
    for (std::size_t i = 0; i < reduced.size(); ++i)
      if ((reduced[i] >> c) & 1) v |= row_t{1} << pivot_col[i];
    out.push_back(v);
  }
  return out;
}

struct quiver {
  int nv = 0;
  std::vector<std::pair<int, int>> arrows;  // (source, target)

  friend bool operator==(const quiver& a, const quiver& b) {
    return a.nv == b.nv && a.arrows == b.arrows;
  }
};

inline bool is_acyclic(const quiver& q) {
  std::vector<int> indeg(q.nv, 0);
  for (auto [s, t] : q.arrows) {
    if (s < 0 || s >= q.nv || t < 0 || t >= q.nv) return false;
    ++indeg[t];
  }
  std::vector<int> stack;
  for (int v = 0; v < q.nv; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (auto [s, t] : q.arrows)
      if (s == v && --indeg[t] == 0) stack.push_back(t);
  }
  return seen == q.nv;
}

// Vertices reordered so the underlying graph is the path p[0] - p[1] - ... ;
// empty result if the graph is not a simple path.
inline std::vector<int> path_order(const quiver& q) {
  if (q.nv == 1 && q.arrows.empty()) return {0};
  std::vector<std::vector<int>> adj(q.nv);
  for (auto [s, t] : q.arrows) {
    if (s == t) return {};
    adj[s].push_back(t);
    adj[t].push_back(s);
  }
  int ends = 0, start = -1;
  for (int v = 0; v < q.nv; ++v) {
    if (adj[v].size() > 2 || adj[v].empty()) return {};
    if (adj[v].size() == 1) {
      ++ends;
      if (start < 0) start = v;
    }
  }
  if (ends != 2) return {};
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (static_cast<int>(order.size()) < q.nv) {
    int nxt = -1;
    for (int u : adj[cur])
      if (u != prev) nxt = u;
    if (nxt < 0) return {};
    order.push_back(nxt);
    prev = cur;
    cur = nxt;
  }
  std::vector<bool> seen(q.nv, false);
  for (int v : order) {
    if (seen[v]) return {};
    seen[v] = true;
  }
  return order;
}

struct rep {
  quiver q;
  std::vector<int> dims;
  std::vector<f2mat> mats;  // per arrow, shape dims[t] x dims[s]

  int total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }
  bool is_zero() const { return total_dim() == 0; }
};

inline void check_same_quiver(const rep& a, const rep& b) {
  if (!(a.q == b.q)) fail(errc::invalid_argument, "reps over different quivers");
}

inline rep zero_rep(const quiver& q) {
  rep r;
  r.q = q;
  r.dims.assign(q.nv, 0);
  for (std::size_t e = 0; e < q.arrows.size(); ++e) r.mats.emplace_back(0, 0);
  return r;
}

inline rep direct_sum(const rep& a, const rep& b) {
  check_same_quiver(a, b);
  rep out;
  out.q = a.q;
  out.dims.resize(a.q.nv);
  for (int v = 0; v < a.q.nv; ++v) out.dims[v] = a.dims[v] + b.dims[v];
  for (std::size_t e = 0; e < a.q.arrows.size(); ++e) {
    auto [s, t] = a.q.arrows[e];
    f2mat m(out.dims[t], out.dims[s]);
    for (int r = 0; r < a.dims[t]; ++r)
      for (int c = 0; c < a.dims[s]; ++c) m.set(r, c, a.mats[e].get(r, c));
    for (int r = 0; r < b.dims[t]; ++r)
      for (int c = 0; c < b.dims[s]; ++c)
        m.set(a.dims[t] + r, a.dims[s] + c, b.mats[e].get(r, c));
    out.mats.push_back(m);
  }
  return out;
}

// Thin interval rep supported on path positions [lo..hi] of `order`, identity
// on every arrow inside the support.
inline rep interval_rep(const quiver& q, const std::vector<int>& order, int lo, int hi) {
  rep r = zero_rep(q);
  std::vector<bool> in(q.nv, false);
  for (int p = lo; p <= hi; ++p) {
    r.dims[order[p]] = 1;
    in[order[p]] = true;
  }
  for (std::size_t e = 0; e < q.arrows.size(); ++e) {
    auto [s, t] = q.arrows[e];
    r.mats[e] = f2mat(r.dims[t], r.dims[s]);
    if (in[s] && in[t]) r.mats[e].set(0, 0, true);
  }
  return r;
}

inline long long euler_form(const quiver& q, const std::vector<int>& d, const std::vector<int>& e) {
  if (!is_acyclic(q)) fail(errc::invalid_argument, "euler_form needs an acyclic quiver");
  long long out = 0;
  for (int v = 0; v < q.nv; ++v) out += static_cast<long long>(d[v]) * e[v];
  for (auto [s, t] : q.arrows) out -= static_cast<long long>(d[s]) * e[t];
  return out;
}

// A homomorphism M -> N as one matrix per vertex.
using hom_map = std::vector<f2mat>;

inline std::vector<hom_map> hom_basis(const rep& m, const rep& n) {
  check_same_quiver(m, n);
  const quiver& q = m.q;
  std::vector<int> offset(q.nv + 1, 0);
  for (int v = 0; v < q.nv; ++v) offset[v + 1] = offset[v] + m.dims[v] * n.dims[v];
  int nvars = offset[q.nv];
  if (nvars == 0) return {};
  if (nvars > 63) fail(errc::bound_exceeded, "hom system too large");
  auto var = [&](int v, int r, int c) { return offset[v] + r * m.dims[v] + c; };
  std::vector<row_t> cons;
  for (std::size_t e = 0; e < q.arrows.size(); ++e) {
    auto [s, t] = q.arrows[e];
    // phi_t . M_e = N_e . phi_s entrywise: rows over n.dims[t], cols m.dims[s]
    for (int r = 0; r < n.dims[t]; ++r)
      for (int c = 0; c < m.dims[s]; ++c) {
        row_t eq = 0;
        for (int k = 0; k < m.dims[t]; ++k)
          if (m.mats[e].get(k, c)) eq ^= row_t{1} << var(t, r, k);
        for (int k = 0; k < n.dims[s]; ++k)
          if (n.mats[e].get(r, k)) eq ^= row_t{1} << var(s, k, c);
        if (eq) cons.push_back(eq);
      }
  }
  f2mat sys(static_cast<int>(cons.size()), nvars);
  sys.data = cons;
  std::vector<hom_map> out;
  for (row_t sol : nullspace(sys)) {
    hom_map phi;
    for (int v = 0; v < q.nv; ++v) {
      f2mat pm(n.dims[v], m.dims[v]);
      for (int r = 0; r < n.dims[v]; ++r)
        for (int c = 0; c < m.dims[v]; ++c) pm.set(r, c, (sol >> var(v, r, c)) & 1);
      phi.push_back(pm);
    }
    out.push_back(phi);
  }
  return out;
}

inline int hom_dim(const rep& m, const rep& n) { return static_cast<int>(hom_basis(m, n).size()); }

inline int ext1_dim(const rep& m, const rep& n) {
  long long e = hom_dim(m, n) - euler_form(m.q, m.dims, n.dims);
  if (e < 0) fail(errc::invalid_argument, "negative ext1: non-hereditary input");
  return static_cast<int>(e);
}

// Subrepresentation as one RREF basis per vertex.
struct subrep {
  std::vector<std::vector<row_t>> basis;

  int total_dim() const {
    int d = 0;
    for (const auto& b : basis) d += static_cast<int>(b.size());
    return d;
  }
  bool is_zero() const { return total_dim() == 0; }

  friend bool operator==(const subrep& a, const subrep& b) { return a.basis == b.basis; }
};

inline subrep full_subrep(const rep& m) {
  subrep u;
  u.basis.resize(m.q.nv);
  for (int v = 0; v < m.q.nv; ++v) {
    std::vector<row_t> rows;
    for (int i = 0; i < m.dims[v]; ++i) rows.push_back(row_t{1} << i);
    u.basis[v] = rref(rows);
  }
  return u;
}

inline subrep zero_subrep(const rep& m) {
  subrep u;
  u.basis.resize(m.q.nv);
  return u;
}

inline bool is_subrep(const rep& m, const subrep& u) {
  for (std::size_t e = 0; e < m.q.arrows.size(); ++e) {
    auto [s, t] = m.q.arrows[e];
    for (row_t v : u.basis[s])
      if (!in_span(u.basis[t], m.mats[e].apply(v))) return false;
  }
  return true;
}

inline bool subspace_leq(const std::vector<row_t>& small, const std::vector<row_t>& big) {
  for (row_t v : small)
    if (!in_span(big, v)) return false;
  return true;
}

namespace detail {

// All subspaces of F2^d, each as an RREF basis.
inline std::vector<std::vector<row_t>> all_subspaces(int d) {
  std::vector<std::vector<row_t>> out{{}};
  for (int mask = 1; mask < (1 << d); ++mask) {
    // mask = pivot column set; enumerate free entries
    std::vector<int> pivots;
    for (int c = 0; c < d; ++c)
      if ((mask >> c) & 1) pivots.push_back(c);
    std::vector<std::vector<int>> frees(pivots.size());
    int nfree = 0;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      for (int c = pivots[i] + 1; c < d; ++c)
        if (!((mask >> c) & 1)) {
          frees[i].push_back(c);
          ++nfree;
        }
    }
    for (int fa = 0; fa < (1 << nfree); ++fa) {
      std::vector<row_t> rows(pivots.size());
      int bit = 0;
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        row_t r = row_t{1} << pivots[i];
        for (int c : frees[i]) {
          if ((fa >> bit) & 1) r |= row_t{1} << c;
          ++bit;
        }
        rows[i] = r;
      }
      out.push_back(rref(rows));
    }
  }
  return out;
}

}  // namespace detail

inline constexpr int default_dim_bound = 12;

inline std::vector<subrep> enumerate_subreps(const rep& m, int dim_bound = default_dim_bound) {
  if (m.total_dim() > dim_bound) fail(errc::bound_exceeded, "enumerate_subreps: dimension bound exceeded");
  std::vector<std::vector<std::vector<row_t>>> per_vertex;
  for (int v = 0; v < m.q.nv; ++v) per_vertex.push_back(detail::all_subspaces(m.dims[v]));
  std::vector<subrep> out;
  std::vector<std::size_t> idx(m.q.nv, 0);
  while (true) {
    subrep u;
    u.basis.resize(m.q.nv);
    for (int v = 0; v < m.q.nv; ++v) u.basis[v] = per_vertex[v][idx[v]];
    if (is_subrep(m, u)) out.push_back(u);
    int v = 0;
    while (v < m.q.nv && ++idx[v] == per_vertex[v].size()) idx[v++] = 0;
    if (v == m.q.nv) break;
  }
  return out;
}

namespace detail {

// Per-vertex coordinates: complete U's basis to a full basis, return the list
// of complement representative vectors and a map expressing any vector's
// quotient coordinates.
struct quot_basis {
  std::vector<row_t> sub_rows;    // RREF basis of U_v
  std::vector<row_t> comp_reps;   // coset representatives (standard vectors)
};

inline quot_basis make_quot_basis(const std::vector<row_t>& u, int dim) {
  quot_basis qb;
  qb.sub_rows = u;
  std::vector<row_t> acc = u;
  for (int c = 0; c < dim; ++c) {
    row_t e = row_t{1} << c;
    if (!in_span(acc, e)) {
      qb.comp_reps.push_back(e);
      acc.push_back(e);
      acc = rref(acc);
    }
  }
  return qb;
}

// Coordinates of v in the quotient by U: reduce modulo U, then solve against
// the reduced complement representatives with coefficient tracking.
inline row_t quot_coords(const quot_basis& qb, row_t v) {
  auto reduce = [&](row_t x) {
    for (row_t b : qb.sub_rows) {
      row_t low = b & -b;
      if (x & low) x ^= b;
    }
    return x;
  };
  v = reduce(v);
  std::size_t k = qb.comp_reps.size();
  std::vector<row_t> rows(k), coef(k);
  for (std::size_t i = 0; i < k; ++i) {
    rows[i] = reduce(qb.comp_reps[i]);
    coef[i] = row_t{1} << i;
  }
  row_t coords = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (!rows[i]) continue;
    row_t low = rows[i] & -rows[i];
    for (std::size_t j = 0; j < k; ++j)
      if (j != i && (rows[j] & low)) {
        rows[j] ^= rows[i];
        coef[j] ^= coef[i];
      }
    if (v & low) {
      v ^= rows[i];
      coords ^= coef[i];
    }
  }
  if (v) fail(errc::invalid_argument, "quot_coords: vector outside span");
  return coords;
}

}  // namespace detail

inline rep quotient(const rep& m, const subrep& u) {
  if (!is_subrep(m, u)) fail(errc::invalid_argument, "quotient by a non-subrep");
  const quiver& q = m.q;
  std::vector<detail::quot_basis> qb;
  for (int v = 0; v < q.nv; ++v) qb.push_back(detail::make_quot_basis(u.basis[v], m.dims[v]));
  rep out;
  out.q = q;
  out.dims.resize(q.nv);
  for (int v = 0; v < q.nv; ++v) out.dims[v] = static_cast<int>(qb[v].comp_reps.size());
  for (std::size_t e = 0; e < q.arrows.size(); ++e) {
    auto [s, t] = q.arrows[e];
    f2mat mat(out.dims[t], out.dims[s]);
    for (int c = 0; c < out.dims[s]; ++c) {
      row_t img = m.mats[e].apply(qb[s].comp_reps[c]);
      row_t coords = detail::quot_coords(qb[t], img);
      for (int r = 0; r < out.dims[t]; ++r)
        if ((coords >> r) & 1) mat.set(r, c, true);
    }
    out.mats.push_back(mat);
  }
  return out;
}

inline rep sub_as_rep(const rep& m, const subrep& u) {
  const quiver& q = m.q;
  rep out;
  out.q = q;
  out.dims.resize(q.nv);
  for (int v = 0; v < q.nv; ++v) out.dims[v] = static_cast<int>(u.basis[v].size());
  for (std::size_t e = 0; e < q.arrows.size(); ++e) {
    auto [s, t] = q.arrows[e];
    f2mat mat(out.dims[t], out.dims[s]);
    for (int c = 0; c < out.dims[s]; ++c) {
      row_t img = m.mats[e].apply(u.basis[s][c]);
      // express img in u.basis[t] (RREF: eliminate greedily, record pivots)
      row_t coords = 0;
      row_t v2 = img;
      for (std::size_t i = 0; i < u.basis[t].size(); ++i) {
        row_t b = u.basis[t][i];
        row_t low = b & -b;
        if (v2 & low) {
          v2 ^= b;
          coords |= row_t{1} << i;
        }
      }
      if (v2) fail(errc::invalid_argument, "sub_as_rep: image escapes subrep");
      for (int r = 0; r < out.dims[t]; ++r)
        if ((coords >> r) & 1) mat.set(r, c, true);
    }
    out.mats.push_back(mat);
  }
  return out;
}

// Subspace of sub_as_rep(m, outer) spanned by inner, for inner <= outer.
inline subrep subrep_restrict(const subrep& outer, const subrep& inner) {
  subrep out;
  out.basis.resize(outer.basis.size());
  for (std::size_t v = 0; v < outer.basis.size(); ++v) {
    std::vector<row_t> rows;
    for (row_t w : inner.basis[v]) {
      row_t coords = 0;
      for (std::size_t i = 0; i < outer.basis[v].size(); ++i) {
        row_t b = outer.basis[v][i];
        row_t low = b & -b;
        if (w & low) {
          w ^= b;
          coords |= row_t{1} << i;
        }
      }
      if (w) fail(errc::invalid_argument, "subrep_restrict: inner escapes outer");
      rows.push_back(coords);
    }
    out.basis[v] = rref(rows);
  }
  return out;
}

// Subspace of the ambient rep named by a subrep of sub_as_rep(m, outer).
inline subrep subrep_compose(const subrep& outer, const subrep& inner) {
  subrep out;
  out.basis.resize(outer.basis.size());
  for (std::size_t v = 0; v < outer.basis.size(); ++v) {
    std::vector<row_t> rows;
    for (row_t c : inner.basis[v]) {
      row_t w = 0;
      for (std::size_t i = 0; i < outer.basis[v].size(); ++i)
        if ((c >> i) & 1) w ^= outer.basis[v][i];
      rows.push_back(w);
    }
    out.basis[v] = rref(rows);
  }
  return out;
}

inline subrep trace(const std::vector<rep>& gens, const rep& x) {
  subrep out;
  out.basis.resize(x.q.nv);
  std::vector<std::vector<row_t>> spans(x.q.nv);
  for (const rep& s : gens) {
    check_same_quiver(s, x);
    for (const hom_map& phi : hom_basis(s, x)) {
      for (int v = 0; v < x.q.nv; ++v)
        for (int c = 0; c < s.dims[v]; ++c) spans[v].push_back(phi[v].apply(row_t{1} << c));
    }
  }
  for (int v = 0; v < x.q.nv; ++v) out.basis[v] = rref(spans[v]);
  if (!is_subrep(x, out)) fail(errc::invalid_argument, "trace is not a subrep");
  return out;
}

inline subrep reject(const std::vector<rep>& cogens, const rep& x) {
  subrep out;
  out.basis.resize(x.q.nv);
  for (int v = 0; v < x.q.nv; ++v) {
    std::vector<row_t> constraints;  // rows of stacked phi_v matrices
    for (const rep& s : cogens) {
      check_same_quiver(s, x);
      for (const hom_map& phi : hom_basis(x, s))
        for (int r = 0; r < s.dims[v]; ++r) {
          row_t rr = 0;
          for (int c = 0; c < x.dims[v]; ++c)
            if (phi[v].get(r, c)) rr |= row_t{1} << c;
          if (rr) constraints.push_back(rr);
        }
    }
    f2mat sys(static_cast<int>(constraints.size()), x.dims[v]);
    sys.data = constraints;
    out.basis[v] = rref(nullspace(sys));
  }
  // guard: for cogens closed enough this is automatic, but verify anyway
  if (!is_subrep(x, out)) fail(errc::invalid_argument, "reject is not a subrep");
  return out;
}

// Krull-Schmidt decomposition for type-A quivers: multiplicities of the
// interval catalogue recovered from the Hom-dimension system, which is
// unitriangular in a directed order of the catalogue.
inline std::vector<rep> decompose(const rep& m, int dim_bound = default_dim_bound) {
  if (m.total_dim() > dim_bound) fail(errc::bound_exceeded, "decompose: dimension bound exceeded");
  if (m.is_zero()) return {};
  std::vector<int> order = path_order(m.q);
  if (order.empty()) fail(errc::unsupported_quiver, "decompose supports type-A quivers only");
  int k = m.q.nv;
  std::vector<rep> cat;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) cat.push_back(interval_rep(m.q, order, i, j));
  int c = static_cast<int>(cat.size());
  std::vector<std::vector<int>> d(c, std::vector<int>(c));
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) d[i][j] = hom_dim(cat[i], cat[j]);
  // topological order by the strict relation hom(cat_i, cat_j) > 0, i != j
  std::vector<int> indeg(c, 0);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j)
      if (i != j && d[i][j] > 0) ++indeg[j];
  std::vector<int> topo, stack;
  for (int i = 0; i < c; ++i)
    if (indeg[i] == 0) stack.push_back(i);
  while (!stack.empty()) {
    std::sort(stack.begin(), stack.end());
    int v = stack.front();
    stack.erase(stack.begin());
    topo.push_back(v);
    for (int j = 0; j < c; ++j)
      if (j != v && d[v][j] > 0 && --indeg[j] == 0) stack.push_back(j);
  }
  if (static_cast<int>(topo.size()) != c)
    fail(errc::unsupported_quiver, "decompose: hom order is cyclic");
  std::vector<int> h(c), mult(c, 0);
  for (int j = 0; j < c; ++j) h[j] = hom_dim(m, cat[j]);
  // solve in topological order: hom(m, cat_j) = sum_i mult_i * d[i][j], and
  // d[i][j] = 0 for i != j unless i precedes j, so predecessors are known
  for (int pos = 0; pos < c; ++pos) {
    int j = topo[pos];
    int rhs = h[j];
    for (int pos2 = 0; pos2 < pos; ++pos2) rhs -= mult[topo[pos2]] * d[topo[pos2]][j];
    if (d[j][j] != 1 || rhs < 0) fail(errc::unsupported_quiver, "decompose: singular hom system");
    mult[j] = rhs;
  }
  // exact verification: dim vectors must add up
  std::vector<int> dims(k, 0);
  std::vector<rep> out;
  for (int i = 0; i < c; ++i)
    for (int t = 0; t < mult[i]; ++t) {
      out.push_back(cat[i]);
      for (int v = 0; v < k; ++v) dims[v] += cat[i].dims[v];
    }
  if (dims != m.dims) fail(errc::unsupported_quiver, "decompose: dimension check failed");
  return out;
}

}  // namespace negcat::repkit
