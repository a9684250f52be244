#pragma once

#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "negcat/errors.hpp"
#include "negcat/orbit.hpp"

namespace negcat::diagram {

using orbit::arc;

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

inline std::string arc_label(const arc& a) {
  return std::to_string(a.a) + "," + std::to_string(a.b);
}

inline derived::db_indec tau_pow(int n, derived::db_indec x, int k) {
  while (k > 0) {
    x = derived::tau_inv(n, x);
    --k;
  }
  while (k < 0) {
    x = derived::tau(n, x);
    ++k;
  }
  return x;
}

}  // namespace detail

// Translation-quiver layout on a cylinder: columns p mod N, rows q = 1..n on a
// checkerboard, cell (p,q) holding the arc of tau^{-(p+q)/2} of the length-q
// base object. Arrows step one column right and one row up or down; the wrap
// from the last column back to the first may flip rows.
struct mesh {
  orbit::params P;
  std::map<std::pair<int, int>, arc> cell;
  std::map<arc, std::pair<int, int>> cell_of;
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> arrows;
};

inline mesh build_mesh(const orbit::arc_model& M) {
  mesh m;
  m.P = M.P;
  int n = M.P.n, N = M.P.N;
  for (int q = 1; q <= n; ++q)
    for (int p = (q % 2 == 0) ? 0 : 1; p < N; p += 2) {
      arc a = M.arc_of_db(detail::tau_pow(n, {0, {1, q}}, (p + q) / 2));
      m.cell[{p, q}] = a;
      if (!m.cell_of.emplace(a, std::pair{p, q}).second)
        fail(errc::model_error, "mesh: two cells map to one arc");
    }
  if (m.cell.size() != m.cell_of.size() ||
      static_cast<int>(m.cell.size()) != N * n / 2)
    fail(errc::model_error, "mesh: cell count mismatch");
  for (const auto& [pq, a] : m.cell) {
    auto [p, q] = pq;
    for (int dq : {-1, 1}) {
      int q2 = q + dq;
      if (q2 < 1 || q2 > n) continue;
      arc b = M.arc_of_db(detail::tau_pow(n, {0, {1, q2}}, (p + 1 + q2) / 2));
      m.arrows.push_back({pq, m.cell_of.at(b)});
    }
  }
  return m;
}

struct style_sets {
  std::set<arc> fill0, fill1, fill2;  // three filtration classes
  std::set<arc> outline_a, outline_b;
};

// N-gon with labeled corners anticlockwise and the given chords.
inline std::string polygon_svg(const orbit::params& P,
                               const std::vector<std::pair<std::string, std::vector<arc>>>& sets) {
  const double cx = 240, cy = 240, r = 190, pi = 3.14159265358979323846;
  auto corner = [&](int i, double rad) {
    double th = -pi / 2 + 2 * pi * i / P.N;
    return std::pair<double, double>{cx + rad * std::cos(th), cy - rad * std::sin(th)};
  };
  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"500\" "
       "viewBox=\"0 0 480 500\">\n";
  s += "<rect width=\"480\" height=\"500\" fill=\"white\"/>\n";
  s += "<polygon points=\"";
  for (int i = 0; i < P.N; ++i) {
    auto [x, y] = corner(i, r);
    s += detail::num(x) + "," + detail::num(y) + " ";
  }
  s += "\" fill=\"none\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  static const char* colors[] = {"#006600", "#0033cc", "#cc6600", "#990099"};
  int ci = 0;
  double ly = 478;
  for (const auto& [name, arcs] : sets) {
    const char* color = colors[ci % 4];
    const char* dash = (ci % 2 == 1) ? " stroke-dasharray=\"6,3\"" : "";
    for (const arc& a : arcs) {
      auto [x1, y1] = corner(a.a, r);
      auto [x2, y2] = corner(a.b, r);
      s += "<line x1=\"" + detail::num(x1) + "\" y1=\"" + detail::num(y1) + "\" x2=\"" +
           detail::num(x2) + "\" y2=\"" + detail::num(y2) + "\" stroke=\"" + color +
           "\" stroke-width=\"1.6\"" + dash + "/>\n";
    }
    s += "<text x=\"" + detail::num(12.0 + 110.0 * ci) + "\" y=\"" + detail::num(ly) +
         "\" font-size=\"12\" fill=\"" + color + "\">" + name + "</text>\n";
    ++ci;
  }
  for (int i = 0; i < P.N; ++i) {
    auto [x, y] = corner(i, r);
    s += "<circle cx=\"" + detail::num(x) + "\" cy=\"" + detail::num(y) +
         "\" r=\"2\" fill=\"#333\"/>\n";
    auto [lx, lyy] = corner(i, r + 13);
    s += "<text x=\"" + detail::num(lx) + "\" y=\"" + detail::num(lyy + 3) +
         "\" font-size=\"9\" text-anchor=\"middle\" fill=\"#333\">" + std::to_string(i) +
         "</text>\n";
  }
  s += "</svg>\n";
  return s;
}

inline std::string polygon_dot(const orbit::params& P,
                               const std::vector<std::pair<std::string, std::vector<arc>>>& sets) {
  const double r = 5.0, pi = 3.14159265358979323846;
  std::string s = "graph polygon {\n  layout=neato;\n  node [shape=point, width=0.06];\n";
  for (int i = 0; i < P.N; ++i) {
    double th = -pi / 2 + 2 * pi * i / P.N;
    s += "  c" + std::to_string(i) + " [pos=\"" + detail::num(r * std::cos(th)) + "," +
         detail::num(r * std::sin(th)) + "!\", xlabel=\"" + std::to_string(i) + "\"];\n";
  }
  for (int i = 0; i < P.N; ++i)
    s += "  c" + std::to_string(i) + " -- c" + std::to_string((i + 1) % P.N) +
         " [color=gray];\n";
  static const char* colors[] = {"darkgreen", "blue", "orange", "purple"};
  int ci = 0;
  for (const auto& [name, arcs] : sets) {
    for (const arc& a : arcs)
      s += "  c" + std::to_string(a.a) + " -- c" + std::to_string(a.b) + " [color=" +
           colors[ci % 4] + ", penwidth=1.5];  // " + name + "\n";
    ++ci;
  }
  s += "}\n";
  return s;
}

// Cylinder mesh of all indecomposables with optional class fills and model
// outlines; wrap arrows leave the right edge and re-enter at the left.
inline std::string arquiver_svg(const mesh& m, const style_sets& st) {
  int n = m.P.n, N = m.P.N;
  const double ux = 34, uy = 46, x0 = 40, y0 = 40;
  double width = x0 * 2 + ux * N, height = y0 * 2 + uy * (n - 1) + 40;
  auto px = [&](int p) { return x0 + ux * p; };
  auto py = [&](int q) { return y0 + uy * (n - q); };
  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::num(width) +
       "\" height=\"" + detail::num(height) + "\" viewBox=\"0 0 " + detail::num(width) + " " +
       detail::num(height) + "\">\n";
  s += "<rect width=\"" + detail::num(width) + "\" height=\"" + detail::num(height) +
       "\" fill=\"white\"/>\n";
  s += "<defs><marker id=\"tip\" markerWidth=\"7\" markerHeight=\"7\" refX=\"6\" refY=\"3.5\" "
       "orient=\"auto\"><path d=\"M0,0 L7,3.5 L0,7 z\" fill=\"#555\"/></marker></defs>\n";
  for (const auto& [src, dst] : m.arrows) {
    auto [p1, q1] = src;
    auto [p2, q2] = dst;
    double xa = px(p1), ya = py(q1);
    if (p2 == p1 + 1) {
      s += "<line x1=\"" + detail::num(xa) + "\" y1=\"" + detail::num(ya) + "\" x2=\"" +
           detail::num(px(p2)) + "\" y2=\"" + detail::num(py(q2)) +
           "\" stroke=\"#555\" stroke-width=\"0.8\" marker-end=\"url(#tip)\"/>\n";
    } else {
      // wraparound: exit stub on the right, entry stub on the left
      s += "<line x1=\"" + detail::num(xa) + "\" y1=\"" + detail::num(ya) + "\" x2=\"" +
           detail::num(xa + ux * 0.6) + "\" y2=\"" + detail::num(ya) +
           "\" stroke=\"#aaa\" stroke-width=\"0.8\" stroke-dasharray=\"3,2\" "
           "marker-end=\"url(#tip)\"/>\n";
      s += "<line x1=\"" + detail::num(px(p2) - ux * 0.6) + "\" y1=\"" + detail::num(py(q2)) +
           "\" x2=\"" + detail::num(px(p2)) + "\" y2=\"" + detail::num(py(q2)) +
           "\" stroke=\"#aaa\" stroke-width=\"0.8\" stroke-dasharray=\"3,2\" "
           "marker-end=\"url(#tip)\"/>\n";
    }
  }
  for (const auto& [pq, a] : m.cell) {
    auto [p, q] = pq;
    double x = px(p), y = py(q);
    std::string fill = "white";
    if (st.fill0.count(a)) fill = "#8fd18f";
    if (st.fill1.count(a)) fill = "#8fb8e8";
    if (st.fill2.count(a)) fill = "#f0c070";
    std::string stroke = "#888", swidth = "0.8", dash;
    if (st.outline_a.count(a)) {
      stroke = "#006600";
      swidth = "2";
    }
    if (st.outline_b.count(a)) {
      stroke = st.outline_a.count(a) ? "#003366" : "#0033cc";
      swidth = "2";
      dash = " stroke-dasharray=\"4,2\"";
    }
    s += "<circle cx=\"" + detail::num(x) + "\" cy=\"" + detail::num(y) +
         "\" r=\"11\" fill=\"" + fill + "\" stroke=\"" + stroke + "\" stroke-width=\"" + swidth +
         "\"" + dash + "/>\n";
    s += "<text x=\"" + detail::num(x) + "\" y=\"" + detail::num(y + 2.5) +
         "\" font-size=\"6.5\" text-anchor=\"middle\" fill=\"#222\">" + detail::arc_label(a) +
         "</text>\n";
  }
  s += "</svg>\n";
  return s;
}

inline std::string arquiver_dot(const mesh& m, const style_sets& st) {
  std::string s = "digraph arquiver {\n  rankdir=LR;\n  node [shape=ellipse, fontsize=9];\n";
  for (const auto& [pq, a] : m.cell) {
    std::string id = "a" + std::to_string(a.a) + "_" + std::to_string(a.b);
    std::string attrs = "label=\"" + detail::arc_label(a) + "\"";
    if (st.fill0.count(a)) attrs += ", style=filled, fillcolor=palegreen";
    if (st.fill1.count(a)) attrs += ", style=filled, fillcolor=lightblue";
    if (st.fill2.count(a)) attrs += ", style=filled, fillcolor=orange";
    if (st.outline_a.count(a)) attrs += ", color=darkgreen, penwidth=2";
    if (st.outline_b.count(a)) attrs += ", color=blue, penwidth=2";
    s += "  " + id + " [" + attrs + "];\n";
  }
  for (const auto& [src, dst] : m.arrows) {
    const arc& a = m.cell.at(src);
    const arc& b = m.cell.at(dst);
    s += "  a" + std::to_string(a.a) + "_" + std::to_string(a.b) + " -> a" +
         std::to_string(b.a) + "_" + std::to_string(b.b) + ";\n";
  }
  s += "}\n";
  return s;
}

}  // namespace negcat::diagram
