#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "negcat/errors.hpp"
#include "negcat/orbit.hpp"
#include "negcat/toml.hpp"

namespace negcat::scenario {

using orbit::arc;

struct task {
  std::string kind;             // check_sms | check_setup | esets | filter | verify |
                                // enumerate | diagram
  orbit::c_object object;       // filter
  std::string diagram_kind;     // polygon | arquiver
  std::string format = "svg";   // svg | dot
  std::string sms_name;         // check_sms / enumerate target; empty = all / "A"
  int line = 0;
};

struct doc {
  int w = 0, n = 0;
  std::vector<std::pair<std::string, std::vector<arc>>> sms;  // sorted by name
  std::vector<task> tasks;

  const std::vector<arc>* find_sms(const std::string& name) const {
    for (const auto& [nm, arcs] : sms)
      if (nm == name) return &arcs;
    return nullptr;
  }
};

namespace detail {

inline long long get_int(const toml::table& t, const std::string& key, int table_line) {
  auto it = t.values.find(key);
  if (it == t.values.end())
    fail(errc::parse_error,
         "line " + std::to_string(table_line) + ": missing integer key '" + key + "'");
  if (it->second.k != toml::value::kind::integer)
    fail(errc::parse_error,
         "line " + std::to_string(it->second.line) + ", col " + std::to_string(it->second.col) +
             ": '" + key + "' must be an integer");
  return it->second.num;
}

inline std::string get_str(const toml::table& t, const std::string& key,
                           const std::string& fallback) {
  auto it = t.values.find(key);
  if (it == t.values.end()) return fallback;
  if (it->second.k != toml::value::kind::string)
    fail(errc::parse_error,
         "line " + std::to_string(it->second.line) + ": '" + key + "' must be a string");
  return it->second.str;
}

inline std::vector<arc> get_arcs(const toml::value& v, const orbit::params& P) {
  if (v.k != toml::value::kind::array)
    fail(errc::parse_error, "line " + std::to_string(v.line) + ", col " + std::to_string(v.col) +
                                ": expected an array of [a,b] pairs");
  std::vector<arc> out;
  for (const toml::value& e : v.items) {
    if (e.k != toml::value::kind::array || e.items.size() != 2 ||
        e.items[0].k != toml::value::kind::integer || e.items[1].k != toml::value::kind::integer)
      fail(errc::parse_error, "line " + std::to_string(e.line) + ", col " + std::to_string(e.col) +
                                  ": each entry must be a two-integer array [a,b]");
    arc a{static_cast<int>(e.items[0].num), static_cast<int>(e.items[1].num)};
    if (a.a < 0 || a.b < 0 || a.a >= P.N || a.b >= P.N)
      fail(errc::parse_error, "line " + std::to_string(e.line) + ", col " + std::to_string(e.col) +
                                  ": corner out of range for the " + std::to_string(P.N) +
                                  "-gon");
    if (!orbit::is_admissible(P, a))
      fail(errc::parse_error, "line " + std::to_string(e.line) + ", col " + std::to_string(e.col) +
                                  ": (" + std::to_string(a.a) + "," + std::to_string(a.b) +
                                  ") is not an admissible diagonal at w=" + std::to_string(P.w));
    out.push_back(a);
  }
  return out;
}

}  // namespace detail

inline doc load(const std::string& text) {
  toml::table root = toml::parse(text);
  doc d;
  auto cat = root.subtables.find("category");
  if (cat == root.subtables.end()) fail(errc::parse_error, "missing [category] table");
  d.w = static_cast<int>(detail::get_int(cat->second, "w", cat->second.line));
  d.n = static_cast<int>(detail::get_int(cat->second, "n", cat->second.line));
  orbit::params P = orbit::make_params(d.w, d.n);
  auto smses = root.subtables.find("sms");
  if (smses != root.subtables.end())
    for (const auto& [name, t] : smses->second.subtables) {
      auto it = t.values.find("arcs");
      if (it == t.values.end())
        fail(errc::parse_error,
             "line " + std::to_string(t.line) + ": [sms." + name + "] needs an 'arcs' key");
      d.sms.emplace_back(name, detail::get_arcs(it->second, P));
    }
  static const std::set<std::string> kinds = {"check_sms", "check_setup", "esets", "filter",
                                             "verify",    "enumerate",   "diagram"};
  auto tasks = root.tablearrays.find("tasks");
  if (tasks != root.tablearrays.end())
    for (const toml::table& t : tasks->second) {
      task tk;
      tk.line = t.line;
      tk.kind = detail::get_str(t, "kind", "");
      if (!kinds.count(tk.kind))
        fail(errc::parse_error,
             "line " + std::to_string(t.line) + ": unknown task kind '" + tk.kind + "'");
      if (tk.kind == "filter") {
        auto it = t.values.find("object");
        if (it == t.values.end())
          fail(errc::parse_error,
               "line " + std::to_string(t.line) + ": filter task needs an 'object' key");
        for (const arc& a : detail::get_arcs(it->second, P)) tk.object.push_back(a);
        tk.object = orbit::normalized(tk.object);
      }
      if (tk.kind == "diagram") {
        tk.diagram_kind = detail::get_str(t, "diagram", "");
        if (tk.diagram_kind != "polygon" && tk.diagram_kind != "arquiver")
          fail(errc::parse_error, "line " + std::to_string(t.line) +
                                      ": diagram task needs diagram = \"polygon\" or \"arquiver\"");
        tk.format = detail::get_str(t, "format", "svg");
        if (tk.format != "svg" && tk.format != "dot")
          fail(errc::parse_error,
               "line " + std::to_string(t.line) + ": format must be \"svg\" or \"dot\"");
      }
      tk.sms_name = detail::get_str(t, "sms", "");
      d.tasks.push_back(tk);
    }
  return d;
}

inline doc load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot read scenario file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return load(ss.str());
  } catch (const error& e) {
    if (e.kind() == errc::parse_error) fail(errc::parse_error, path + ": " + e.what());
    throw;
  }
}

}  // namespace negcat::scenario
