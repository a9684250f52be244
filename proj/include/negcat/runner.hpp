#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "negcat/abelian.hpp"
#include "negcat/diagram.hpp"
#include "negcat/errors.hpp"
#include "negcat/orbit.hpp"
#include "negcat/scenario.hpp"
#include "negcat/torsion3.hpp"

namespace negcat::runner {

using json = nlohmann::ordered_json;
using orbit::arc;

inline json arc_json(const arc& a) { return json::array({a.a, a.b}); }

inline json arcs_json(const orbit::c_object& x) {
  json out = json::array();
  for (const arc& a : x) out.push_back(arc_json(a));
  return out;
}

inline json class_json(const abelian::class_a& s) {
  json out = json::array();
  for (const arc& a : s) out.push_back(arc_json(a));
  return out;
}

struct outcome {
  json report;
  int exit_code = 0;  // 0 pass, 1 verification failure, 3 inconclusive
};

namespace detail {

struct context {
  const scenario::doc& d;
  orbit::params P;
  orbit::arc_model M;
  std::map<std::string, abelian::ab_model> models;
  std::optional<torsion3::torsion_data> td;

  explicit context(const scenario::doc& doc)
      : d(doc), P(orbit::make_params(doc.w, doc.n)), M(orbit::build_arc_model(P)) {}

  const abelian::ab_model& model(const std::string& name, const std::string& who) {
    auto it = models.find(name);
    if (it != models.end()) return it->second;
    const std::vector<arc>* arcs = d.find_sms(name);
    if (!arcs) fail(errc::invalid_argument, who + ": scenario defines no [sms." + name + "]");
    return models.emplace(name, abelian::from_sms(M, *arcs)).first->second;
  }

  const torsion3::torsion_data& esets(const std::string& who) {
    if (!td) td = torsion3::compute_esets(model("A", who), model("B", who));
    return *td;
  }
};

inline std::string wrap_task(const scenario::task& t, std::size_t idx, const std::string& msg) {
  return "task " + std::to_string(idx + 1) + " (" + t.kind + "): " + msg;
}

inline json pair_json(const torsion3::torsion_pair_classes& p) {
  return json{{"torsion", class_json(p.torsion)}, {"free", class_json(p.free)}};
}

inline diagram::style_sets styles_for(context& c) {
  diagram::style_sets st;
  try {
    const auto& A = c.model("A", "diagram");
    st.outline_a.insert(A.indec_set.begin(), A.indec_set.end());
  } catch (const error&) {
  }
  try {
    const auto& B = c.model("B", "diagram");
    st.outline_b.insert(B.indec_set.begin(), B.indec_set.end());
  } catch (const error&) {
  }
  try {
    const auto& td = c.esets("diagram");
    st.fill0.insert(td.E0.begin(), td.E0.end());
    st.fill1.insert(td.E1.begin(), td.E1.end());
    st.fill2.insert(td.E2.begin(), td.E2.end());
  } catch (const error&) {
  }
  return st;
}

}  // namespace detail

inline std::string make_diagram(const orbit::arc_model& M,
                                const std::vector<std::pair<std::string, std::vector<arc>>>& sms,
                                const diagram::style_sets& st, const std::string& kind,
                                const std::string& format) {
  if (kind == "polygon")
    return format == "svg" ? diagram::polygon_svg(M.P, sms) : diagram::polygon_dot(M.P, sms);
  if (kind == "arquiver") {
    diagram::mesh m = diagram::build_mesh(M);
    return format == "svg" ? diagram::arquiver_svg(m, st) : diagram::arquiver_dot(m, st);
  }
  fail(errc::invalid_argument, "unknown diagram kind: " + kind);
}

inline outcome run(const scenario::doc& d) {
  detail::context c(d);
  outcome out;
  out.report["version"] = 1;
  out.report["category"] = {{"w", d.w}, {"n", d.n}, {"polygon", c.P.N}};
  json results = json::array();
  bool any_fail = false, any_inconclusive = false;
  for (std::size_t i = 0; i < d.tasks.size(); ++i) {
    const scenario::task& t = d.tasks[i];
    json r;
    r["task"] = t.kind;
    try {
      if (t.kind == "check_sms") {
        json checks = json::array();
        bool all_ok = true;
        for (const auto& [name, arcs] : d.sms) {
          if (!t.sms_name.empty() && name != t.sms_name) continue;
          auto chk = orbit::is_sms(c.M, arcs);
          json e = {{"sms", name}, {"accepted", chk.ok}};
          if (!chk.ok) e["reason"] = chk.reason;
          checks.push_back(e);
          all_ok = all_ok && chk.ok;
        }
        r["checks"] = checks;
        r["status"] = all_ok ? "pass" : "fail";
      } else if (t.kind == "check_setup") {
        auto rep = torsion3::check_setup(c.model("A", t.kind), c.model("B", t.kind));
        json conds = json::array();
        for (const auto& cond : rep.conditions) {
          json e = {{"name", cond.name},
                    {"status", cond.pass ? "pass" : (cond.conclusive ? "fail" : "inconclusive")}};
          if (cond.max_en >= 0) e["max_negative_ext"] = cond.max_en;
          if (!cond.witness.empty()) e["witness"] = cond.witness;
          conds.push_back(e);
        }
        r["conditions"] = conds;
        bool inc = false;
        for (const auto& cond : rep.conditions) inc = inc || !cond.conclusive;
        r["status"] = rep.pass() ? "pass" : (inc ? "inconclusive" : "fail");
      } else if (t.kind == "esets") {
        const auto& td = c.esets(t.kind);
        r["E0"] = class_json(td.E0);
        r["E1"] = class_json(td.E1);
        r["E2"] = class_json(td.E2);
        r["pair_low"] = detail::pair_json(td.pair_low);
        r["pair_high"] = detail::pair_json(td.pair_high);
        r["status"] = "pass";
      } else if (t.kind == "filter") {
        const auto& td = c.esets(t.kind);
        auto tp = torsion3::filter_object(td, t.object);
        r["object"] = arcs_json(tp.x);
        json chain = json::array();
        for (const auto& level : tp.chain) chain.push_back(arcs_json(level));
        r["chain"] = chain;
        json quots = json::array();
        for (const auto& q : tp.quotients) quots.push_back(arcs_json(q));
        r["quotients"] = quots;
        try {
          auto chains = torsion3::brute_force_filtrations(td, t.object);
          r["chain_count"] = chains.size();
          r["unique"] = chains.size() == 1;
          r["status"] = chains.size() == 1 ? "pass" : "fail";
        } catch (const error& e) {
          if (e.kind() != errc::bound_exceeded) throw;
          r["unique"] = "inconclusive";
          r["status"] = "inconclusive";
        }
      } else if (t.kind == "verify") {
        const auto& td = c.esets(t.kind);
        auto vr = torsion3::verify_triple(td);
        r["hom_orthogonal"] = vr.hom_orth;
        r["covers"] = vr.covers;
        if (!vr.witness.empty()) r["witness"] = vr.witness;
        r["status"] = vr.pass() ? "pass" : (vr.conclusive ? "fail" : "inconclusive");
      } else if (t.kind == "enumerate") {
        std::string name = t.sms_name.empty() ? "A" : t.sms_name;
        const auto& A = c.model(name, t.kind);
        auto classes = torsion3::enumerate_torsion_classes(A);
        auto free_classes = torsion3::enumerate_torsion_free_classes(A);
        r["sms"] = name;
        r["torsion_class_count"] = classes.size();
        r["torsion_free_class_count"] = free_classes.size();
        json cl = json::array();
        for (const auto& s : classes) cl.push_back(class_json(s));
        r["torsion_classes"] = cl;
        r["status"] = "pass";
      } else if (t.kind == "diagram") {
        diagram::style_sets st =
            t.diagram_kind == "arquiver" ? detail::styles_for(c) : diagram::style_sets{};
        r["kind"] = t.diagram_kind;
        r["format"] = t.format;
        r["content"] = make_diagram(c.M, d.sms, st, t.diagram_kind, t.format);
        r["status"] = "pass";
      }
    } catch (const error& e) {
      fail(e.kind(), detail::wrap_task(t, i, e.what()));
    }
    std::string status = r["status"];
    any_fail = any_fail || status == "fail";
    any_inconclusive = any_inconclusive || status == "inconclusive";
    results.push_back(r);
  }
  out.report["results"] = results;
  out.report["status"] = any_fail ? "fail" : (any_inconclusive ? "inconclusive" : "pass");
  out.exit_code = any_fail ? 1 : (any_inconclusive ? 3 : 0);
  return out;
}

}  // namespace negcat::runner
