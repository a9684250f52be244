#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "negcat/runner.hpp"
#include "negcat/scenario.hpp"
#include "negcat/selftest.hpp"

namespace {

int write_out(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return 2;
  }
  f << text << "\n";
  return 0;
}

std::optional<negcat::orbit::params> parse_params(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto comma = s.find(',');
  if (comma == std::string::npos)
    negcat::fail(negcat::errc::invalid_argument, "--params expects w,n");
  int w = std::stoi(s.substr(0, comma));
  int n = std::stoi(s.substr(comma + 1));
  return negcat::orbit::make_params(w, n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"torsion triples and filtrations in negative cluster categories"};
  app.require_subcommand(1);

  std::string run_file, run_out;
  auto* run_cmd = app.add_subcommand("run", "execute the tasks of a scenario file");
  run_cmd->add_option("scenario", run_file, "scenario TOML file")->required();
  run_cmd->add_option("--out", run_out, "write the JSON report to a file");

  std::string dg_kind, dg_format = "svg", dg_file, dg_out;
  auto* dg_cmd = app.add_subcommand("diagram", "render a scenario as a picture");
  dg_cmd->add_option("--kind", dg_kind, "polygon or arquiver")->required();
  dg_cmd->add_option("--format", dg_format, "svg or dot");
  dg_cmd->add_option("--scenario", dg_file, "scenario TOML file")->required();
  dg_cmd->add_option("--out", dg_out, "write the picture to a file");

  std::string st_suite, st_params;
  auto* st_cmd = app.add_subcommand("selftest", "run internal consistency suites");
  st_cmd->add_option("--suite", st_suite, "oracle, serre, star, perp or roundtrip");
  st_cmd->add_option("--params", st_params, "override category parameters as w,n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run_cmd) {
      auto doc = negcat::scenario::load_file(run_file);
      auto out = negcat::runner::run(doc);
      int wr = write_out(out.report.dump(2), run_out);
      return wr ? wr : out.exit_code;
    }
    if (*dg_cmd) {
      if (dg_kind != "polygon" && dg_kind != "arquiver") {
        std::cerr << "error: --kind must be polygon or arquiver\n";
        return 2;
      }
      if (dg_format != "svg" && dg_format != "dot") {
        std::cerr << "error: --format must be svg or dot\n";
        return 2;
      }
      auto doc = negcat::scenario::load_file(dg_file);
      negcat::runner::detail::context c(doc);
      negcat::diagram::style_sets st = dg_kind == "arquiver"
                                           ? negcat::runner::detail::styles_for(c)
                                           : negcat::diagram::style_sets{};
      std::string content = negcat::runner::make_diagram(c.M, doc.sms, st, dg_kind, dg_format);
      return write_out(content, dg_out);
    }
    if (*st_cmd) {
      auto rep = negcat::selftest::run(st_suite, parse_params(st_params));
      std::cout << rep.to_json().dump(2) << "\n";
      return rep.pass() ? 0 : 1;
    }
  } catch (const negcat::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case negcat::errc::bound_exceeded:
        return 3;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
