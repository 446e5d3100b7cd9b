#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace mcdeform::cli;

int main(int argc, char** argv) {
  CLI::App app{"Maurer-Cartan and deformation computations over Q"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path;
  std::string format = "json";
  bool timing = false;
  app.add_option("--out", out_path, "write the report to this file instead of stdout");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", timing, "include wall time in the report (breaks byte stability)");

  std::string g, r, file, z, z_prime;
  std::vector<std::string> pair;

  auto* validate = app.add_subcommand("validate", "check the axioms of an input document");
  validate->add_option("file", file)->required();

  McOptions mc_opts;
  std::string check;
  std::size_t lift_order = 0;
  std::string start;
  bool solve = false;
  auto* mc = app.add_subcommand("mc", "Maurer-Cartan elements of m (x) g");
  mc->add_option("g", g)->required();
  mc->add_option("R", r)->required();
  auto* o_check = mc->add_option("--check", check, "test an element for the MC equation");
  auto* o_solve = mc->add_flag("--solve-square-zero", solve, "solve MC over a square-zero base");
  auto* o_lift = mc->add_option("--lift-order", lift_order, "lift order by order up to k");
  auto* o_start = mc->add_option("--start", start, "element to lift (default: first-order basis)");
  o_check->excludes(o_solve)->excludes(o_lift);
  o_solve->excludes(o_lift);
  o_start->needs(o_lift);

  auto* gauge = app.add_subcommand("gauge", "search for a gauge element relating z and z'");
  gauge->add_option("g", g)->required();
  gauge->add_option("R", r)->required();
  gauge->add_option("z", z)->required();
  gauge->add_option("z_prime", z_prime)->required();

  NerveOptions nerve_opts;
  std::string member;
  auto* nerve = app.add_subcommand("nerve", "1-simplices of the nerve of m (x) g");
  nerve->add_option("g", g)->required();
  nerve->add_option("R", r)->required();
  auto* o_path = nerve->add_option("--path", pair, "gauge path from z along gamma")->expected(2);
  auto* o_member = nerve->add_option("--member", member, "test a simplex for membership");
  o_path->excludes(o_member);

  DeformOptions deform_opts;
  std::string a;
  int counterexample = 0;
  bool classify = false;
  auto* deform = app.add_subcommand("deform", "deformations of a complex");
  auto* o_a = deform->add_option("A", a);
  auto* o_classify = deform->add_flag("--classify", classify, "first-order classification (default)");
  auto* o_counter = deform->add_option("--counterexample", counterexample, "twisted window complex of radius N");
  o_classify->excludes(o_counter);
  o_counter->excludes(o_a);

  try {
    app.parse(argc, argv);
    if (mc->parsed() && !*o_check && !*o_solve && !*o_lift)
      throw CLI::ValidationError("mc", "one of --check, --solve-square-zero, --lift-order is required");
    if (nerve->parsed() && !*o_path && !*o_member)
      throw CLI::ValidationError("nerve", "one of --path, --member is required");
    if (deform->parsed() && !*o_counter && !*o_a)
      throw CLI::ValidationError("deform", "a complex is required unless --counterexample is given");
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  const auto t0 = std::chrono::steady_clock::now();
  Report report;
  if (validate->parsed()) {
    report = cmd_validate(file);
  } else if (mc->parsed()) {
    if (*o_check) {
      mc_opts.mode = McOptions::Mode::Check;
      mc_opts.z_path = check;
    } else if (solve) {
      mc_opts.mode = McOptions::Mode::SolveSquareZero;
    } else {
      mc_opts.mode = McOptions::Mode::Lift;
      mc_opts.order = lift_order;
      if (*o_start) mc_opts.start = start;
    }
    report = cmd_mc(g, r, mc_opts);
  } else if (gauge->parsed()) {
    report = cmd_gauge(g, r, z, z_prime);
  } else if (nerve->parsed()) {
    if (*o_path) {
      nerve_opts.mode = NerveOptions::Mode::Path;
      nerve_opts.z_path = pair[0];
      nerve_opts.gamma_path = pair[1];
    } else {
      nerve_opts.mode = NerveOptions::Mode::Member;
      nerve_opts.simplex_path = member;
    }
    report = cmd_nerve(g, r, nerve_opts);
  } else {
    if (*o_a) deform_opts.a_path = a;
    if (*o_counter) deform_opts.counterexample = counterexample;
    report = cmd_deform(deform_opts);
  }
  if (timing)
    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const std::string text = render(report, format == "text" ? Format::Text : Format::Json);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return kExitEngine;
    }
    out << text;
  }
  if (report.exit_code != kExitOk && report.status != "fail") std::cerr << report.payload.value("message", report.status) << "\n";
  return report.exit_code;
}
