#include <CLI11.hpp>

#include <iostream>

#include "trop/cli.hpp"

namespace {

// shared options wired into every subcommand
void add_common(CLI::App* cmd, trop::JobSpec& spec, std::string& grid_step, std::string& box,
                std::string& precision) {
  cmd->add_option("--grid-step", grid_step, "grid step as a rational p/q");
  cmd->add_option("--box", box, "window a,b,c,d (x range then y range)");
  cmd->add_option("--samples", spec.samples, "sample count");
  cmd->add_option("--seed", spec.seed, "deterministic seed");
  cmd->add_option("--precision", precision, "lift precision as a rational");
  cmd->add_option("--degree-bound", spec.degree_bound, "separation search degree bound");
  cmd->add_flag("--trivial", spec.trivial, "trivial valuation mode");
  cmd->add_option("--rank", spec.rank, "ambient rank for inline polynomials");
}

void finish_options(trop::JobSpec& spec, const std::string& grid_step, const std::string& box,
                    const std::string& precision) {
  if (!grid_step.empty()) {
    spec.grid_step = trop::Rational::parse(grid_step);
    spec.verify_grid = true;
  }
  if (!precision.empty()) spec.precision = trop::Rational::parse(precision);
  if (!box.empty()) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : box + ",") {
      if (ch == ',') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    if (parts.size() != 4) throw CLI::ValidationError("--box", "expected a,b,c,d");
    for (int i = 0; i < 4; ++i)
      spec.box[static_cast<size_t>(i)] = trop::Rational::parse(parts[static_cast<size_t>(i)]);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tropicalization and analytification toolkit"};
  app.require_subcommand(1);

  trop::JobSpec spec;
  std::string grid_step, box, precision;
  std::string poly, at, chars;
  std::string fan_path, point_path, map_path, src_fan, dst_fan, complex_path, stratified_path,
      diagram_path;

  auto wire = [&](CLI::App* cmd) {
    add_common(cmd, spec, grid_step, box, precision);
    return cmd;
  };

  std::vector<std::string> polys;
  auto* trop_cmd = wire(app.add_subcommand("trop", "tropical hypersurface complex"));
  trop_cmd
      ->add_option("--poly,-f", polys,
                   "Laurent polynomial; repeat to assert a tropical basis and intersect")
      ->required();

  auto* init_cmd = wire(app.add_subcommand("init", "initial form at a weight"));
  init_cmd->add_option("--poly,-f", poly)->required();
  init_cmd->add_option("--at,-v", at, "weight tuple a,b")->required();

  auto* member_cmd = wire(app.add_subcommand("member", "tropical membership"));
  member_cmd->add_option("--poly,-f", poly)->required();
  member_cmd->add_option("--at,-v", at)->required();

  auto* extend_cmd = wire(app.add_subcommand("extend", "stratified tropicalization over a fan"));
  extend_cmd->add_option("--poly,-f", poly)->required();
  extend_cmd->add_option("--fan", fan_path)->required()->check(CLI::ExistingFile);

  auto* map_cmd = wire(app.add_subcommand("map", "apply Trop of an equivariant morphism"));
  map_cmd->add_option("--map", map_path)->required()->check(CLI::ExistingFile);
  map_cmd->add_option("--point", point_path)->required()->check(CLI::ExistingFile);
  map_cmd->add_option("--src-fan", src_fan)->required()->check(CLI::ExistingFile);
  map_cmd->add_option("--dst-fan", dst_fan)->required()->check(CLI::ExistingFile);

  auto* moment_cmd = wire(app.add_subcommand("moment", "moment map image"));
  moment_cmd->add_option("--fan", fan_path)->required()->check(CLI::ExistingFile);
  moment_cmd->add_option("--point", point_path)->required()->check(CLI::ExistingFile);
  moment_cmd->add_option("--characters", chars, "one character per maximal cone, ; separated")
      ->required();

  auto* cox_cmd = wire(app.add_subcommand("cox", "tropicalized Cox quotient data"));
  cox_cmd->add_option("--fan", fan_path)->required()->check(CLI::ExistingFile);
  cox_cmd->add_option("--point", point_path)->check(CLI::ExistingFile);

  auto* limit_cmd = wire(app.add_subcommand("limit-check", "inverse-limit mechanics report"));
  limit_cmd->add_option("--poly,-f", poly, "plane curve for the canonical diagram");
  limit_cmd->add_option("--diagram", diagram_path)->check(CLI::ExistingFile);

  auto* trivial_cmd = wire(app.add_subcommand("trivial", "trivial-valuation fan"));
  trivial_cmd->add_option("--poly,-f", poly)->required();

  auto* bc_cmd = wire(app.add_subcommand("basechange", "base change invariance check"));
  bc_cmd->add_option("--poly,-f", poly)->required();

  auto* project_cmd = wire(app.add_subcommand("project", "certified generic projection"));
  project_cmd->add_option("--complex", complex_path)->required()->check(CLI::ExistingFile);

  auto* plot_cmd = wire(app.add_subcommand("plot", "SVG rendering of a rank-2 tropicalization"));
  plot_cmd->add_option("--poly,-f", poly);
  plot_cmd->add_option("--fan", fan_path)->required()->check(CLI::ExistingFile);
  plot_cmd->add_option("--stratified", stratified_path)->check(CLI::ExistingFile);
  plot_cmd->add_option("--output,-o", spec.output_path, "output SVG path");

  CLI11_PARSE(app, argc, argv);

  spec.subcommand = app.get_subcommands().front()->get_name();
  finish_options(spec, grid_step, box, precision);
  if (!polys.empty()) {
    std::string joined;
    for (size_t i = 0; i < polys.size(); ++i) joined += (i ? ";" : "") + polys[i];
    spec.inputs["poly"] = joined;
  }
  if (!poly.empty()) spec.inputs["poly"] = poly;
  if (!at.empty()) spec.inputs["v"] = at;
  if (!chars.empty()) spec.inputs["chars"] = chars;
  if (!fan_path.empty()) spec.paths["fan"] = fan_path;
  if (!point_path.empty()) spec.paths["point"] = point_path;
  if (!map_path.empty()) spec.paths["map"] = map_path;
  if (!src_fan.empty()) spec.paths["src-fan"] = src_fan;
  if (!dst_fan.empty()) spec.paths["dst-fan"] = dst_fan;
  if (!complex_path.empty()) spec.paths["complex"] = complex_path;
  if (!stratified_path.empty()) spec.paths["stratified"] = stratified_path;
  if (!diagram_path.empty()) spec.paths["diagram"] = diagram_path;

  return trop::run(spec, std::cout, std::cerr);
}
