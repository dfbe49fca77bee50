#include <wallcube/commands.hpp>

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Divisions, walls on triples and dual cube complexes of finite graph models"};
  app.require_subcommand(1);

  wallcube::RunConfig cfg;
  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("-i,--input", cfg.input, "instance JSON file")->required();
    sub->add_option("-o,--out", cfg.out_dir, "output directory")->capture_default_str();
    sub->add_flag("--no-oracle", "skip the brute-force cross-check in build");
    sub->add_option("--cap-group", cfg.cap_group, "maximum group order")->capture_default_str();
    sub->add_option("--cap-vertices", cfg.cap_vertices, "maximum complex vertices")->capture_default_str();
    sub->add_option("--cap-walls", cfg.cap_walls, "maximum walls for brute-force enumeration")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "seed for the wall-shuffle self-test")->capture_default_str();
    return sub;
  };
  add("validate", "check the model, cut sets and divisions");
  add("build", "build the dual cube complex and its group action");
  add("tree", "build T(C), the cut point tree and the isomorphism certificate");
  add("oracle", "cross-check fast criteria and the complex against brute force");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(wallcube::ExitCode::parse);
  }
  auto* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  cfg.oracle = sub->count("--no-oracle") == 0;
  return wallcube::run(cfg, std::cout, std::cerr);
}
