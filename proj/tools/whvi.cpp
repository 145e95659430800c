// Command-line front end: check, solve, repro, oracle.

#include "whvi/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::string radii;
};

std::vector<double> parse_radii(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw whvi::ParseError("--radii: cannot parse '" + item + "'");
    }
  }
  return out;
}

whvi::Instance load(const std::string& path, const Overrides& o) {
  whvi::Instance inst = whvi::load_instance(path);
  if (o.seed) {
    inst.checker.seed = *o.seed;
    inst.solver.seed = *o.seed;
  }
  if (o.tol) inst.checker.tol = *o.tol;
  if (!o.radii.empty()) inst.checker.ray_radii = parse_radii(o.radii);
  try {
    whvi::validate(inst.checker);
  } catch (const whvi::PreconditionError& e) {
    throw whvi::ParseError(e.what());
  }
  return inst;
}

int emit(const whvi::CommandResult& r, const std::string& json_path) {
  std::cout << r.text;
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out || !(out << r.json)) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return whvi::exit_code::io;
    }
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Existence checks and solvers for weakly homogeneous variational inequalities"};
  app.require_subcommand(1);
  Overrides o;
  std::string json_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Seed for checkers and solvers");
    sub->add_option("--tol", o.tol, "Checker tolerance");
    sub->add_option("--radii", o.radii, "Comma-separated increasing ray radii");
    sub->add_option("--json", json_path, "Write the machine-readable report to this file");
  };

  std::string file;
  auto* check = app.add_subcommand("check", "Condition report for an instance file");
  check->add_option("file", file, "Instance file")->required();
  add_common(check);

  auto* solve = app.add_subcommand("solve", "Solve an instance by homotopy continuation");
  solve->add_option("file", file, "Instance file")->required();
  add_common(solve);

  auto* repro = app.add_subcommand("repro", "Recompute the quantities of the shipped examples");
  repro->add_option("--json", json_path, "Write the machine-readable table to this file");

  whvi::OracleGrid grid;
  auto* oracle = app.add_subcommand("oracle", "Brute-force grid oracle (dimension <= 3)");
  oracle->add_option("file", file, "Instance file")->required();
  oracle->add_option("--pitch", grid.pitch, "Grid pitch")->check(CLI::PositiveNumber);
  oracle->add_option("--radius", grid.radius, "Truncation radius")->check(CLI::PositiveNumber);
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : whvi::exit_code::invalid;
  }

  try {
    if (*check) return emit(whvi::cmd_check(load(file, o)), json_path);
    if (*solve) return emit(whvi::cmd_solve(load(file, o)), json_path);
    if (*oracle) return emit(whvi::cmd_oracle(load(file, o), grid), json_path);
    if (*repro) return emit(whvi::cmd_repro(), json_path);
  } catch (const whvi::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return whvi::exit_code::io;
  } catch (const whvi::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return whvi::exit_code::invalid;
  } catch (const whvi::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return whvi::exit_code::invalid;
  } catch (const whvi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return whvi::exit_code::solver_failed;
  }
  return whvi::exit_code::invalid;
}
