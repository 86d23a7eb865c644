#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "foliage/cli.hpp"

int main(int argc, char** argv) {
  using namespace foliage::cli;

  CLI::App app{"Exact toolkit for integrable deformations of polynomial 1-forms"};
  std::string command;
  std::map<std::string, Command> commands;
  for (const char* name : {"check-integrable", "deformation-equations", "decompose", "periods", "first-integral",
                           "classify-degree-one", "rescale", "radial-test"})
    commands.emplace(name, *parse_command(name));

  JobSpec job;
  std::string input, output;
  double tol = 0;
  std::size_t max_nodes = 0, order = 0;
  app.add_option("command", command, "Operation to run")->required()->check(CLI::IsMember(commands));
  auto* in_opt = app.add_option("--input,-i", input, "Input JSON file (stdin when omitted)");
  auto* out_opt = app.add_option("--output,-o", output, "Report file (stdout when omitted)");
  auto* tol_opt = app.add_option("--tol", tol, "Quadrature tolerance")->check(CLI::PositiveNumber);
  auto* nodes_opt = app.add_option("--max-nodes", max_nodes, "Maximum quadrature nodes")->check(CLI::PositiveNumber);
  auto* order_opt = app.add_option("--order,-K", order, "Truncation order K");
  app.add_option("--seed", job.seed, "Seed for sampled checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  job.command = commands.at(command);
  if (*in_opt) job.input = input;
  if (*out_opt) job.output = output;
  if (*tol_opt) job.tol = tol;
  if (*nodes_opt) job.max_nodes = max_nodes;
  if (*order_opt) job.order = order;
  return run_and_write(job);
}
