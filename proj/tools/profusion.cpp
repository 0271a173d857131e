#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "profusion/cli.hpp"

int main(int argc, char** argv) {
  using profusion::JobSpec;
  CLI::App app{"Block, fusion and path-algebra certification"};
  app.set_version_flag("--version", profusion::kToolVersion);
  app.require_subcommand(1);

  JobSpec job;
  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--p", job.p, "Prime")->check(CLI::PositiveNumber);
    cmd->add_option("--field-degree", job.field_degree, "Degree of the coefficient field over GF(p)");
    cmd->add_flag("--oracle", job.oracle, "Run brute-force oracles alongside");
    cmd->add_flag("--timing", job.timing, "Record elapsed time in the report");
    cmd->add_option("--out", job.out, "Report path (default stdout)");
  };
  auto group = [&](CLI::App* cmd) {
    cmd->add_option("--group", job.group, "Group file or constructor name")->required();
  };
  auto block = [&](CLI::App* cmd) {
    cmd->add_option("--block", job.block, "principal, all or a block index")->capture_default_str();
  };

  auto* blocks = app.add_subcommand("blocks", "Block idempotents and defect groups");
  group(blocks);
  common(blocks);

  auto* pairs = app.add_subcommand("brauer-pairs", "Maximal Brauer pairs of blocks");
  group(pairs);
  block(pairs);
  common(pairs);

  auto* fusion = app.add_subcommand("fusion", "Block fusion systems");
  group(fusion);
  block(fusion);
  fusion->add_flag("--nilpotent", job.nilpotent, "Report the nilpotency verdict");
  common(fusion);

  auto* tower = app.add_subcommand("tower", "Stabilization, embedding and bijection checks on a tower");
  tower->add_option("--tower", job.tower, "Tower file")->required();
  tower->add_option("--depth", job.depth, "Use only the coarsest levels");
  block(tower);
  common(tower);

  auto* dihedral = app.add_subcommand("dihedral-certify", "Dihedral triviality of quotient fusion systems");
  group(dihedral);
  dihedral->add_option("--depth", job.depth, "Number of levels, top included");
  common(dihedral);

  auto* pathalg = app.add_subcommand("pathalg", "Truncated quotients of path algebras");
  auto* tame = pathalg->add_option("--tame", job.tame, "Built-in tame algebra 1, 2 or 3");
  pathalg->add_option("--quiver", job.quiver, "Quiver file")->excludes(tame);
  pathalg->add_option("--degree", job.degree, "Truncation: paths of length below this");
  common(pathalg);

  auto* presentation = app.add_subcommand("presentation", "Group algebra of a p-group as a quiver quotient");
  group(presentation);
  presentation->add_option("--degree", job.degree, "Truncation degree");
  common(presentation);

  CLI11_PARSE(app, argc, argv);
  job.command = app.get_subcommands().front()->get_name();

  auto report = profusion::run(job);
  std::string text = report.to_json().dump(2) + "\n";
  if (job.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(job.out);
    if (!out) {
      std::cerr << "cannot write " << job.out << "\n";
      return 2;
    }
    out << text;
  }
  if (report.error) std::cerr << *report.error << "\n";
  return report.passed() ? 0 : 1;
}
