// brauerdef_cli: runs a verification suite and writes its JSON report.
// Exit status is 0 iff no check failed.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "brauerdef/suite.hpp"

using namespace brauerdef;

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of quiver algebra deformations and sl_n lattice modules"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", BRAUERDEF_VERSION);

  SuiteConfig cfg;
  std::string output, presentationFile;
  app.add_option("--output", output, "write the report here instead of stdout");
  app.add_flag("--timings", cfg.timings, "record elapsed milliseconds per check");

  auto* families = app.add_subcommand("families", "structure of A^k, A~^k and B^k");
  families->add_option("--k", cfg.k)->check(CLI::PositiveNumber)->capture_default_str();
  families->add_flag("--emit-presentation", cfg.emitPresentation, "attach the quiver presentations");

  auto* hochschild = app.add_subcommand("hochschild", "Hochschild cohomology and the cocycle mu");
  hochschild->add_option("--k", cfg.k)->check(CLI::PositiveNumber)->capture_default_str();
  hochschild->add_option("--max-degree", cfg.maxDegree)->capture_default_str();
  hochschild->add_option("--presentation", presentationFile, "quiver presentation (JSON) to use instead of A^k")
      ->check(CLI::ExistingFile);
  hochschild->add_option("--bound", cfg.presentationBound, "path degree bound for --presentation")
      ->capture_default_str();

  auto* deform = app.add_subcommand("deform", "formal deformations and the isomorphism Psi");
  deform->add_option("--k", cfg.k)->check(CLI::PositiveNumber)->capture_default_str();
  deform->add_option("--order", cfg.order)->check(CLI::PositiveNumber)->capture_default_str();
  deform->add_option("--params", cfg.params)->check(CLI::PositiveNumber)->capture_default_str();
  deform->add_option("--seed", cfg.seed)->capture_default_str();

  auto* koszul = app.add_subcommand("koszul", "minimal graded resolutions of the simples");
  koszul->add_option("--k", cfg.k)->check(CLI::PositiveNumber)->capture_default_str();
  koszul->add_option("--hom-degree", cfg.homDegree)->capture_default_str();
  koszul->add_option("--internal-degree", cfg.internalDegree, "internal degree budget (default hom-degree + 2)");

  auto* slnlab = app.add_subcommand("slnlab", "sl_n lattice modules");
  slnlab->add_option("--n", cfg.n)->check(CLI::Range(2, 8))->capture_default_str();
  slnlab->add_option("--radius", cfg.radius)->check(CLI::PositiveNumber)->capture_default_str();
  slnlab->add_option("--fiber", cfg.fiber)->check(CLI::PositiveNumber)->capture_default_str();
  slnlab->add_option("--seed", cfg.seed)->capture_default_str();
  slnlab->add_flag("--dump-module", cfg.dumpModule, "attach the block matrices of F(V)");
  bool noExtension = false;
  slnlab->add_flag("--no-extension", noExtension, "skip the sl_{n-1} -> sl_n extension");

  auto* verifyAll = app.add_subcommand("verify-all", "every suite at fixed parameters");
  verifyAll->add_option("--seed", cfg.seed)->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  cfg.extension = !noExtension;

  try {
    if (!presentationFile.empty()) {
      std::ifstream in(presentationFile);
      cfg.presentation = readPresentation(in);
    }
    VerificationReport report = [&] {
      if (*families) return runFamilies(cfg);
      if (*hochschild) return runHochschild(cfg);
      if (*deform) return runDeform(cfg);
      if (*koszul) return runKoszul(cfg);
      if (*slnlab) return runSlnlab(cfg);
      return runVerifyAll(cfg);
    }();
    if (output.empty()) {
      std::cout << report.dump();
    } else {
      std::ofstream out(output);
      out << report.dump();
      if (!out) throw std::runtime_error("cannot write " + output);
    }
    return report.failed() ? 1 : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
