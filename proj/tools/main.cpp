#include <CLI11.hpp>

#include <iostream>

#include "nilrep/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"faithful matrix representations of finite-dimensional Lie algebras over Q"};
  app.require_subcommand(1);

  nilrep::JobConfig cfg;
  unsigned long d = 0, n = 0, r = 0, e1 = 0, e2 = 0, birkhoff_class = 0, t = 0;
  std::size_t k1 = 0, k2 = 0;

  auto* validate = app.add_subcommand("validate", "check the Jacobi identity of an algebra file");
  validate->add_option("file", cfg.input, "algebra JSON file")->required();
  validate->add_flag("--json", cfg.json, "machine-readable output");
  validate->callback([&] { cfg.command = "validate"; });

  auto* analyze = app.add_subcommand("analyze", "dimensions, central series, class, radical");
  analyze->add_option("file", cfg.input, "algebra JSON file")->required();
  analyze->add_option("--ideal", cfg.ideal, "full | center | span:i,j,... (0-based)");
  analyze->add_flag("--json", cfg.json, "machine-readable output");
  analyze->callback([&] { cfg.command = "analyze"; });

  auto* build = app.add_subcommand("build-rep", "construct a faithful matrix representation");
  build->add_option("file", cfg.input, "algebra JSON file")->required();
  build->add_option("-o,--output", cfg.output, "representation output path");
  build->add_option("--ideal", cfg.ideal, "override h: full | center | span:i,j,...");
  auto* k1_opt = build->add_option("--k1", k1, "first weight cutoff (default c(m)+1)");
  auto* k2_opt = build->add_option("--k2", k2, "second weight cutoff (default c(h)+1)");
  build->add_flag("--json", cfg.json, "machine-readable output");
  build->callback([&] {
    cfg.command = "build-rep";
    if (k1_opt->count() > 0) cfg.k1 = k1;
    if (k2_opt->count() > 0) cfg.k2 = k2;
  });

  auto* verify = app.add_subcommand("verify-rep", "re-check a stored representation");
  verify->add_option("algebra", cfg.input, "algebra JSON file")->required();
  verify->add_option("representation", cfg.rep_file, "representation JSON file")->required();
  verify->add_flag("--json", cfg.json, "machine-readable output");
  verify->callback([&] { cfg.command = "verify-rep"; });

  auto* bound = app.add_subcommand("bound", "degree-bound calculator");
  bound->add_option("--d", d, "ambient dimension")->required();
  bound->add_option("--n", n, "nilradical dimension")->required();
  bound->add_option("--r", r, "solvable radical dimension")->required();
  bound->add_option("--e1", e1, "class of the chosen ideal")->required();
  bound->add_option("--e2", e2, "codimension of the chosen ideal")->required();
  auto* class_opt = bound->add_option("--class", birkhoff_class, "nilpotency class (adds the Birkhoff bound)");
  bound->add_flag("--json", cfg.json, "machine-readable output");
  bound->callback([&] {
    cfg.command = "bound";
    cfg.d = d;
    cfg.n = n;
    cfg.r = r;
    cfg.e1 = e1;
    cfg.e2 = e2;
    if (class_opt->count() > 0) cfg.birkhoff_class = birkhoff_class;
  });

  auto* denum = app.add_subcommand("denumerant", "restricted partition counter");
  denum->add_option("--t", t, "target value")->required();
  denum->add_option("--parts", cfg.parts, "comma-separated positive parts")
      ->required()
      ->delimiter(',');
  denum->add_flag("--json", cfg.json, "machine-readable output");
  denum->callback([&] {
    cfg.command = "denumerant";
    cfg.t = t;
  });

  auto* nil = app.add_subcommand("nil-defect", "heuristic nil-defect search over the radical");
  nil->add_option("file", cfg.input, "algebra JSON file")->required();
  nil->add_option("--max-subset", cfg.max_subset, "basis vectors to drop in ideal candidates");
  nil->add_flag("--json", cfg.json, "machine-readable output");
  nil->callback([&] { cfg.command = "nil-defect"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return nilrep::run(cfg, std::cout, std::cerr);
}
