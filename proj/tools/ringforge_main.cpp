// ringforge: command-line workbench for ring-puzzle analysis.
#include <CLI11.hpp>
#include <cstdio>
#include <string>

#include "ringforge.h"

#ifndef RINGFORGE_DEFAULT_INSTANCE
#define RINGFORGE_DEFAULT_INSTANCE "data/autf2.ring"
#endif

int main(int argc, char** argv) {
  CLI::App app{"ring-puzzle workbench"};
  app.require_subcommand(1);
  std::string instance_path = RINGFORGE_DEFAULT_INSTANCE;
  app.add_option("--instance", instance_path, "instance file")
      ->capture_default_str();

  auto* validate = app.add_subcommand("validate", "check an instance file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  char* report = nullptr;
  int rc = 2;
  if (validate->parsed()) {
    rc = rf_cmd_validate(instance_path.c_str(), &report);
  }
  if (report) {
    std::fputs(report, stdout);
    rf_string_free(report);
  }
  return rc;
}
