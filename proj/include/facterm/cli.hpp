#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace facterm {

struct Bounds {
  int string_len = 6;
  int cat_objects = 4;
};

// Reads FACTERM_BOUND from the environment; a set value overrides both
// bounds.
Bounds effective_bounds();

// Runs one subcommand.  Returns 0 on success, 1 on domain errors (a JSON
// error object is printed), 2 on malformed input or usage.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace facterm
