#pragma once

#include <array>
#include <iosfwd>

#include "trop/io.hpp"
#include "trop/svg.hpp"

namespace trop {

/// One CLI invocation: subcommand, named inputs (inline text or paths),
/// output path, and the exact-rational option set. All defaults are fixed
/// constants so identical specs give byte-identical output.
struct JobSpec {
  std::string subcommand;
  std::map<std::string, std::string> inputs;  // inline values ("poly", "v", ...)
  std::map<std::string, std::string> paths;   // file inputs ("fan", "point", ...)
  std::string output_path;

  Rational grid_step = Rational(1, 4);
  std::array<Rational, 4> box = {Rational(-5), Rational(5), Rational(-5), Rational(5)};
  int samples = 100;
  unsigned seed = 20240814;
  Rational precision = Rational(3);
  int degree_bound = 4;
  bool trivial = false;
  int rank = 2;
  bool verify_grid = false;
};

/// Executes the job, writing human-readable results to out and diagnostics to
/// err. Returns 0 on success, 1 when a check fails, 2 on input errors.
int run(const JobSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace trop
