#ifndef LORCHECK_CLI_HPP
#define LORCHECK_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "lorcheck/inequalities.hpp"
#include "lorcheck/json_io.hpp"

namespace lorcheck {

// Property-suite configuration shared by the CLI `fuzz` command and the
// acceptance harness. Suites: rkt, rayleigh, pr-supermod, af-form,
// quad-equiv, mixed-volume, volume-poly, convex-rkt, schur-af, md-hodge,
// polymatroid.
struct FuzzOptions {
  std::string suite;
  std::uint64_t seed = 0;
  std::int64_t trials = 100;
  bool sweep_override = false;  // when set, `sweep` replaces the default policy
  Sweep sweep = Sweep::full_sweep();
  std::int64_t budget_ms = 0;  // 0 = no budget; truncation is recorded
  std::string dump_path;       // when set, write the instance stream here
};

// Runs the named suite and returns the aggregate report (deterministic except
// for the "timing" object). Throws InputError for unknown suites/bad options.
Json run_fuzz_suite(const FuzzOptions& opts);

// Splitting-sweep default: full when the number of (beta, gamma) pairs is at
// most 10^4, otherwise a seeded sample of 10^3.
Sweep auto_sweep(int nvars, int degree, std::uint64_t seed);

// Reproduction suite: huh-example, bipyramid, schur-examples, md-signature,
// polymatroid-demo. Returns the report and the process exit code (reports
// with expected violations exit 0 exactly when the violation is found).
std::pair<Json, int> run_reproduce(const std::string& name);

// Full command-line front end (argv without the program name); exit code
// 0 = holds/success, 1 = violation found, 2 = input or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace lorcheck

#endif
