#ifndef PFUSION_BATCH_HPP
#define PFUSION_BATCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "criteria.hpp"
#include "fusion.hpp"
#include "lattice.hpp"

namespace pfusion
{

inline constexpr char const *tool_version = "0.3.1";

enum class Check
{
  Frobenius,
  GlaubermanThompson,
  TheoremA,
  TheoremB,
  ZJ,
  Replacement
};

char const *check_name(Check check);
Check parse_check(std::string const &tag);  // throws InvalidArgument

struct BatchSpec
{
  std::vector<std::string> groups;            // catalog names or group files
  std::optional<std::vector<unsigned>> primes; // empty: all odd primes dividing |G|
  FamilyKind family = FamilyKind::MaxAbelian;
  std::vector<Check> checks;
  std::string output;
  // For theorem-b and zj: "auto" (every strongly closed subgroup), "P", "1",
  // or generators of D separated by ';'.
  std::string closed = "auto";
  Config config;
};

// Keys: groups, primes ("all-odd" or a list), family, checks, output,
// quantifier, closed. Throws ParseError / InvalidArgument.
BatchSpec parse_batch_spec(nlohmann::json const &doc);
BatchSpec read_batch_spec(std::string const &path);

nlohmann::json spec_to_json(BatchSpec const &spec);

enum ExitCode : int
{
  ExitOk = 0,
  ExitFalsified = 1,
  ExitHypothesesUnmet = 2,
  ExitInputError = 3
};

struct BatchResult
{
  // tool_version, spec, reports, errors, skipped, summary; timestamps and
  // timings live under run_info only.
  nlohmann::json report;
  int exit_code = ExitOk;
};

// Items are (group, prime) pairs, run on `threads` workers (0: hardware
// concurrency). A FALSIFIED verdict or an internal error stops every item
// after it in spec order.
BatchResult run_batch(BatchSpec const &spec, unsigned threads = 0u);

nlohmann::json to_json(Group const &H);
nlohmann::json to_json(VerificationReport const &report);

// The report with run_info removed, serialized with sorted keys.
std::string deterministic_dump(nlohmann::json const &report);

} // namespace pfusion

#endif // PFUSION_BATCH_HPP
