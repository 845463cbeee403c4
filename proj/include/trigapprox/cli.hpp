#ifndef TRIGAPPROX_CLI_HPP
#define TRIGAPPROX_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "trigapprox/approximation.hpp"
#include "trigapprox/error.hpp"
#include "trigapprox/quadrature.hpp"

namespace trigapprox::cli {

/// Bad command line; the message names the offending flag. Exit status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// --help was given; what() holds the help text. Exit status 0.
class HelpRequested : public Error {
 public:
  using Error::Error;
};

enum class Subcommand { Converge, Lemma2, Counterexample, Inequalities, Coeffs, Lewitan };
enum class Format { Csv, Json };

struct RunConfig {
  Subcommand subcommand = Subcommand::Converge;
  std::vector<std::string> function_ids;  // validated catalog ids
  std::vector<double> sigmas;             // lemma2
  std::vector<double> taus;
  std::vector<double> deltas;             // lemma2
  double p = 2.0;
  double delta = 0.5;
  std::vector<int> ms;                    // counterexample
  std::vector<double> xs;                 // lewitan
  std::int64_t terms = 0;                 // lewitan K, 0 = automatic
  LewitanMode lewitan_mode = LewitanMode::Verbatim;
  std::int64_t n_points = 1000;           // lemma2
  std::optional<std::string> output_path;
  Format format = Format::Csv;
  QuadratureSpec quad;
};

/// Parses argv (argv[0] is the program name). Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& argv);

/// Runs one subcommand, writing the table to config.output_path or `out`.
/// Returns 0 on success, 1 on computational error (message on `err`).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with the usage-error exit status 2.
int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace trigapprox::cli

#endif  // TRIGAPPROX_CLI_HPP
