#pragma once

// Command dispatch behind the zfarkas executable. Kept in the library so the
// tests can drive it without spawning processes.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "zfarkas/json_io.hpp"

namespace zfarkas::cli {

enum class Method { Cert, Recursive, Oracle };

struct Command {
  /// certify | certs | feasible | solve | oracle | circuits | qpsolve | gen-corpus
  std::string name;
  /// Input JSON file; "-" reads standard input.
  std::string input_path = "-";
  Method method = Method::Cert;
  /// Output file for the JSON result; empty writes to the output stream.
  /// For gen-corpus, the directory receiving the instances.
  std::string output_path;
  /// Human-readable summary on the error stream.
  bool summary = false;
  std::uint64_t oracle_cap = kDefaultOracleCap;
  std::uint64_t seed = 1;
  int count = 10;
};

enum ExitCode : int {
  kOk = 0,
  kMalformedInput = 1,
  kResourceLimit = 2,
  kInternalInconsistency = 3,
};

/// Raised when a certificate-based method is asked about a lattice outside
/// the class (or the zero lattice).
class NotInClass : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

Method parse_method(const std::string& s);

/// The JSON result of a command on an already parsed input. Throws the
/// library's exceptions unchanged.
json_io::Json execute(const Command& cmd, const json_io::Json& input, std::ostream* summary = nullptr);

/// Writes `count` box instances and `count` qpsolve instances drawn from the
/// seeded generator into `dir`. Returns the file names written, sorted.
std::vector<std::string> generate_corpus(const std::string& dir, std::uint64_t seed, int count);

/// Reads the input, executes, writes the result, and maps exceptions to exit
/// codes with a one-line message on `err`.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

}  // namespace zfarkas::cli
