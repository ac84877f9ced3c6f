#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace turanlab::cli {

inline constexpr int kExitOk = 0;
/// A verifier rejected its certificate.
inline constexpr int kExitRejected = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitResourceLimit = 3;
/// Interval arithmetic could not certify an angle comparison.
inline constexpr int kExitIndeterminate = 4;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInternal = 70;

inline constexpr const char* kToolVersion = "1.0.0";

/// Subcommand, parameters, input digests, version and seed of one run.
/// Worker count is deliberately absent: it never changes the output.
struct RunManifest {
  std::string subcommand;
  std::map<std::string, std::string> parameters;
  std::map<std::string, std::string> input_digests;  // path -> SHA-256 hex
  std::optional<std::uint64_t> seed;

  /// One line of space-separated key=value fields.
  std::string to_record() const;
};

/// Hex SHA-256 of a file's bytes. Throws InvalidArgument if it cannot be read.
std::string sha256_file(const std::string& path);

std::string usage();

/// Runs one subcommand. `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace turanlab::cli
