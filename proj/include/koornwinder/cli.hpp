// Command-line front end. Subcommands: compute-e, compute-p, basis-check,
// check-relations, check-duality, specialize.
//
// Exit codes: 0 success, 1 a check failed, 2 usage error.

#ifndef KOORNWINDER_CLI_HPP
#define KOORNWINDER_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace kw::cli {

/// Environment variable naming the default cache directory.
inline constexpr const char* kCacheEnv = "KOORNWINDER_CACHE_DIR";

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// FNV-1a, 64 bit.
std::uint64_t content_hash(const std::string& s);

}  // namespace kw::cli

#endif
