// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it with in-memory streams.

#ifndef DIGITOP_CLI_HPP
#define DIGITOP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace digitop::cli {

inline constexpr int kAffirmative = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUnknown = 2;
inline constexpr int kUsage = 64;
inline constexpr int kBadInput = 65;
inline constexpr int kInternal = 70;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace digitop::cli

#endif  // DIGITOP_CLI_HPP
