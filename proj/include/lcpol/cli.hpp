#ifndef LCPOL_CLI_HPP
#define LCPOL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lcpol::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. args[0] is the program name. Input is read from the
/// named file, or from `in` when the path is omitted or "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace lcpol::cli

#endif  // LCPOL_CLI_HPP
