// cli.hpp
// Command-line front end: solve, roots, verify, render, incidence.
//
// Exit status: 0 success, 1 a result disagrees with the expected count
// (e.g. found != 11) or a certificate fails, 2 usage or input error.

#ifndef HEAWOOD_CLI_HPP
#define HEAWOOD_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace heawood::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kExpectedEmbeddings = 11;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

} // namespace heawood::cli

#endif // HEAWOOD_CLI_HPP
