#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "majorana/matrix.hpp"

namespace majorana {

/// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name, e.g. {"table", "--mass", "2"}.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/*!
 * "0", "1", "-1", "i" or "-i" when z is exactly one of those values,
 * otherwise the number at 12 significant digits.
 */
std::string symbolic_entry(const Complex& z);

}  // namespace majorana
