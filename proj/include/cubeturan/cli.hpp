#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cubeturan {

inline constexpr int kExitOk = 0;
inline constexpr int kExitWitness = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitLimit = 4;

// args excludes the program name. JSON goes to `out` (or --out), a short
// summary and structured errors go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubeturan
