#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zgpd::cli {

// Exit codes.
inline constexpr int kHolds = 0;
inline constexpr int kFails = 1;         // property fails or a precondition of the command fails
inline constexpr int kInvalidInput = 2;  // unreadable, malformed or invalid documents; bad flags
inline constexpr int kExhausted = 3;     // search budget or label pool exhausted

// Runs one command; args excludes the program name. The report goes to `out` as indented
// "key: value" lines, or as one JSON object with --json. Usage errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zgpd::cli
