#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace montee::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

// Exit codes: 0 success, 1 validation findings, 2 usage, 3 I/O, 4 bad data.
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitData = 4;

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace montee::cli
