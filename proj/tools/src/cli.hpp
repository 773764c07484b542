#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mostar::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kGateFailed = 1;  // verify: a proven claim was violated
inline constexpr int kUsage = 2;       // bad flags, unreadable or malformed input
inline constexpr int kDisconnected = 3;

// Largest graph the tool accepts (distances are 32-bit, sums 64-bit).
inline constexpr unsigned kMaxOrder = 1u << 16;

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mostar::cli
