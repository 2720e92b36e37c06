#pragma once

namespace dowker::cli {

// Exit codes: 0 success, 1 verification-negative, 2 input error,
// 3 insufficient bounds.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;
inline constexpr int kInsufficientBounds = 3;

int run(int argc, const char* const* argv);

}  // namespace dowker::cli
