#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mostar {

enum class Errc {
  kSelfLoop,
  kVertexOutOfRange,
  kEmptyGraph,
  kDisconnected,
  kBadArity,
  kBadParam,
  kUnknownClaim,
  kParse,
  kNotDivisible,
};

std::string_view errc_name(Errc code) noexcept;

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mostar
