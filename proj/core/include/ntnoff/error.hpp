#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ntnoff {

enum class Errc {
  NonPositiveBandwidth,
  EmptyGDSet,
  CoincidentNodes,
  NonFiniteValue,
  NonPositivePower,
  InvalidAntennaCount,
  NegativeCost,
  NonPositiveCompute,
  InvalidMargin,
  InvalidTaskClass,
  InvalidSolverParam,
  ZeroRate,
  ZeroSpectralEfficiency,
  InconsistentOffloadFlags,
  InvalidArgument,
};

std::string_view to_string(Errc code);

// Every failure raised by the library carries a code and the name of the
// offending field or argument.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string field, const std::string& detail = {});

  Errc code() const noexcept { return code_; }
  const std::string& field() const noexcept { return field_; }

 private:
  Errc code_;
  std::string field_;
};

}  // namespace ntnoff
