#include "ntnoff/error.hpp"

namespace ntnoff {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NonPositiveBandwidth: return "NonPositiveBandwidth";
    case Errc::EmptyGDSet: return "EmptyGDSet";
    case Errc::CoincidentNodes: return "CoincidentNodes";
    case Errc::NonFiniteValue: return "NonFiniteValue";
    case Errc::NonPositivePower: return "NonPositivePower";
    case Errc::InvalidAntennaCount: return "InvalidAntennaCount";
    case Errc::NegativeCost: return "NegativeCost";
    case Errc::NonPositiveCompute: return "NonPositiveCompute";
    case Errc::InvalidMargin: return "InvalidMargin";
    case Errc::InvalidTaskClass: return "InvalidTaskClass";
    case Errc::InvalidSolverParam: return "InvalidSolverParam";
    case Errc::ZeroRate: return "ZeroRate";
    case Errc::ZeroSpectralEfficiency: return "ZeroSpectralEfficiency";
    case Errc::InconsistentOffloadFlags: return "InconsistentOffloadFlags";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string compose(Errc code, const std::string& field, const std::string& detail) {
  std::string msg(to_string(code));
  if (!field.empty()) msg += " (" + field + ")";
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

}  // namespace

Error::Error(Errc code, std::string field, const std::string& detail)
    : std::runtime_error(compose(code, field, detail)), code_(code), field_(std::move(field)) {}

}  // namespace ntnoff
