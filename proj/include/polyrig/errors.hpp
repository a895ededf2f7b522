#pragma once

#include <stdexcept>
#include <string>

namespace polyrig {

enum class Errc {
  // input / validation
  ParseError,
  ValidationError,
  NotSymmetric,
  NotFullDimensional,
  NonExtremePoint,
  DimensionUnsupported,
  ZeroVector,
  CoincidentEndpoints,
  EmptySubgraph,
  BadColourSet,
  NotWellPositioned,
  NotTight,
  NotSubmodular,
  NotMonotone,
  DegenerateB,
  OddN,
  // computational failures
  DegenerateFacet,
  PerturbationFailed,
  EmptyConeIntersection,
  EmptyIntersection,
  RadiusSearchFailed,
  SearchFailed,
  SearchExhausted,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

  // true for errors caused by bad input rather than a failed computation
  bool is_validation() const {
    switch (code_) {
      case Errc::DegenerateFacet:
      case Errc::PerturbationFailed:
      case Errc::EmptyConeIntersection:
      case Errc::EmptyIntersection:
      case Errc::RadiusSearchFailed:
      case Errc::SearchFailed:
      case Errc::SearchExhausted:
        return false;
      default:
        return true;
    }
  }

 private:
  Errc code_;
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NotFullDimensional: return "NotFullDimensional";
    case Errc::NonExtremePoint: return "NonExtremePoint";
    case Errc::DimensionUnsupported: return "DimensionUnsupported";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::CoincidentEndpoints: return "CoincidentEndpoints";
    case Errc::EmptySubgraph: return "EmptySubgraph";
    case Errc::BadColourSet: return "BadColourSet";
    case Errc::NotWellPositioned: return "NotWellPositioned";
    case Errc::NotTight: return "NotTight";
    case Errc::NotSubmodular: return "NotSubmodular";
    case Errc::NotMonotone: return "NotMonotone";
    case Errc::DegenerateB: return "DegenerateB";
    case Errc::OddN: return "OddN";
    case Errc::DegenerateFacet: return "DegenerateFacet";
    case Errc::PerturbationFailed: return "PerturbationFailed";
    case Errc::EmptyConeIntersection: return "EmptyConeIntersection";
    case Errc::EmptyIntersection: return "EmptyIntersection";
    case Errc::RadiusSearchFailed: return "RadiusSearchFailed";
    case Errc::SearchFailed: return "SearchFailed";
    case Errc::SearchExhausted: return "SearchExhausted";
  }
  return "UnknownError";
}

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace polyrig
