#pragma once

#include <stdexcept>
#include <string>

namespace adisc {

enum class Errc {
  ParseError,
  InvalidInput,
  NotFullDimensional,
  NotFullCodimension,
  NormalizationImpossible,
  InvalidFace,
  DimensionTooLarge,
  TooManyPoints,
  DegenerateSimplex,
  WrongCodimension,
  OutOfDomain,
  SignMismatch,
  EmptyDomain,
  ResolutionTooCoarse,
  NonGenericLifting,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::NotFullDimensional: return "NotFullDimensional";
    case Errc::NotFullCodimension: return "NotFullCodimension";
    case Errc::NormalizationImpossible: return "NormalizationImpossible";
    case Errc::InvalidFace: return "InvalidFace";
    case Errc::DimensionTooLarge: return "DimensionTooLarge";
    case Errc::TooManyPoints: return "TooManyPoints";
    case Errc::DegenerateSimplex: return "DegenerateSimplex";
    case Errc::WrongCodimension: return "WrongCodimension";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::SignMismatch: return "SignMismatch";
    case Errc::EmptyDomain: return "EmptyDomain";
    case Errc::ResolutionTooCoarse: return "ResolutionTooCoarse";
    case Errc::NonGenericLifting: return "NonGenericLifting";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace adisc
