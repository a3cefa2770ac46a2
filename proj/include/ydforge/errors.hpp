#pragma once

#include <stdexcept>
#include <string>

namespace ydforge {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

// Substitution sent a denominator to zero.
struct EvaluationPole : Error {
  explicit EvaluationPole(const std::string& msg) : Error(msg) {}
};

struct MissingAntipode : Error {
  explicit MissingAntipode(const std::string& msg) : Error(msg) {}
};

// Dimension mismatch between vectors, maps or tensor powers.
struct ShapeError : Error {
  explicit ShapeError(const std::string& msg) : Error(msg) {}
};

struct NotConvolutionInvertible : Error {
  explicit NotConvolutionInvertible(const std::string& msg) : Error(msg) {}
};

// A product was requested above the degree cap of a truncated algebra.
struct DegreeCapExceeded : Error {
  explicit DegreeCapExceeded(const std::string& msg) : Error(msg) {}
};

struct InvalidPresentation : Error {
  explicit InvalidPresentation(const std::string& msg) : Error(msg) {}
};

// A generator lacks coproduct/counit/antipode data needed for extension.
struct MissingGeneratorData : Error {
  explicit MissingGeneratorData(const std::string& msg) : Error(msg) {}
};

// A size parameter lies outside the range a constructor supports.
struct BadDimension : Error {
  explicit BadDimension(const std::string& msg) : Error(msg) {}
};

struct NonConfluent : Error {
  explicit NonConfluent(const std::string& msg) : Error(msg) {}
};

struct NonTerminating : Error {
  explicit NonTerminating(const std::string& msg) : Error(msg) {}
};

struct BrAxiomsFail : Error {
  explicit BrAxiomsFail(const std::string& msg) : Error(msg) {}
};

struct PreconditionFail : Error {
  explicit PreconditionFail(const std::string& msg) : Error(msg) {}
};

// A construction requires a verified matched pair and one of mp1-mp4 failed.
struct MatchedPairAxiomsFail : Error {
  explicit MatchedPairAxiomsFail(const std::string& msg) : Error(msg) {}
};

// A construction requires a verified Yetter-Drinfeld brace and a law failed.
struct YDBraceAxiomsFail : Error {
  explicit YDBraceAxiomsFail(const std::string& msg) : Error(msg) {}
};

struct PiNotCoalgebraIso : Error {
  explicit PiNotCoalgebraIso(const std::string& msg) : Error(msg) {}
};

struct InputError : Error {
  explicit InputError(const std::string& msg) : Error(msg) {}
};

}  // namespace ydforge
