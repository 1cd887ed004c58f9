#pragma once

#include <stdexcept>
#include <string>

namespace sixlines {

// Base for all domain-level failures. `kind()` is the stable name used by
// the CLI when serializing errors.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

#define SIXLINES_DEFINE_ERROR(Name)                          \
  class Name : public DomainError {                          \
  public:                                                    \
    explicit Name(const std::string& message)                \
        : DomainError(#Name, message) {}                     \
  }

SIXLINES_DEFINE_ERROR(TowerDepthExceeded);
SIXLINES_DEFINE_ERROR(IncompatibleTowers);
SIXLINES_DEFINE_ERROR(DivisionByZero);
SIXLINES_DEFINE_ERROR(DegenerateSpan);
SIXLINES_DEFINE_ERROR(NotSkew);
SIXLINES_DEFINE_ERROR(DegenerateInput);
SIXLINES_DEFINE_ERROR(AmbiguousTransversal);
SIXLINES_DEFINE_ERROR(NotIncident);
SIXLINES_DEFINE_ERROR(NotOnLine);
SIXLINES_DEFINE_ERROR(DuplicatePoint);
SIXLINES_DEFINE_ERROR(DegenerateConic);
SIXLINES_DEFINE_ERROR(NotOnConic);
SIXLINES_DEFINE_ERROR(NotSchlafli);
SIXLINES_DEFINE_ERROR(IncidenceViolation);
SIXLINES_DEFINE_ERROR(InconsistentPentagrams);
SIXLINES_DEFINE_ERROR(UnknownSpectrum);
SIXLINES_DEFINE_ERROR(InvalidPermutation);

#undef SIXLINES_DEFINE_ERROR

// Text-level failure; `offset` is a byte position within the parsed string.
// File readers translate it into line/column.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message), offset_(offset) {}

  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

}  // namespace sixlines
