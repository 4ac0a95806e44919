#pragma once

#include <stdexcept>
#include <string>

namespace mdm {

// Every library failure derives from Error. `kind` is the stable taxonomy
// name surfaced verbatim in CLI diagnostics and tested against.
struct Error : std::runtime_error {
  std::string kind;
  Error(std::string k, const std::string& what)
      : std::runtime_error(k + ": " + what), kind(std::move(k)) {}
};

struct EmptyInput : Error {
  explicit EmptyInput(const std::string& w) : Error("EmptyInput", w) {}
};
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& w) : Error("DimensionMismatch", w) {}
};
struct RankDeficient : Error {
  explicit RankDeficient(const std::string& w) : Error("RankDeficient", w) {}
};
struct Unbounded : Error {
  explicit Unbounded(const std::string& w) : Error("Unbounded", w) {}
};
struct PointBudgetExceeded : Error {
  explicit PointBudgetExceeded(const std::string& w) : Error("PointBudgetExceeded", w) {}
};
struct NoProjectiveModel : Error {
  explicit NoProjectiveModel(const std::string& w) : Error("NoProjectiveModel", w) {}
};
struct NotAFacet : Error {
  explicit NotAFacet(const std::string& w) : Error("NotAFacet", w) {}
};
struct InternalInconsistency : Error {
  explicit InternalInconsistency(const std::string& w) : Error("InternalInconsistency", w) {}
};
struct AmpleNotInterior : Error {
  explicit AmpleNotInterior(const std::string& w) : Error("AmpleNotInterior", w) {}
};
struct NonGenericSegment : Error {
  explicit NonGenericSegment(const std::string& w) : Error("NonGenericSegment", w) {}
};
struct NotContractible : Error {
  explicit NotContractible(const std::string& w) : Error("NotContractible", w) {}
};
struct NotAFaceOfNefCone : Error {
  explicit NotAFaceOfNefCone(const std::string& w) : Error("NotAFaceOfNefCone", w) {}
};
struct NonIntegralLift : Error {
  explicit NonIntegralLift(const std::string& w) : Error("NonIntegralLift", w) {}
};
struct NotBig : Error {
  explicit NotBig(const std::string& w) : Error("NotBig", w) {}
};
struct NotEffective : Error {
  explicit NotEffective(const std::string& w) : Error("NotEffective", w) {}
};
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& w) : Error("BudgetExceeded", w) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error("ParseError", w) {}
};
struct IoError : Error {
  explicit IoError(const std::string& w) : Error("IoError", w) {}
};
struct InvariantViolation : Error {
  explicit InvariantViolation(const std::string& w) : Error("InvariantViolation", w) {}
};

}  // namespace mdm
