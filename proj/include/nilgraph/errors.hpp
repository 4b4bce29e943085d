#pragma once

#include <stdexcept>
#include <string>

namespace nilgraph {

// Base class for all nilgraph failures. `kind()` is a stable machine
// readable tag; `what()` carries the human readable detail.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct MalformedTable : Error {
  explicit MalformedTable(const std::string& m) : Error("MalformedTable", m) {}
};

struct NotAGroup : Error {
  explicit NotAGroup(const std::string& m) : Error("NotAGroup", m) {}
};

struct CapExceeded : Error {
  explicit CapExceeded(const std::string& m) : Error("CapExceeded", m) {}
};

struct UnknownFamily : Error {
  explicit UnknownFamily(const std::string& m) : Error("UnknownFamily", m) {}
};

struct NotASubgroup : Error {
  explicit NotASubgroup(const std::string& m) : Error("NotASubgroup", m) {}
};

struct NotNormal : Error {
  explicit NotNormal(const std::string& m) : Error("NotNormal", m) {}
};

struct PrimeNotDividing : Error {
  explicit PrimeNotDividing(const std::string& m) : Error("PrimeNotDividing", m) {}
};

struct EmptySet : Error {
  explicit EmptySet(const std::string& m) : Error("EmptySet", m) {}
};

// Exact clique search ran out of its node budget. Callers record this as
// data; it never aborts a whole analysis.
struct CliqueBudgetExceeded : Error {
  explicit CliqueBudgetExceeded(const std::string& m)
      : Error("CliqueBudgetExceeded", m) {}
};

struct IoError : Error {
  explicit IoError(const std::string& m) : Error("IoError", m) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error("ParseError", m) {}
};

}  // namespace nilgraph
