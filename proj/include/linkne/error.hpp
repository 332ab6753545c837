#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linkne {

enum class ErrorKind {
  // input / schema
  ParseError,
  EmptyDescription,
  NotAssociative,
  BadUnit,
  BadTable,
  AlgebraMismatch,
  TableMismatch,
  EmptyGeneratingSet,
  EmptySubset,
  ZeroSubspace,
  ConstantPolynomial,
  LambdaOutOfRange,
  EpsilonOutOfRange,
  NotInB,
  NotInvertible,
  NotCommutative,
  NotAGroup,
  NoUnitInA,
  NoUnitInB,
  NoInvertibleInA,
  NoInvertibleInB,
  MissesUnits,
  // oracle or budget limits
  NotSplitEtale,
  CapExceeded,
  NoInvertibleFound,
  BudgetExhausted,
  RetryBudgetExhausted,
};

std::string_view to_string(ErrorKind kind);

/// True for kinds that signal an oracle limitation or an exhausted budget
/// rather than malformed input.
bool is_budget_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace linkne
