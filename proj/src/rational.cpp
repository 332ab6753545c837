#include "linkne/rational.hpp"

#include <cctype>

#include "linkne/error.hpp"

namespace linkne {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false)) {
    throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  Int p(n, 10);
  Int q(std::string(den), 10);
  if (sgn(q) == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& value) { return value.get_str(10); }

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EmptyDescription: return "EmptyDescription";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::BadUnit: return "BadUnit";
    case ErrorKind::BadTable: return "BadTable";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::TableMismatch: return "TableMismatch";
    case ErrorKind::EmptyGeneratingSet: return "EmptyGeneratingSet";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::ZeroSubspace: return "ZeroSubspace";
    case ErrorKind::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorKind::LambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorKind::EpsilonOutOfRange: return "EpsilonOutOfRange";
    case ErrorKind::NotInB: return "NotInB";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NoUnitInA: return "NoUnitInA";
    case ErrorKind::NoUnitInB: return "NoUnitInB";
    case ErrorKind::NoInvertibleInA: return "NoInvertibleInA";
    case ErrorKind::NoInvertibleInB: return "NoInvertibleInB";
    case ErrorKind::MissesUnits: return "MissesUnits";
    case ErrorKind::NotSplitEtale: return "NotSplitEtale";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NoInvertibleFound: return "NoInvertibleFound";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::RetryBudgetExhausted: return "RetryBudgetExhausted";
  }
  return "Unknown";
}

bool is_budget_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSplitEtale:
    case ErrorKind::CapExceeded:
    case ErrorKind::NoInvertibleFound:
    case ErrorKind::BudgetExhausted:
    case ErrorKind::RetryBudgetExhausted:
      return true;
    default:
      return false;
  }
}

}  // namespace linkne
