#include "betadyn/error.hpp"

namespace betadyn {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoRootInRange: return "NoRootInRange";
    case ErrorKind::MultipleRootsInRange: return "MultipleRootsInRange";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::InvalidPolynomial: return "InvalidPolynomial";
    case ErrorKind::Undecidable: return "Undecidable";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::InadmissibleDigit: return "InadmissibleDigit";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::DepthLimit: return "DepthLimit";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotMarkov: return "NotMarkov";
    case ErrorKind::NotPisot: return "NotPisot";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EmptyGapSet: return "EmptyGapSet";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace betadyn
